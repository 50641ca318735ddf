"""Exact sparse representation solvers over a frame's weighted synthesis map.

Both solvers are deliberately combinatorial: the underlying minimization
problems are NP-hard in general, so the implementations enumerate candidate
supports under an explicit work guard instead of approximating.  A target h
is "fit" by the support S when the least-squares synthesis restricted to S
reproduces h within the problem's residual tolerance.

``l0_brute_force`` minimizes the number of active atoms; the companion
``measure_min_brute_force`` minimizes the total weight of the active atoms,
which coincides with the count under counting measure.  ``conjecture_probe``
plants random low-weight supports and reports, never asserts, whether
weight minimization recovers them uniquely.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .frame_io import frame_digest, frame_to_obj
from .frames import (
    COMPLEX,
    CoefficientFunction,
    FrameError,
    PSchauderFrame,
    ResourceGuardError,
    synthesis,
)

# Largest number of candidate supports a solver call may enumerate.
ENUMERATION_GUARD = 10_000_000

SOLVED = "solved"
INFEASIBLE = "infeasible"


@dataclass(frozen=True, eq=False)
class SparseProblem:
    """Recover coefficients reproducing ``target`` through the frame's
    weighted synthesis.  ``eps_residual`` defaults to 1e-8 * ||target||_2."""

    frame: PSchauderFrame
    target: np.ndarray
    eps_residual: float | None = None

    def __post_init__(self):
        h = np.asarray(self.target)
        if h.ndim != 1 or h.size != self.frame.dimension:
            raise FrameError("target length must equal the frame dimension")
        if self.frame.field != COMPLEX and np.iscomplexobj(h):
            raise FrameError("real frames take real targets only")
        dtype = np.complex128 if self.frame.field == COMPLEX else np.float64
        h = h.astype(dtype, copy=True)
        if not np.all(np.isfinite(h)):
            raise FrameError("target must be finite (no NaN/Inf)")
        h.setflags(write=False)
        object.__setattr__(self, "target", h)
        if self.eps_residual is not None and self.eps_residual < 0:
            raise FrameError("eps_residual must be nonnegative")

    def resolved_tolerance(self) -> float:
        if self.eps_residual is not None:
            return float(self.eps_residual)
        return 1e-8 * float(np.linalg.norm(self.target))


@dataclass(frozen=True, eq=False)
class SparseSolution:
    """Outcome of one solver run.

    ``support`` is the exact nonzero set of the fitted coefficients;
    ``unique`` is true when no distinct support of equal objective value
    (cardinality for the count solver, total weight for the measure solver)
    also fits within tolerance.
    """

    status: str
    support: tuple[int, ...]
    support_cardinality: int
    support_weight: float
    residual: float
    unique: bool
    coefficients: CoefficientFunction | None


def gram_coherence(frame: PSchauderFrame, normalized: bool = False) -> float:
    """Largest pairwise inner product magnitude among distinct atom vectors.

    Computed verbatim on the stored vectors: no unit-norm rescaling is
    applied unless ``normalized`` is set (classical statements assume unit
    atoms; the flag enables that comparison, skipping zero atoms).
    Orthogonal families return 0, which callers should treat as an
    unbounded sparsity threshold.
    """
    if frame.n_atoms < 2:
        raise FrameError("coherence needs at least two atoms")
    if frame.p != 2.0:
        raise FrameError("coherence uses the Hilbert pairing; p must be 2")
    v = frame.vectors
    gram = np.abs(v @ v.conj().T)
    if normalized:
        norms = np.sqrt(np.real(np.diag(v @ v.conj().T)))
        keep = norms > 0
        if keep.sum() < 2:
            return 0.0
        gram = gram[np.ix_(keep, keep)] / np.outer(norms[keep], norms[keep])
    np.fill_diagonal(gram, 0.0)
    return float(gram.max())


def uniqueness_threshold(coh: float) -> float:
    """Sparsity level below which a representation is guaranteed to be the
    unique count-minimal one: (1/2)(1 + 1/coherence).  Zero coherence means
    the guarantee is unbounded (returns inf)."""
    if not np.isfinite(coh) or coh < 0:
        raise FrameError("coherence must be a finite nonnegative number")
    if coh == 0.0:
        return math.inf
    return 0.5 * (1.0 + 1.0 / coh)


def _synthesis_columns(frame: PSchauderFrame) -> np.ndarray:
    # Column i maps coefficient c_i to its synthesis contribution w_i * c_i * vec_i.
    return (frame.space.weights[:, None] * frame.vectors).T


def _restricted_fit(cols: np.ndarray, support: tuple[int, ...], target: np.ndarray):
    a = cols[:, list(support)]
    if a.shape[1] == 0:
        return np.zeros(0, dtype=cols.dtype), float(np.linalg.norm(target))
    coeff, *_ = np.linalg.lstsq(a, target, rcond=None)
    residual = float(np.linalg.norm(a @ coeff - target))
    return coeff, residual


def _padded_solution(
    frame: PSchauderFrame,
    support: tuple[int, ...],
    coeff: np.ndarray,
    residual: float,
    unique: bool,
) -> SparseSolution:
    values = np.zeros(frame.n_atoms, dtype=_synthesis_columns(frame).dtype)
    values[list(support)] = coeff
    nonzero = tuple(int(i) for i in np.flatnonzero(values != 0))
    return SparseSolution(
        status=SOLVED,
        support=nonzero,
        support_cardinality=len(nonzero),
        support_weight=math.fsum(frame.space.weights[list(nonzero)]) if nonzero else 0.0,
        residual=residual,
        unique=unique,
        coefficients=CoefficientFunction(frame.space, values),
    )


def _infeasible() -> SparseSolution:
    return SparseSolution(
        status=INFEASIBLE,
        support=(),
        support_cardinality=0,
        support_weight=0.0,
        residual=math.inf,
        unique=False,
        coefficients=None,
    )


def l0_brute_force(problem: SparseProblem, max_card: int | None = None) -> SparseSolution:
    """Minimize the number of active atoms by exhaustive support search.

    Supports are visited by increasing cardinality, lexicographic within a
    cardinality, so the returned solution is deterministic.  ``unique`` is
    true when no other support of the same cardinality also fits.
    """
    frame = problem.frame
    n = frame.n_atoms
    cap = n if max_card is None else int(max_card)
    if not 0 <= cap <= n:
        raise FrameError("max_card must lie in 0..n_atoms")
    total = sum(math.comb(n, k) for k in range(cap + 1))
    if total > ENUMERATION_GUARD:
        raise ResourceGuardError(
            f"{total} candidate supports exceed the guard of {ENUMERATION_GUARD}"
        )
    tol = problem.resolved_tolerance()
    cols = _synthesis_columns(frame)
    for card in range(cap + 1):
        first = None
        unique = True
        for support in itertools.combinations(range(n), card):
            coeff, residual = _restricted_fit(cols, support, problem.target)
            if residual <= tol:
                if first is None:
                    first = (support, coeff, residual)
                else:
                    unique = False
                    break
        if first is not None:
            support, coeff, residual = first
            return _padded_solution(frame, support, coeff, residual, unique)
    return _infeasible()


def measure_min_brute_force(problem: SparseProblem) -> SparseSolution:
    """Minimize the total weight of the active atoms by exhaustive search.

    Supports are visited by increasing total weight, ties broken by smaller
    cardinality then lexicographic order.  ``unique`` is true when no
    distinct support of exactly equal weight also fits.  Reduces to
    ``l0_brute_force`` under counting measure.
    """
    frame = problem.frame
    n = frame.n_atoms
    if 2**n > ENUMERATION_GUARD:
        raise ResourceGuardError(
            f"2^{n} candidate supports exceed the guard of {ENUMERATION_GUARD}"
        )
    tol = problem.resolved_tolerance()
    cols = _synthesis_columns(frame)
    w = frame.space.weights
    supports = [
        (math.fsum(w[list(s)]), len(s), s)
        for k in range(n + 1)
        for s in itertools.combinations(range(n), k)
    ]
    supports.sort()
    first = None
    unique = True
    for weight, _, support in supports:
        if first is not None and weight != first[3]:
            break
        coeff, residual = _restricted_fit(cols, support, problem.target)
        if residual <= tol:
            if first is None:
                first = (support, coeff, residual, weight)
            else:
                unique = False
                break
    if first is not None:
        support, coeff, residual, _ = first
        return _padded_solution(frame, support, coeff, residual, unique)
    return _infeasible()


@dataclass(frozen=True, eq=False)
class RecoveryReport:
    """Whether count minimization recovered a planted coefficient function.

    When the planted sparsity is below the coherence threshold the guarantee
    applies and ``ok`` demands exact unique recovery; outside the hypothesis
    the solver outcome is recorded but nothing is asserted.
    """

    coherence: float
    threshold: float
    planted_support: tuple[int, ...]
    planted_cardinality: int
    hypothesis_satisfied: bool
    solution: SparseSolution
    recovered_exactly: bool
    ok: bool


def donoho_elad_check(frame: PSchauderFrame, planted: CoefficientFunction) -> RecoveryReport:
    """Synthesize a planted coefficient function and test count-minimal
    recovery against the coherence threshold."""
    if planted.space != frame.space:
        raise FrameError("planted coefficients live on a different measure space")
    coherence = gram_coherence(frame)
    threshold = uniqueness_threshold(coherence)
    support = tuple(int(i) for i in np.flatnonzero(planted.values != 0))
    hypothesis = len(support) < threshold
    target = synthesis(frame, planted)
    solution = l0_brute_force(SparseProblem(frame, target))
    recovered = (
        solution.status == SOLVED and solution.support == support and solution.unique
    )
    return RecoveryReport(
        coherence=coherence,
        threshold=threshold,
        planted_support=support,
        planted_cardinality=len(support),
        hypothesis_satisfied=bool(hypothesis),
        solution=solution,
        recovered_exactly=bool(recovered),
        ok=bool(recovered if hypothesis else True),
    )


def _distinct_vector_coherence(frame: PSchauderFrame) -> float:
    """Variant of the raw coherence that skips index pairs whose vectors are
    bit-identical (as produced by atom splitting)."""
    v = frame.vectors
    best = 0.0
    for j in range(frame.n_atoms):
        for k in range(j + 1, frame.n_atoms):
            if np.array_equal(v[j], v[k]):
                continue
            best = max(best, float(np.abs(np.vdot(v[k], v[j]))))
    return best


def _encode_values(values: np.ndarray, field: str) -> list:
    if field == COMPLEX:
        return [[float(z.real), float(z.imag)] for z in values]
    return [float(np.real(z)) for z in values]


def _json_number(value: float):
    # keep reports strictly JSON: non-finite values become labels
    return value if math.isfinite(value) else ("unbounded" if value > 0 else "-unbounded")


def conjecture_probe(
    frame: PSchauderFrame,
    trials: int,
    seed: int = 0,
    eps_residual: float | None = None,
) -> dict:
    """Plant random supports of total weight below the coherence threshold
    and record whether weight minimization recovers each uniquely.

    The threshold is computed verbatim over all distinct index pairs; the
    variant that skips bit-identical atom vectors is reported alongside for
    comparison.  Counterexamples carry the full frame inline for replay.
    The returned report is a plain JSON-serializable dict and is a pure
    function of (frame, trials, seed, eps_residual).
    """
    if frame.p != 2.0:
        raise FrameError("the probe uses the Hilbert pairing; p must be 2")
    if trials < 1:
        raise FrameError("trials must be at least 1")
    n = frame.n_atoms
    if 2**n > ENUMERATION_GUARD:
        raise ResourceGuardError(
            f"2^{n} candidate supports exceed the guard of {ENUMERATION_GUARD}"
        )
    coh_all = gram_coherence(frame)
    coh_distinct = _distinct_vector_coherence(frame)
    thr_all = uniqueness_threshold(coh_all)
    thr_distinct = uniqueness_threshold(coh_distinct)
    w = frame.space.weights
    feasible = [
        s
        for k in range(1, n + 1)
        for s in itertools.combinations(range(n), k)
        if math.fsum(w[list(s)]) < thr_all
    ]
    report = {
        "schema_version": 1,
        "kind": "measure-minimization-probe",
        "seed": int(seed),
        "trials_requested": int(trials),
        "eps_residual": eps_residual,
        "eps_residual_policy": "1e-8 * l2(target) when eps_residual is null",
        "coherence_all_pairs": coh_all,
        "coherence_distinct_vectors": coh_distinct,
        "threshold_all_pairs": _json_number(thr_all),
        "threshold_distinct_vectors": _json_number(thr_distinct),
        "frame_sha256": frame_digest(frame),
    }
    if not feasible:
        report.update(
            {
                "hypothesis_satisfiable": False,
                "note": "hypothesis unsatisfiable: no nonempty support has weight below the threshold",
                "trials_run": 0,
                "trials_skipped": int(trials),
                "confirmations": 0,
                "counterexamples": [],
                "trial_records": [],
            }
        )
        return report

    rng = np.random.default_rng(seed)
    records = []
    counterexamples = []
    confirmations = 0
    for t in range(trials):
        support = feasible[int(rng.integers(len(feasible)))]
        k = len(support)
        if frame.field == COMPLEX:
            coeff = (rng.standard_normal(k) + 1j * rng.standard_normal(k)) / np.sqrt(2.0)
        else:
            coeff = rng.standard_normal(k)
        values = np.zeros(n, dtype=np.complex128 if frame.field == COMPLEX else np.float64)
        values[list(support)] = coeff
        planted = CoefficientFunction(frame.space, values)
        target = synthesis(frame, planted)
        solution = measure_min_brute_force(SparseProblem(frame, target, eps_residual))
        confirmed = bool(
            solution.status == SOLVED and solution.support == support and solution.unique
        )
        weight = math.fsum(w[list(support)])
        record = {
            "trial": t,
            "planted_support": list(support),
            "planted_coefficients": _encode_values(values, frame.field),
            "planted_weight": weight,
            "hypothesis_distinct_vectors": bool(weight < thr_distinct),
            "recovered_support": list(solution.support),
            "recovered_weight": solution.support_weight,
            "unique": solution.unique,
            "residual": _json_number(solution.residual),
            "confirmed": confirmed,
        }
        records.append(record)
        if confirmed:
            confirmations += 1
        else:
            counterexamples.append(
                {
                    **record,
                    "seed": int(seed),
                    "frame": frame_to_obj(frame),
                }
            )
    report.update(
        {
            "hypothesis_satisfiable": True,
            "trials_run": int(trials),
            "trials_skipped": 0,
            "confirmations": confirmations,
            "counterexamples": counterexamples,
            "trial_records": records,
        }
    )
    return report
