import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from framelab import (
    CoefficientFunction,
    DegeneratePairError,
    FrameError,
    MeasureSpace,
    PSchauderFrame,
    analysis,
    canonical_lp,
    counting_measure,
    cross_coherence,
    dft_pair,
    harmonic_discretization,
    mercedes_benz,
    picket_fence,
    random_vectors,
    support_measure,
    synthesis,
    uncertainty_check,
    validate_frame,
    weighted_split,
)


# ------------------------------------------------------------ construction


def test_measure_space_rejects_bad_weights():
    with pytest.raises(FrameError):
        MeasureSpace(np.array([1.0, 0.0]))
    with pytest.raises(FrameError):
        MeasureSpace(np.array([1.0, -2.0]))
    with pytest.raises(FrameError):
        MeasureSpace(np.array([1.0, np.inf]))


def test_counting_measure_flag():
    assert counting_measure(3).is_counting
    assert not MeasureSpace(np.array([1.0, 0.5])).is_counting


@pytest.mark.parametrize("p", [1.0, 0.5, -2.0, np.inf, np.nan])
def test_frame_rejects_bad_exponent(p):
    with pytest.raises(FrameError):
        canonical_lp(3, p)


def test_conjugate_exponent_identity():
    for p in (1.5, 2.0, 3.0, 7.0):
        frame = canonical_lp(2, p)
        assert frame.q == pytest.approx(p / (p - 1.0))
        assert 1.0 / frame.p + 1.0 / frame.q == pytest.approx(1.0)


def test_frame_tables_are_immutable():
    frame = canonical_lp(2, 2.0)
    with pytest.raises(ValueError):
        frame.functionals[0, 0] = 5.0


# ---------------------------------------------------------------- analysis


def test_analysis_identity_frame():
    frame = canonical_lp(3, 2.0)
    out = analysis(frame, np.array([1.0, -2.0, 0.0]))
    assert np.array_equal(out.values, [1.0, -2.0, 0.0])


def test_analysis_dft_picket_fence():
    # frozen from the direct Fourier evaluation: transform of (1,0,1,0) is
    # supported on the even bins with unit values
    _, fourier = dft_pair(4)
    out = analysis(fourier, picket_fence(4).astype(complex))
    assert np.allclose(out.values, [1.0, 0.0, 1.0, 0.0], atol=1e-15)


def test_analysis_of_zero_vector_is_zero():
    frame = mercedes_benz()
    out = analysis(frame, np.zeros(2))
    assert np.array_equal(out.values, np.zeros(3))


def test_analysis_dimension_mismatch():
    frame = canonical_lp(3, 2.0)
    with pytest.raises(FrameError):
        analysis(frame, np.ones(4))


_LINEARITY_FRAMES = [
    mercedes_benz(),
    canonical_lp(3, 1.5),
    weighted_split(canonical_lp(3, 3.0), 0, 2),
    harmonic_discretization(3, 6),
]


@settings(max_examples=60, deadline=None)
@given(
    a=st.floats(-10, 10, allow_nan=False),
    b=st.floats(-10, 10, allow_nan=False),
    which=st.integers(0, len(_LINEARITY_FRAMES) - 1),
    seed=st.integers(0, 2**20),
)
def test_analysis_is_linear(a, b, which, seed):
    frame = _LINEARITY_FRAMES[which]
    x, y = random_vectors(frame.dimension, 2, frame.field, seed)
    lhs = analysis(frame, a * x + b * y).values
    rhs = a * analysis(frame, x).values + b * analysis(frame, y).values
    assert np.allclose(lhs, rhs, rtol=1e-12, atol=1e-12)


# --------------------------------------------------------------- synthesis


def test_synthesis_identity_frame():
    frame = canonical_lp(3, 2.0)
    c = CoefficientFunction(frame.space, np.array([1.0, -2.0, 0.0]))
    assert np.array_equal(synthesis(frame, c), [1.0, -2.0, 0.0])


def test_synthesis_inverts_analysis_on_split_frame():
    frame = weighted_split(canonical_lp(3, 2.0), 0, 2)
    x = np.array([0.3, -1.2, 4.0])
    assert np.allclose(synthesis(frame, analysis(frame, x)), x, atol=1e-14)


def test_synthesis_inverts_analysis_on_harmonic_frame():
    frame = harmonic_discretization(4, 8)
    x = np.array([1.0, 0, 0, 0], dtype=complex)
    assert np.linalg.norm(synthesis(frame, analysis(frame, x)) - x) <= 1e-10


def test_synthesis_space_mismatch():
    frame = canonical_lp(3, 2.0)
    other = CoefficientFunction(counting_measure(4), np.ones(4))
    with pytest.raises(FrameError):
        synthesis(frame, other)


# --------------------------------------------------------- support measure


def test_support_measure_counting():
    c = CoefficientFunction(counting_measure(3), np.array([1.0, 0.0, 2.0]))
    assert support_measure(c, eps=0.0) == 2.0


def test_support_measure_weighted():
    space = MeasureSpace(np.array([0.5, 0.5, 1.0]))
    c = CoefficientFunction(space, np.array([1.0, 1.0, 0.0]))
    assert support_measure(c, eps=0.0) == 1.0


def test_support_measure_threshold_suppresses_tiny_entries():
    c = CoefficientFunction(counting_measure(3), np.array([1.0, 1e-15, 0.0]))
    assert support_measure(c, eps=1e-9) == 1.0


def test_support_measure_all_zero():
    c = CoefficientFunction(counting_measure(3), np.zeros(3))
    assert support_measure(c, eps=0.0) == 0.0


def test_support_measure_rejects_negative_eps():
    c = CoefficientFunction(counting_measure(2), np.ones(2))
    with pytest.raises(FrameError):
        support_measure(c, eps=-1.0)


@settings(max_examples=80, deadline=None)
@given(k=st.integers(-30, 30), sign=st.sampled_from([-1.0, 1.0]), seed=st.integers(0, 2**20))
def test_support_scale_invariance_for_exact_scalings(k, sign, seed):
    # powers of two scale every float exactly, so the relative threshold
    # makes support measure literally invariant
    frame = mercedes_benz()
    x = random_vectors(2, 1, "real", seed)[0]
    c = sign * 2.0**k
    base = support_measure(analysis(frame, x))
    scaled = support_measure(analysis(frame, c * x))
    assert scaled == base


# ------------------------------------------------------------ coherence


def test_cross_coherence_identity_pair():
    frame = canonical_lp(3, 2.0)
    assert cross_coherence(frame, frame) == (1.0, 1.0)


def test_cross_coherence_identity_vs_fourier():
    first, second = dft_pair(4)
    coh_fg, coh_gf = cross_coherence(first, second)
    assert coh_fg == pytest.approx(0.5, abs=1e-15)
    assert coh_gf == pytest.approx(0.5, abs=1e-15)


def test_cross_coherence_oblique_pair():
    # {e1,e2} against {e1,(e1+e2)/sqrt 2}: largest pairing is 1 either way
    s = 1.0 / np.sqrt(2.0)
    oblique = PSchauderFrame(
        counting_measure(2), 2.0, [[1.0, 0.0], [s, s]], [[1.0, 0.0], [s, s]], "real"
    )
    frame = canonical_lp(2, 2.0)
    assert cross_coherence(frame, oblique) == (1.0, 1.0)


def test_cross_coherence_degenerate_pair():
    zero = PSchauderFrame(counting_measure(2), 2.0, np.zeros((2, 2)), np.zeros((2, 2)))
    frame = canonical_lp(2, 2.0)
    with pytest.raises(DegeneratePairError):
        cross_coherence(frame, zero)
    # the degenerate-pair error propagates through the uncertainty checker
    with pytest.raises(DegeneratePairError):
        uncertainty_check(frame, zero, np.array([1.0, 0.0]))


def test_cross_coherence_requires_matching_shapes():
    with pytest.raises(FrameError):
        cross_coherence(canonical_lp(2, 2.0), canonical_lp(3, 2.0))
    with pytest.raises(FrameError):
        cross_coherence(canonical_lp(2, 2.0), canonical_lp(2, 2.0, field="complex"))


# ----------------------------------------------------- uncertainty checks


def test_uncertainty_picket_fence_equality():
    first, second = dft_pair(4)
    rep = uncertainty_check(first, second, picket_fence(4))
    assert rep.supp_f == 2.0 and rep.supp_g == 2.0
    assert rep.supp_f * rep.supp_g == 4.0
    assert abs(rep.lhs1 - rep.bound1) <= 1e-9
    assert rep.holds1 and rep.holds2


def test_uncertainty_delta_has_full_transform_support():
    first, second = dft_pair(4)
    rep = uncertainty_check(first, second, np.array([1, 0, 0, 0], dtype=complex))
    assert rep.supp_f == 1.0 and rep.supp_g == 4.0
    assert rep.supp_f * rep.supp_g >= 4.0


def test_uncertainty_same_frame_p3():
    frame = canonical_lp(3, 3.0)
    rep = uncertainty_check(frame, frame, np.array([1.0, 1.0, 0.0]))
    assert rep.supp_f == 2.0 and rep.supp_g == 2.0
    # 2^(1/3) * 2^(2/3) = 2 >= 1/coherence = 1
    assert rep.lhs1 == pytest.approx(2.0, abs=1e-12)
    assert rep.bound1 == 1.0
    assert rep.holds1 and rep.holds2


def test_uncertainty_rejects_zero_vector():
    frame = canonical_lp(2, 2.0)
    with pytest.raises(FrameError, match="x = 0"):
        uncertainty_check(frame, frame, np.zeros(2))


def test_uncertainty_rejects_mismatched_exponent():
    with pytest.raises(FrameError):
        uncertainty_check(canonical_lp(2, 2.0), canonical_lp(2, 3.0), np.ones(2))


def test_uncertainty_soundness_on_planted_sparsity(zoo_frames):
    # small in-suite version of the acceptance sweep: exact-zero planted
    # vectors, eps = 0, no violations allowed
    rng = np.random.default_rng(42)
    groups = {}
    for name, frame in zoo_frames:
        groups.setdefault((frame.dimension, frame.p, frame.field), []).append(frame)
    checked = 0
    for (d, p, field), frames in groups.items():
        for ff in frames:
            for fg in frames:
                for _ in range(20):
                    k = int(rng.integers(1, d + 1))
                    support = rng.choice(d, size=k, replace=False)
                    x = np.zeros(d, dtype=complex if field == "complex" else float)
                    if field == "complex":
                        x[support] = rng.standard_normal(k) + 1j * rng.standard_normal(k)
                    else:
                        x[support] = rng.standard_normal(k)
                    rep = uncertainty_check(ff, fg, x, eps=0.0)
                    assert rep.holds1 and rep.holds2
                    checked += 1
    assert checked > 0


def test_parseval_pair_squared_bound(zoo_frames):
    # counting measure + p = 2: multiplying the two inequalities gives the
    # product bound supp_f * supp_g >= 1 / coherence^2
    frames = [f for _, f in zoo_frames if f.p == 2.0 and f.space.is_counting and f.dimension == 2]
    rng = np.random.default_rng(7)
    for ff in frames:
        for fg in frames:
            if ff.field != fg.field:
                continue
            x = rng.standard_normal(2)
            rep = uncertainty_check(ff, fg, x)
            assert rep.supp_f * rep.supp_g >= 1.0 / rep.coh_fg**2 - 1e-9
            assert rep.lhs1 * rep.lhs2 == pytest.approx(rep.supp_f * rep.supp_g)


# ------------------------------------------------------------- validation


def test_validate_canonical_residuals_zero():
    rep = validate_frame(canonical_lp(4, 1.5), trials=100, rng_seed=5)
    assert rep.max_isometry_residual == 0.0
    assert rep.max_reconstruction_residual == 0.0
    assert rep.passes


def test_validate_harmonic_discretization():
    rep = validate_frame(harmonic_discretization(4, 8), trials=500, tol=1e-10, rng_seed=5)
    assert rep.passes


def test_validate_detects_corrupted_weight():
    frame = canonical_lp(3, 2.0)
    weights = frame.space.weights.copy()
    weights[0] = 0.5
    broken = PSchauderFrame(
        MeasureSpace(weights), frame.p, frame.functionals, frame.vectors, frame.field
    )
    rep = validate_frame(broken, trials=100, tol=1e-9, rng_seed=5)
    assert rep.max_isometry_residual > 1e-9
    assert not rep.passes


def test_random_vectors_deterministic():
    a = random_vectors(3, 5, "complex", seed=9)
    b = random_vectors(3, 5, "complex", seed=9)
    assert np.array_equal(a, b)
