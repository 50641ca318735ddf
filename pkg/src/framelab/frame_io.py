"""Frame files: a JSON schema for persisting frames bit-exactly.

Layout::

    {
      "field": "real" | "complex",
      "p": <number>,
      "dimension": <int>,
      "atoms": [ {"weight": w, "functional": [s, ...], "vector": [s, ...]}, ... ]
    }

Real scalars are plain numbers; complex scalars are two-element arrays
``[re, im]``.  Doubles survive a write/read cycle bit-identically because the
encoder emits shortest round-trip decimals.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

import numpy as np

from .frames import COMPLEX, REAL, FrameError, MeasureSpace, PSchauderFrame


def _encode_scalar(value, field: str):
    if field == COMPLEX:
        z = complex(value)
        return [float(z.real), float(z.imag)]
    return float(np.real(value))


def _decode_scalar(obj, field: str):
    if field == COMPLEX:
        if not (isinstance(obj, (list, tuple)) and len(obj) == 2):
            raise FrameError("complex scalars must be [re, im] pairs")
        return complex(float(obj[0]), float(obj[1]))
    if isinstance(obj, bool) or not isinstance(obj, (int, float)):
        raise FrameError("real scalars must be plain numbers")
    return float(obj)


def frame_to_obj(frame: PSchauderFrame) -> dict:
    atoms = []
    for i in range(frame.n_atoms):
        atoms.append(
            {
                "weight": float(frame.space.weights[i]),
                "functional": [_encode_scalar(v, frame.field) for v in frame.functionals[i]],
                "vector": [_encode_scalar(v, frame.field) for v in frame.vectors[i]],
            }
        )
    return {
        "field": frame.field,
        "p": float(frame.p),
        "dimension": frame.dimension,
        "atoms": atoms,
    }


def frame_from_obj(obj) -> PSchauderFrame:
    if not isinstance(obj, dict):
        raise FrameError("frame file must hold a JSON object")
    missing = {"field", "p", "dimension", "atoms"} - obj.keys()
    if missing:
        raise FrameError(f"frame file missing keys: {sorted(missing)}")
    field = obj["field"]
    if field not in (REAL, COMPLEX):
        raise FrameError(f"unknown field {field!r}")
    dim = obj["dimension"]
    if not isinstance(dim, int) or dim < 1:
        raise FrameError("dimension must be a positive integer")
    atoms = obj["atoms"]
    if not isinstance(atoms, list) or not atoms:
        raise FrameError("frame file needs at least one atom")
    weights, functionals, vectors = [], [], []
    for k, atom in enumerate(atoms):
        if not isinstance(atom, dict):
            raise FrameError(f"atom {k} must be an object")
        try:
            weights.append(float(atom["weight"]))
            fun = [_decode_scalar(s, field) for s in atom["functional"]]
            vec = [_decode_scalar(s, field) for s in atom["vector"]]
        except KeyError as exc:
            raise FrameError(f"atom {k} missing {exc}") from None
        if len(fun) != dim or len(vec) != dim:
            raise FrameError(f"atom {k} rows must have length {dim}")
        functionals.append(fun)
        vectors.append(vec)
    dtype = np.complex128 if field == COMPLEX else np.float64
    return PSchauderFrame(
        space=MeasureSpace(np.array(weights)),
        p=float(obj["p"]),
        functionals=np.array(functionals, dtype=dtype),
        vectors=np.array(vectors, dtype=dtype),
        field=field,
    )


def frame_json(frame: PSchauderFrame) -> str:
    """Canonical text form; also the hashing preimage for frame digests."""
    return json.dumps(frame_to_obj(frame), indent=2)


def frame_digest(frame: PSchauderFrame) -> str:
    return hashlib.sha256(frame_json(frame).encode()).hexdigest()


def save_frame(frame: PSchauderFrame, path) -> None:
    Path(path).write_text(frame_json(frame) + "\n")


def load_frame(path) -> PSchauderFrame:
    try:
        obj = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FrameError(f"not a JSON frame file: {exc}") from None
    return frame_from_obj(obj)


def vector_to_obj(x: np.ndarray, field: str) -> list:
    return [_encode_scalar(v, field) for v in np.asarray(x)]


def vector_from_obj(obj, field: str) -> np.ndarray:
    if not isinstance(obj, list):
        raise FrameError("vector file must hold a JSON array")
    values = [_decode_scalar(s, field) for s in obj]
    dtype = np.complex128 if field == COMPLEX else np.float64
    return np.array(values, dtype=dtype)
