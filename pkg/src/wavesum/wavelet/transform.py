"""1-D and column-wise multi-level DWT/IDWT with explicit boundary handling.

Conventions (fixed so golden outputs are bit-stable):
  analysis   out[k] = sum_m f[m] * x_ext[2k + m]     (correlation, no flip)
  synthesis  x[i]   = sum_m rec[m] * up_ext[i + m]   (zero-stuffed upsample)

Periodic mode wraps indices modulo the (even) length and keeps the transform
orthonormal, so perfect reconstruction and energy conservation hold exactly.
Odd-length periodic inputs are first extended by repeating the final sample.
Symmetric mode uses half-sample reflection and yields floor((n+L-1)/2)
coefficients per step.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from ..errors import (
    ConfigError,
    DegenerateInputError,
    LevelOverflowError,
    ShapeError,
)
from ._backend import BACKEND_NAME, analysis_step, synthesis_step
from .filters import WaveletFilter, make_filter


class BoundaryMode(str, enum.Enum):
    PERIODIC = "periodic"
    SYMMETRIC = "symmetric"


def _as_mode(mode) -> BoundaryMode:
    if isinstance(mode, BoundaryMode):
        return mode
    try:
        return BoundaryMode(str(mode))
    except ValueError:
        raise ConfigError(f"unknown boundary mode {mode!r}") from None


@dataclass
class CoefficientPyramid:
    """Multi-level decomposition of one scalar channel.

    details are ordered coarsest-first: [cD_L, ..., cD_1].  original_length,
    boundary mode and filter id are recorded so the pyramid can be inverted.
    """

    levels: int
    approx: np.ndarray
    details: list
    original_length: int
    mode: BoundaryMode
    family_id: str


@dataclass
class MatrixPyramid:
    """Per-column pyramids of an (n x d) matrix, stacked back into matrices."""

    levels: int
    approx: np.ndarray
    details: list
    original_length: int
    dim: int
    mode: BoundaryMode
    family_id: str


def _sym_index(pos: np.ndarray, n: int) -> np.ndarray:
    # Half-sample symmetry: ... x1 x0 | x0 x1 ... x_{n-1} | x_{n-1} ... (period 2n)
    idx = np.mod(pos, 2 * n)
    return np.where(idx >= n, 2 * n - 1 - idx, idx)


def _analysis_matrix(x: np.ndarray, flt: WaveletFilter, mode: BoundaryMode):
    n = x.shape[0]
    L = flt.length
    if mode is BoundaryMode.PERIODIC:
        if n % 2 == 1:
            x = np.concatenate([x, x[-1:]], axis=0)
            n += 1
        out_len = n // 2
        idx = np.mod(np.arange(2 * out_len + L - 2), n)
    else:
        out_len = (n + L - 1) // 2
        idx = _sym_index(np.arange(2 * out_len + L - 2) + (2 - L), n)
    ext = np.ascontiguousarray(x[idx])
    return analysis_step(ext, flt.dec_lo, flt.dec_hi, out_len)


def _synthesis_matrix(
    ca: np.ndarray,
    cd: np.ndarray,
    flt: WaveletFilter,
    mode: BoundaryMode,
    original_length: int,
) -> np.ndarray:
    if ca.shape != cd.shape:
        raise ShapeError(
            f"approximation/detail shape mismatch: {ca.shape} vs {cd.shape}"
        )
    n_c, d = ca.shape
    L = flt.length
    up = np.zeros((2 * n_c, d), dtype=np.float64)
    up_d = np.zeros((2 * n_c, d), dtype=np.float64)
    up[0::2] = ca
    up_d[0::2] = cd
    if mode is BoundaryMode.PERIODIC:
        n_even = 2 * n_c
        if original_length not in (n_even, n_even - 1):
            raise ShapeError(
                f"original_length {original_length} inconsistent with "
                f"{n_c} periodic coefficients"
            )
        idx = np.mod(np.arange(n_even + L - 2) - (L - 1), n_even)
        out = synthesis_step(
            np.ascontiguousarray(up[idx]),
            np.ascontiguousarray(up_d[idx]),
            flt.rec_lo,
            flt.rec_hi,
            n_even,
        )
    else:
        if (original_length + L - 1) // 2 != n_c:
            raise ShapeError(
                f"original_length {original_length} inconsistent with "
                f"{n_c} symmetric coefficients"
            )
        ext_len = original_length + L - 1
        ua = np.zeros((ext_len, d), dtype=np.float64)
        ud = np.zeros((ext_len, d), dtype=np.float64)
        take = min(2 * n_c, ext_len - 1)  # trailing stuffed zero may not fit; it is zero anyway
        ua[1 : 1 + take] = up[:take]
        ud[1 : 1 + take] = up_d[:take]
        out = synthesis_step(ua, ud, flt.rec_lo, flt.rec_hi, original_length)
    return out[:original_length]


def _as_signal(signal) -> np.ndarray:
    arr = np.asarray(signal, dtype=np.float64)
    if arr.ndim != 1:
        raise ShapeError(f"expected a 1-D signal, got shape {arr.shape}")
    return arr


def dwt_step(signal, flt: WaveletFilter, mode="periodic"):
    """One analysis step: returns (cA, cD) for a 1-D signal of length >= 2."""
    x = _as_signal(signal)
    if x.shape[0] < 2:
        raise DegenerateInputError(
            f"signal of length {x.shape[0]} cannot be decomposed (need >= 2)"
        )
    ca, cd = _analysis_matrix(x[:, None], flt, _as_mode(mode))
    return ca[:, 0], cd[:, 0]


def idwt_step(ca, cd, flt: WaveletFilter, mode="periodic", original_length=None):
    """Inverse of dwt_step.  original_length controls truncation of padded inputs."""
    a = _as_signal(ca)
    dvec = _as_signal(cd)
    if a.shape[0] != dvec.shape[0]:
        raise ShapeError(
            f"cA length {a.shape[0]} != cD length {dvec.shape[0]}"
        )
    if original_length is None:
        original_length = 2 * a.shape[0]
    out = _synthesis_matrix(
        a[:, None], dvec[:, None], flt, _as_mode(mode), original_length
    )
    return out[:, 0]


def max_decomposition_level(n: int) -> int:
    """Maximum feasible level for a length-n signal: floor(log2(n))."""
    if n < 2:
        return 0
    return int(math.floor(math.log2(n)))


def _coeff_len(n: int, L: int, mode: BoundaryMode) -> int:
    if mode is BoundaryMode.PERIODIC:
        return (n + 1) // 2
    return (n + L - 1) // 2


def _check_levels(n: int, levels: int, mode: BoundaryMode, L: int) -> None:
    if levels < 1:
        raise ConfigError(f"levels must be >= 1, got {levels}")
    max_level = max_decomposition_level(n)
    if mode is BoundaryMode.PERIODIC:
        if levels > max_level:
            raise LevelOverflowError(levels, max_level)
    else:
        length = n
        for _ in range(levels):
            if length < 2:
                raise LevelOverflowError(levels, max_level)
            length = _coeff_len(length, L, mode)


def wavedec(signal, flt: WaveletFilter, levels: int, mode="periodic") -> CoefficientPyramid:
    """Recursive decomposition into {cA_L, cD_L, ..., cD_1}."""
    x = _as_signal(signal)
    bmode = _as_mode(mode)
    n = x.shape[0]
    if n < 2:
        raise DegenerateInputError(
            f"signal of length {n} cannot be decomposed (need >= 2)"
        )
    _check_levels(n, levels, bmode, flt.length)
    approx = x[:, None]
    details = []
    for _ in range(levels):
        approx, detail = _analysis_matrix(approx, flt, bmode)
        details.append(detail[:, 0])
    details.reverse()
    return CoefficientPyramid(
        levels=levels,
        approx=approx[:, 0],
        details=details,
        original_length=n,
        mode=bmode,
        family_id=flt.family_id,
    )


def waverec(pyramid: CoefficientPyramid, flt: WaveletFilter | None = None) -> np.ndarray:
    """Invert wavedec using the metadata recorded in the pyramid."""
    if flt is None:
        flt = make_filter(pyramid.family_id)
    lengths = [pyramid.original_length]
    for _ in range(pyramid.levels):
        lengths.append(_coeff_len(lengths[-1], flt.length, pyramid.mode))
    a = pyramid.approx[:, None]
    for j in range(pyramid.levels):
        target = lengths[pyramid.levels - 1 - j]
        a = _synthesis_matrix(
            a, pyramid.details[j][:, None], flt, pyramid.mode, target
        )
    return a[:, 0]


def dwt_matrix(matrix, flt: WaveletFilter, levels: int, mode="periodic") -> MatrixPyramid:
    """Column-wise wavedec of an (n x d) matrix, reassembled into matrices.

    Column k of every output equals wavedec of input column k; the kernels
    process all columns in one pass.
    """
    x = np.asarray(matrix, dtype=np.float64)
    if x.ndim != 2:
        raise ShapeError(f"expected an (n x d) matrix, got shape {x.shape}")
    n, d = x.shape
    if n == 0 or d == 0:
        raise DegenerateInputError(f"empty matrix of shape {x.shape}")
    if n < 2:
        raise DegenerateInputError(
            f"matrix with {n} row(s) cannot be decomposed (need >= 2)"
        )
    bmode = _as_mode(mode)
    _check_levels(n, levels, bmode, flt.length)
    approx = np.ascontiguousarray(x)
    details = []
    for _ in range(levels):
        approx, detail = _analysis_matrix(approx, flt, bmode)
        details.append(detail)
    details.reverse()
    return MatrixPyramid(
        levels=levels,
        approx=approx,
        details=details,
        original_length=n,
        dim=d,
        mode=bmode,
        family_id=flt.family_id,
    )


__all__ = [
    "BACKEND_NAME",
    "BoundaryMode",
    "CoefficientPyramid",
    "MatrixPyramid",
    "dwt_matrix",
    "dwt_step",
    "idwt_step",
    "max_decomposition_level",
    "wavedec",
    "waverec",
]
