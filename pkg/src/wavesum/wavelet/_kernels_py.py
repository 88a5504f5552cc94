"""NumPy implementations of the hot filter-bank kernels.

These are the fallback for the compiled Cython module.  Accumulation runs
tap-by-tap over zero-initialized buffers, which gives bit-identical results
to the compiled loops (the Cython build disables fp-contraction for the same
reason).  Do not replace the tap loop with dot products: BLAS reductions use
a different summation order.
"""

from __future__ import annotations

import numpy as np

BACKEND = "numpy"


def analysis_step(ext: np.ndarray, lo: np.ndarray, hi: np.ndarray, out_len: int):
    """Correlate-and-downsample: out[k, c] = sum_m f[m] * ext[2k + m, c]."""
    d = ext.shape[1]
    ca = np.zeros((out_len, d), dtype=np.float64)
    cd = np.zeros((out_len, d), dtype=np.float64)
    for m in range(lo.shape[0]):
        seg = ext[m : m + 2 * out_len : 2]
        ca += lo[m] * seg
        cd += hi[m] * seg
    return ca, cd


def synthesis_step(
    ua_ext: np.ndarray,
    ud_ext: np.ndarray,
    rec_lo: np.ndarray,
    rec_hi: np.ndarray,
    out_len: int,
) -> np.ndarray:
    """Dual correlation: out[i, c] = sum_m rlo[m]*ua[i+m, c] + sum_m rhi[m]*ud[i+m, c]."""
    d = ua_ext.shape[1]
    out = np.zeros((out_len, d), dtype=np.float64)
    for m in range(rec_lo.shape[0]):
        out += rec_lo[m] * ua_ext[m : m + out_len]
    for m in range(rec_hi.shape[0]):
        out += rec_hi[m] * ud_ext[m : m + out_len]
    return out
