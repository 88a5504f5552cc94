"""Daubechies filter banks (db1..db8).

Scaling taps are hard-coded constants (extremal-phase factorization, natural
order, verified against the analytic invariants below) rather than computed at
runtime, so the transform is bit-stable across platforms.  Regenerate with
scripts/gen_filter_taps.py if the table ever needs to change.

Conventions used throughout the package:
  dec_hi[n] = (-1)^n * dec_lo[L-1-n]        (quadrature mirror)
  rec_lo    = reverse(dec_lo)
  rec_hi    = reverse(dec_hi)
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import ConfigError

# Analysis low-pass taps h0..h_{2K-1}; sum = sqrt(2), l2 norm = 1.
_DEC_LO = {
    "db1": (
        0.70710678118654752,
        0.70710678118654752,
    ),
    "db2": (
        0.48296291314453414,
        0.83651630373780791,
        0.22414386804201338,
        -0.12940952255126038,
    ),
    "db3": (
        0.33267055295008262,
        0.80689150931109258,
        0.45987750211849157,
        -0.13501102001025459,
        -0.085441273882026662,
        0.035226291885709537,
    ),
    "db4": (
        0.2303778133088965,
        0.71484657055291565,
        0.63088076792985891,
        -0.027983769416859854,
        -0.18703481171909308,
        0.030841381835560764,
        0.0328830116668852,
        -0.010597401785069032,
    ),
    "db5": (
        0.16010239797419291,
        0.60382926979718967,
        0.72430852843777293,
        0.13842814590132073,
        -0.24229488706638203,
        -0.032244869584638375,
        0.077571493840045714,
        -0.0062414902127982743,
        -0.012580751999081999,
        0.0033357252854737713,
    ),
    "db6": (
        0.11154074335010946,
        0.49462389039845309,
        0.75113390802109535,
        0.31525035170919763,
        -0.22626469396543982,
        -0.12976686756726194,
        0.097501605587323049,
        0.027522865530305729,
        -0.03158203931748603,
        0.00055384220116149614,
        0.0047772575109455106,
        -0.0010773010853084796,
    ),
    "db7": (
        0.077852054085009179,
        0.39653931948191731,
        0.72913209084623512,
        0.46978228740519312,
        -0.14390600392856498,
        -0.22403618499387498,
        0.071309219266830265,
        0.080612609151083072,
        -0.038029936935014414,
        -0.016574541630666881,
        0.012550998556099841,
        0.00042957797292136652,
        -0.0018016407040474909,
        0.00035371379997452025,
    ),
    "db8": (
        0.05441584224310401,
        0.31287159091429997,
        0.67563073629728981,
        0.58535468365420671,
        -0.015829105256349306,
        -0.28401554296154693,
        0.00047248457391328277,
        0.12874742662047846,
        -0.017369301001807546,
        -0.044088253930794752,
        0.013981027917398282,
        0.0087460940474057767,
        -0.0048703529934515743,
        -0.00039174037337694705,
        0.00067544940645056937,
        -0.00011747678412476953,
    ),
}

SUPPORTED_FAMILIES = tuple(sorted(_DEC_LO))


@dataclass(frozen=True)
class WaveletFilter:
    """Analysis/synthesis filter bank for one Daubechies order."""

    family_id: str
    dec_lo: np.ndarray
    dec_hi: np.ndarray
    rec_lo: np.ndarray
    rec_hi: np.ndarray

    @property
    def length(self) -> int:
        return self.dec_lo.shape[0]


def make_filter(family: str) -> WaveletFilter:
    """Build the filter bank for a family id in db1..db8.

    The high-pass filter is derived by the quadrature-mirror rule
    dec_hi[n] = (-1)^n * dec_lo[L-1-n]; the synthesis filters are the
    reversals of the analysis pair.
    """
    try:
        taps = _DEC_LO[family]
    except KeyError:
        raise ConfigError(
            f"unknown wavelet family {family!r}; supported: {', '.join(SUPPORTED_FAMILIES)}"
        ) from None
    dec_lo = np.array(taps, dtype=np.float64)
    L = dec_lo.shape[0]
    signs = np.where(np.arange(L) % 2 == 0, 1.0, -1.0)
    dec_hi = signs * dec_lo[::-1]
    flt = WaveletFilter(
        family_id=family,
        dec_lo=dec_lo,
        dec_hi=dec_hi,
        rec_lo=dec_lo[::-1].copy(),
        rec_hi=dec_hi[::-1].copy(),
    )
    for arr in (flt.dec_lo, flt.dec_hi, flt.rec_lo, flt.rec_hi):
        arr.setflags(write=False)
    return flt
