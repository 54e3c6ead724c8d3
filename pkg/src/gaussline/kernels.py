"""Backend selection for the scanning kernels.

The compiled extension is used when importable; set ``GAUSSLINE_PURE=1``
to force the pure-Python kernels. ``BACKEND`` names the active choice.
"""
from __future__ import annotations

import os

from . import _pykernels

COORD_LIMIT = 1 << 31

if os.environ.get("GAUSSLINE_PURE", "") not in ("", "0"):
    _compiled = None
else:
    try:
        from . import _kernels as _compiled
    except ImportError:  # pragma: no cover - depends on the build
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"


def backends() -> dict:
    """Every importable backend module by name (for tests and benchmarks)."""
    out = {"python": _pykernels}
    if _compiled is not None:
        out["cython"] = _compiled
    return out


def _fits(x0, y0, c, d, lo, hi) -> bool:
    span = hi - 1 - lo
    xs = (x0, x0 + span * c)
    ys = (y0, y0 + span * d)
    return max(abs(v) for v in xs + ys) < COORD_LIMIT and abs(lo) < COORD_LIMIT and abs(hi) < COORD_LIMIT


def sieve_block(lo, hi, qs, rs, elo, ehi):
    if _compiled is not None and abs(lo) < 1 << 62 and abs(hi) < 1 << 62 and abs(elo) < 1 << 62 and abs(ehi) < 1 << 62:
        return _compiled.sieve_block(lo, hi, qs, rs, elo, ehi)
    return _pykernels.sieve_block(lo, hi, qs, rs, elo, ehi)


def scan_block(x0, y0, c, d, lo, hi, qs, rs, elo, ehi):
    """Gaussian-prime indices in ``[lo, hi)``; big coordinates take the Python path."""
    if _compiled is not None and hi > lo and _fits(x0, y0, c, d, lo, hi):
        elo = max(elo, lo - 1)
        ehi = min(ehi, hi)
        return _compiled.scan_block(x0, y0, c, d, lo, hi, qs, rs, elo, ehi)
    return _pykernels.scan_block(x0, y0, c, d, lo, hi, qs, rs, elo, ehi)
