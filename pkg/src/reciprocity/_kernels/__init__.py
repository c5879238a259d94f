"""Kernel backend selection.

The compiled extension is preferred when present; set ``RECIPROCITY_PURE=1``
to force the pure-Python kernels (used by the benchmark and for debugging).
``BACKEND`` reports which implementation is live.
"""

from __future__ import annotations

import os

if os.environ.get("RECIPROCITY_PURE"):
    from . import pure as _impl
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import pure as _impl

BACKEND: str = _impl.BACKEND

normalize = _impl.normalize
add = _impl.add
sub = _impl.sub
neg = _impl.neg
scalar_mul = _impl.scalar_mul
mul = _impl.mul
divmod_poly = _impl.divmod_poly
rem = _impl.rem
monic = _impl.monic
gcd = _impl.gcd
xgcd = _impl.xgcd
invmod = _impl.invmod
mulmod = _impl.mulmod
powmod = _impl.powmod
eval_at = _impl.eval_at
mat_mul = _impl.mat_mul
mat_det = _impl.mat_det
mat_inv = _impl.mat_inv
