"""Kernel dispatch: compiled single-word kernels when available, pure Python
otherwise.

Set ``FBBLAT_KERNEL=pure`` to force the fallback (useful for benchmarking) or
``FBBLAT_KERNEL=compiled`` to fail loudly when the extension is missing.
Posets wider than 64 elements always take the pure path.
"""

from __future__ import annotations

import os

from . import pure as _pure

try:
    from . import fastcore as _fast
except ImportError:  # extension not built; pure fallback covers everything
    _fast = None

WORD_BITS = 64

_MODE = os.environ.get("FBBLAT_KERNEL", "auto").strip().lower() or "auto"
if _MODE not in ("auto", "pure", "compiled"):
    raise RuntimeError(
        f"FBBLAT_KERNEL must be 'auto', 'pure' or 'compiled', not {_MODE!r}")
if _MODE == "compiled" and _fast is None:
    raise RuntimeError(
        "FBBLAT_KERNEL=compiled, but the fastcore extension is not built; "
        "install with `pip install -e . --no-build-isolation`")


def compiled_available():
    return _fast is not None


def active_implementation(nbits=0):
    """Name of the implementation a call with ``nbits`` working bits uses."""
    return "compiled" if _use_fast(nbits) else "pure"


def _use_fast(nbits):
    return _fast is not None and _MODE != "pure" and nbits <= WORD_BITS


def closure(n, covers):
    return (_fast if _use_fast(n) else _pure).closure(n, covers)


def covers_within(n, up, down, mask):
    return (_fast if _use_fast(n) else _pure).covers_within(n, up, down, mask)


def induced_nullity_parts(n, up, down, mask):
    impl = _fast if _use_fast(n) else _pure
    return impl.induced_nullity_parts(n, up, down, mask)


def is_lattice(n, up, down):
    return (_fast if _use_fast(n) else _pure).is_lattice(n, up, down)


def reducibility(n, up, down):
    return (_fast if _use_fast(n) else _pure).reducibility(n, up, down)


def basic_block_universal(n, up, down):
    impl = _fast if _use_fast(n) else _pure
    return impl.basic_block_universal(n, up, down)


def dismantling_order(n, up, down):
    return (_fast if _use_fast(n) else _pure).dismantling_order(n, up, down)


def unisolated_masks(nv, q):
    npairs = nv * (nv - 1) // 2
    return (_fast if _use_fast(npairs) else _pure).unisolated_masks(nv, q)
