"""Backend selection for the integer kernels.

The compiled module is used when it is importable and the inputs are small
enough that every intermediate fits in int64; otherwise the pure-Python
kernels run on unbounded ints. Both paths return identical lists.
"""
from __future__ import annotations

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_INT64_SAFE = 2 ** 62
_forced: str | None = None


def available_backends() -> list[str]:
    return ["python"] + (["cython"] if _ckernels is not None else [])


def use_backend(name: str | None) -> None:
    """Force ``"python"`` or ``"cython"``; ``None`` restores automatic choice."""
    global _forced
    if name not in (None, "python", "cython"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "cython" and _ckernels is None:
        raise RuntimeError("compiled kernels are not built")
    _forced = name


def backend_name() -> str:
    if _forced:
        return _forced
    return "cython" if _ckernels is not None else "python"


def _pick(bound: int):
    if _forced == "python" or _ckernels is None:
        return _pykernels
    if bound >= _INT64_SAFE:
        return _pykernels
    return _ckernels


def _maxabs(xs) -> int:
    return max((abs(x) for x in xs), default=0)


def left_right(c: list[int], n: int):
    m = _maxabs(c)
    return _pick(2 * n * m * m + 1).left_right(c, n)


def permuted_rows(t: list[int], n: int, perms):
    return _pick(_maxabs(t) + 1).permuted_rows(t, n, perms)


def tensor_table(ca: list[int], na: int, cb: list[int], nb: int):
    return _pick(_maxabs(ca) * _maxabs(cb) + 1).tensor_table(ca, na, cb, nb)
