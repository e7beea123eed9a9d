"""Finite-dimensional algebras given by structure constants.

``product(e_i, e_j) = sum_l c[i][j][l] e_l``. Internally a table is a flat
tuple with index ``(i*n + j)*n + l`` (0-based); the JSON format uses
1-based indices.
"""
from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Sequence

from . import kernels
from .group_algebra import BASIS, GroupAlgebraElement, V, W, span_of_orbit
from .linalg import Subspace, nullspace
from .rational import format_rational, parse_rational

# Phi_s sends (x1, x2, x3) to (x_s(1), x_s(2), x_s(3)); stored 0-based.
PHI_POSITIONS = tuple(tuple(p(q) - 1 for q in (1, 2, 3)) for p in BASIS)

ALTERNATIVE_GENERATOR = GroupAlgebraElement.of(2, 1, 1, 1, 1, 0)


class UnknownName(KeyError):
    pass


class SchemaError(ValueError):
    pass


@dataclass(frozen=True)
class StructureConstants:
    dim: int
    data: tuple[Fraction, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        if len(self.data) != self.dim ** 3:
            raise ValueError(f"expected {self.dim ** 3} entries, got {len(self.data)}")
        object.__setattr__(self, "data", tuple(Fraction(x) for x in self.data))

    @classmethod
    def from_entries(cls, dim: int, entries: dict, name: str = "") -> "StructureConstants":
        """``entries`` maps 0-based ``(i, j, l)`` to a coefficient."""
        data = [Fraction(0)] * dim ** 3
        for (i, j, l), x in entries.items():
            data[(i * dim + j) * dim + l] = Fraction(x)
        return cls(dim, tuple(data), name)

    @classmethod
    def from_nested(cls, table, name: str = "") -> "StructureConstants":
        n = len(table)
        return cls(n, tuple(table[i][j][l] for i in range(n) for j in range(n) for l in range(n)), name)

    @classmethod
    def from_function(cls, dim: int, mul, name: str = "") -> "StructureConstants":
        """Build from ``mul(i, j) -> coordinate vector`` on basis indices."""
        data = []
        for i in range(dim):
            for j in range(dim):
                data.extend(mul(i, j))
        return cls(dim, tuple(data), name)

    def c(self, i: int, j: int, l: int) -> Fraction:
        return self.data[(i * self.dim + j) * self.dim + l]

    def nested(self) -> list:
        n = self.dim
        return [[[self.c(i, j, l) for l in range(n)] for j in range(n)] for i in range(n)]

    def multiply(self, x: Sequence, y: Sequence) -> list[Fraction]:
        n = self.dim
        out = [Fraction(0)] * n
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b:
                    continue
                base = (i * n + j) * n
                ab = Fraction(a) * Fraction(b)
                for l in range(n):
                    cl = self.data[base + l]
                    if cl:
                        out[l] += ab * cl
        return out

    def integer_form(self) -> tuple[int, list[int]]:
        """``(D, ints)`` with ``data == ints / D``."""
        den = 1
        for x in self.data:
            if x.denominator != 1:
                den = lcm(den, x.denominator)
        return den, [int(x * den) for x in self.data]

    def renamed(self, name: str) -> "StructureConstants":
        return StructureConstants(self.dim, self.data, name)

    # JSON ------------------------------------------------------------------
    def to_json(self) -> dict:
        n = self.dim
        entries = []
        for i in range(n):
            for j in range(n):
                for l in range(n):
                    x = self.c(i, j, l)
                    if x:
                        entries.append({"i": i + 1, "j": j + 1, "k": l + 1, "c": format_rational(x)})
        return {"dim": n, "name": self.name, "entries": entries}

    @classmethod
    def from_json(cls, obj) -> "StructureConstants":
        if isinstance(obj, (str, bytes)):
            try:
                obj = json.loads(obj)
            except json.JSONDecodeError as exc:
                raise SchemaError(f"invalid JSON: {exc}") from None
        if not isinstance(obj, dict) or "dim" not in obj or "entries" not in obj:
            raise SchemaError("expected an object with 'dim' and 'entries'")
        n = obj["dim"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise SchemaError(f"'dim' must be a positive integer, got {n!r}")
        if not isinstance(obj["entries"], list):
            raise SchemaError("'entries' must be a list")
        entries = {}
        for e in obj["entries"]:
            if not isinstance(e, dict) or set(e) - {"i", "j", "k", "c"} or len(e) != 4:
                raise SchemaError(f"bad entry {e!r}")
            idx = []
            for key in ("i", "j", "k"):
                v = e[key]
                if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= n:
                    raise SchemaError(f"index {key}={v!r} out of range 1..{n}")
                idx.append(v - 1)
            try:
                val = parse_rational(e["c"])
            except ValueError as exc:
                raise SchemaError(str(exc)) from None
            if tuple(idx) in entries:
                raise SchemaError(f"duplicate entry {e!r}")
            entries[tuple(idx)] = val
        name = obj.get("name", "")
        if not isinstance(name, str):
            raise SchemaError("'name' must be a string")
        return cls.from_entries(n, entries, name)


@dataclass(frozen=True)
class AssociatorTensor:
    """``A(e_i, e_j, e_k) = sum_l a[((i*n + j)*n + k)*n + l] e_l``."""

    dim: int
    data: tuple[Fraction, ...]

    def __call__(self, i: int, j: int, k: int) -> tuple[Fraction, ...]:
        n = self.dim
        base = ((i * n + j) * n + k) * n
        return self.data[base:base + n]

    def is_zero(self) -> bool:
        return not any(self.data)


# --- integer tensors shared by the analysis routines -----------------------

@lru_cache(maxsize=64)
def _left_right_ints(sc: StructureConstants) -> tuple[int, list[int], list[int]]:
    den, ints = sc.integer_form()
    left, right = kernels.left_right(ints, sc.dim)
    return den * den, left, right


@lru_cache(maxsize=64)
def _associator_ints(sc: StructureConstants) -> list[int]:
    _, left, right = _left_right_ints(sc)
    return [a - b for a, b in zip(left, right)]


def distinct_rows(flat: list[int], width: int) -> list[tuple[int, ...]]:
    rows = set()
    for s in range(0, len(flat), width):
        r = tuple(flat[s:s + width])
        if any(r):
            rows.add(r)
    return sorted(rows)


@lru_cache(maxsize=64)
def identity_rows(sc: StructureConstants) -> list[tuple[int, ...]]:
    """Distinct nonzero rows ``(A(Phi_s(e_i, e_j, e_k))_l)_s``; ``v`` is
    satisfied iff every row is orthogonal to its coefficients."""
    flat = kernels.permuted_rows(_associator_ints(sc), sc.dim, PHI_POSITIONS)
    return distinct_rows(flat, 6)


def associator(sc: StructureConstants) -> AssociatorTensor:
    den2, left, right = _left_right_ints(sc)
    return AssociatorTensor(sc.dim, tuple(Fraction(a - b, den2) for a, b in zip(left, right)))


def satisfies(sc: StructureConstants, v: GroupAlgebraElement) -> bool:
    """Whether ``A o Phi_v`` vanishes on every basis triple."""
    a = v.coeffs
    return all(sum(x * y for x, y in zip(r, a)) == 0 for r in identity_rows(sc))


def annihilator(sc: StructureConstants) -> Subspace:
    """All v in Q[S3] with ``A o Phi_v = 0``; an invariant subspace."""
    return Subspace.span(nullspace(identity_rows(sc), 6), 6)


# --- direct oracles ---------------------------------------------------------
# These evaluate products straight from the integer table, without the
# kernels or the annihilator system.

def _mul_int(ints, n, x, y):
    out = [0] * n
    for i, a in enumerate(x):
        if not a:
            continue
        for j, b in enumerate(y):
            if not b:
                continue
            base = (i * n + j) * n
            for l in range(n):
                cl = ints[base + l]
                if cl:
                    out[l] += a * b * cl
    return out


def _unit(n, i):
    e = [0] * n
    e[i] = 1
    return e


def _direct_associator(ints, n):
    """Dict (i, j, k) -> integer associator vector, computed naively."""
    prods = {(i, j): _mul_int(ints, n, _unit(n, i), _unit(n, j)) for i in range(n) for j in range(n)}
    out = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                left = _mul_int(ints, n, prods[i, j], _unit(n, k))
                right = _mul_int(ints, n, _unit(n, i), prods[j, k])
                out[i, j, k] = [a - b for a, b in zip(left, right)]
    return out


def jacobi_check(sc: StructureConstants) -> bool:
    """Whether ``[x, y] = xy - yx`` satisfies the Jacobi identity."""
    n = sc.dim
    _, ints = sc.integer_form()
    br = {}
    for i in range(n):
        for j in range(n):
            br[i, j] = [ints[(i * n + j) * n + l] - ints[(j * n + i) * n + l] for l in range(n)]

    def bracket(x, y):
        out = [0] * n
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if b:
                    for l, cl in enumerate(br[i, j]):
                        if cl:
                            out[l] += a * b * cl
        return out

    for i in range(n):
        for j in range(n):
            for k in range(n):
                x, y, z = _unit(n, i), _unit(n, j), _unit(n, k)
                s = [
                    p + q + r
                    for p, q, r in zip(
                        bracket(x, br[j, k]), bracket(y, br[k, i]), bracket(z, br[i, j])
                    )
                ]
                if any(s):
                    return False
    return True


def power_assoc_check(sc: StructureConstants) -> bool:
    """Whether the fully symmetrized associator vanishes (in characteristic
    zero: ``A(x, x, x) = 0`` for all x)."""
    n = sc.dim
    _, ints = sc.integer_form()
    a = _direct_associator(ints, n)
    for i in range(n):
        for j in range(i, n):
            for k in range(j, n):
                total = [0] * n
                for p in BASIS:
                    t = (i, j, k)
                    q = (t[p(1) - 1], t[p(2) - 1], t[p(3) - 1])
                    total = [x + y for x, y in zip(total, a[q])]
                if any(total):
                    return False
    return True


def alternative_check(sc: StructureConstants) -> bool:
    """Left and right alternative laws in polarized form."""
    n = sc.dim
    _, ints = sc.integer_form()
    a = _direct_associator(ints, n)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                x = a[i, j, k]
                if any(p + q for p, q in zip(x, a[j, i, k])):
                    return False
                if any(p + q for p, q in zip(x, a[i, k, j])):
                    return False
    return True


def is_associative(sc: StructureConstants) -> bool:
    return not any(_associator_ints(sc))


def is_lie_admissible(sc: StructureConstants) -> bool:
    return satisfies(sc, V)


def is_power_associative(sc: StructureConstants) -> bool:
    return satisfies(sc, W)


def is_alternative(sc: StructureConstants) -> bool:
    return annihilator(sc).contains_subspace(span_of_orbit(ALTERNATIVE_GENERATOR))


# --- constructions ----------------------------------------------------------

def tensor(a: StructureConstants, b: StructureConstants) -> StructureConstants:
    """Componentwise product on the basis ``e_i (x) f_j`` (index i*m + j)."""
    da, ia = a.integer_form()
    db, ib = b.integer_form()
    flat = kernels.tensor_table(ia, a.dim, ib, b.dim)
    den = da * db
    name = f"{a.name or 'A'}(x){b.name or 'B'}"
    return StructureConstants(a.dim * b.dim, tuple(Fraction(x, den) for x in flat), name)


def opposite(sc: StructureConstants) -> StructureConstants:
    return StructureConstants.from_function(sc.dim, lambda i, j: [sc.c(j, i, l) for l in range(sc.dim)], sc.name + "^op")


def cayley_dickson_from(sc: StructureConstants, name: str = "") -> StructureConstants:
    """Double a unital algebra whose basis element 0 is the unit.

    ``(a, b)(c, d) = (ac - conj(d) b, d a + b conj(c))`` with conjugation
    fixing e_0 and negating the other basis elements.
    """
    n = sc.dim

    def conj(x):
        return [x[0]] + [-t for t in x[1:]]

    def split(i):
        x = [Fraction(0)] * (2 * n)
        x[i] = Fraction(1)
        return x[:n], x[n:]

    def mul(i, j):
        a, b = split(i)
        c, d = split(j)
        first = [p - q for p, q in zip(sc.multiply(a, c), sc.multiply(conj(d), b))]
        second = [p + q for p, q in zip(sc.multiply(d, a), sc.multiply(b, conj(c)))]
        return first + second

    return StructureConstants.from_function(2 * n, mul, name or f"CD({sc.name})")


def _reals():
    return StructureConstants(1, (Fraction(1),), "reals")


def _complex():
    return cayley_dickson_from(_reals(), "complex")


def _quaternions():
    return cayley_dickson_from(_complex(), "quaternions")


def _octonions():
    return cayley_dickson_from(_quaternions(), "octonions")


def _sl2():
    # basis e, f, h with [e,f] = h, [h,e] = 2e, [h,f] = -2f
    return StructureConstants.from_entries(
        3,
        {(0, 1, 2): 1, (1, 0, 2): -1, (2, 0, 0): 2, (0, 2, 0): -2, (2, 1, 1): -2, (1, 2, 1): 2},
        "sl2_commutator",
    )


def _heisenberg():
    return StructureConstants.from_entries(3, {(0, 1, 2): 1, (1, 0, 2): -1}, "heisenberg_commutator")


def _mat2():
    # matrix units E11, E12, E21, E22 in that order
    units = [(0, 0), (0, 1), (1, 0), (1, 1)]
    entries = {}
    for a, (i, j) in enumerate(units):
        for b, (k, l) in enumerate(units):
            if j == k:
                entries[a, b, units.index((i, l))] = 1
    return StructureConstants.from_entries(4, entries, "mat2")


def _dual_numbers():
    return StructureConstants.from_entries(2, {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1}, "dual_numbers")


def _prelie():
    # x^a . x^b = b x^(a+b-1) on x, x^2, x^3, truncated above degree 3
    entries = {}
    for a in range(1, 4):
        for b in range(1, 4):
            if a + b - 1 <= 3:
                entries[a - 1, b - 1, a + b - 2] = b
    return StructureConstants.from_entries(3, entries, "prelie")


def zero_algebra(dim: int = 2) -> StructureConstants:
    return StructureConstants(dim, (Fraction(0),) * dim ** 3, "zero")


_BUILTINS = {
    "reals": _reals,
    "complex": _complex,
    "quaternions": _quaternions,
    "octonions": _octonions,
    "sl2_commutator": _sl2,
    "heisenberg_commutator": _heisenberg,
    "mat2": _mat2,
    "dual_numbers": _dual_numbers,
    "prelie": _prelie,
    "zero": zero_algebra,
}
BUILTIN_NAMES = tuple(_BUILTINS) + ("cayley_dickson_from(<name>)",)

_CD = re.compile(r"^cayley_dickson_from\((.+)\)$")


@lru_cache(maxsize=None)
def builtin(name: str) -> StructureConstants:
    name = name.strip()
    m = _CD.match(name)
    if m:
        inner = builtin(m.group(1))
        return cayley_dickson_from(inner, name)
    if name not in _BUILTINS:
        raise UnknownName(name)
    return _BUILTINS[name]()


def random_algebra(rng: random.Random, dim: int, density: float = 0.3, bound: int = 2) -> StructureConstants:
    """Integer constants in [-bound, bound], each nonzero with probability
    ``density``."""
    data = []
    for _ in range(dim ** 3):
        if rng.random() < density:
            data.append(rng.choice([x for x in range(-bound, bound + 1) if x]))
        else:
            data.append(0)
    return StructureConstants(dim, tuple(data), f"random{dim}")


def analyze(sc: StructureConstants) -> dict:
    """Annihilator, its decomposition and the three oracle checks."""
    from .classification import classify_module
    from .group_algebra import decompose

    ann = annihilator(sc)
    t = classify_module(ann)
    return {
        "annihilator_dim": ann.rank,
        "annihilator_basis": [[format_rational(x) for x in r] for r in ann.basis],
        "decomposition": decompose(ann).to_json(),
        "type": t.label if t.classified else None,
        "associative": is_associative(sc),
        "jacobi": jacobi_check(sc),
        "power_associative": power_assoc_check(sc),
        "alternative": alternative_check(sc),
        "contains_V": ann.contains(V.coeffs),
        "contains_W": ann.contains(W.coeffs),
    }
