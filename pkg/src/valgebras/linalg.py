"""Exact rational linear algebra on small dense matrices.

Subspaces are stored by their reduced row-echelon basis, which is unique,
so two subspaces are equal exactly when their bases are equal.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]


class DimensionMismatch(ValueError):
    pass


def as_vector(values: Iterable) -> Vector:
    return tuple(Fraction(x) for x in values)


def _integer_row(row: Sequence[Fraction]) -> list[int]:
    den = 1
    for x in row:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in row]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def rref(rows: Iterable[Sequence], ncols: int) -> list[Vector]:
    """Reduced row-echelon form of ``rows`` with zero rows dropped.

    Elimination runs fraction-free on primitive integer rows; pivots are
    normalized to 1 only at the end.
    """
    work: list[list[int]] = []
    seen = set()
    for r in rows:
        if len(r) != ncols:
            raise DimensionMismatch(f"row of length {len(r)}, expected {ncols}")
        ints = _integer_row([Fraction(x) for x in r])
        key = tuple(ints)
        if not any(ints) or key in seen:
            continue
        seen.add(key)
        work.append(ints)

    pivots: list[tuple[int, list[int]]] = []
    for col in range(ncols):
        idx = next((i for i, r in enumerate(work) if r[col]), None)
        if idx is None:
            continue
        p = work.pop(idx)
        rest = []
        for r in work:
            if r[col]:
                a, b = p[col], r[col]
                r = [a * y - b * x for x, y in zip(p, r)]
                g = 0
                for y in r:
                    g = gcd(g, y)
                if g == 0:
                    continue
                if g > 1:
                    r = [y // g for y in r]
            rest.append(r)
        work = rest
        pivots.append((col, p))
        if not work:
            break

    # back substitution and normalization
    out: list[list[Fraction]] = []
    for col, p in pivots:
        out.append([Fraction(x, p[col]) for x in p])
    for i in range(len(out) - 1, -1, -1):
        col = pivots[i][0]
        for j in range(i):
            f = out[j][col]
            if f:
                out[j] = [a - f * b for a, b in zip(out[j], out[i])]
    return [tuple(r) for r in out]


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[Vector]:
    """Basis of {x : M x = 0}, one vector per free column."""
    red = rref(rows, ncols)
    pivot_cols = [next(c for c, x in enumerate(r) if x) for r in red]
    free = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for r, pc in zip(red, pivot_cols):
            x[pc] = -r[f]
        basis.append(tuple(x))
    return basis


def solve(columns: Sequence[Sequence], target: Sequence) -> Vector | None:
    """Coefficients c with sum(c_i * columns[i]) == target, or None."""
    n = len(target)
    k = len(columns)
    aug = [[Fraction(columns[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(n)]
    red = rref(aug, k + 1)
    sol = [Fraction(0)] * k
    for r in red:
        pc = next(c for c, x in enumerate(r) if x)
        if pc == k:
            return None
        sol[pc] = r[k]
    return tuple(sol)


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of Q^ambient_dim given by its RREF basis."""

    ambient_dim: int
    basis: tuple[Vector, ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, tuple(rref(vectors, ambient_dim)))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        eye = [[int(i == j) for j in range(ambient_dim)] for i in range(ambient_dim)]
        return cls.span(eye, ambient_dim)

    @property
    def rank(self) -> int:
        return len(self.basis)

    dim = rank

    def _check(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch(
                f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}"
            )

    def contains(self, w: Sequence) -> bool:
        if len(w) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(w)} in ambient {self.ambient_dim}")
        w = [Fraction(x) for x in w]
        for row in self.basis:
            pc = next(c for c, x in enumerate(row) if x)
            f = w[pc]
            if f:
                w = [a - f * b for a, b in zip(w, row)]
        return not any(w)

    __contains__ = contains

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check(other)
        return all(self.contains(r) for r in other.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.basis + other.basis, self.ambient_dim)

    def __and__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        eqs = list(self.annihilator().basis) + list(other.annihilator().basis)
        return Subspace.span(nullspace(eqs, self.ambient_dim), self.ambient_dim)

    def annihilator(self) -> "Subspace":
        """Complement under the standard dot product."""
        return Subspace.span(nullspace(self.basis, self.ambient_dim), self.ambient_dim)

    def coordinates(self, w: Sequence) -> Vector | None:
        """Coefficients of w on the RREF basis, or None if w is outside."""
        if not self.contains(w):
            return None
        return tuple(Fraction(w[next(c for c, x in enumerate(r) if x)]) for r in self.basis)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    return a + b


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    return a & b


def subspace_equal(a: Subspace, b: Subspace) -> bool:
    a._check(b)
    return a == b


def subspace_contains(s: Subspace, w: Sequence) -> bool:
    return s.contains(w)
