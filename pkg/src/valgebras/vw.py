"""(v, w)-algebras: separate S3 actions on the two halves
``A^L(x1, x2, x3) = (x1 x2) x3`` and ``A^R(x1, x2, x3) = x1 (x2 x3)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import kernels
from .algebra import PHI_POSITIONS, StructureConstants, _left_right_ints, distinct_rows
from .group_algebra import (
    BASIS,
    ID,
    GroupAlgebraElement,
    V,
    act,
    apply,
    multiply,
    span_of_orbit,
)
from .linalg import Subspace, nullspace, solve


@dataclass(frozen=True)
class LeftRightAssociators:
    dim: int
    left: tuple[Fraction, ...]
    right: tuple[Fraction, ...]

    def associator(self) -> tuple[Fraction, ...]:
        return tuple(a - b for a, b in zip(self.left, self.right))


def left_right(sc: StructureConstants) -> LeftRightAssociators:
    den2, left, right = _left_right_ints(sc)
    return LeftRightAssociators(
        sc.dim,
        tuple(Fraction(x, den2) for x in left),
        tuple(Fraction(x, den2) for x in right),
    )


@lru_cache(maxsize=64)
def _half_rows(sc: StructureConstants):
    """Rows over 12 unknowns (v, w): ``A^L o Phi_v - A^R o Phi_w`` at one
    basis triple and output coordinate."""
    _, left, right = _left_right_ints(sc)
    lrows = kernels.permuted_rows(left, sc.dim, PHI_POSITIONS)
    rrows = kernels.permuted_rows(right, sc.dim, PHI_POSITIONS)
    flat = []
    for s in range(0, len(lrows), 6):
        flat.extend(lrows[s:s + 6])
        flat.extend(-x for x in rrows[s:s + 6])
    return distinct_rows(flat, 12)


def _dot(row, v):
    return sum(x * y for x, y in zip(row, v))


def satisfies_star(sc: StructureConstants, v: GroupAlgebraElement, w: GroupAlgebraElement) -> tuple[bool, bool]:
    rows = _half_rows(sc)
    left_ok = all(_dot(r[:6], v.coeffs) == 0 for r in rows)
    right_ok = all(_dot(r[6:], w.coeffs) == 0 for r in rows)
    return left_ok, right_ok


def satisfies_starstar(sc: StructureConstants, v: GroupAlgebraElement, w: GroupAlgebraElement) -> bool:
    vw = v.coeffs + w.coeffs
    return all(_dot(r, vw) == 0 for r in _half_rows(sc))


def starstar_solutions(sc: StructureConstants) -> Subspace:
    """All pairs (v, w), as 12-vectors, for which the algebra satisfies
    ``A^L o Phi_v = A^R o Phi_w``."""
    return Subspace.span(nullspace(_half_rows(sc), 12), 12)


def monoidal_identity_check(sc: StructureConstants) -> bool:
    """Whether ``(x1 x2) x3 = x2 (x1 x3)`` on all basis triples."""
    _, left, right = _left_right_ints(sc)
    n = sc.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                a = ((i * n + j) * n + k) * n
                b = ((j * n + i) * n + k) * n
                if left[a:a + n] != right[b:b + n]:
                    return False
    return True


# --- Lie-admissibility witness ---------------------------------------------

@dataclass(frozen=True)
class WitnessResult:
    """Outcome of the witness search.

    ``combination`` is a with ``apply(a, v) == V``; ``u_prime`` is
    ``apply(a, w - v)``; ``witness`` is chi' with ``chi'(u') = 0`` and
    ``chi'(V) != 0``; ``composite = a * chi'`` then kills ``w - v``.
    """

    witness: GroupAlgebraElement | None
    reason: str
    combination: GroupAlgebraElement | None = None
    u_prime: GroupAlgebraElement | None = None
    composite: GroupAlgebraElement | None = None

    @property
    def found(self) -> bool:
        return self.witness is not None


def orbit_basis(v: GroupAlgebraElement) -> list:
    """Permutations s, in basis order, whose images act(s, v) form a basis
    of F_v."""
    chosen, rows = [], []
    for s in BASIS:
        cand = rows + [act(s, v).coeffs]
        if Subspace.span(cand, 6).rank == len(cand):
            rows = cand
            chosen.append(s)
    return chosen


def express_in_orbit(v: GroupAlgebraElement, target: GroupAlgebraElement) -> GroupAlgebraElement | None:
    """a with ``apply(a, v) == target``, supported on ``orbit_basis(v)``."""
    perms = orbit_basis(v)
    sol = solve([act(s, v).coeffs for s in perms], target.coeffs)
    if sol is None:
        return None
    coeffs = [Fraction(0)] * 6
    for s, x in zip(perms, sol):
        coeffs[BASIS.index(s)] = x
    return GroupAlgebraElement(tuple(coeffs))


def annihilating_elements(u: GroupAlgebraElement) -> list[GroupAlgebraElement]:
    """Basis of ``{chi : chi(u) = 0}``."""
    cols = [act(s, u).coeffs for s in BASIS]
    rows = [[cols[s][i] for s in range(6)] for i in range(6)]
    return [GroupAlgebraElement(k) for k in nullspace(rows, 6)]


def _v_coefficient(chi: GroupAlgebraElement) -> Fraction:
    # chi(V) = (sum_s sign(s) chi_s) V
    return sum((s.sign * c for s, c in zip(BASIS, chi.coeffs)), Fraction(0))


def lie_admissible_witness(v: GroupAlgebraElement, w: GroupAlgebraElement) -> WitnessResult:
    if not span_of_orbit(v).contains(V.coeffs):
        return WitnessResult(None, "V is not in F_v")
    if not span_of_orbit(w).contains(V.coeffs):
        return WitnessResult(None, "V is not in F_w")
    identity = GroupAlgebraElement.delta(ID)
    a = express_in_orbit(v, V)
    u = w - v
    u_prime = apply(a, u)
    if u_prime.is_zero():
        return WitnessResult(identity, "u' = 0: a(v) = a(w) = V", a, u_prime, a)
    for chi in annihilating_elements(u_prime):
        if _v_coefficient(chi):
            return WitnessResult(
                chi, "chi'(u') = 0 and chi'(V) != 0", a, u_prime, multiply(a, chi)
            )
    # The combination a is not unique; look for any a with a(v) = a(w) = V.
    cols = [act(s, v).coeffs + act(s, u).coeffs for s in BASIS]
    sol = solve(cols, V.coeffs + (0,) * 6)
    if sol is not None:
        a2 = GroupAlgebraElement(sol)
        return WitnessResult(identity, "u' = 0 for another combination: a(v) = a(w) = V", a2, apply(a2, u), a2)
    return WitnessResult(None, "no chi' with chi'(u') = 0 and chi'(V) != 0", a, u_prime)
