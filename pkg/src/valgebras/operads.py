"""Degree-3 part of the free binary operad and dual quadratic operads.

Coordinates 0..5 are the left-parenthesized monomials ``(x_a x_b) x_c`` and
6..11 the right-parenthesized ``x_a (x_b x_c)``, where ``(a, b, c)`` runs
over the one-line forms of ``BASIS``: 123, 213, 321, 132, 231, 312.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from math import gcd
from typing import Iterable, Sequence

from .algebra import StructureConstants, is_associative
from .classification import VAlgebraType, make_type
from .group_algebra import (
    BASIS,
    ID,
    GroupAlgebraElement,
    IrrepMultiplicities,
    Permutation,
    V,
    W,
    act,
    decompose,
    decompose_module,
    span_of_orbit,
)
from .linalg import Subspace, Vector, as_vector, nullspace
from .rational import format_rational

DIM = 12


@dataclass(frozen=True)
class OperadDeg3Element:
    coords: Vector

    def __post_init__(self):
        if len(self.coords) != DIM:
            raise ValueError(f"expected {DIM} coordinates, got {len(self.coords)}")
        object.__setattr__(self, "coords", as_vector(self.coords))

    @property
    def left(self) -> GroupAlgebraElement:
        return GroupAlgebraElement(self.coords[:6])

    @property
    def right(self) -> GroupAlgebraElement:
        return GroupAlgebraElement(self.coords[6:])

    def __add__(self, other):
        return OperadDeg3Element(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return OperadDeg3Element(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return OperadDeg3Element(tuple(-a for a in self.coords))

    def __rmul__(self, c):
        c = Fraction(c)
        return OperadDeg3Element(tuple(c * a for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def to_json(self) -> list[str]:
        return [format_rational(x) for x in self.coords]

    def __str__(self):
        terms = []
        for idx, c in enumerate(self.coords):
            if not c:
                continue
            a, b, d = BASIS[idx % 6].images
            mono = f"(x{a}x{b})x{d}" if idx < 6 else f"x{a}(x{b}x{d})"
            mag = "" if abs(c) == 1 else format_rational(abs(c)) + "*"
            terms.append(("- " if c < 0 else "+ ") + mag + mono)
        if not terms:
            return "0"
        out = " ".join(terms)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]


def _word_index(word: str) -> int:
    images = tuple(int(ch) for ch in word)
    return BASIS.index(Permutation(images))


def monomial(word: str, shape: str = "left") -> OperadDeg3Element:
    """``monomial("213", "left")`` is ``(x2 x1) x3``."""
    c = [0] * DIM
    c[_word_index(word) + (0 if shape == "left" else 6)] = 1
    return OperadDeg3Element(tuple(c))


def left_relation(terms: Iterable[tuple]) -> OperadDeg3Element:
    """Left-parenthesized element from ``(coefficient, word)`` pairs."""
    out = OperadDeg3Element((0,) * DIM)
    for coef, word in terms:
        out = out + Fraction(coef) * monomial(word, "left")
    return out


def relabel(sigma: Permutation, e: OperadDeg3Element) -> OperadDeg3Element:
    """Replace every label i by sigma^-1(i), keeping parenthesization."""
    left = act(sigma, e.left)
    right = act(sigma, e.right)
    return OperadDeg3Element(left.coeffs + right.coeffs)


def _relabel_vec(sigma: Permutation, v: Sequence) -> Vector:
    return relabel(sigma, OperadDeg3Element(tuple(v))).coords


def embed_associator(v: GroupAlgebraElement) -> OperadDeg3Element:
    """``sum a_s [(x_s(1) x_s(2)) x_s(3) - x_s(1) (x_s(2) x_s(3))]``."""
    return OperadDeg3Element(v.coeffs + tuple(-a for a in v.coeffs))


_FORM = tuple([-p.sign for p in BASIS] + [p.sign for p in BASIS])


def inner_product(e: OperadDeg3Element, f: OperadDeg3Element) -> Fraction:
    return sum((s * a * b for s, a, b in zip(_FORM, e.coords, f.coords)), Fraction(0))


def orthogonal_complement(r: Subspace) -> Subspace:
    if r.ambient_dim != DIM:
        raise ValueError("expected a subspace of the 12-dimensional space")
    rows = [[s * x for s, x in zip(_FORM, b)] for b in r.basis]
    return Subspace.span(nullspace(rows, DIM), DIM)


def submodule(generators: Iterable[OperadDeg3Element]) -> Subspace:
    rows = [relabel(s, g).coords for g in generators for s in BASIS]
    return Subspace.span(rows, DIM)


def is_submodule(s: Subspace) -> bool:
    return all(s.contains(_relabel_vec(p, r)) for r in s.basis for p in BASIS)


def decompose12(s: Subspace) -> IrrepMultiplicities:
    return decompose_module(s, _relabel_vec)


ASSOCIATIVITY = embed_associator(GroupAlgebraElement.delta(ID))
R_ASS = submodule([ASSOCIATIVITY])
LEFT = Subspace.span([monomial("".join(map(str, p.images))).coords for p in BASIS], DIM)


def relation_module(v: GroupAlgebraElement) -> Subspace:
    """R for the v-algebra operad: the embedding of F_v."""
    return Subspace.span([embed_associator(GroupAlgebraElement(b)).coords for b in span_of_orbit(v).basis], DIM)


# --- printed dual tables ----------------------------------------------------

@dataclass(frozen=True)
class PrintedRelation:
    """A dual relation as printed, realized left-parenthesized."""

    source: str
    text: str
    element: OperadDeg3Element


def _rel(source, text, terms):
    return PrintedRelation(source, text, left_relation(terms))


def printed_dual_relations(vtype: VAlgebraType) -> list[list[PrintedRelation]]:
    """Printed dual relations for a type, one list per printed variant.

    The table proposition and its proof sometimes print different
    generators; each variant is checked separately.
    """
    fam, t = vtype.family, vtype.parameter
    prop, proof = "table", "proof"
    if fam == "I":
        return [[_rel(prop, "x1x2x3 = x_s(1)x_s(2)x_s(3)", [(1, "123"), (-1, "".join(map(str, p.images)))]) for p in BASIS[1:]]]
    if fam == "II":
        return [[
            _rel(prop, "x1x2x3 = x2x3x1", [(1, "123"), (-1, "231")]),
            _rel(prop, "x2x3x1 = x3x1x2", [(1, "231"), (-1, "312")]),
        ]]
    if fam == "III_1":
        return [
            [_rel(prop, "x1x2x3 + t x2x1x3 - x1x3x2 - t x3x1x2", [(1, "123"), (t, "213"), (-1, "132"), (-t, "312")])],
            [_rel(proof, "(x1x2)x3 + t(x2x1)x3 - (x1x3)x2 - t(x2x3)x1", [(1, "123"), (t, "213"), (-1, "132"), (-t, "231")])],
        ]
    if fam == "III_2":
        return [
            [_rel(prop, "x1x2x3 = x3x2x1", [(1, "123"), (-1, "321")])],
            [_rel(proof, "(x1x2)x3 - (x3x2)x1", [(1, "123"), (-1, "321")])],
        ]
    if fam == "III_3":
        return [
            [_rel(prop, "x1x2x3 - x2x1x3 - 2x1x3x2 + 2x2x3x1", [(1, "123"), (-1, "213"), (-2, "132"), (2, "231")])],
            [_rel(proof, "(x1x2)x3 + (x3x2)x1 - (x2x3)x1 + (x2x1)x3", [(1, "123"), (1, "321"), (-1, "231"), (1, "213")])],
        ]
    if fam == "IV_1":
        terms = [(t - 1, "123"), (-(t - 1), "213"), (-(t + 2), "321"), (1 + 2 * t, "132"), (-(1 + 2 * t), "231"), (t + 2, "312")]
        return [[_rel(prop, "(t-1)x1x2x3 - (t-1)x2x1x3 - (t+2)x3x2x1 + (1+2t)x1x3x2 - (1+2t)x2x3x1 + (t+2)x3x1x2", terms)]]
    if fam == "IV_2":
        return [[_rel(prop, "x1x2x3 + x2x1x3 - x3x2x1 - x3x1x2", [(1, "123"), (1, "213"), (-1, "321"), (-1, "312")])]]
    if fam == "IV_3":
        return [[_rel(prop, "x1x2x3 + x2x1x3 - x1x3x2 - x3x1x2", [(1, "123"), (1, "213"), (-1, "132"), (-1, "312")])]]
    if fam == "V":
        return [[_rel(prop, "x1x2x3 - x2x1x3 - x3x2x1 - x1x3x2 + x2x3x1 + x3x1x2",
                      [(1, "123"), (-1, "213"), (-1, "321"), (-1, "132"), (1, "231"), (1, "312")])]]
    if fam == "VI":
        return [[]]
    if fam == "I'":
        return [[
            _rel(prop, "x1x2x3 = -x2x1x3", [(1, "123"), (1, "213")]),
            _rel(prop, "x1x2x3 = -x1x3x2", [(1, "123"), (1, "132")]),
        ]]
    if fam == "III'_1":
        return [[_rel(prop, "-2x1x2x3 - (2+t)x3x2x1 + (t-1)x1x3x2 - (1+t)x2x3x1 + t x3x1x2",
                      [(-2, "123"), (-(2 + t), "321"), (t - 1, "132"), (-(1 + t), "231"), (t, "312")])]]
    if fam == "III'_2":
        return [[_rel(prop, "x1x2x3 + x2x1x3 + x3x2x1 + x2x3x1", [(1, "123"), (1, "213"), (1, "321"), (1, "231")])]]
    if fam == "V'":
        return [[_rel(prop, "sum of all six words", [(1, "".join(map(str, p.images))) for p in BASIS])]]
    raise ValueError(f"no dual table for {vtype.label}")


def dual_relations(vtype: VAlgebraType) -> list[OperadDeg3Element]:
    """Associativity plus the first printed variant of the dual relations."""
    return [ASSOCIATIVITY] + [r.element for r in printed_dual_relations(vtype)[0]]


@dataclass
class DualReport:
    label: str
    r_dim: int
    r_perp: Subspace
    matches_paper_table: bool
    discrepancies: list[str]
    variants: list[dict]

    def to_json(self) -> dict:
        return {
            "type": self.label,
            "r_dim": self.r_dim,
            "r_perp_dim": self.r_perp.rank,
            "r_perp_basis": [[format_rational(x) for x in b] for b in self.r_perp.basis],
            "matches_paper_table": self.matches_paper_table,
            "discrepancies": self.discrepancies,
            "variants": self.variants,
        }


def check_dual_table(vtype: VAlgebraType) -> DualReport:
    """Compare every printed variant against the computed complement.

    A variant matches when each printed relation is orthogonal to R and the
    submodule generated with associativity equals R-perp.
    """
    gen = vtype.generator
    r = relation_module(gen)
    rp = orthogonal_complement(r)
    r_basis = [OperadDeg3Element(b) for b in r.basis]
    variants, discrepancies = [], []
    printed = printed_dual_relations(vtype)
    truth = "; ".join(str(x.element) for x in printed[0]) or "nothing"
    for rels in printed:
        bad = [x.text for x in rels if any(inner_product(x.element, u) for u in r_basis)]
        gen_mod = submodule([ASSOCIATIVITY] + [x.element for x in rels])
        ok = not bad and gen_mod == rp
        source = rels[0].source if rels else "table"
        variants.append({
            "source": source,
            "relations": [x.text for x in rels],
            "orthogonal": not bad,
            "generated_dim": gen_mod.rank,
            "equals_r_perp": gen_mod == rp,
        })
        for text in bad:
            discrepancies.append(
                f"{vtype.label} ({source}): '{text}' is not orthogonal to R; "
                f"R-perp (dim {rp.rank}) is generated by associativity and {truth}"
            )
        if not bad and gen_mod != rp:
            discrepancies.append(
                f"{vtype.label} ({source}): generated module has dim {gen_mod.rank}, R-perp has dim {rp.rank}, "
                f"generated by associativity and {truth}"
            )
    matches = bool(variants) and variants[0]["orthogonal"] and variants[0]["equals_r_perp"]
    return DualReport(vtype.label, r.rank, rp, matches, discrepancies, variants)


# --- R-perp = R_ass + U ---------------------------------------------------

@dataclass
class DualDecomposition:
    r: Subspace
    r_perp: Subspace
    u: Subspace
    g: Subspace
    multiplicities: IrrepMultiplicities
    contains_v: bool
    contains_w: bool
    checks: dict

    def to_json(self) -> dict:
        return {
            "r_dim": self.r.rank,
            "r_perp_dim": self.r_perp.rank,
            "u_dim": self.u.rank,
            "u_basis": [[format_rational(x) for x in b] for b in self.u.basis],
            "u_decomposition": self.multiplicities.to_json(),
            "V_in_F_v": self.contains_v,
            "W_in_F_v": self.contains_w,
            "checks": self.checks,
        }


def decompose_dual(v: GroupAlgebraElement) -> DualDecomposition:
    fv = span_of_orbit(v)
    r = relation_module(v)
    rp = orthogonal_complement(r)
    u = rp & LEFT
    g = Subspace.span([b[:6] for b in u.basis], 6)
    mult = decompose(g)
    has_v, has_w = fv.contains(V.coeffs), fv.contains(W.coeffs)
    checks = {
        "r_ass_in_r_perp": rp.contains_subspace(R_ASS),
        "direct_sum": (R_ASS + u) == rp and R_ASS.rank + u.rank == rp.rank,
        "u_is_submodule": is_submodule(u),
        "g_matches_u": decompose12(u) == mult,
    }
    if has_v and has_w:
        checks["u_sum_of_planes"] = mult.m_trivial == 0 and mult.m_sign == 0
    elif has_v:
        checks["u_has_sign_line_only"] = mult.m_sign == 1 and mult.m_trivial == 0
    elif has_w:
        checks["u_has_trivial_line_only"] = mult.m_trivial == 1 and mult.m_sign == 0
    return DualDecomposition(r, rp, u, g, mult, has_v, has_w, checks)


# --- algebras over a quadratic operad --------------------------------------

def satisfies_relations(sc: StructureConstants, relations: Subspace) -> bool:
    """Whether the algebra satisfies every relation ``(p, q)``, read as
    ``A^L o Phi_p + A^R o Phi_q = 0``."""
    from .vw import satisfies_starstar

    for b in relations.basis:
        p = GroupAlgebraElement(b[:6])
        q = GroupAlgebraElement(tuple(-x for x in b[6:]))
        if not satisfies_starstar(sc, p, q):
            return False
    return True


def dual_relation_space(v: GroupAlgebraElement) -> Subspace:
    return orthogonal_complement(relation_module(v))


@dataclass
class DualSearchResult:
    relations_dim: int
    tables_checked: int
    found: list[StructureConstants]
    zero_triple_count: int

    @property
    def vacuous(self) -> bool:
        return not self.found


def _integer_relations(relations: Subspace) -> list[tuple[int, ...]]:
    out = []
    for b in relations.basis:
        den = 1
        for x in b:
            den = den * x.denominator // gcd(den, x.denominator)
        out.append(tuple(int(x * den) for x in b))
    return out


def _table_satisfies(data, n, rels) -> tuple[bool, bool]:
    """``(satisfies, triple products vanish)`` for an integer table."""
    from . import kernels
    from .algebra import PHI_POSITIONS

    left, right = kernels.left_right(list(data), n)
    if not any(left) and not any(right):
        return True, True
    lrows = kernels.permuted_rows(left, n, PHI_POSITIONS)
    rrows = kernels.permuted_rows(right, n, PHI_POSITIONS)
    for s in range(0, len(lrows), 6):
        lr, rr = lrows[s:s + 6], rrows[s:s + 6]
        if not any(lr) and not any(rr):
            continue
        for r in rels:
            if sum(a * b for a, b in zip(lr, r[:6])) + sum(a * b for a, b in zip(rr, r[6:])):
                return False, False
    return True, False


def search_dual_algebras(
    v: GroupAlgebraElement,
    dims: Sequence[int] = (2, 3),
    values: Sequence[int] = (-1, 0, 1),
    max_nonzero: dict | None = None,
) -> DualSearchResult:
    """Exact search for algebras over the dual operad of the v-algebras.

    Dimension 2 tables range over all ``values``; larger dimensions are
    limited to ``max_nonzero[dim]`` nonzero entries (default 3).
    """
    from itertools import combinations

    rel = dual_relation_space(v)
    rels = _integer_relations(rel)
    max_nonzero = {3: 3, **(max_nonzero or {})}
    nonzero_vals = [x for x in values if x]
    found, checked, zero_count = [], 0, 0

    def consider(n, data):
        nonlocal checked, zero_count
        checked += 1
        ok, vanish = _table_satisfies(data, n, rels)
        if not ok:
            return
        if vanish:
            zero_count += 1
        else:
            found.append(StructureConstants(n, data, f"dual_instance_{n}_{len(found)}"))

    for n in dims:
        size = n ** 3
        if n <= 2:
            for data in iproduct(values, repeat=size):
                consider(n, data)
        else:
            for k in range(max_nonzero.get(n, 3) + 1):
                for pos in combinations(range(size), k):
                    for vals in iproduct(nonzero_vals, repeat=k):
                        data = [0] * size
                        for p, x in zip(pos, vals):
                            data[p] = x
                        consider(n, tuple(data))
    return DualSearchResult(rel.rank, checked, found, zero_count)
