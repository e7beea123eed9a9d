"""Fast anchor checks run by ``valgebras selftest``.

Each anchor is a named zero-argument callable returning ``(ok, detail)``.
"""
from __future__ import annotations

from typing import Callable

from .algebra import (
    ALTERNATIVE_GENERATOR,
    alternative_check,
    annihilator,
    builtin,
    jacobi_check,
    power_assoc_check,
    tensor,
)
from .classification import all_types, classify_module
from .group_algebra import BASIS, F_V, F_W, V, W, act, element, span_of_orbit
from .operads import (
    R_ASS,
    check_dual_table,
    decompose_dual,
    monomial,
    orthogonal_complement,
    search_dual_algebras,
    submodule,
)
from .vw import lie_admissible_witness, monoidal_identity_check


def _one_dim():
    ok = F_V.rank == 1 and F_W.rank == 1
    ok &= all(act(p, V) == p.sign * V and act(p, W) == W for p in BASIS)
    return ok, "dim F_V = dim F_W = 1"


def _dims():
    got = [span_of_orbit(element(*v)).rank for v in ((1, 0, 0, 0, 0, -1), (2, -1, -1, -1, 1, 0), (1, 0, 0, 0, 0, 0))]
    return got == [4, 5, 6], f"orbit dims {got}"


def _round_trip():
    bad = [t.label for t in all_types() if classify_module(span_of_orbit(t.generator)) != t]
    return not bad, "all canonical generators classify to themselves" if not bad else f"mismatch: {bad}"


def _octonions():
    o = builtin("octonions")
    ann = annihilator(o)
    ok = ann.rank == 5 and ann == span_of_orbit(ALTERNATIVE_GENERATOR)
    ok &= alternative_check(o) and power_assoc_check(o) and not jacobi_check(o)
    return ok, f"annihilator dim {ann.rank}, type {classify_module(ann).label}"


def _lie_bracket():
    s = builtin("sl2_commutator")
    return jacobi_check(s) and annihilator(s).contains(V.coeffs), "sl2 bracket is Lie-admissible"


def _tensor():
    p = builtin("prelie")
    zero = annihilator(tensor(p, p)).rank == 0
    full = annihilator(tensor(builtin("quaternions"), builtin("mat2"))).rank == 6
    return zero and full, "prelie x prelie annihilator {0}; quaternions x mat2 full"


def _vw():
    ex1 = lie_admissible_witness(element(1, 0, 0, -1, 0, 0), element(1, -1, 0, 0, 0, 0))
    ex2 = lie_admissible_witness(element(2, -1, -1, -1, 1, 0), element(1, 0, 0, 0, 1, 1))
    ok = ex1.found and ex1.witness(ex1.u_prime).is_zero() and not ex2.found
    return ok, f"example 1 witness {ex1.witness!r}; example 2 {ex2.reason}"


def _monoidal():
    a, b = builtin("complex"), builtin("dual_numbers")
    ok = monoidal_identity_check(a) and monoidal_identity_check(b) and monoidal_identity_check(tensor(a, b))
    return ok, "complex x dual_numbers keeps (x1x2)x3 = x2(x1x3)"


def _dual_tables():
    reports = [check_dual_table(t) for t in all_types()]
    ok = all(r.matches_paper_table for r in reports) and orthogonal_complement(R_ASS) == R_ASS
    flagged = sum(len(r.discrepancies) for r in reports)
    return ok, f"{len(reports)} tables match; {flagged} printed variants flagged"


def _decompose():
    d1 = decompose_dual(element(2, 1, 1, 0, 1, 1))
    d2 = decompose_dual(element(1, -1, 0, 0, 0, 0))
    ok = d1.multiplicities.as_tuple() == (0, 0, 1) and d1.checks["direct_sum"]
    ok &= d2.u == submodule([monomial("123") - monomial("213")]) and d2.checks["direct_sum"]
    return ok, "IV_1(t=0): U is one 2-dim irreducible; Id-t12: U generated by (x1x2)x3-(x2x1)x3"


def _dual_pairing():
    res = search_dual_algebras(W, dims=(2,))
    if res.vacuous:
        return True, f"vacuous: {res.tables_checked} dim-2 tables, only zero triple products"
    o = builtin("octonions")
    ok = all(annihilator(tensor(o, b)).contains(V.coeffs) for b in res.found)
    return ok, f"{len(res.found)} nonzero instances"


ANCHORS: list[tuple[str, Callable]] = [
    ("one-dimensional modules", _one_dim),
    ("orbit dimensions", _dims),
    ("classification round-trip", _round_trip),
    ("octonions are alternative of type V'", _octonions),
    ("Lie bracket algebras are V-algebras", _lie_bracket),
    ("tensor of V-algebras", _tensor),
    ("(v,w) worked examples", _vw),
    ("monoidal category of (v,w)-algebras", _monoidal),
    ("dual operad tables", _dual_tables),
    ("decomposition of R-perp", _decompose),
    ("W-algebra tensor W!-algebra", _dual_pairing),
]


def run() -> list[dict]:
    out = []
    for name, fn in ANCHORS:
        try:
            ok, detail = fn()
        except Exception as exc:  # reported, not raised
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append({"anchor": name, "passed": bool(ok), "detail": detail})
    return out
