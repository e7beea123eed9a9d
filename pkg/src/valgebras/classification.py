"""Type assignment for Lie-admissible and power-associative v-algebras.

A class of v-algebras is determined by the invariant subspace F_v, so a
vector is classified by comparing F_v with the module of each canonical
generator. The one-parameter families are solved for their parameter
exactly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction

from .group_algebra import (
    BASIS,
    C1,
    C2,
    ID,
    T12,
    T13,
    T23,
    GroupAlgebraElement,
    IrrepMultiplicities,
    V,
    W,
    decompose,
    element,
    span_of_orbit,
)
from .linalg import Subspace
from .rational import format_rational, parse_rational


class ZeroVector(ValueError):
    pass


class ConstraintViolated(ValueError):
    pass


class UnknownType(ValueError):
    pass


# Families with a generator affine in t: generator(t) = base + t * slope.
_PARAMETRIC = {
    "III_1": (element(1, 0, 0, -1, 0, 0), element(0, 1, 0, 0, 0, -1)),
    "IV_1": (element(2, 1, 1, 0, 1, 1), element(0, 1, 0, 0, 0, -1)),
    "III'_1": (element(0, -2, 0, -1, -1, -2), element(0, 0, 1, -1, 1, -1)),
}
# t = 1 degenerates (F_v drops to an irreducible plane / loses V).
_EXCLUDED_T = {"III_1": {Fraction(1)}, "IV_1": {Fraction(1)}, "III'_1": set()}

_FIXED = {
    "I": V,
    "II": element(1, 0, 0, 0, 1, 1),
    "III_2": element(0, -1, 0, 0, 0, 1),
    "III_3": element(1, -1, 0, -2, 2, 0),
    "IV_2": element(2, 1, 0, 1, 1, 1),
    "IV_3": element(2, 0, 1, -1, 3, 1),
    "V": element(2, -1, -1, -1, 1, 0),
    "VI": element(1, 0, 0, 0, 0, 0),
    "I'": W,
    "III'_2": element(1, 1, 1, 0, 1, 0),
    "V'": element(2, 1, 1, 1, 1, 0),
}

FAMILIES = (
    "I", "II", "III_1", "III_2", "III_3", "IV_1", "IV_2", "IV_3", "V", "VI",
    "I'", "III'_1", "III'_2", "V'",
)
LIE_ADMISSIBLE = ("I", "II", "III_1", "III_2", "III_3", "IV_1", "IV_2", "IV_3", "V", "VI")
POWER_ASSOCIATIVE = ("I'", "II", "III'_1", "III'_2", "IV_1", "IV_2", "IV_3", "V'", "VI")

_MODULE_DIM = {
    "I": 1, "II": 2, "III_1": 3, "III_2": 3, "III_3": 3, "IV_1": 4, "IV_2": 4,
    "IV_3": 4, "V": 5, "VI": 6, "I'": 1, "III'_1": 3, "III'_2": 3, "V'": 5,
}


def canonical_generator(family: str, t=None) -> GroupAlgebraElement:
    if family in _PARAMETRIC:
        if t is None:
            raise ValueError(f"type {family} needs a parameter t")
        t = Fraction(t)
        if t in _EXCLUDED_T[family]:
            raise ValueError(f"type {family} requires t != {format_rational(t)}")
        base, slope = _PARAMETRIC[family]
        return base + t * slope
    if family in _FIXED:
        return _FIXED[family]
    raise UnknownType(f"unknown type {family!r}")


@dataclass(frozen=True)
class VAlgebraType:
    family: str
    parameter: Fraction | None = None
    module_dim: int = 0
    multiplicities: IrrepMultiplicities | None = field(default=None, compare=False)

    @property
    def classified(self) -> bool:
        return self.family != "unclassified"

    @property
    def label(self) -> str:
        if self.family == "unclassified":
            return "unclassified"
        if self.parameter is not None:
            return f"{self.family}(t={format_rational(self.parameter)})"
        return self.family

    @property
    def generator(self) -> GroupAlgebraElement | None:
        if not self.classified:
            return None
        return canonical_generator(self.family, self.parameter)

    def module(self) -> Subspace | None:
        g = self.generator
        return None if g is None else span_of_orbit(g)

    def __str__(self):
        return self.label

    def to_json(self) -> dict:
        out = {"label": self.label, "module_dim": self.module_dim}
        if self.multiplicities is not None:
            out["decomposition"] = self.multiplicities.to_json()
        return out


def make_type(family: str, t=None) -> VAlgebraType:
    g = canonical_generator(family, t)
    return VAlgebraType(
        family,
        None if t is None else Fraction(t),
        _MODULE_DIM[family],
        decompose(span_of_orbit(g)),
    )


def parse_label(label: str) -> VAlgebraType:
    """Inverse of ``VAlgebraType.label``, e.g. ``"III_1(t=-1/2)"``."""
    label = label.strip()
    if "(" in label:
        family, rest = label.split("(", 1)
        rest = rest.rstrip(")")
        if not rest.startswith("t="):
            raise UnknownType(f"bad parameter in {label!r}")
        t = parse_rational(rest[2:])
        if family not in _PARAMETRIC:
            raise UnknownType(f"type {family!r} takes no parameter")
        return make_type(family, t)
    if label in _PARAMETRIC:
        raise UnknownType(f"type {label!r} needs a parameter, e.g. {label}(t=0)")
    if label not in _FIXED:
        raise UnknownType(f"unknown type {label!r}")
    return make_type(label)


def all_types(sample_t=(0, -1, 2, Fraction(1, 3))) -> list[VAlgebraType]:
    """One instance per family (parametric families at each sample t)."""
    out = []
    for fam in FAMILIES:
        if fam in _PARAMETRIC:
            out.extend(make_type(fam, t) for t in sample_t if Fraction(t) not in _EXCLUDED_T[fam])
        else:
            out.append(make_type(fam))
    return out


# --- canonical vectors ------------------------------------------------------

def one_dim_vectors() -> tuple[GroupAlgebraElement, GroupAlgebraElement]:
    return V, W


def two_dim_canonical(l1, l3) -> GroupAlgebraElement:
    """The vector generating an irreducible 2-dimensional module."""
    l1, l3 = Fraction(l1), Fraction(l3)
    if not l1 and not l3:
        raise ZeroVector("both parameters are zero")
    return element(l1, -l1, l1 + l3, -l3, l3, -l1 - l3)


def iii_prime_vector(l1, l3) -> GroupAlgebraElement:
    """``u - l1*W`` for the irreducible ``u = two_dim_canonical(l1, l3)``."""
    return two_dim_canonical(l1, l3) - Fraction(l1) * W


def iii_prime_region(samples) -> dict:
    """Map each ``(l1, l3)`` to ``(dim F_v, matched label)`` for
    ``v = iii_prime_vector(l1, l3)``, found by rank computation."""
    out = {}
    for l1, l3 in samples:
        l1, l3 = Fraction(l1), Fraction(l3)
        if not l1 and not l3:
            continue
        fv = span_of_orbit(iii_prime_vector(l1, l3))
        out[l1, l3] = (fv.rank, classify_module_power(fv).label)
    return out


def alpha_beta_family(a1, a2, alpha, beta) -> GroupAlgebraElement:
    a1, a2, alpha, beta = map(Fraction, (a1, a2, alpha, beta))
    if alpha * alpha != 1 + beta + beta * beta:
        raise ConstraintViolated(
            f"alpha^2 != 1 + beta + beta^2 for alpha={alpha}, beta={beta}"
        )
    if not a1 and not a2:
        raise ZeroVector("a1 = a2 = 0")
    return element(
        a1,
        a2,
        alpha * a1 + beta * a2,
        -alpha * a1 - (1 + beta) * a2,
        beta * a1 + alpha * a2,
        -(1 + beta) * a1 - alpha * a2,
    )


_SUBGROUPS = {
    1: (ID,),
    2: (ID, T12),
    3: (ID, T23),
    4: (ID, T13),
    5: (ID, C1, C2),
    6: BASIS,
}


def gi_vector(i: int) -> GroupAlgebraElement:
    """Plain sum of the elements of the subgroup G_i."""
    if i not in _SUBGROUPS:
        raise ValueError(f"subgroup index must be 1..6, got {i}")
    return sum((GroupAlgebraElement.delta(p) for p in _SUBGROUPS[i]), GroupAlgebraElement.zero())


def gi_signed_vector(i: int) -> GroupAlgebraElement:
    """Signed sum over G_i; its module is the one of the G_i-associative
    (Lie-admissible) class, e.g. Id - t12 for Vinberg algebras."""
    if i not in _SUBGROUPS:
        raise ValueError(f"subgroup index must be 1..6, got {i}")
    return sum(
        (p.sign * GroupAlgebraElement.delta(p) for p in _SUBGROUPS[i]),
        GroupAlgebraElement.zero(),
    )


# --- classification ---------------------------------------------------------

def _solve_parameter(family: str, module: Subspace) -> Fraction | None:
    base, slope = _PARAMETRIC[family]
    eqs = module.annihilator().basis
    t = None
    for a in eqs:
        b0 = sum(x * y for x, y in zip(a, base.coeffs))
        b1 = sum(x * y for x, y in zip(a, slope.coeffs))
        if b1:
            t = -b0 / b1
            break
    if t is None or t in _EXCLUDED_T[family]:
        return None
    if span_of_orbit(base + t * slope) != module:
        return None
    return t


@lru_cache(maxsize=None)
def _fixed_module(fam: str) -> Subspace:
    return span_of_orbit(_FIXED[fam])


def _match(module: Subspace, candidates) -> VAlgebraType | None:
    for fam in candidates:
        if _MODULE_DIM[fam] != module.rank:
            continue
        if fam in _PARAMETRIC:
            t = _solve_parameter(fam, module)
            if t is not None:
                return VAlgebraType(fam, t, module.rank, decompose(module))
        elif _fixed_module(fam) == module:
            return VAlgebraType(fam, None, module.rank, decompose(module))
    return None


def _unclassified(module: Subspace) -> VAlgebraType:
    return VAlgebraType("unclassified", None, module.rank, decompose(module))


@lru_cache(maxsize=4096)
def classify_module_lie(module: Subspace) -> VAlgebraType:
    if not module.contains(V.coeffs):
        return _unclassified(module)
    return _match(module, LIE_ADMISSIBLE) or _unclassified(module)


@lru_cache(maxsize=4096)
def classify_module_power(module: Subspace) -> VAlgebraType:
    if not module.contains(W.coeffs):
        return _unclassified(module)
    return _match(module, POWER_ASSOCIATIVE) or _unclassified(module)


def classify_lie_admissible(v: GroupAlgebraElement) -> VAlgebraType:
    return classify_module_lie(span_of_orbit(v))


def classify_power_associative(v: GroupAlgebraElement) -> VAlgebraType:
    return classify_module_power(span_of_orbit(v))


def classify_module(module: Subspace) -> VAlgebraType:
    """The single type label of an invariant subspace, preferring the
    Lie-admissible name for classes in both lists."""
    t = classify_module_lie(module)
    if t.classified:
        return t
    return classify_module_power(module)
