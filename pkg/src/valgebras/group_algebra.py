"""The group algebra Q[S3], its right action on itself, orbits and
invariant subspaces.

Permutations are in one-line notation (images of 1, 2, 3) and compose as
``(p*q)(i) = p(q(i))``. Group-algebra coordinates are always taken over
the fixed basis ``(id, t12, t13, t23, c1, c2)`` with ``c1 = 1->2->3->1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .linalg import Subspace, Vector, as_vector
from .rational import format_rational, parse_rational


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, int, int]

    def __post_init__(self):
        if sorted(self.images) != [1, 2, 3]:
            raise ValueError(f"not a permutation of 1,2,3: {self.images}")

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0, 0, 0]
        for i, x in enumerate(self.images, 1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    @property
    def sign(self) -> int:
        a, b, c = self.images
        inversions = (a > b) + (a > c) + (b > c)
        return -1 if inversions % 2 else 1

    @property
    def name(self) -> str:
        return NAMES[BASIS.index(self)]

    def __repr__(self):
        return f"Permutation({self.name})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The permutation ``i -> p(q(i))``."""
    return Permutation(tuple(p(q(i)) for i in (1, 2, 3)))


ID = Permutation((1, 2, 3))
T12 = Permutation((2, 1, 3))
T13 = Permutation((3, 2, 1))
T23 = Permutation((1, 3, 2))
C1 = Permutation((2, 3, 1))
C2 = Permutation((3, 1, 2))

BASIS: tuple[Permutation, ...] = (ID, T12, T13, T23, C1, C2)
NAMES = ("id", "t12", "t13", "t23", "c1", "c2")
_INDEX = {p: i for i, p in enumerate(BASIS)}


def index(p: Permutation) -> int:
    return _INDEX[p]


@dataclass(frozen=True)
class GroupAlgebraElement:
    """An element sum(a_s * s) of Q[S3]; ``coeffs`` follow ``BASIS``."""

    coeffs: Vector

    def __post_init__(self):
        if len(self.coeffs) != 6:
            raise ValueError(f"expected 6 coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", as_vector(self.coeffs))

    @classmethod
    def of(cls, *values) -> "GroupAlgebraElement":
        if len(values) == 1 and not isinstance(values[0], (int, Fraction, str)):
            values = tuple(values[0])
        return cls(tuple(Fraction(x) for x in values))

    @classmethod
    def delta(cls, p: Permutation) -> "GroupAlgebraElement":
        c = [0] * 6
        c[_INDEX[p]] = 1
        return cls.of(c)

    @classmethod
    def zero(cls) -> "GroupAlgebraElement":
        return cls.of([0] * 6)

    @classmethod
    def parse(cls, tokens: Sequence[str] | str) -> "GroupAlgebraElement":
        if isinstance(tokens, str):
            tokens = [t for t in tokens.replace(" ", "").strip("[]").split(",")]
        if len(tokens) != 6:
            raise ValueError(f"expected 6 rational entries, got {len(tokens)}")
        return cls(tuple(parse_rational(t) for t in tokens))

    def to_json(self) -> list[str]:
        return [format_rational(x) for x in self.coeffs]

    def __getitem__(self, p: Permutation) -> Fraction:
        return self.coeffs[_INDEX[p]]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return 6

    def __add__(self, other):
        return GroupAlgebraElement(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return GroupAlgebraElement(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return GroupAlgebraElement(tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, GroupAlgebraElement):
            return multiply(self, other)
        c = Fraction(other)
        return GroupAlgebraElement(tuple(c * a for a in self.coeffs))

    def __rmul__(self, scalar):
        c = Fraction(scalar)
        return GroupAlgebraElement(tuple(c * a for a in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __call__(self, x: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return apply(self, x)

    def __repr__(self):
        return "GroupAlgebraElement(" + ", ".join(format_rational(a) for a in self.coeffs) + ")"


def element(*values) -> GroupAlgebraElement:
    return GroupAlgebraElement.of(*values)


V = element(1, -1, -1, -1, 1, 1)
W = element(1, 1, 1, 1, 1, 1)


def act(p: Permutation, v: GroupAlgebraElement) -> GroupAlgebraElement:
    """The action ``sum a_i s_i -> sum a_i (p^-1 * s_i)``.

    This is a right action: ``act(s, act(t, v)) == act(t * s, v)``.
    """
    pinv = p.inverse()
    out = [Fraction(0)] * 6
    for s, a in zip(BASIS, v.coeffs):
        if a:
            out[_INDEX[compose(pinv, s)]] += a
    return GroupAlgebraElement(tuple(out))


def multiply(x: GroupAlgebraElement, y: GroupAlgebraElement) -> GroupAlgebraElement:
    """Group-algebra product ``sum x_s y_t (s * t)``.

    With this order ``apply(multiply(x, y), u) == apply(y, apply(x, u))``.
    """
    out = [Fraction(0)] * 6
    for s, a in zip(BASIS, x.coeffs):
        if not a:
            continue
        for t, b in zip(BASIS, y.coeffs):
            if b:
                out[_INDEX[compose(s, t)]] += a * b
    return GroupAlgebraElement(tuple(out))


def apply(chi: GroupAlgebraElement, x: GroupAlgebraElement) -> GroupAlgebraElement:
    """``chi(x) = sum c_s act(s, x)`` for ``chi = sum c_s s``."""
    out = GroupAlgebraElement.zero()
    for s, c in zip(BASIS, chi.coeffs):
        if c:
            out = out + c * act(s, x)
    return out


def orbit(v: GroupAlgebraElement) -> list[GroupAlgebraElement]:
    out: list[GroupAlgebraElement] = []
    for s in BASIS:
        w = act(s, v)
        if w not in out:
            out.append(w)
    return out


def span_of_orbit(v: GroupAlgebraElement) -> Subspace:
    return Subspace.span([w.coeffs for w in orbit(v)], 6)


def submodule(generators: Iterable[GroupAlgebraElement]) -> Subspace:
    rows = [act(s, g).coeffs for g in generators for s in BASIS]
    return Subspace.span(rows, 6)


def span_of_orbits(generators: Iterable[GroupAlgebraElement]) -> Subspace:
    return submodule(generators)


F_V = span_of_orbit(V)
F_W = span_of_orbit(W)
FULL = Subspace.full(6)


class NotInvariant(ValueError):
    pass


class OddStandardDimension(ArithmeticError):
    pass


@dataclass(frozen=True)
class IrrepMultiplicities:
    m_trivial: int
    m_sign: int
    m_standard: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.m_trivial, self.m_sign, self.m_standard)

    def to_json(self) -> dict:
        return {"trivial": self.m_trivial, "sign": self.m_sign, "standard": self.m_standard}


def is_invariant(s: Subspace) -> bool:
    return all(s.contains(act(p, GroupAlgebraElement(r)).coeffs) for r in s.basis for p in BASIS)


def decompose(s: Subspace) -> IrrepMultiplicities:
    """Multiplicities of the trivial, sign and 2-dim irreducibles in an
    invariant subspace of Q[S3]."""
    if s.ambient_dim != 6:
        raise ValueError("decompose expects a subspace of Q[S3]")
    if not is_invariant(s):
        raise NotInvariant("subspace is not S3-invariant")
    mt = (s & F_W).rank
    ms = (s & F_V).rank
    rest = s.rank - mt - ms
    if rest % 2:
        raise OddStandardDimension(f"residual dimension {rest} is odd")
    return IrrepMultiplicities(mt, ms, rest // 2)


def decompose_module(
    s: Subspace, action: Callable[[Permutation, Vector], Vector]
) -> IrrepMultiplicities:
    """Multiplicities for an invariant subspace of any S3-representation.

    Uses the central idempotents ``(1/6) sum s`` and ``(1/6) sum sign(s) s``:
    the trivial and sign multiplicities are the ranks of their images.
    """
    for r in s.basis:
        for p in BASIS:
            if not s.contains(action(p, r)):
                raise NotInvariant("subspace is not S3-invariant")
    n = s.ambient_dim

    def project(r, signed):
        acc = [Fraction(0)] * n
        for p in BASIS:
            w = action(p, r)
            f = p.sign if signed else 1
            acc = [a + f * b for a, b in zip(acc, w)]
        return acc

    mt = Subspace.span([project(r, False) for r in s.basis], n).rank
    ms = Subspace.span([project(r, True) for r in s.basis], n).rank
    rest = s.rank - mt - ms
    if rest % 2:
        raise OddStandardDimension(f"residual dimension {rest} is odd")
    return IrrepMultiplicities(mt, ms, rest // 2)


def subspace_elements(s: Subspace) -> list[GroupAlgebraElement]:
    return [GroupAlgebraElement(r) for r in s.basis]
