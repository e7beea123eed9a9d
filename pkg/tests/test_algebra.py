import json
import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from valgebras.algebra import (
    ALTERNATIVE_GENERATOR,
    PHI_POSITIONS,
    BUILTIN_NAMES,
    SchemaError,
    StructureConstants,
    UnknownName,
    alternative_check,
    analyze,
    annihilator,
    associator,
    builtin,
    is_associative,
    jacobi_check,
    opposite,
    power_assoc_check,
    random_algebra,
    satisfies,
    tensor,
    zero_algebra,
)
from valgebras.group_algebra import BASIS, V, W, GroupAlgebraElement, element, span_of_orbit
from valgebras.linalg import Subspace

from conftest import SEED, vectors

NAMED = [n for n in BUILTIN_NAMES if "<" not in n]


def naive_mul(sc, x, y):
    n = sc.dim
    return [sum(x[i] * y[j] * sc.c(i, j, l) for i in range(n) for j in range(n)) for l in range(n)]


def unit(n, i):
    return [Fraction(int(k == i)) for k in range(n)]


def naive_assoc(sc, x, y, z):
    left = naive_mul(sc, naive_mul(sc, x, y), z)
    right = naive_mul(sc, x, naive_mul(sc, y, z))
    return [a - b for a, b in zip(left, right)]


def naive_annihilator(sc):
    # rows: for each basis triple and output coordinate, the 6 values A(Phi_s(e_i, e_j, e_k))_l
    n = sc.dim
    cache = {}
    for t in product(range(n), repeat=3):
        cache[t] = naive_assoc(sc, *(unit(n, i) for i in t))
    rows = []
    for t in product(range(n), repeat=3):
        for l in range(n):
            row = []
            for p in BASIS:
                perm = tuple(t[p(q) - 1] for q in (1, 2, 3))
                row.append(cache[perm][l])
            rows.append(row)
    return Subspace.span(rows, 6).annihilator()


def small_algebras(count, seed=SEED):
    rng = random.Random(seed)
    return [random_algebra(rng, rng.randint(1, 3), 0.3, 2) for _ in range(count)]


def test_phi_positions():
    # Phi_s puts x_{s(i)} in slot i
    assert PHI_POSITIONS[BASIS.index(BASIS[4])] == (1, 2, 0)


def test_associator_zero_cases():
    assert associator(builtin("mat2")).is_zero()
    assert associator(zero_algebra(3)).is_zero()
    assert not associator(builtin("octonions")).is_zero()


def test_octonion_associator_alternates():
    o = builtin("octonions")
    a = associator(o)
    n = o.dim
    for t in product(range(n), repeat=3):
        base = a(*t)
        for p in BASIS:
            perm = tuple(t[p(q) - 1] for q in (1, 2, 3))
            assert list(a(*perm)) == [p.sign * x for x in base]


def test_associator_matches_naive():
    for sc in small_algebras(20):
        a = associator(sc)
        n = sc.dim
        for t in product(range(n), repeat=3):
            assert list(a(*t)) == naive_assoc(sc, *(unit(n, i) for i in t))


@given(vectors)
def test_associative_satisfies_everything(v):
    assert satisfies(builtin("quaternions"), v)
    assert satisfies(zero_algebra(2), v)


def test_satisfies_examples():
    o = builtin("octonions")
    assert satisfies(o, W)
    assert not satisfies(o, V)


def test_annihilator_examples():
    assert annihilator(builtin("mat2")) == Subspace.full(6)
    ann = annihilator(builtin("octonions"))
    signs = [p.sign for p in BASIS]
    assert ann.rank == 5
    assert ann == Subspace.span([signs], 6).annihilator()
    assert ann == span_of_orbit(ALTERNATIVE_GENERATOR)
    assert annihilator(builtin("sl2_commutator")).contains(V.coeffs)


def test_annihilator_matches_naive():
    for sc in small_algebras(30) + [builtin("sl2_commutator"), builtin("prelie")]:
        assert annihilator(sc) == naive_annihilator(sc)


def test_jacobi_examples():
    assert jacobi_check(builtin("mat2"))
    assert jacobi_check(builtin("sl2_commutator"))
    assert not jacobi_check(builtin("octonions"))


def test_power_assoc_examples():
    assert power_assoc_check(builtin("octonions"))
    assert power_assoc_check(builtin("quaternions"))
    sc = StructureConstants.from_entries(2, {(0, 0, 1): 1, (1, 0, 0): 1})
    # x = a e1 + b e2: A(x,x,x) has e1-coefficient a^2 b - a b^2 != 0 in general
    x = [Fraction(1), Fraction(2)]
    assert naive_assoc(sc, x, x, x) != [0, 0]
    assert not power_assoc_check(sc)


def test_alternative_examples():
    assert alternative_check(builtin("octonions"))
    assert alternative_check(builtin("mat2"))
    assert not alternative_check(builtin("sl2_commutator"))


def test_oracle_equivalences():
    for sc in [builtin(n) for n in NAMED] + small_algebras(200):
        ann = annihilator(sc)
        assert ann.contains(V.coeffs) == jacobi_check(sc), sc.name
        assert ann.contains(W.coeffs) == power_assoc_check(sc), sc.name
        assert ann.contains_subspace(span_of_orbit(ALTERNATIVE_GENERATOR)) == alternative_check(sc), sc.name


def test_builtins():
    for name in ("reals", "complex", "quaternions", "mat2", "dual_numbers"):
        sc = builtin(name)
        assert is_associative(sc), name
        assert annihilator(sc) == Subspace.full(6)
    d = builtin("dual_numbers")
    assert d.dim == 2 and d.c(1, 1, 0) == 0 and d.c(1, 1, 1) == 0
    assert builtin("cayley_dickson_from(quaternions)").data == builtin("octonions").data
    with pytest.raises(UnknownName):
        builtin("sedenions_please")


def test_prelie_builtin():
    p = builtin("prelie")
    assert not is_associative(p)
    assert satisfies(p, element(1, -1, 0, 0, 0, 0))


def test_tensor():
    sc = builtin("sl2_commutator")
    t = tensor(builtin("reals"), sc)
    assert t.data == sc.data
    assert annihilator(tensor(builtin("quaternions"), builtin("mat2"))) == Subspace.full(6)
    p = builtin("prelie")
    assert annihilator(tensor(p, p)).rank == 0


def test_tensor_matches_componentwise():
    a, b = builtin("complex"), builtin("prelie")
    t = tensor(a, b)
    for i, j, k, l in product(range(2), range(3), range(2), range(3)):
        ab = naive_mul(a, unit(2, i), unit(2, k))
        cd = naive_mul(b, unit(3, j), unit(3, l))
        expected = [x * y for x in ab for y in cd]
        assert naive_mul(t, unit(6, i * 3 + j), unit(6, k * 3 + l)) == expected


def test_opposite_annihilator():
    o = opposite(builtin("prelie"))
    # the opposite of a left-symmetric algebra is right-symmetric
    assert satisfies(o, element(1, 0, 0, -1, 0, 0))


def test_json_round_trip():
    for name in NAMED:
        sc = builtin(name)
        doc = json.loads(json.dumps(sc.to_json()))
        assert StructureConstants.from_json(doc) == sc
    sc = StructureConstants.from_entries(2, {(0, 1, 1): Fraction(-3, 4)}, "q")
    assert sc.to_json()["entries"] == [{"i": 1, "j": 2, "k": 2, "c": "-3/4"}]


@pytest.mark.parametrize(
    "doc",
    [
        "not json",
        {"entries": []},
        {"dim": 0, "entries": []},
        {"dim": 2, "entries": [{"i": 3, "j": 1, "k": 1, "c": "1"}]},
        {"dim": 2, "entries": [{"i": 1, "j": 1, "k": 1, "c": "1.5"}]},
        {"dim": 2, "entries": [{"i": 1, "j": 1, "k": 1}]},
        {"dim": 2, "entries": [{"i": 1, "j": 1, "k": 1, "c": "1"}, {"i": 1, "j": 1, "k": 1, "c": "2"}]},
    ],
)
def test_schema_errors(doc):
    with pytest.raises(SchemaError):
        StructureConstants.from_json(doc)


def test_analyze_report():
    r = analyze(builtin("octonions"))
    assert (r["annihilator_dim"], r["type"], r["alternative"], r["jacobi"]) == (5, "V'", True, False)
    r = analyze(builtin("mat2"))
    assert (r["annihilator_dim"], r["type"]) == (6, "VI")
    assert analyze(builtin("sl2_commutator"))["contains_V"]
