import itertools
import json
from fractions import Fraction

import pytest

from skewchar import (
    FrobeniusCoordinates,
    LaurentPoly,
    NonExactDivisionError,
    Partition,
    PolyMatrix,
    SkewShape,
    from_frobenius,
)
from conftest import partitions_upto, random_poly


def test_conjugate_examples():
    assert Partition((4, 4, 4, 2, 1)).conjugate() == Partition((5, 4, 3, 3))
    assert Partition().conjugate() == Partition()
    assert Partition((3,)).conjugate() == Partition((1, 1, 1))


def test_frobenius_examples():
    f = Partition((6, 5, 4, 4, 1)).to_frobenius()
    assert f.arms == (5, 3, 1, 0)
    assert f.legs == (4, 2, 1, 0)
    assert from_frobenius(f) == Partition((6, 5, 4, 4, 1))
    g = Partition((3, 2)).to_frobenius()
    assert g.arms == (2, 0) and g.legs == (1, 0)
    assert Partition().to_frobenius().arms == ()
    assert FrobeniusCoordinates((0,), (0,)).to_partition() == Partition((1,))
    assert FrobeniusCoordinates((2, 0), (1, 0)).to_partition() == Partition((3, 2))


def test_frobenius_rejects_non_decreasing():
    with pytest.raises(ValueError):
        FrobeniusCoordinates((1, 1), (2, 0))
    with pytest.raises(ValueError):
        FrobeniusCoordinates((2, 0), (0, 0))
    with pytest.raises(ValueError):
        FrobeniusCoordinates((2,), (0, 1))


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_involutions_exhaustive_size_12():
    for p in partitions_upto(12):
        assert p.conjugate().conjugate() == p
        assert p.to_frobenius().to_partition() == p


def test_skew_shape():
    sh = SkewShape(Partition((3, 2)), Partition((1,)))
    assert sh.size() == 4
    assert sh.cells() == [(1, 2), (1, 3), (2, 1), (2, 2)]
    assert sh.contains_cell(2, 1) and not sh.contains_cell(1, 1)
    with pytest.raises(ValueError):
        SkewShape(Partition((1,)), Partition((2,)))


def x(i, e=1, n=1):
    return LaurentPoly.var_power(i, e, n)


def test_poly_examples():
    assert (x(1) + x(1, -1)) * (x(1) - x(1, -1)) == x(1, 2) - x(1, -2)
    p = LaurentPoly(1, {(3,): 2, (-1,): 5})
    assert p * LaurentPoly.one(1) == p
    sq = (x(1) + x(1, -1)) * (x(1) + x(1, -1))
    assert sq == LaurentPoly(1, {(2,): 1, (0,): 1 + 1, (-2,): 1})


def test_poly_ring_laws(rng):
    for _ in range(40):
        a = random_poly(rng, 2)
        b = random_poly(rng, 2)
        c = random_poly(rng, 2)
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        pt = [Fraction(rng.randint(1, 7), rng.randint(1, 7)) for _ in range(2)]
        assert (a * b).eval_at(pt) == a.eval_at(pt) * b.eval_at(pt)
        assert (a + b).eval_at(pt) == a.eval_at(pt) + b.eval_at(pt)


def test_eval_examples():
    assert (x(1) + x(1, -1)).eval_at([2]) == Fraction(5, 2)
    assert LaurentPoly.one(3).eval_at([5, -1, Fraction(1, 3)]) == 1
    p = LaurentPoly(2, {(1, 1): 1, (-1, 1): -1})
    assert p.eval_at([2, 3]) == Fraction(9, 2)
    with pytest.raises(ValueError):
        p.eval_at([0, 1])


def test_div_exact():
    p = LaurentPoly(1, {(1,): 2, (-1,): 2})
    assert p.div_exact_int(2) == x(1) + x(1, -1)
    assert p.div_exact_int(1) == p
    with pytest.raises(NonExactDivisionError):
        (x(1) + LaurentPoly.one(1)).div_exact_int(2)


def test_bar_involution():
    p = LaurentPoly(2, {(2, -1): 3, (0, 0): 7})
    assert p.bar() == LaurentPoly(2, {(-2, 1): 3, (0, 0): 7})
    assert p.bar().bar() == p
    c = LaurentPoly.constant(2, 9)
    assert c.bar() == c


def test_text_form():
    assert LaurentPoly.zero(2).to_text() == "0"
    assert (x(1) + x(1, -1)).to_text() == "x1 + x1^-1"
    assert LaurentPoly(2, {(-1, 1): -2, (0, 0): 3}).to_text() == "-2*x1^-1*x2 + 3"
    assert LaurentPoly(2, {(1, 0): -1}).to_text() == "-x1"


def test_json_roundtrip(rng):
    for _ in range(20):
        p = random_poly(rng, 3)
        blob = json.dumps(p.to_json_terms())
        assert LaurentPoly.from_json_terms(3, json.loads(blob)) == p
    # terms are sorted lexicographically by exponent vector
    p = LaurentPoly(2, {(1, -1): 1, (-1, 1): 1, (0, 0): 5})
    exps = [tuple(t["exp"]) for t in p.to_json_terms()]
    assert exps == sorted(exps)


def leibniz(rows, n_vars):
    dim = len(rows)
    total = LaurentPoly.zero(n_vars)
    for perm in itertools.permutations(range(dim)):
        sgn = 1
        for i in range(dim):
            for j in range(i + 1, dim):
                if perm[i] > perm[j]:
                    sgn = -sgn
        prod = LaurentPoly.one(n_vars)
        for i in range(dim):
            prod = prod * rows[i][perm[i]]
        total = total + prod.scaled(sgn)
    return total


def test_determinant_examples():
    assert PolyMatrix([], 1).determinant() == LaurentPoly.one(1)
    one = LaurentPoly.one(1)
    m = PolyMatrix([[x(1), one], [one, x(1, -1)]])
    assert m.determinant() == LaurentPoly.zero(1)
    for dim in (1, 2, 3, 5):
        ident = PolyMatrix(
            [[one if i == j else LaurentPoly.zero(1) for j in range(dim)] for i in range(dim)]
        )
        assert ident.determinant() == one


def test_determinant_vs_leibniz(rng):
    for dim in (2, 3, 4):
        for _ in range(4):
            rows = [[random_poly(rng, 2, terms=2) for _ in range(dim)] for _ in range(dim)]
            m = PolyMatrix(rows)
            assert m.determinant() == leibniz(rows, 2)
            assert m.with_rows_swapped(0, 1).determinant() == -m.determinant()
