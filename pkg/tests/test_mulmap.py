import pytest
import sympy

from prymcheck.cyclo import CycloElem, TorusPoly
from prymcheck.linalg import det
from prymcheck.mulmap import (
    build_product,
    build_section,
    det_at,
    det_formula,
    matrix_A_derived,
    matrix_A_printed,
    predicted_nonvanishing,
    verify_det_identity,
    vanishing_sweep,
)

z = CycloElem.root(1)
c1, c2 = TorusPoly.c1(), TorusPoly.c2()


def to_sympy(f):
    x, y = sympy.symbols("x y")
    return sum(sympy.Rational(c.numerator, c.denominator) * x**i * y**j for i, j, c in f.terms())


def reduce_mod(expr):
    x, y = sympy.symbols("x y")
    poly = sympy.Poly(sympy.expand(expr), x, y)
    out = 0
    for (i, j), c in poly.terms():
        out += c * x ** (i % 7) * y ** (j % 7)
    return sympy.expand(out)


def test_sections():
    s = build_section(1)
    assert (s.a, s.b) == (c1 - 1, c2 - 1)
    for i in range(1, 7):
        s = build_section(i)
        assert s.a.evaluate(0, 0) == 0 and s.b.evaluate(0, 0) == 0
    assert build_section(3).a.evaluate(1, 0) == z**3 - 1
    with pytest.raises(ValueError):
        build_section(7)


def test_products():
    assert build_product(1).xx == 2 - c1 - c1**6
    assert build_product(2).yy == 2 - c2**2 - c2**5
    xy = build_product(1).xy.evaluate(1, 1)
    assert xy == 4 - 2 * z - 2 * z**6
    assert xy == 2 * build_product(1).xx.evaluate(1, 1)
    with pytest.raises(ValueError):
        build_product(4)


def test_printed_entries():
    a = matrix_A_printed()
    assert a[0, 0] == 2 - c1 - c1**6
    assert a[2, 2] == 2 - c2**3 - c2**4
    assert a[0, 1] == 2 - c1 * c2**6 - c1**6 * c2


@pytest.mark.parametrize("build", [matrix_A_printed, matrix_A_derived])
def test_first_column_vanishes_at_c1_one(build):
    m = build()
    for b in range(7):
        assert all(e.evaluate(0, b) == 0 for e in m.column(0))
        assert det_at(m, 0, b) == 0


def test_det_against_sympy_oracle():
    # independent symbolic determinant, reduced mod x^7 - 1, y^7 - 1
    x, y = sympy.symbols("x y")
    for build, sign in ((matrix_A_printed, 1), (matrix_A_derived, -1)):
        m = build()
        sm = sympy.Matrix(3, 3, lambda i, j: to_sympy(m[i, j]))
        lhs = reduce_mod(sm.det())
        assert lhs == reduce_mod(sign * to_sympy(det_formula()))
        assert reduce_mod(to_sympy(det(m))) == lhs


def test_det_formula_values():
    f = det_formula()
    assert f.evaluate(1, 1) == 0
    assert all(f.evaluate(0, b) == 0 for b in range(7))
    assert f.evaluate(1, 3) != 0


def test_identity_report():
    rep = verify_det_identity()
    assert rep.authoritative == "printed"
    assert rep.satisfied_by == ("printed",)
    assert rep.outer_columns_agree and rep.middle_column_relation
    derived = next(v for v in rep.variants if v.name == "derived")
    assert derived.symbolic_negated and derived.pointwise_negated


def test_identity_on_c1_one_line():
    f = det_formula()
    d = det(matrix_A_printed())
    assert all(d.evaluate(0, b) == 0 == f.evaluate(0, b) for b in range(7))


def test_sweep():
    table = vanishing_sweep()
    assert table[1][3]
    assert not table[1][2]
    assert sum(map(sum, table)) == 12
    for a in range(7):
        for b in range(7):
            assert table[a][b] == predicted_nonvanishing(a, b)
            assert table[a][b] == table[b][a]
    assert vanishing_sweep(matrix_A_derived()) == table


def test_vanishing_loci():
    table = vanishing_sweep()
    for t in range(7):
        assert not table[0][t] and not table[t][0] and not table[t][t]
    assert 3 * 5 % 7 == 1


def test_swap_symmetry():
    d = det(matrix_A_printed())
    for a in range(7):
        for b in range(7):
            assert d.evaluate(a, b) == d.swap().evaluate(b, a)
