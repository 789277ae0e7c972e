import pytest
import sympy

from braidtk.laurent import (LaurentPoly1, LaurentPoly2, LaurentPolyError, T as t, X as x,
                             char_determinant, determinant, to_matrix)

T = LaurentPoly1.monomial(1, 1)


def test_arithmetic():
    p = LaurentPoly1.from_coefficients([1, -1, 1], offset=-1)

    assert str(p) == 't - 1 + t^-1'
    assert p + (-p) == 0
    assert (p - p).is_zero()
    assert p * 2 == LaurentPoly1.from_coefficients([2, -2, 2], offset=-1)
    assert 1 - T == LaurentPoly1({0: 1, 1: -1})
    assert p * p == LaurentPoly1.from_coefficients([1, -2, 3, -2, 1], offset=-2)


def test_zero_coefficients_are_dropped():
    assert LaurentPoly1({0: 0, 3: 0}).terms == {}
    assert (T - T).terms == {}
    assert str(LaurentPoly1()) == '0'
    assert not LaurentPoly1() and LaurentPoly1() == 0


def test_equal_polynomials_have_equal_parts():
    a = LaurentPoly1({-3: 1, -1: 2})
    b = LaurentPoly1.monomial(1, -3) * LaurentPoly1({0: 1, 2: 2})

    assert a == b
    assert a.offset == b.offset == (-3,)
    assert hash(a) == hash(b)
    assert len({a, b}) == 1


def test_format():
    assert str(LaurentPoly1.from_coefficients([1, -1, 1, -1, 1], offset=-2)) == 't^2 - t + 1 - t^-1 + t^-2'
    assert str(LaurentPoly1({0: -3})) == '-3'
    assert str(LaurentPoly1({1: -2, 0: 1})) == '-2*t + 1'

    poly = LaurentPoly2({(9, 5): 1, (7, 4): 1, (4, 3): -1, (5, 3): 2, (0, 0): 1})
    assert str(poly) == 't^9*x^5 + t^7*x^4 - t^4*x^3 + 2*t^5*x^3 + 1'
    assert str(LaurentPoly2({(0, 1): 1, (0, 0): -1})) == 'x - 1'


def test_json():
    poly = LaurentPoly2({(9, 5): 1, (2, 1): 1, (0, 0): 1})

    assert poly.to_json() == [[1, 9, 5], [1, 2, 1], [1, 0, 0]]
    assert LaurentPoly2.from_json(poly.to_json()) == poly

    p = LaurentPoly1.from_coefficients([1, -1, 1], offset=-1)
    assert p.to_json() == [[1, 1], [-1, 0], [1, -1]]
    assert LaurentPoly1.from_json(p.to_json()) == p


def test_from_expr():
    assert LaurentPoly1.from_expr(t - 1 + 1 / t) == LaurentPoly1.from_coefficients([1, -1, 1], offset=-1)
    assert LaurentPoly1.from_expr(sympy.Integer(0)).is_zero()
    assert LaurentPoly1.from_expr((t + 1) * (t - 1) / t ** 2) == LaurentPoly1({0: 1, -2: -1})
    assert LaurentPoly2.from_expr(x ** 2 * t - x / t) == LaurentPoly2({(1, 2): 1, (-1, 1): -1})

    p = LaurentPoly2({(9, 5): 1, (-2, 1): -3, (0, 0): 1})
    assert LaurentPoly2.from_expr(p.as_expr()) == p


def test_from_expr__rejects_non_laurent():
    with pytest.raises(LaurentPolyError):
        LaurentPoly1.from_expr(1 / (t + 1))
    with pytest.raises(LaurentPolyError):
        LaurentPoly1.from_expr(t / 2)


def test_exact_divide():
    ## (1 + t^3) / (1 + t) = 1 - t + t^2
    assert LaurentPoly1({0: 1, 3: 1}).exact_divide(LaurentPoly1({0: 1, 1: 1})) == \
        LaurentPoly1.from_coefficients([1, -1, 1])
    assert LaurentPoly1({-2: 1, 1: 1}).exact_divide(LaurentPoly1({-1: 1, 0: 1})) == \
        LaurentPoly1.from_coefficients([1, -1, 1], offset=-1)
    assert LaurentPoly1.monomial(3, 4).exact_divide(LaurentPoly1.monomial(-1, 1)) == \
        LaurentPoly1.monomial(-3, 3)


def test_exact_divide__raises_on_remainder():
    with pytest.raises(LaurentPolyError):
        LaurentPoly1({0: 1, 2: 1}).exact_divide(LaurentPoly1({0: 1, 1: 1}))
    with pytest.raises(LaurentPolyError):
        LaurentPoly1({0: 1}).exact_divide(LaurentPoly1({0: 2}))
    with pytest.raises(LaurentPolyError):
        T.exact_divide(LaurentPoly1())


def test_big_coefficients_are_exact():
    p = LaurentPoly1({0: 2 ** 70, 1: 1})
    assert (p * p).terms[0] == 2 ** 140


def test_evaluate():
    p = LaurentPoly1.from_coefficients([1, -1, 1], offset=-1)
    assert p.evaluate(1) == 1
    assert p.evaluate(2) == sympy.Rational(3, 2)
    assert p.evaluate(sympy.Rational(1, 3)) == sympy.Rational(7, 3)


def test_degrees_and_coefficients():
    p = LaurentPoly1({-2: 1, 1: -4})

    assert (p.min_degree(), p.max_degree()) == (-2, 1)
    assert p.coefficients() == [1, 0, 0, -4]
    assert p.shift(2) == LaurentPoly1({0: 1, 3: -4})
    assert p.substitute_inverse() == LaurentPoly1({2: 1, -1: -4})
    assert LaurentPoly1().coefficients() == []


def test_normalize():
    poly = LaurentPoly2({(3, 2): -1, (5, 4): -2, (2, 2): 1})
    normalized = poly.normalize()

    assert normalized == LaurentPoly2({(1, 0): 1, (3, 2): 2, (0, 0): -1})
    assert normalized.normalize() == normalized
    assert (poly * LaurentPoly2.monomial(-1, 4, -7)).normalize() == normalized


def test_x_coefficients():
    poly = LaurentPoly2({(9, 5): 1, (4, 3): -1, (5, 3): 2})

    assert poly.x_coefficient(3) == LaurentPoly1({4: -1, 5: 2})
    assert poly.x_degrees() == [3, 5]
    assert poly.specialize_x(1) == LaurentPoly1({9: 1, 4: -1, 5: 2})
    assert LaurentPoly2.lift(T, x_exp=2) == LaurentPoly2.monomial(1, 1, 2)


def test_determinant():
    assert determinant(to_matrix([[1, 2], [3, 4]]), LaurentPoly1) == -2
    assert determinant(to_matrix([[2, 0, 1], [1, 3, 2], [1, 1, 1]]), LaurentPoly1) == 0
    assert determinant(to_matrix([]), LaurentPoly1) == 1

    t_inverse = LaurentPoly1.monomial(1, -1)
    matrix = [[T, 1], [1, t_inverse]]
    assert determinant(to_matrix(matrix), LaurentPoly1) == 0
    matrix = [[T, LaurentPoly1.constant(1)], [LaurentPoly1.constant(1), T]]
    assert determinant(to_matrix(matrix), LaurentPoly1) == T * T - 1


def test_char_determinant():
    ## det(I - x·diag(t, t^-1)) = (1 - tx)(1 - x/t)
    matrix = [[T, 0], [0, LaurentPoly1.monomial(1, -1)]]
    expected = LaurentPoly2({(0, 0): 1, (1, 1): -1, (-1, 1): -1, (0, 2): 1})

    assert char_determinant(to_matrix(matrix)) == expected
    assert char_determinant(to_matrix([])) == 1
