import sympy
from sympy import ZZ
from sympy.polys.polyerrors import BasePolynomialError

T, X = sympy.symbols('t x')


class LaurentPolyError(Exception):
    """
    Raise when a Laurent polynomial operation has no exact result, eg, a division
    which leaves a remainder.
    """


def _monomial(t_exp, x_exp=0):
    parts = []
    if t_exp == 1:
        parts.append('t')
    elif t_exp != 0:
        parts.append('t^{}'.format(t_exp))
    if x_exp == 1:
        parts.append('x')
    elif x_exp != 0:
        parts.append('x^{}'.format(x_exp))
    return '*'.join(parts)


def _format_terms(terms):
    """
    :param terms: [(coeff, monomial_string)] in print order
    """
    if not terms:
        return '0'

    out = []
    for index, (coeff, monomial) in enumerate(terms):
        magnitude = abs(coeff)
        if not monomial:
            body = str(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = '{}*{}'.format(magnitude, monomial)

        if index == 0:
            out.append('-' + body if coeff < 0 else body)
        else:
            out.append(' - ' + body if coeff < 0 else ' + ' + body)
    return ''.join(out)


class _LaurentBase(object):
    """
    Exact-integer Laurent polynomial held as a monomial `offset` times a sympy Poly
    over ZZ which no generator divides, so equal polynomials have equal parts.
    Subclasses fix the generators and how exponents are keyed in `terms`.
    """

    __slots__ = ('poly', 'offset')

    GENS = ()

    def __init__(self, terms=None):
        monoms = {}
        for key, coeff in (terms or {}).items():
            if coeff:
                monoms[self._monom(key)] = int(coeff)
        if not monoms:
            self._assign(self._zero_poly(), self._origin())
            return
        offset = tuple(min(m[i] for m in monoms) for i in range(len(self.GENS)))
        shifted = {tuple(e - o for e, o in zip(m, offset)): c for m, c in monoms.items()}
        self._assign(sympy.Poly.from_dict(shifted, *self.GENS, domain=ZZ), offset)

    def _assign(self, poly, offset):
        if poly.is_zero:
            self.poly, self.offset = self._zero_poly(), self._origin()
            return
        common, poly = poly.terms_gcd()
        self.poly = poly
        self.offset = tuple(o + c for o, c in zip(offset, common))

    @classmethod
    def _from_poly(cls, poly, offset):
        obj = cls.__new__(cls)
        obj._assign(poly, offset)
        return obj

    @classmethod
    def _origin(cls):
        return (0,) * len(cls.GENS)

    @classmethod
    def _zero_poly(cls):
        return sympy.Poly(0, *cls.GENS, domain=ZZ)

    @classmethod
    def from_expr(cls, expr):
        """
        Read a sympy expression in the generators, negative powers allowed.
        :raises LaurentPolyError: when `expr` is not a Laurent polynomial over ZZ
        """
        numerator, denominator = sympy.fraction(sympy.together(sympy.expand(expr)))
        try:
            numerator = sympy.Poly(numerator, *cls.GENS, domain=ZZ)
            denominator = sympy.Poly(denominator, *cls.GENS, domain=ZZ)
        except BasePolynomialError as e:
            raise LaurentPolyError('{} is not an integer Laurent polynomial: {}'.format(expr, e))
        if not denominator.is_monomial or abs(denominator.LC()) != 1:
            raise LaurentPolyError('{} is not an integer Laurent polynomial'.format(expr))
        return cls._from_poly(numerator.mul_ground(int(denominator.LC())),
                              tuple(-e for e in denominator.monoms()[0]))

    @classmethod
    def constant(cls, c):
        return cls._from_poly(sympy.Poly(c, *cls.GENS, domain=ZZ), cls._origin())

    @property
    def terms(self):
        """
        {exponent key: int}, zero coefficients never present.
        """
        if self.poly.is_zero:
            return {}
        return {self._key(tuple(e + o for e, o in zip(monom, self.offset))): int(coeff)
                for monom, coeff in self.poly.terms()}

    def as_expr(self):
        shift = sympy.Mul(*[g ** o for g, o in zip(self.GENS, self.offset)])
        return self.poly.as_expr() * shift

    def _lowered(self, offset):
        ## self.poly times the monomial which brings self.offset down to `offset`
        shift = tuple(s - o for s, o in zip(self.offset, offset))
        return self.poly * sympy.Poly.from_dict({shift: 1}, *self.GENS, domain=ZZ)

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, int):
            return self.constant(other)
        return None

    def is_zero(self):
        return self.poly.is_zero

    def __bool__(self):
        return not self.poly.is_zero

    def __neg__(self):
        return self._from_poly(-self.poly, self.offset)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        offset = tuple(map(min, self.offset, other.offset))
        return self._from_poly(self._lowered(offset) + other._lowered(offset), offset)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self._from_poly(self.poly.mul_ground(other), self.offset)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._from_poly(self.poly * other.poly,
                               tuple(a + b for a, b in zip(self.offset, other.offset)))

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.offset == other.offset and self.poly == other.poly

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((type(self).__name__, frozenset(self.terms.items())))

    def __repr__(self):
        return '{}({!r})'.format(type(self).__name__, self.terms)


class LaurentPoly1(_LaurentBase):
    """
    Laurent polynomial in t with exact integer coefficients. Burau matrix entries and
    Alexander polynomials live here.
    """

    __slots__ = ()

    GENS = (T,)

    @staticmethod
    def _monom(key):
        return (key,)

    @staticmethod
    def _key(monom):
        return monom[0]

    @classmethod
    def monomial(cls, coeff, t_exp):
        return cls({t_exp: coeff})

    @classmethod
    def from_coefficients(cls, coefficients, offset=0):
        """
        :param coefficients: [int] in ascending powers of t starting at t^offset
        """
        return cls({offset + i: c for i, c in enumerate(coefficients)})

    def min_degree(self):
        return self.offset[0]

    def max_degree(self):
        return self.offset[0] + max(self.poly.degree(), 0)

    def coefficients(self):
        """
        Dense coefficients from `min_degree()` to `max_degree()`, ascending.
        """
        if self.is_zero():
            return []
        return [int(c) for c in reversed(self.poly.all_coeffs())]

    def shift(self, k):
        return self._from_poly(self.poly, (self.offset[0] + k,))

    def substitute_inverse(self):
        return LaurentPoly1({-e: c for e, c in self.terms.items()})

    def evaluate(self, t):
        """
        Exact value at a nonzero rational `t`, a sympy Rational.
        """
        value = sympy.Rational(t)
        return self.poly.eval(value) * value ** self.offset[0]

    def exact_divide(self, other):
        """
        Division in Z[t, t^-1], raising unless it is exact.
        :param other: LaurentPoly1, nonzero
        :return: LaurentPoly1 quotient
        """
        if other.is_zero():
            raise LaurentPolyError('Division by the zero polynomial')
        ## units t^k aside, both parts have nonzero constant terms
        quotient, remainder = self.poly.div(other.poly, auto=False)
        if not remainder.is_zero:
            raise LaurentPolyError('{} is not divisible by {}'.format(self, other))
        return self._from_poly(quotient, (self.offset[0] - other.offset[0],))

    def to_json(self):
        terms = self.terms
        return [[terms[e], e] for e in sorted(terms, reverse=True)]

    @classmethod
    def from_json(cls, value):
        return cls({e: c for c, e in value})

    def __str__(self):
        terms = self.terms
        return _format_terms([(terms[e], _monomial(e)) for e in sorted(terms, reverse=True)])


class LaurentPoly2(_LaurentBase):
    """
    Laurent polynomial in t and x, keyed by (t exponent, x exponent). The Burau
    characteristic polynomial lives here.
    """

    __slots__ = ()

    GENS = (T, X)

    @staticmethod
    def _monom(key):
        return tuple(key)

    @staticmethod
    def _key(monom):
        return monom

    @classmethod
    def monomial(cls, coeff, t_exp, x_exp):
        return cls({(t_exp, x_exp): coeff})

    @classmethod
    def lift(cls, poly, x_exp=0):
        """
        View a LaurentPoly1 as a coefficient of x^x_exp.
        """
        return cls({(e, x_exp): c for e, c in poly.terms.items()})

    def x_coefficient(self, x_exp):
        return LaurentPoly1({t: c for (t, x), c in self.terms.items() if x == x_exp})

    def x_degrees(self):
        return sorted({x for _, x in self.terms})

    def specialize_x(self, value):
        """
        Substitute an integer for x. Negative x exponents are not supported.
        """
        if self.offset[1] < 0:
            raise LaurentPolyError('Cannot specialize x in {}'.format(self))
        return LaurentPoly1.from_expr(self.as_expr().subs(X, value))

    def _print_order(self):
        return sorted(self.terms, key=lambda key: (-key[1], key[0]))

    def normalize(self):
        """
        The unique multiple by ±t^a x^b with minimal x exponent 0, minimal t exponent 0
        and a positive coefficient on the highest (x, then t) term.
        """
        if self.is_zero():
            return self
        terms = self.terms
        highest = max(terms, key=lambda key: (key[1], key[0]))
        poly = -self.poly if terms[highest] < 0 else self.poly
        return self._from_poly(poly, self._origin())

    def to_json(self):
        terms = self.terms
        return [[terms[key], key[0], key[1]] for key in self._print_order()]

    @classmethod
    def from_json(cls, value):
        return cls({(t, x): c for c, t, x in value})

    def __str__(self):
        terms = self.terms
        return _format_terms([(terms[key], _monomial(*key)) for key in self._print_order()])


def to_matrix(matrix):
    """
    :param matrix: square list of lists of Laurent polynomials or ints
    :return: sympy.Matrix of expressions
    """
    return sympy.Matrix([[_as_expr(entry) for entry in row] for row in matrix])


def _as_expr(entry):
    return sympy.Integer(entry) if isinstance(entry, int) else entry.as_expr()


def determinant(matrix, ring):
    """
    Exact determinant by sympy's division-free Berkowitz algorithm.
    :param matrix: sympy.Matrix whose entries are Laurent polynomials in `ring`'s generators
    :param ring: LaurentPoly1 or LaurentPoly2, the type of the result
    :return: instance of `ring`
    """
    if matrix.rows == 0:
        return ring.constant(1)
    return ring.from_expr(matrix.det(method='berkowitz'))


def char_determinant(matrix):
    """
    det(I - x·M) for a square sympy.Matrix M of Laurent polynomials in t.
    :return: LaurentPoly2
    """
    if matrix.rows == 0:
        return LaurentPoly2.constant(1)
    return determinant(sympy.eye(matrix.rows) - X * matrix, LaurentPoly2)
