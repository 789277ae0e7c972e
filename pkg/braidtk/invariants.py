import functools
import itertools

import singer
import sympy

from braidtk import json_schema
from braidtk.braid_core import (braid_power, closure_component_count, closure_components,
                                delete_strands, writhe)
from braidtk.json_schema import ARRAY, INTEGER, OBJECT, STRING
from braidtk.laurent import (LaurentPoly1, LaurentPolyError, char_determinant, determinant,
                             to_matrix)

LOGGER = singer.get_logger()

T = LaurentPoly1.monomial(1, 1)
T_INVERSE = LaurentPoly1.monomial(1, -1)
ONE = LaurentPoly1.constant(1)
ZERO = LaurentPoly1()

MAX_SUMMANDS = 3


class InvariantError(Exception):
    """
    Raise when an invariant is requested for a braid outside its domain, eg, the
    Alexander polynomial of a closure with several components.
    """


## Prime knots which close positive permutation braids on at most 7 strands.
## `alexander` holds ascending coefficients of the polynomial with lowest term t^0.
KNOT_TABLE = [
    {'name': 'Unknot', 'tag': 'Unknot', 'alexander': [1], 'genus': 0},
    {'name': 'Torus(2,3)', 'tag': 'Torus', 'p': 2, 'q': 3, 'alexander': [1, -1, 1], 'genus': 1},
    {'name': 'Torus(2,5)', 'tag': 'Torus', 'p': 2, 'q': 5, 'alexander': [1, -1, 1, -1, 1], 'genus': 2},
    {'name': 'Torus(2,7)', 'tag': 'Torus', 'p': 2, 'q': 7,
     'alexander': [1, -1, 1, -1, 1, -1, 1], 'genus': 3},
    {'name': 'Torus(2,9)', 'tag': 'Torus', 'p': 2, 'q': 9,
     'alexander': [1, -1, 1, -1, 1, -1, 1, -1, 1], 'genus': 4},
    {'name': 'Torus(2,11)', 'tag': 'Torus', 'p': 2, 'q': 11,
     'alexander': [1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1], 'genus': 5},
    {'name': 'Torus(2,13)', 'tag': 'Torus', 'p': 2, 'q': 13,
     'alexander': [1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1], 'genus': 6},
    {'name': 'Torus(3,4)', 'tag': 'Torus', 'p': 3, 'q': 4,
     'alexander': [1, -1, 0, 1, 0, -1, 1], 'genus': 3},
    {'name': 'Torus(3,5)', 'tag': 'Torus', 'p': 3, 'q': 5,
     'alexander': [1, -1, 0, 1, -1, 1, 0, -1, 1], 'genus': 4},
    {'name': 'Torus(3,7)', 'tag': 'Torus', 'p': 3, 'q': 7,
     'alexander': [1, -1, 0, 1, -1, 0, 1, 0, -1, 1, 0, -1, 1], 'genus': 6},
    {'name': 'Torus(4,5)', 'tag': 'Torus', 'p': 4, 'q': 5,
     'alexander': [1, -1, 0, 0, 1, 0, -1, 0, 1, 0, 0, -1, 1], 'genus': 6},
]

KNOT_TABLE_SCHEMA = {
    'type': ARRAY,
    'items': {
        'type': OBJECT,
        'required': ['name', 'tag', 'alexander', 'genus'],
        'properties': {
            'name': {'type': STRING},
            'tag': {'enum': ['Unknot', 'Torus']},
            'p': {'type': INTEGER, 'minimum': 2},
            'q': {'type': INTEGER, 'minimum': 2},
            'alexander': {'type': ARRAY, 'minItems': 1, 'items': {'type': INTEGER}},
            'genus': {'type': INTEGER, 'minimum': 0}
        },
        'additionalProperties': False
    }
}


class KnotId(object):
    """
    Identified knot type of a closure.
    :param tag: 'Unknot', 'Torus', 'ConnectedSum' or 'Unidentified'
    """

    __slots__ = ('tag', 'torus', 'summands', 'alexander', 'genus')

    def __init__(self, tag, alexander, genus, torus=None, summands=()):
        self.tag = tag
        self.alexander = alexander
        self.genus = genus
        self.torus = torus
        self.summands = tuple(summands)

    @property
    def name(self):
        if self.tag == 'Torus':
            return 'Torus({},{})'.format(*self.torus)
        if self.tag == 'ConnectedSum':
            return 'ConnectedSum[{}]'.format(', '.join(s.name for s in self.summands))
        return self.tag

    def _key(self):
        return (self.tag, self.torus, tuple(s._key() for s in self.summands),
                None if self.tag != 'Unidentified' else self.alexander)

    def __eq__(self, other):
        return isinstance(other, KnotId) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return 'KnotId({})'.format(self.name)

    def __str__(self):
        return self.name

    def to_json(self):
        return {'name': self.name,
                'tag': self.tag,
                'alexander': self.alexander.to_json(),
                'genus': self.genus}


def _prime_knots():
    json_schema.validate(KNOT_TABLE_SCHEMA, KNOT_TABLE, what='knot table')
    primes = []
    for entry in KNOT_TABLE:
        torus = (entry['p'], entry['q']) if entry['tag'] == 'Torus' else None
        primes.append(KnotId(entry['tag'],
                             normalize_alexander(LaurentPoly1.from_coefficients(entry['alexander'])),
                             entry['genus'],
                             torus=torus))
    return primes


@functools.lru_cache(maxsize=None)
def knot_lookup():
    """
    Every table knot and every connected sum of up to three nontrivial table knots,
    keyed by (alexander, genus). Earlier entries win, so primes shadow sums.
    :return: {(LaurentPoly1, int): KnotId}
    """
    primes = _prime_knots()
    lookup = {}
    for knot in primes:
        lookup.setdefault((knot.alexander, knot.genus), knot)

    nontrivial = [k for k in primes if k.tag != 'Unknot']
    for count in range(2, MAX_SUMMANDS + 1):
        for summands in itertools.combinations_with_replacement(nontrivial, count):
            alexander = ONE
            for summand in summands:
                alexander = alexander * summand.alexander
            genus = sum(s.genus for s in summands)
            knot = KnotId('ConnectedSum', alexander, genus, summands=summands)
            lookup.setdefault((alexander, genus), knot)

    LOGGER.debug('Knot lookup holds {} entries'.format(len(lookup)))
    return lookup


def identity_matrix(size):
    return [[ONE if r == c else ZERO for c in range(size)] for r in range(size)]


def matrix_product(a, b):
    size = len(a)
    inner = len(b)
    columns = len(b[0]) if b else 0
    product = []
    for r in range(size):
        row = []
        for c in range(columns):
            total = ZERO
            for k in range(inner):
                if a[r][k] and b[k][c]:
                    total = total + a[r][k] * b[k][c]
            row.append(total)
        product.append(row)
    return product


def burau_generator(n, i, inverse=False):
    """
    Reduced Burau image of σ_i (or its inverse) in B_n: the identity except on row i,
    which reads (t, -t, 1) at columns i-1, i, i+1, or (1, -t^-1, t^-1) for the inverse.
    """
    size = n - 1
    matrix = identity_matrix(size)
    row = matrix[i - 1]
    if inverse:
        left, middle, right = ONE, -T_INVERSE, T_INVERSE
    else:
        left, middle, right = T, -T, ONE
    if i > 1:
        row[i - 2] = left
    row[i - 1] = middle
    if i < size:
        row[i] = right
    return matrix


def _apply_generator(matrix, k):
    ## right multiplication only touches columns i-1, i, i+1
    i = abs(k)
    size = len(matrix)
    if k > 0:
        left, middle, right = T, -T, ONE
    else:
        left, middle, right = ONE, -T_INVERSE, T_INVERSE
    for row in matrix:
        pivot = row[i - 1]
        if not pivot:
            continue
        if i > 1:
            row[i - 2] = row[i - 2] + pivot * left
        if i < size:
            row[i] = row[i] + pivot * right
        row[i - 1] = pivot * middle


def reduced_burau(w):
    """
    The (n-1)x(n-1) reduced Burau matrix of `w`, a product of generator images
    taken left to right.
    :param w: BraidWord
    :return: [[LaurentPoly1]]
    """
    matrix = identity_matrix(w.strands - 1)
    for k in w.letters:
        _apply_generator(matrix, k)
    return matrix


def burau_determinant(w):
    return determinant(to_matrix(reduced_burau(w)), LaurentPoly1)


def burau_char_poly(w):
    """
    det(I - x·B) for the reduced Burau matrix B of `w`, normalized up to ±t^a x^b.
    This is det(xI - B) with its x coefficients reversed, the same conjugacy
    invariant. It is the form which, with the generator row (t, -t, 1), prints the
    polynomial of the 6-strand braid 1 3 5 2 4 1 3 2 1 as
    t^9*x^5 + t^7*x^4 + t^5*x^3 + t^4*x^2 + t^2*x + 1.
    :param w: BraidWord
    :return: LaurentPoly2
    """
    return char_determinant(to_matrix(reduced_burau(w))).normalize()


def normalize_alexander(poly):
    """
    Centre `poly` on t^0 and fix its sign so that it evaluates to 1 at t = 1.
    """
    if poly.is_zero():
        raise InvariantError('The Alexander polynomial vanishes')
    low, high = poly.min_degree(), poly.max_degree()
    if (high - low) % 2:
        raise InvariantError('{} has odd span and cannot be symmetric'.format(poly))
    centred = poly.shift(-(low + high) // 2)
    return -centred if centred.evaluate(1) < 0 else centred


def alexander_of_closure(w):
    """
    Alexander polynomial of the closure of `w`, a knot:
    det(I - B)·(1 - t)/(1 - t^n), centred with Δ(1) = 1.
    :param w: BraidWord
    :return: LaurentPoly1
    """
    if closure_component_count(w) != 1:
        raise InvariantError('Closure of {} has {} components, not a knot'.format(
            w, closure_component_count(w)))
    n = w.strands
    if n == 1:
        return ONE

    burau = to_matrix(reduced_burau(w))
    numerator = determinant(sympy.eye(burau.rows) - burau, LaurentPoly1) * (ONE - T)
    try:
        quotient = numerator.exact_divide(ONE - LaurentPoly1.monomial(1, n))
    except LaurentPolyError as e:
        raise InvariantError('Burau determinant of {} is not divisible as expected: {}'.format(w, e))
    return normalize_alexander(quotient)


def genus_of_positive_closure(w):
    """
    Genus of the closure of a positive braid using every generator:
    writhe = (n - 1) + 2g.
    """
    if not w.is_positive():
        raise InvariantError('{} has inverse letters'.format(w))
    if closure_component_count(w) != 1:
        raise InvariantError('Closure of {} is not a knot'.format(w))
    if w.generators_used() != frozenset(range(1, w.strands)):
        raise InvariantError('Closure of {} is split'.format(w))
    return (writhe(w) - w.strands + 1) // 2


def torus_knot_alexander(p, q):
    """
    (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)), centred.
    """
    def power_minus_one(k):
        return LaurentPoly1.monomial(1, k) - 1

    numerator = power_minus_one(p * q) * power_minus_one(1)
    denominator = power_minus_one(p) * power_minus_one(q)
    return normalize_alexander(numerator.exact_divide(denominator))


def identify_knot(w):
    """
    Match the closure of `w` against the knot table by Alexander polynomial and, for
    positive braids, genus.
    :param w: BraidWord whose closure is a knot
    :return: KnotId, tagged 'Unidentified' when nothing matches
    """
    alexander = alexander_of_closure(w)
    genus = None
    if w.is_positive():
        genus = genus_of_positive_closure(w)

    lookup = knot_lookup()
    if genus is not None:
        knot = lookup.get((alexander, genus))
    else:
        knot = next((k for (poly, _), k in lookup.items() if poly == alexander), None)

    if knot is None:
        LOGGER.info('No table entry for {} with Alexander polynomial {} and genus {}'.format(
            w, alexander, genus))
        return KnotId('Unidentified', alexander, genus)
    return knot


def squared_component_knots(w):
    """
    Knot types of the components of the closure of w².
    :return: [(tuple of start positions, KnotId)]
    """
    square = braid_power(w, 2)
    return [(component, identify_knot(delete_strands(square, component)))
            for component in closure_components(square)]
