import collections
import functools
import itertools

import singer
from singer import metrics

from braidtk.braid_core import BraidWord, Permutation, permutation_to_braid

LOGGER = singer.get_logger()

SUMMIT_CAP = 100000


class GarsideError(Exception):
    """
    Raise when braids on different strand counts are compared, or a conjugacy
    witness fails verification.
    """


class SummitSetCapError(GarsideError):
    """
    Raise when a summit set grows beyond the configured cap.
    """

    def __init__(self, cap, strands):
        super(SummitSetCapError, self).__init__(
            'Summit set on {} strands exceeded the cap of {} elements'.format(strands, cap))
        self.cap = cap
        self.strands = strands


## Permutation braids are handled as raw image tuples internally; the public
## types wrap them at the edges.

def _compose(a, b):
    return tuple(b[j - 1] for j in a)


def _inverse(a):
    inverse = [0] * len(a)
    for j, k in enumerate(a, start=1):
        inverse[k - 1] = j
    return tuple(inverse)


def _identity(n):
    return tuple(range(1, n + 1))


def _reversal(n):
    return tuple(range(n, 0, -1))


def _generator(n, i):
    image = list(range(1, n + 1))
    image[i - 1], image[i] = image[i], image[i - 1]
    return tuple(image)


@functools.lru_cache(maxsize=None)
def _tau(a):
    n = len(a)
    return tuple(n + 1 - a[n - j] for j in range(1, n + 1))


def _tau_power(a, p):
    return _tau(a) if p % 2 else a


@functools.lru_cache(maxsize=None)
def _starting(a):
    return frozenset(i for i in range(1, len(a)) if a[i - 1] > a[i])


@functools.lru_cache(maxsize=None)
def _finishing(a):
    return _starting(_inverse(a))


def _right_complement(a):
    ## perm(a)^-1 * reversal
    n = len(a)
    return tuple(n + 1 - k for k in _inverse(a))


def _left_complement(a):
    ## reversal * perm(a)^-1
    inverse = _inverse(a)
    n = len(a)
    return tuple(inverse[n - j] for j in range(1, n + 1))


@functools.lru_cache(maxsize=None)
def _left_weight(a, b):
    """
    Move generators from the front of `b` to the back of `a` until the pair is
    left-weighted. The product a*b is unchanged.
    """
    a = list(a)
    b = list(b)
    while True:
        movable = _starting(tuple(b)) - _finishing(tuple(a))
        if not movable:
            return tuple(a), tuple(b)
        i = min(movable)
        ## a <- a * s_i swaps the values i and i+1 in a
        x, y = a.index(i), a.index(i + 1)
        a[x], a[y] = i + 1, i
        ## b <- s_i * b swaps the entries at i and i+1 in b
        b[i - 1], b[i] = b[i], b[i - 1]


def _normalize(n, inf, images):
    """
    Left-weight a sequence of simple factors and pull Δ factors out to the front.
    :return: (inf, tuple of images)
    """
    factors = list(images)
    changed = True
    while changed:
        changed = False
        for k in range(len(factors) - 1):
            pair = _left_weight(factors[k], factors[k + 1])
            if pair != (factors[k], factors[k + 1]):
                factors[k], factors[k + 1] = pair
                changed = True

    delta = _reversal(n)
    identity = _identity(n)
    lead = 0
    while lead < len(factors) and factors[lead] == delta:
        lead += 1
    factors = factors[lead:]
    while factors and factors[-1] == identity:
        factors.pop()
    return inf + lead, tuple(factors)


class SimpleFactor(object):
    """
    A positive permutation braid, held as its permutation.
    """

    __slots__ = ('perm',)

    def __init__(self, perm):
        self.perm = perm if isinstance(perm, Permutation) else Permutation(perm)

    @property
    def strands(self):
        return self.perm.size

    @property
    def crossings(self):
        return self.perm.inversions()

    def word(self):
        return permutation_to_braid(self.perm)

    def is_identity(self):
        return self.perm.is_identity()

    def is_delta(self):
        return self.perm == Permutation.reversal(self.strands)

    def __eq__(self, other):
        return isinstance(other, SimpleFactor) and self.perm == other.perm

    def __hash__(self):
        return hash(('SimpleFactor', self.perm.image))

    def __repr__(self):
        return 'SimpleFactor({})'.format(list(self.perm.image))

    def __str__(self):
        return str(self.perm)


def delta(n):
    if n < 1:
        raise GarsideError('`n` must be at least 1, got {}'.format(n))
    return SimpleFactor(_reversal(n))


def tau(f):
    return SimpleFactor(_tau(f.perm.image))


def complement(f):
    """
    The unique g with f·g = Δ.
    """
    return SimpleFactor(_right_complement(f.perm.image))


def left_complement(f):
    """
    The unique h with h·f = Δ.
    """
    return SimpleFactor(_left_complement(f.perm.image))


class NormalForm(object):
    """
    Left-canonical form Δ^inf · A_1 ⋯ A_k with left-weighted simple factors, none
    of them trivial or Δ.
    """

    __slots__ = ('strands', 'inf', 'images')

    def __init__(self, strands, inf, factors):
        self.strands = strands
        self.inf = inf
        self.images = tuple(f.perm.image if isinstance(f, SimpleFactor) else tuple(f)
                            for f in factors)

    @property
    def factors(self):
        return tuple(SimpleFactor(image) for image in self.images)

    @property
    def canonical_length(self):
        return len(self.images)

    @property
    def sup(self):
        return self.inf + len(self.images)

    def is_left_weighted(self):
        delta_image = _reversal(self.strands)
        identity = _identity(self.strands)
        if any(image in (delta_image, identity) for image in self.images):
            return False
        return all(_starting(b) <= _finishing(a) for a, b in zip(self.images, self.images[1:]))

    def to_braid_word(self):
        delta_word = permutation_to_braid(Permutation.reversal(self.strands))
        word = BraidWord(self.strands)
        for _ in range(abs(self.inf)):
            word = word + (delta_word if self.inf > 0 else delta_word.inverse())
        for image in self.images:
            word = word + permutation_to_braid(Permutation(image))
        return word

    def sort_key(self):
        return (self.inf, self.images)

    def to_json(self):
        return {'n': self.strands,
                'inf': self.inf,
                'factors': [list(image) for image in self.images]}

    @classmethod
    def from_json(cls, value):
        nf = cls(value['n'], value['inf'], (tuple(image) for image in value['factors']))
        if not nf.is_left_weighted():
            raise GarsideError('Not a left-canonical form: {}'.format(value))
        return nf

    def __eq__(self, other):
        return (isinstance(other, NormalForm)
                and (self.strands, self.inf, self.images) == (other.strands, other.inf, other.images))

    def __hash__(self):
        return hash((self.strands, self.inf, self.images))

    def __repr__(self):
        return 'NormalForm({}, {}, {})'.format(self.strands, self.inf, [list(i) for i in self.images])

    def __str__(self):
        return 'inf={} sup={} factors=[{}]'.format(
            self.inf,
            self.sup,
            ', '.join(str(Permutation(image)) for image in self.images))


def _from_parts(n, inf, images):
    inf, images = _normalize(n, inf, images)
    return NormalForm(n, inf, images)


def normal_form(w):
    """
    Left-canonical form of `w`. An inverse letter is rewritten as Δ^-1 times the
    left complement of the generator, with Δ^-1 pushed to the front through τ.
    :param w: BraidWord
    :return: NormalForm
    """
    n = w.strands
    inf = 0
    factors = []
    for k in w.letters:
        i = abs(k)
        if k > 0:
            factors.append(_generator(n, i))
        else:
            inf -= 1
            factors = [_tau(f) for f in factors]
            factors.append(_left_complement(_generator(n, i)))
        inf, images = _normalize(n, inf, factors)
        factors = list(images)
    return NormalForm(n, inf, factors)


def equal_in_group(a, b):
    if a.strands != b.strands:
        raise GarsideError('Cannot compare braids on {} and {} strands'.format(a.strands, b.strands))
    return normal_form(a) == normal_form(b)


def _simple_word(image):
    return permutation_to_braid(Permutation(image))


def conjugate_by_simple(nf, s):
    """
    s^-1 · nf · s, renormalized.
    :param nf: NormalForm
    :param s: SimpleFactor or image tuple
    """
    image = s.perm.image if isinstance(s, SimpleFactor) else tuple(s)
    head = _tau_power(_left_complement(image), nf.inf)
    return _from_parts(nf.strands, nf.inf - 1, (head,) + nf.images + (image,))


def _cycle(nf):
    if not nf.images:
        return nf, None
    first = _tau_power(nf.images[0], nf.inf)
    return _from_parts(nf.strands, nf.inf, nf.images[1:] + (first,)), _simple_word(first)


def _decycle(nf):
    if not nf.images:
        return nf, None
    last = nf.images[-1]
    head = _tau_power(last, nf.inf)
    return _from_parts(nf.strands, nf.inf, (head,) + nf.images[:-1]), _simple_word(last).inverse()


def cycling(nf):
    return _cycle(nf)[0]


def decycling(nf):
    return _decycle(nf)[0]


class SummitCertificate(object):
    """
    `conjugator`^-1 · original · `conjugator` equals `representative`.
    """

    __slots__ = ('representative', 'conjugator')

    def __init__(self, representative, conjugator):
        self.representative = representative
        self.conjugator = conjugator

    @property
    def summit_inf(self):
        return self.representative.inf

    @property
    def summit_sup(self):
        return self.representative.sup

    def __repr__(self):
        return 'SummitCertificate({!r}, {!r})'.format(self.representative, self.conjugator)


def _iterate_to_extreme(nf, conjugator, move, improved):
    seen = {nf}
    while True:
        moved, step = move(nf)
        if step is None:
            return nf, conjugator
        if improved(moved, nf):
            seen = set()
        elif moved in seen:
            return nf, conjugator
        conjugator = conjugator + step
        nf = moved
        seen.add(nf)


def summit_element(w):
    """
    Cycle until inf stops rising, then decycle until sup stops falling.
    :param w: BraidWord
    :return: SummitCertificate
    """
    nf = normal_form(w)
    conjugator = BraidWord(w.strands)
    nf, conjugator = _iterate_to_extreme(nf, conjugator, _cycle, lambda new, old: new.inf > old.inf)
    nf, conjugator = _iterate_to_extreme(nf, conjugator, _decycle, lambda new, old: new.sup < old.sup)
    return SummitCertificate(nf, conjugator)


@functools.lru_cache(maxsize=None)
def _simple_conjugators(n):
    """
    Every nontrivial simple element on n strands, by crossing count then image.
    """
    identity = _identity(n)
    images = [image for image in itertools.permutations(range(1, n + 1)) if image != identity]
    return tuple(sorted(images, key=lambda image: (Permutation(image).inversions(), image)))


class SummitSet(object):
    """
    The super summit set of a braid, with a conjugator reaching every element.
    `conjugators[nf]`^-1 · original · `conjugators[nf]` equals nf.
    """

    def __init__(self, strands, certificate, conjugators):
        self.strands = strands
        self.certificate = certificate
        self.conjugators = conjugators

    @property
    def inf(self):
        return self.certificate.summit_inf

    @property
    def sup(self):
        return self.certificate.summit_sup

    def __contains__(self, nf):
        return nf in self.conjugators

    def __len__(self):
        return len(self.conjugators)

    def __iter__(self):
        return iter(self.sorted())

    def elements(self):
        return frozenset(self.conjugators)

    def sorted(self):
        return sorted(self.conjugators, key=NormalForm.sort_key)

    def conjugator_to(self, nf):
        return self.conjugators[nf]

    def isdisjoint(self, other):
        return self.elements().isdisjoint(other.elements())

    def to_json(self):
        return [nf.to_json() for nf in self.sorted()]


def summit_set(w, summit_cap=SUMMIT_CAP):
    """
    Breadth-first closure of a summit element under conjugation by simple elements
    which keep (inf, sup).
    :param w: BraidWord
    :param summit_cap: int, largest tolerated set size
    :return: SummitSet
    """
    certificate = summit_element(w)
    start = certificate.representative
    target = (start.inf, start.sup)
    conjugators = collections.OrderedDict([(start, certificate.conjugator)])
    frontier = collections.deque([start])

    with metrics.job_timer('summit_set') as timer:
        timer.tags['n'] = w.strands
        while frontier:
            current = frontier.popleft()
            for image in _simple_conjugators(w.strands):
                candidate = conjugate_by_simple(current, image)
                if (candidate.inf, candidate.sup) != target or candidate in conjugators:
                    continue
                conjugators[candidate] = conjugators[current] + _simple_word(image)
                if len(conjugators) > summit_cap:
                    raise SummitSetCapError(summit_cap, w.strands)
                frontier.append(candidate)
        timer.tags['size'] = len(conjugators)

    LOGGER.debug('Summit set of {} has {} elements with inf={} sup={}'.format(
        w, len(conjugators), start.inf, start.sup))
    return SummitSet(w.strands, certificate, conjugators)


def find_conjugator(a, b, summit_cap=SUMMIT_CAP, summit=None):
    """
    A braid u with u^-1 · a · u = b, or None when a and b are not conjugate.
    :param summit: [optional] precomputed summit_set(a)
    """
    if a.strands != b.strands:
        raise GarsideError('Cannot compare braids on {} and {} strands'.format(a.strands, b.strands))

    target = summit_element(b)
    if summit is None:
        source = summit_element(a)
        if (source.summit_inf, source.summit_sup) != (target.summit_inf, target.summit_sup):
            return None
        summit = summit_set(a, summit_cap=summit_cap)
    elif (summit.inf, summit.sup) != (target.summit_inf, target.summit_sup):
        return None

    if target.representative not in summit:
        return None

    witness = summit.conjugator_to(target.representative) + target.conjugator.inverse()
    if not equal_in_group(witness.inverse() + a + witness, b):
        raise GarsideError('Conjugator {} failed verification for {} and {}'.format(witness, a, b))
    return witness


def are_conjugate(a, b, summit_cap=SUMMIT_CAP):
    return find_conjugator(a, b, summit_cap=summit_cap) is not None
