import itertools
import re

import singer

LOGGER = singer.get_logger()

ENUMERATION_LIMIT = 8

HEADER_RE = re.compile(r'^n=(\d+)$')
LETTER_RE = re.compile(r'^[+-]?\d+$')
CYCLE_RE = re.compile(r'\(([^()]*)\)')


class BraidError(Exception):
    """
    Raise when a braid word or permutation is malformed, or a strand count is out of range.
    """


class BraidParseError(BraidError):
    """
    Raise when braid or permutation text cannot be parsed.
    `position` is the offset of the offending character in `text`.
    """

    def __init__(self, message, text, position):
        super(BraidParseError, self).__init__('{} at position {}: {!r}'.format(message, position, text))
        self.text = text
        self.position = position


class Permutation(object):
    """
    A permutation of the strand positions 1..n. `image[j - 1]` is the endpoint of the
    string beginning at j.

    Products are taken in braid order, so the permutation of the braid `a * b` is
    `Permutation(a) * Permutation(b)`, ie, apply `a` then `b`.
    """

    __slots__ = ('image',)

    def __init__(self, image):
        image = tuple(int(j) for j in image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise BraidError('`image` is not a bijection on 1..{}: {}'.format(len(image), image))
        self.image = image

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def reversal(cls, n):
        return cls(range(n, 0, -1))

    @property
    def size(self):
        return len(self.image)

    def __call__(self, j):
        return self.image[j - 1]

    def __mul__(self, other):
        if self.size != other.size:
            raise BraidError('Cannot compose permutations of sizes {} and {}'.format(self.size, other.size))
        return Permutation(other.image[j - 1] for j in self.image)

    def inverse(self):
        inverse = [0] * self.size
        for j, k in enumerate(self.image, start=1):
            inverse[k - 1] = j
        return Permutation(inverse)

    def inversions(self):
        """
        The number of crossings of the positive permutation braid realizing this permutation.
        """
        image = self.image
        return sum(1
                   for a, b in itertools.combinations(range(len(image)), 2)
                   if image[a] > image[b])

    def cycles(self):
        """
        All cycles including fixed points, each starting at its smallest member,
        ordered by smallest member.
        :return: [tuple(int)]
        """
        seen = set()
        cycles = []
        for start in range(1, self.size + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cycle.append(j)
                seen.add(j)
                j = self(j)
            cycles.append(tuple(cycle))
        return cycles

    def cycle_type(self):
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def is_ncycle(self):
        return len(self.cycles()) == 1

    def is_identity(self):
        return self.image == tuple(range(1, self.size + 1))

    def starting_set(self):
        """
        Generators σ_i which left divide the permutation braid: strings starting at
        positions i and i + 1 cross.
        """
        image = self.image
        return frozenset(i for i in range(1, self.size) if image[i - 1] > image[i])

    def finishing_set(self):
        """
        Generators σ_i which right divide the permutation braid: strings ending at
        positions i and i + 1 cross.
        """
        return self.inverse().starting_set()

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.image == other.image

    def __hash__(self):
        return hash(self.image)

    def __lt__(self, other):
        return (self.size, self.image) < (other.size, other.image)

    def __repr__(self):
        return 'Permutation({})'.format(list(self.image))

    def __str__(self):
        return format_permutation(self)


class BraidWord(object):
    """
    A word in the Artin generators on `strands` strands. Letter k means σ_k for k > 0
    and σ_|k| inverse for k < 0.
    """

    __slots__ = ('strands', 'letters')

    def __init__(self, strands, letters=()):
        strands = int(strands)
        letters = tuple(int(k) for k in letters)
        if strands < 1:
            raise BraidError('`strands` must be at least 1, got {}'.format(strands))
        for k in letters:
            if k == 0 or abs(k) > strands - 1:
                raise BraidError('Letter {} is out of range for {} strands'.format(k, strands))
        self.strands = strands
        self.letters = letters

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other):
        if self.strands != other.strands:
            raise BraidError('Cannot concatenate braids on {} and {} strands'.format(self.strands, other.strands))
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self):
        return BraidWord(self.strands, (-k for k in reversed(self.letters)))

    def reverse(self):
        return BraidWord(self.strands, reversed(self.letters))

    def is_positive(self):
        return all(k > 0 for k in self.letters)

    def generators_used(self):
        return frozenset(abs(k) for k in self.letters)

    def __eq__(self, other):
        return (isinstance(other, BraidWord)
                and self.strands == other.strands
                and self.letters == other.letters)

    def __hash__(self):
        return hash((self.strands, self.letters))

    def __repr__(self):
        return 'BraidWord({}, {})'.format(self.strands, list(self.letters))

    def __str__(self):
        return format_braid_word(self)


def staircase(n):
    """
    σ1σ2⋯σ_{n-1}, whose closure is the unknot.
    """
    return BraidWord(n, range(1, n))


def word_to_permutation(w):
    ## at[p - 1] is the label (start position) of the string currently at position p
    at = list(range(1, w.strands + 1))
    for k in w.letters:
        i = abs(k)
        at[i - 1], at[i] = at[i], at[i - 1]

    image = [0] * w.strands
    for position, label in enumerate(at, start=1):
        image[label - 1] = position
    return Permutation(image)


def permutation_to_braid(p):
    """
    The canonical positive permutation braid realizing `p`: the lexicographically
    least reduced word, built by repeatedly emitting σ_i for the smallest i whose
    strings cross.
    :param p: Permutation
    :return: BraidWord with `p.inversions()` letters
    """
    image = list(p.image)
    letters = []
    while True:
        for i in range(1, len(image)):
            if image[i - 1] > image[i]:
                letters.append(i)
                image[i - 1], image[i] = image[i], image[i - 1]
                break
        else:
            return BraidWord(p.size, letters)


def is_permutation_braid(w):
    if not w.is_positive():
        return False
    return len(w) == word_to_permutation(w).inversions()


def writhe(w):
    return sum(1 if k > 0 else -1 for k in w.letters)


def closure_components(w):
    """
    Start positions of the strings forming each component of the closure of `w`.
    :return: [tuple(int)], each sorted, ordered by smallest member
    """
    return [tuple(sorted(cycle)) for cycle in word_to_permutation(w).cycles()]


def closure_component_count(w):
    return len(word_to_permutation(w).cycles())


def braid_power(w, m):
    if m < 0:
        raise BraidError('`m` must be nonnegative, got {}'.format(m))
    return BraidWord(w.strands, w.letters * m)


def delete_strands(w, keep):
    """
    Follow the strings starting at `keep` and discard every crossing that involves any
    other string. Kept strands are renumbered order-preservingly.
    :param w: BraidWord
    :param keep: iterable of start positions
    :return: BraidWord on len(keep) strands
    """
    keep = frozenset(keep)
    if not keep:
        raise BraidError('`keep` must name at least one strand')
    if not keep <= frozenset(range(1, w.strands + 1)):
        raise BraidError('`keep` {} is out of range for {} strands'.format(sorted(keep), w.strands))

    at = list(range(1, w.strands + 1))
    letters = []
    for k in w.letters:
        i = abs(k)
        left, right = at[i - 1], at[i]
        if left in keep and right in keep:
            rank = sum(1 for label in at[:i - 1] if label in keep)
            letters.append(rank + 1 if k > 0 else -(rank + 1))
        at[i - 1], at[i] = right, left

    return BraidWord(len(keep), letters)


def linking_numbers(w):
    """
    Linking number of every pair of components of the closure of `w`: half the signed
    count of crossings between their strings.
    :return: {(i, j): int} with i < j indexing `closure_components(w)`
    """
    components = closure_components(w)
    owner = {start: index for index, component in enumerate(components) for start in component}
    totals = dict.fromkeys(itertools.combinations(range(len(components)), 2), 0)

    at = list(range(1, w.strands + 1))
    for k in w.letters:
        i = abs(k)
        a, b = sorted((owner[at[i - 1]], owner[at[i]]))
        if a != b:
            totals[(a, b)] += 1 if k > 0 else -1
        at[i - 1], at[i] = at[i], at[i - 1]

    return {pair: total // 2 for pair, total in totals.items()}


def enumerate_ncycle_braids(n, max_n=ENUMERATION_LIMIT):
    """
    Every positive permutation braid on `n` strands whose permutation is an n-cycle.
    :param n: int
    :param max_n: int, upper bound on `n`
    :return: [(Permutation, BraidWord, int)] sorted by (crossings, image)
    """
    if n < 2 or n > max_n:
        raise BraidError('`n` must be between 2 and {}, got {}'.format(max_n, n))

    entries = []
    for rest in itertools.permutations(range(2, n + 1)):
        cycle = (1,) + rest
        image = [0] * n
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            image[a - 1] = b
        perm = Permutation(image)
        word = permutation_to_braid(perm)
        entries.append((perm, word, len(word)))

    entries.sort(key=lambda entry: (entry[2], entry[0].image))
    LOGGER.debug('Enumerated {} n-cycle braids on {} strands'.format(len(entries), n))
    return entries


def _tokens(text):
    return [(m.start(), m.group()) for m in re.finditer(r'\S+', text)]


def parse_braid_word(text, strands=None):
    """
    Parse `n=<int> k1 k2 ...`. The header is optional; without it (and without
    `strands`) the strand count is one more than the largest generator index.
    """
    tokens = _tokens(text)
    header = None
    if tokens:
        match = HEADER_RE.match(tokens[0][1])
        if match:
            header = int(match.group(1))
            if header < 1:
                raise BraidParseError('Strand count must be at least 1', text, tokens[0][0])
            tokens = tokens[1:]

    if header is not None and strands is not None and header != strands:
        raise BraidParseError('Header n={} disagrees with {} strands'.format(header, strands), text, 0)
    n = header if header is not None else strands

    letters = []
    for position, token in tokens:
        if not LETTER_RE.match(token):
            raise BraidParseError('Expected a nonzero integer, got {!r}'.format(token), text, position)
        k = int(token)
        if k == 0:
            raise BraidParseError('Letter 0 is not a generator', text, position)
        if n is not None and abs(k) > n - 1:
            raise BraidParseError('Letter {} is out of range for {} strands'.format(k, n), text, position)
        letters.append(k)

    if n is None:
        n = max([abs(k) for k in letters], default=0) + 1
    return BraidWord(n, letters)


def format_braid_word(w, header=True):
    parts = ['n={}'.format(w.strands)] if header else []
    parts.extend(str(k) for k in w.letters)
    return ' '.join(parts)


def _parse_cycles(text, size):
    covered = 0
    cycles = []
    for match in CYCLE_RE.finditer(text):
        gap = text[covered:match.start()]
        if gap.strip():
            raise BraidParseError('Unexpected text outside a cycle', text, covered + len(gap) - len(gap.lstrip()))
        covered = match.end()

        body = match.group(1)
        offset = match.start(1)
        if re.search(r'[\s,]', body.strip()):
            entries = [(offset + m.start(), m.group()) for m in re.finditer(r'[^\s,]+', body)]
        else:
            entries = [(offset + m.start(), m.group()) for m in re.finditer(r'\S', body)]

        cycle = []
        for position, entry in entries:
            if not entry.isdigit() or int(entry) < 1:
                raise BraidParseError('Expected a positive integer, got {!r}'.format(entry), text, position)
            cycle.append((position, int(entry)))
        cycles.append(cycle)

    tail = text[covered:]
    if tail.strip():
        raise BraidParseError('Unexpected text outside a cycle', text, covered + len(tail) - len(tail.lstrip()))

    seen = set()
    largest = 0
    for cycle in cycles:
        for position, j in cycle:
            if j in seen:
                raise BraidParseError('{} appears twice'.format(j), text, position)
            seen.add(j)
            largest = max(largest, j)

    if size is None:
        if largest == 0:
            raise BraidParseError('Strand count is required for the identity', text, 0)
        size = largest
    elif largest > size:
        raise BraidParseError('Cycle entry {} exceeds {} strands'.format(largest, size), text, 0)

    image = list(range(1, size + 1))
    for cycle in cycles:
        points = [j for _, j in cycle]
        for a, b in zip(points, points[1:] + points[:1]):
            image[a - 1] = b
    return Permutation(image)


def parse_permutation(text, size=None):
    """
    Parse cycle notation ("(1423)", "(1 4 2 3)", "(12)(34)", "()") or image
    notation ("4 3 1 2").
    """
    if '(' in text or ')' in text:
        return _parse_cycles(text, size)

    tokens = [(m.start(), m.group()) for m in re.finditer(r'[^\s,]+', text)]
    image = []
    for position, token in tokens:
        if not token.isdigit():
            raise BraidParseError('Expected a positive integer, got {!r}'.format(token), text, position)
        image.append(int(token))

    if not image:
        if size is None:
            raise BraidParseError('Empty permutation', text, 0)
        return Permutation.identity(size)
    if size is not None and len(image) != size:
        raise BraidParseError('Expected {} images, got {}'.format(size, len(image)), text, 0)
    try:
        return Permutation(image)
    except BraidError as e:
        raise BraidParseError(str(e), text, 0)


def format_permutation(p):
    """
    Cycle notation without fixed points. Entries are unseparated for n <= 9, as in
    "(1423)", and space separated otherwise.
    """
    separator = '' if p.size <= 9 else ' '
    cycles = [c for c in p.cycles() if len(c) > 1]
    if not cycles:
        return '()'
    return ''.join('(' + separator.join(str(j) for j in c) + ')' for c in cycles)
