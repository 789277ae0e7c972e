import random

from chance import chance

from braidtk.braid_core import BraidWord

CONFIG = {
    'max_n': 8,
    'summit_cap': 100000,
    'output_format': 'text',
    'seed': 0,
    'logging_level': 'DEBUG'
}

## The non-conjugate pair closing to the (2,5) torus knot
BETA = BraidWord(6, [1, 3, 5, 2, 4, 1, 3, 2, 1])
GAMMA = BraidWord(6, [2, 4, 3, 5, 2, 4, 1, 3, 2])

BETA_CHAR_POLY = 't^9*x^5 + t^7*x^4 + t^5*x^3 + t^4*x^2 + t^2*x + 1'
GAMMA_CHAR_POLY = 't^9*x^5 + t^7*x^4 - t^4*x^3 + 2*t^5*x^3 + 2*t^4*x^2 - t^5*x^2 + t^2*x + 1'

## Reduced Burau matrices as {(row, col): {t_exp: coeff}}, zero entries omitted
BETA_BURAU = {
    (0, 2): {1: -1}, (0, 3): {0: 1},
    (1, 1): {2: -1}, (1, 3): {0: 1},
    (2, 1): {3: -1}, (2, 4): {0: 1},
    (3, 0): {4: -1}, (3, 4): {0: 1},
    (4, 0): {5: -1},
}

GAMMA_BURAU = {
    (0, 1): {1: -1}, (0, 2): {0: 1},
    (1, 1): {2: -1}, (1, 2): {1: 1}, (1, 3): {1: -1}, (1, 4): {0: 1},
    (2, 1): {3: -1}, (2, 4): {0: 1},
    (3, 1): {4: -1},
    (4, 0): {4: 1}, (4, 1): {4: -1},
}

## (cycle notation, canonical word, crossings) as printed in the census tables
TABLE_N3 = [
    ('(123)', [2, 1], 2),
    ('(132)', [1, 2], 2),
]

TABLE_N4 = [
    ('(1234)', [3, 2, 1], 3),
    ('(1243)', [2, 1, 3], 3),
    ('(1342)', [1, 3, 2], 3),
    ('(1432)', [1, 2, 3], 3),
    ('(1324)', [2, 1, 3, 2, 1], 5),
    ('(1423)', [1, 2, 1, 3, 2], 5),
]

TABLE_N5_SAMPLE = [
    ('(12345)', [4, 3, 2, 1], 4),
    ('(12435)', [3, 2, 4, 3, 2, 1], 6),
    ('(13425)', [2, 3, 2, 1, 4, 3, 2, 1], 8),
    ('(15324)', [1, 2, 1, 3, 2, 1, 4, 3], 8),
]

## (word, expected knot name)
KNOWN_KNOTS = [
    (BraidWord(5, [1, 2, 3, 4]), 'Unknot'),
    (BraidWord(2, [1, 1, 1]), 'Torus(2,3)'),
    (BraidWord(5, [2, 1, 3, 2, 1, 4]), 'Torus(2,3)'),
    (BraidWord(6, [2, 1, 4, 3, 5, 4, 3, 2, 1]), 'ConnectedSum[Torus(2,3), Torus(2,3)]'),
    (BraidWord(6, [3, 4, 3, 2, 5, 4, 3, 2, 1]), 'Torus(2,5)'),
    (BETA, 'Torus(2,5)'),
    (GAMMA, 'Torus(2,5)'),
    (BraidWord(3, [1, 2] * 4), 'Torus(3,4)'),
    (BraidWord(3, [1, 2] * 5), 'Torus(3,5)'),
]


class RandomBraidStream(object):
    """
    Iterator over `count` random braid words, reproducible through `seed`.
    """

    def __init__(self,
                 count,
                 strands=None,
                 max_length=10,
                 positive=False,
                 seed=None):
        self.count = count
        self.strands = strands
        self.max_length = max_length
        self.positive = positive
        self.produced = 0
        if seed is not None:
            random.seed(seed)

    def generate_word(self):
        strands = self.strands or random.randint(2, 5)
        letters = []
        for _ in range(random.randint(0, self.max_length)):
            k = random.randint(1, strands - 1)
            sign = 1 if self.positive else chance.pickone([1, -1])
            letters.append(sign * k)
        return BraidWord(strands, letters)

    def __iter__(self):
        return self

    def __next__(self):
        if self.produced == self.count:
            raise StopIteration
        self.produced += 1
        return self.generate_word()


def random_conjugator(strands, max_length=4):
    return BraidWord(strands, [chance.pickone([1, -1]) * random.randint(1, strands - 1)
                               for _ in range(random.randint(0, max_length))])
