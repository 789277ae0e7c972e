import random

import singer
from singer import metrics

from braidtk.braid_core import BraidError, BraidWord, format_braid_word, word_to_permutation, writhe
from braidtk.garside import normal_form
from braidtk.invariants import reduced_burau

LOGGER = singer.get_logger()


def random_word(rng, strands, length, positive=False):
    """
    :param rng: random.Random
    """
    if strands < 2:
        return BraidWord(strands)
    letters = []
    for _ in range(length):
        k = rng.randint(1, strands - 1)
        letters.append(k if positive or rng.random() < 0.5 else -k)
    return BraidWord(strands, letters)


def rewrite_sites(w):
    """
    Every place a defining relation applies to `w`.
    :return: [(kind, position)], kind is 'commute' or 'braid'
    """
    letters = w.letters
    sites = []
    for p in range(len(letters) - 1):
        if abs(abs(letters[p]) - abs(letters[p + 1])) >= 2:
            sites.append(('commute', p))
    for p in range(len(letters) - 2):
        a, b, c = letters[p:p + 3]
        if a == c and abs(abs(a) - abs(b)) == 1 and (a > 0) == (b > 0):
            sites.append(('braid', p))
    return sites


def apply_rewrite(w, kind, position):
    letters = list(w.letters)
    if kind == 'commute':
        letters[position], letters[position + 1] = letters[position + 1], letters[position]
    elif kind == 'braid':
        a, b, _ = letters[position:position + 3]
        letters[position:position + 3] = [b, a, b]
    elif kind == 'cancel':
        letters[position:position] = [1, -1] if w.strands > 1 else []
    else:
        raise BraidError('Unknown rewrite `{}`'.format(kind))
    return BraidWord(w.strands, letters)


def random_rewrite(rng, w, allow_cancel=False):
    """
    Apply one randomly chosen relation, or insert a cancelling pair when allowed.
    """
    sites = rewrite_sites(w)
    if allow_cancel:
        sites.append(('cancel', rng.randint(0, len(w))))
    if not sites:
        return w
    kind, position = rng.choice(sites)
    return apply_rewrite(w, kind, position)


def selftest(seed=0, trials=1000, max_strands=6, max_length=12):
    """
    Rewrite random words by braid relations and check that the permutation, writhe,
    normal form and reduced Burau matrix do not change.
    :return: dict with `passed` and the failing words
    """
    rng = random.Random(seed)
    failures = []
    with metrics.job_timer('selftest') as timer:
        timer.tags['seed'] = seed
        with metrics.record_counter('selftest_rewrites') as counter:
            for trial in range(trials):
                w = random_word(rng, rng.randint(2, max_strands), rng.randint(0, max_length))
                rewritten = w
                for _ in range(rng.randint(1, 4)):
                    rewritten = random_rewrite(rng, rewritten)
                counter.increment()

                checks = {
                    'permutation': word_to_permutation(w) == word_to_permutation(rewritten),
                    'writhe': writhe(w) == writhe(rewritten),
                    'normal_form': normal_form(w) == normal_form(rewritten),
                    'burau': reduced_burau(w) == reduced_burau(rewritten),
                }
                broken = sorted(name for name, ok in checks.items() if not ok)
                if broken:
                    LOGGER.warning('Trial {}: {} -> {} changed {}'.format(
                        trial, format_braid_word(w), format_braid_word(rewritten), ', '.join(broken)))
                    failures.append({'trial': trial,
                                     'word': format_braid_word(w),
                                     'rewritten': format_braid_word(rewritten),
                                     'changed': broken})

    return {'seed': seed, 'trials': trials, 'failures': failures, 'passed': not failures}
