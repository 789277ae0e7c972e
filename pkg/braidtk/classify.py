import collections
import functools
import itertools
import types

import arrow
import singer
from singer import metrics

from braidtk.braid_core import (BraidWord, ENUMERATION_LIMIT, enumerate_ncycle_braids,
                                format_braid_word, format_permutation, linking_numbers, staircase,
                                word_to_permutation, writhe)
from braidtk.garside import (SUMMIT_CAP, SimpleFactor, equal_in_group, find_conjugator,
                             left_complement, summit_element, summit_set)
from braidtk.invariants import (InvariantError, alexander_of_closure, burau_char_poly,
                                genus_of_positive_closure, identify_knot, squared_component_knots)

LOGGER = singer.get_logger()

THEOREMS = ('thm1', 'thm2', 'thm3', 'thm4', 'thm6', 'oddpairs')

## Odd exponents tried by the `oddpairs` check
ODD_EXPONENTS = (1, 3, 5)

## Crossing number -> count of n-cycle positive permutation braids
EXPECTED_DISTRIBUTIONS = {
    2: {1: 1},
    3: {2: 2},
    4: {3: 4, 5: 2},
    5: {4: 8, 6: 10, 8: 6},
    6: {5: 16, 7: 32, 9: 44, 11: 22, 13: 6},
    7: {6: 32, 8: 88, 10: 176, 12: 202, 14: 134, 16: 70, 18: 18},
}

## Crossing number -> conjugacy class sizes, largest first
EXPECTED_CLASS_SIZES = {
    2: {1: [1]},
    3: {2: [2]},
    4: {3: [4], 5: [2]},
    5: {4: [8], 6: [10], 8: [6]},
    6: {5: [16], 7: [32], 9: [38, 4, 2], 11: [16, 6], 13: [6]},
}

## The pair of 6-string braids with equal closures which are not conjugate
BETA = BraidWord(6, [1, 3, 5, 2, 4, 1, 3, 2, 1])
GAMMA = BraidWord(6, [2, 4, 3, 5, 2, 4, 1, 3, 2])


class ClassifyError(Exception):
    """
    Raise when a census is requested outside its supported range, or a merge fails
    witness verification.
    """


class UnionFind(object):
    """
    Disjoint sets whose leader is always the smallest member, so class numbering is
    reproducible.
    """

    def __init__(self, members):
        self._leader = dict((m, m) for m in members)
        self._size = dict((m, 1) for m in members)

    def __len__(self):
        return len(set(self.find(m) for m in self._leader))

    def find(self, member):
        path = [member]
        parent = self._leader[member]
        while parent != self._leader[parent]:
            path.append(parent)
            parent = self._leader[parent]
        for m in path:
            self._leader[m] = parent
        return parent

    def union(self, a, b):
        leader_a, leader_b = self.find(a), self.find(b)
        if leader_a == leader_b:
            return leader_a
        leader, other = min(leader_a, leader_b), max(leader_a, leader_b)
        self._leader[other] = leader
        self._size[leader] += self._size[other]
        return leader

    def size(self, member):
        return self._size[self.find(member)]

    def groups(self):
        """
        :return: {leader: [members in ascending order]}
        """
        groups = collections.OrderedDict()
        for m in sorted(self._leader):
            groups.setdefault(self.find(m), []).append(m)
        return groups


class CensusEntry(object):
    """
    One n-cycle positive permutation braid with its conjugacy class and knot. Entries
    handed out by `census` and `classify` are frozen: they are shared between calls.
    """

    __slots__ = ('n', 'permutation', 'word', 'crossings', 'class_id', 'knot', '_frozen')

    def __init__(self, n, permutation, word, crossings, class_id=None, knot=None):
        self.n = n
        self.permutation = permutation
        self.word = word
        self.crossings = crossings
        self.class_id = class_id
        self.knot = knot

    def __setattr__(self, name, value):
        if getattr(self, '_frozen', False):
            raise AttributeError('Cannot set `{}` on frozen {!r}'.format(name, self))
        object.__setattr__(self, name, value)

    def freeze(self):
        self._frozen = True
        return self

    def to_json(self):
        return {'n': self.n,
                'permutation': format_permutation(self.permutation),
                'image': list(self.permutation.image),
                'word': format_braid_word(self.word),
                'crossings': self.crossings,
                'class_id': self.class_id,
                'knot': self.knot.name if self.knot else None}

    def __repr__(self):
        return 'CensusEntry({}, {}, class_id={})'.format(
            format_permutation(self.permutation), self.crossings, self.class_id)


class ConjugacyClass(object):
    """
    A conjugacy class of census braids. `witnesses` maps each member's permutation
    to a verified conjugator from the representative.
    """

    def __init__(self, class_id, crossings, members, knot, char_poly, witnesses):
        self.class_id = class_id
        self.crossings = crossings
        self.members = tuple(members)
        self.knot = knot
        self.char_poly = char_poly
        self.witnesses = types.MappingProxyType(witnesses)

    @property
    def representative(self):
        return self.members[0]

    @property
    def size(self):
        return len(self.members)

    def to_json(self):
        return {'class_id': self.class_id,
                'crossings': self.crossings,
                'size': self.size,
                'representative': self.representative.to_json(),
                'knot': self.knot.name,
                'char_poly': str(self.char_poly),
                'members': [format_permutation(m.permutation) for m in self.members]}


class ClassReport(object):
    """
    The conjugacy classes of n-cycle braids sharing one crossing number.
    """

    def __init__(self, n, crossings, classes):
        self.n = n
        self.crossings = crossings
        self.classes = tuple(classes)

    @property
    def sizes(self):
        return sorted((c.size for c in self.classes), reverse=True)

    @property
    def count(self):
        return sum(c.size for c in self.classes)

    def to_json(self):
        return {'n': self.n,
                'crossings': self.crossings,
                'count': self.count,
                'sizes': self.sizes,
                'classes': [c.to_json() for c in self.classes]}


def _check_range(n, max_n, low=2):
    if n < low or n > max_n:
        raise ClassifyError('`n` must be between {} and {}, got {}'.format(low, max_n, n))


def census_entries(n, max_n=ENUMERATION_LIMIT):
    """
    Census entries without class ids, knots attached.
    """
    _check_range(n, max_n)
    return [CensusEntry(n, perm, word, crossings)
            for perm, word, crossings in enumerate_ncycle_braids(n, max_n=max_n)]


def crossing_distribution(n, max_n=ENUMERATION_LIMIT):
    """
    :return: OrderedDict crossing number -> count
    """
    counts = collections.Counter(e.crossings for e in census_entries(n, max_n=max_n))
    return collections.OrderedDict(sorted(counts.items()))


def _merge_bucket(entries, indices, summit_cap):
    """
    Union-find over one group of entries which share crossings and char poly.
    :return: (UnionFind, {index: conjugator from its leader})
    """
    classes = UnionFind(indices)
    certificates = {i: summit_element(entries[i].word) for i in indices}
    witnesses = {}

    for position, i in enumerate(indices):
        if classes.find(i) != i:
            continue
        witnesses[i] = BraidWord(entries[i].n)
        summits = None
        for j in indices[position + 1:]:
            if classes.find(j) != j:
                continue
            target = certificates[j]
            if (target.summit_inf, target.summit_sup) != (certificates[i].summit_inf, certificates[i].summit_sup):
                continue
            if summits is None:
                summits = summit_set(entries[i].word, summit_cap=summit_cap)
            if target.representative not in summits:
                continue

            witness = summits.conjugator_to(target.representative) + target.conjugator.inverse()
            if not equal_in_group(witness.inverse() + entries[i].word + witness, entries[j].word):
                raise ClassifyError('Conjugator {} failed verification for {} and {}'.format(
                    witness, entries[i], entries[j]))
            classes.union(i, j)
            witnesses[j] = witness
            LOGGER.debug('Merged {} into class of {} with conjugator {}'.format(
                format_permutation(entries[j].permutation),
                format_permutation(entries[i].permutation),
                format_braid_word(witness)))

    return classes, witnesses


@functools.lru_cache(maxsize=8)
def _census(n, max_n, summit_cap):
    entries = census_entries(n, max_n=max_n)
    buckets = collections.OrderedDict()
    for index, entry in enumerate(entries):
        buckets.setdefault(entry.crossings, []).append(index)

    if n >= 7:
        LOGGER.warning('Classes at n={} are reported without reference class sizes'.format(n))

    reports = []
    class_id = 0
    with metrics.job_timer('classify') as timer:
        timer.tags['n'] = n
        with metrics.record_counter('census_braids') as counter:
            for crossings, indices in buckets.items():
                polys = {}
                by_poly = collections.OrderedDict()
                for i in indices:
                    polys[i] = burau_char_poly(entries[i].word)
                    by_poly.setdefault(polys[i], []).append(i)
                    entries[i].knot = identify_knot(entries[i].word)
                    counter.increment()

                leaders = []
                witnesses = {}
                for group in by_poly.values():
                    classes, group_witnesses = _merge_bucket(entries, group, summit_cap)
                    witnesses.update(group_witnesses)
                    leaders.extend(classes.groups().items())

                classes_here = []
                for leader, members in sorted(leaders):
                    class_id += 1
                    for m in members:
                        entries[m].class_id = class_id
                    classes_here.append(ConjugacyClass(
                        class_id,
                        crossings,
                        [entries[m] for m in members],
                        entries[leader].knot,
                        polys[leader],
                        collections.OrderedDict((entries[m].permutation, witnesses[m]) for m in members)))

                report = ClassReport(n, crossings, classes_here)
                LOGGER.info('n={} crossings={}: {} braids in {} classes of sizes {}'.format(
                    n, crossings, report.count, len(classes_here), report.sizes))
                reports.append(report)
        timer.tags['classes'] = class_id

    return tuple(entry.freeze() for entry in entries), tuple(reports)


def classify(n, max_n=ENUMERATION_LIMIT, summit_cap=SUMMIT_CAP):
    """
    Partition the n-cycle positive permutation braids on `n` strands into conjugacy
    classes. Braids are grouped by crossings and Burau characteristic polynomial,
    then merged on summit set membership with a verified conjugator per merge.
    :return: [ClassReport] by crossing number
    """
    _check_range(n, max_n)
    return list(_census(n, max_n, summit_cap)[1])


def census(n, max_n=ENUMERATION_LIMIT, summit_cap=SUMMIT_CAP):
    """
    :return: [CensusEntry] with class ids and knots, sorted by (crossings, image)
    """
    _check_range(n, max_n)
    return list(_census(n, max_n, summit_cap)[0])


def census_mismatches(n, reports):
    """
    Compare reports with the reference counts known for `n`.
    :return: [String, ...], empty when everything matches or nothing is known
    """
    mismatches = []
    distribution = EXPECTED_DISTRIBUTIONS.get(n)
    if distribution is not None:
        found = {r.crossings: r.count for r in reports}
        if found != distribution:
            mismatches.append('Crossing distribution {} differs from {}'.format(found, distribution))

    sizes = EXPECTED_CLASS_SIZES.get(n)
    if sizes is not None:
        found = {r.crossings: r.sizes for r in reports}
        if found != sizes:
            mismatches.append('Class sizes {} differ from {}'.format(found, sizes))
    return mismatches


def unknot_count(n, max_n=ENUMERATION_LIMIT):
    """
    Census braids whose closure is the unknot. Only braids with n - 1 crossings can
    have genus 0, but each is still identified.
    """
    if n < 2:
        raise ClassifyError('`n` must be at least 2, got {}'.format(n))
    count = 0
    for entry in census_entries(n, max_n=max(max_n, n)):
        if entry.crossings == n - 1 and identify_knot(entry.word).tag == 'Unknot':
            count += 1
    return count


def beta_family(n, i):
    """
    σ1⋯σ_{i-1} σ_i³ σ_{i+1}⋯σ_{n-1}, closing to a trefoil.
    """
    if n < 2 or i < 1 or i > n - 1:
        raise ClassifyError('`i` must be between 1 and {}, got {}'.format(n - 1, i))
    return BraidWord(n, list(range(1, i)) + [i, i, i] + list(range(i + 1, n)))


def odd_exponent_pair(p, q, r):
    """
    σ1^p σ2^q σ3^r and σ1^p σ2^r σ3^q in B_4. For odd p, q, r both close to the same
    knot, yet they are conjugate only when q = r.
    :return: (BraidWord, BraidWord)
    """
    for e in (p, q, r):
        if e < 1 or e % 2 == 0:
            raise ClassifyError('Exponents must be positive and odd, got {}'.format((p, q, r)))
    return (BraidWord(4, [1] * p + [2] * q + [3] * r),
            BraidWord(4, [1] * p + [2] * r + [3] * q))


def collapse_to_three_strands(w):
    """
    Image of `w` under the homomorphism B_4 -> B_3 sending σ1 and σ3 to σ1, σ2 to σ2.
    """
    if w.strands != 4:
        raise ClassifyError('Only braids on 4 strands collapse, got {}'.format(w.strands))
    return BraidWord(3, [(2 if abs(k) == 2 else 1) * (1 if k > 0 else -1) for k in w.letters])


def theorem_4_reference(n):
    """
    Δ_n σ1^-1 ⋯ σ_k^-1 with k = floor((n - 1)/2), as the positive permutation braid
    whose product with σ_k⋯σ1 is Δ_n.
    """
    tail = BraidWord(n, range((n - 1) // 2, 0, -1))
    return left_complement(SimpleFactor(word_to_permutation(tail))).word()


class TheoremReport(object):
    """
    Outcome of a computational check of one theorem at one strand count.
    """

    def __init__(self, theorem, n, reference=None):
        self.theorem = theorem
        self.n = n
        self.reference = reference
        self.checked = 0
        self.failures = []
        self.witnesses = []
        self.started_at = arrow.utcnow()
        self.finished_at = None

    @property
    def passed(self):
        return self.finished_at is not None and not self.failures

    def witness(self, subject, conjugator, **extra):
        self.checked += 1
        record = {'subject': subject,
                  'conjugator': format_braid_word(conjugator) if conjugator is not None else None,
                  'at': arrow.utcnow().isoformat()}
        record.update(extra)
        self.witnesses.append(record)

    def fail(self, message):
        LOGGER.warning('{} n={}: {}'.format(self.theorem, self.n, message))
        self.failures.append(message)

    def finish(self):
        self.finished_at = arrow.utcnow()
        return self

    def to_json(self):
        return {'theorem': self.theorem,
                'n': self.n,
                'reference': format_braid_word(self.reference) if self.reference is not None else None,
                'passed': self.passed,
                'checked': self.checked,
                'failures': self.failures,
                'witnesses': self.witnesses,
                'started_at': self.started_at.isoformat(),
                'finished_at': self.finished_at.isoformat() if self.finished_at else None}


def _conjugate_to_reference(report, reference, entries, summit_cap):
    summits = summit_set(reference, summit_cap=summit_cap)
    for entry in entries:
        conjugator = find_conjugator(reference, entry.word, summit_cap=summit_cap, summit=summits)
        subject = format_permutation(entry.permutation)
        if conjugator is None:
            report.fail('{} ({}) is not conjugate to {}'.format(
                subject, format_braid_word(entry.word), format_braid_word(reference)))
            report.checked += 1
        else:
            report.witness(subject, conjugator, word=format_braid_word(entry.word))


def _entries_with_knot(n, max_n, crossings, tag, torus=None):
    found = []
    for entry in census_entries(n, max_n=max_n):
        if entry.crossings != crossings:
            continue
        knot = identify_knot(entry.word)
        if knot.tag == tag and knot.torus == torus:
            found.append(entry)
    return found


def _theorem_1(report, n, max_n, summit_cap):
    report.reference = staircase(n)
    entries = _entries_with_knot(n, max_n, n - 1, 'Unknot')
    if len(entries) != 2 ** (n - 2):
        report.fail('Found {} unknot braids, expected {}'.format(len(entries), 2 ** (n - 2)))
    _conjugate_to_reference(report, report.reference, entries, summit_cap)


def _theorem_2(report, n, max_n, summit_cap):
    report.reference = BraidWord(n, [1, 1] + list(range(1, n)))
    entries = _entries_with_knot(n, max_n, n + 1, 'Torus', torus=(2, 3))
    _conjugate_to_reference(report, report.reference, entries, summit_cap)


def _theorem_3(report, n, max_n, summit_cap):
    if n > 5:
        report.fail('One class per crossing number holds only for n <= 5')
        return
    for r in classify(n, max_n=max_n, summit_cap=summit_cap):
        report.checked += 1
        if len(r.classes) != 1:
            report.fail('{} classes at {} crossings'.format(len(r.classes), r.crossings))


def _theorem_4(report, n, max_n, summit_cap):
    report.reference = theorem_4_reference(n)
    k = (n - 1) // 2
    most = n * (n - 1) // 2 - k
    everything = census_entries(n, max_n=max_n)
    entries = [e for e in everything if e.crossings == most]
    if max(e.crossings for e in everything) != most:
        report.fail('Largest crossing number is not {}'.format(most))
    _conjugate_to_reference(report, report.reference, entries, summit_cap)


def _theorem_6(report, n, max_n, summit_cap):
    polys = {i: burau_char_poly(beta_family(n, i)) for i in range(1, n)}
    for i in range(1, n):
        summits = summit_set(beta_family(n, i), summit_cap=summit_cap)
        for k in range(1, n):
            conjugator = find_conjugator(beta_family(n, i), beta_family(n, k),
                                         summit_cap=summit_cap, summit=summits)
            expected = k in (i, n - i)
            subject = 'beta({}) ~ beta({})'.format(i, k)
            if (conjugator is not None) != expected:
                report.fail('{}: found {}, expected {}'.format(subject, conjugator is not None, expected))
                report.checked += 1
            elif conjugator is None and polys[i] == polys[k]:
                report.fail('{}: not conjugate yet char polys agree'.format(subject))
                report.checked += 1
            else:
                report.witness(subject, conjugator, conjugate=expected)


def _odd_pairs(report, n, max_n, summit_cap):
    if n != 4:
        report.fail('Odd exponent pairs are checked on 4 strands only, got {}'.format(n))
        return
    for p, q, r in itertools.product(ODD_EXPONENTS, repeat=3):
        if q >= r:
            continue
        a, b = odd_exponent_pair(p, q, r)
        subject = 'oddpair({},{},{})'.format(p, q, r)
        ## their images in B_3 close to links whose linking numbers tell them apart
        linking = [sorted(linking_numbers(collapse_to_three_strands(w)).values()) for w in (a, b)]

        if alexander_of_closure(a) != alexander_of_closure(b) or \
                genus_of_positive_closure(a) != genus_of_positive_closure(b):
            report.fail('{}: closures have different invariants'.format(subject))
            report.checked += 1
        elif linking[0] == linking[1]:
            report.fail('{}: collapsed closures share linking numbers {}'.format(subject, linking[0]))
            report.checked += 1
        elif find_conjugator(a, b, summit_cap=summit_cap) is not None:
            report.fail('{}: found a conjugator'.format(subject))
            report.checked += 1
        else:
            report.witness(subject, None,
                           conjugate=False,
                           linking=linking,
                           char_polys_differ=burau_char_poly(a) != burau_char_poly(b))


_CHECKS = {
    'thm1': _theorem_1,
    'thm2': _theorem_2,
    'thm3': _theorem_3,
    'thm4': _theorem_4,
    'thm6': _theorem_6,
    'oddpairs': _odd_pairs,
}


def check_theorem(theorem, n, max_n=ENUMERATION_LIMIT, summit_cap=SUMMIT_CAP):
    """
    Check one theorem at one strand count.
    :param theorem: one of THEOREMS
    :return: TheoremReport
    """
    if theorem not in _CHECKS:
        raise ClassifyError('Unknown theorem `{}`, expected one of {}'.format(theorem, ', '.join(THEOREMS)))
    _check_range(n, max_n)

    report = TheoremReport(theorem, n)
    with metrics.job_timer('verify') as timer:
        timer.tags['theorem'] = theorem
        timer.tags['n'] = n
        _CHECKS[theorem](report, n, max_n, summit_cap)
    report.finish()
    LOGGER.info('{} n={}: {} after {} checks'.format(
        theorem, n, 'PASS' if report.passed else 'FAIL', report.checked))
    return report


def verify_theorem_1(n, **kwargs):
    return check_theorem('thm1', n, **kwargs).passed


def verify_theorem_2(n, **kwargs):
    return check_theorem('thm2', n, **kwargs).passed


def verify_theorem_3(n, **kwargs):
    return check_theorem('thm3', n, **kwargs).passed


def verify_theorem_4(n, **kwargs):
    return check_theorem('thm4', n, **kwargs).passed


def verify_theorem_6(n, **kwargs):
    return check_theorem('thm6', n, **kwargs).passed


def verify_odd_pairs(n=4, **kwargs):
    return check_theorem('oddpairs', n, **kwargs).passed


def _braid_summary(w):
    summary = {'word': format_braid_word(w),
               'writhe': writhe(w),
               'char_poly': str(burau_char_poly(w))}
    try:
        summary['knot'] = identify_knot(w).name
        summary['squared_components'] = [
            {'strands': list(component), 'knot': knot.name}
            for component, knot in squared_component_knots(w)]
    except InvariantError:
        summary['knot'] = None
    return summary


def compare_braids(a, b, summit_cap=SUMMIT_CAP):
    """
    Decide conjugacy of `a` and `b` and collect the evidence either way.
    :return: dict, `conjugate` holds the answer
    """
    conjugator = find_conjugator(a, b, summit_cap=summit_cap)
    report = {'a': _braid_summary(a), 'b': _braid_summary(b), 'conjugate': conjugator is not None}
    if conjugator is not None:
        report['conjugator'] = format_braid_word(conjugator)
        return report

    summits_a = summit_set(a, summit_cap=summit_cap)
    summits_b = summit_set(b, summit_cap=summit_cap)
    report['summit'] = {'a': [summits_a.inf, summits_a.sup, len(summits_a)],
                        'b': [summits_b.inf, summits_b.sup, len(summits_b)]}
    report['summit_sets_disjoint'] = summits_a.isdisjoint(summits_b)
    report['char_polys_differ'] = report['a']['char_poly'] != report['b']['char_poly']
    squares_a = report['a'].get('squared_components')
    squares_b = report['b'].get('squared_components')
    if squares_a is not None and squares_b is not None:
        report['squared_components_differ'] = (sorted(c['knot'] for c in squares_a)
                                               != sorted(c['knot'] for c in squares_b))
    return report


def nonconjugate_pair_demo(summit_cap=SUMMIT_CAP):
    """
    Two 6-string braids closing to the (2,5) torus knot which are not conjugate:
    the closures of their squares have components of different knot types.
    :return: dict with `passed`
    """
    report = compare_braids(BETA, GAMMA, summit_cap=summit_cap)
    for key, word in (('a', BETA), ('b', GAMMA)):
        perm = word_to_permutation(word)
        report[key]['permutation'] = format_permutation(perm)
        report[key]['inverse_permutation'] = format_permutation(perm.inverse())

    squares = {key: sorted(c['knot'] for c in report[key]['squared_components']) for key in ('a', 'b')}
    report['passed'] = (not report['conjugate']
                        and report['a']['knot'] == 'Torus(2,5)'
                        and report['b']['knot'] == 'Torus(2,5)'
                        and squares['a'] == ['Torus(2,3)', 'Torus(2,3)']
                        and squares['b'] == ['Unknot', 'Unknot']
                        and report['summit_sets_disjoint']
                        and report['char_polys_differ'])
    return report
