import json

import singer

from braidtk import classify as census
from braidtk import export, rewrite
from braidtk.braid_core import (closure_component_count, format_braid_word, format_permutation,
                                is_permutation_braid, parse_braid_word, parse_permutation,
                                permutation_to_braid, word_to_permutation, writhe)
from braidtk.garside import normal_form
from braidtk.invariants import (InvariantError, alexander_of_closure, burau_char_poly,
                                genus_of_positive_closure, identify_knot)

LOGGER = singer.get_logger()

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_CAP = 3


class Result(object):
    """
    What a command produced: an exit code, JSON-ready data and its text rendering.
    `markdown` falls back to `text` when a command has no table to offer.
    """

    def __init__(self, code, data, text, markdown=None):
        self.code = code
        self.data = data
        self.text = text
        self.markdown = markdown

    def render(self, output_format):
        if output_format == 'json':
            return json.dumps(self.data, sort_keys=True, indent=2)
        if output_format == 'markdown' and self.markdown is not None:
            return self.markdown.rstrip('\n')
        return self.text


def _lines(pairs):
    return '\n'.join('{}: {}'.format(key, value) for key, value in pairs)


def cmd_perm2braid(args, config):
    perm = parse_permutation(args.permutation, size=args.n)
    word = permutation_to_braid(perm)
    data = {'permutation': format_permutation(perm),
            'image': list(perm.image),
            'word': format_braid_word(word),
            'crossings': len(word)}
    return Result(EXIT_OK, data, format_braid_word(word))


def cmd_braid2perm(args, config):
    word = parse_braid_word(args.word, strands=args.n)
    perm = word_to_permutation(word)
    data = {'word': format_braid_word(word),
            'permutation': format_permutation(perm),
            'image': list(perm.image),
            'is_permutation_braid': is_permutation_braid(word),
            'components': closure_component_count(word)}
    return Result(EXIT_OK, data, format_permutation(perm))


def cmd_nf(args, config):
    word = parse_braid_word(args.word, strands=args.n)
    nf = normal_form(word)
    data = nf.to_json()
    data['sup'] = nf.sup
    data['word'] = format_braid_word(nf.to_braid_word())
    return Result(EXIT_OK, data, str(nf))


def cmd_conj(args, config):
    a = parse_braid_word(args.a, strands=args.n)
    b = parse_braid_word(args.b, strands=args.n)
    report = census.compare_braids(a, b, summit_cap=config['summit_cap'])

    if report['conjugate']:
        text = _lines([('conjugate', 'yes'), ('conjugator', report['conjugator'])])
        return Result(EXIT_OK, report, text)

    pairs = [('conjugate', 'no'),
             ('summit a (inf, sup, size)', tuple(report['summit']['a'])),
             ('summit b (inf, sup, size)', tuple(report['summit']['b'])),
             ('summit sets disjoint', report['summit_sets_disjoint'])]
    if report['char_polys_differ']:
        pairs += [('char poly a', report['a']['char_poly']), ('char poly b', report['b']['char_poly'])]
    if report.get('squared_components_differ'):
        pairs += [('squared components a', ', '.join(c['knot'] for c in report['a']['squared_components'])),
                  ('squared components b', ', '.join(c['knot'] for c in report['b']['squared_components']))]
    return Result(EXIT_FALSE, report, _lines(pairs))


def cmd_invariants(args, config):
    word = parse_braid_word(args.word, strands=args.n)
    perm = word_to_permutation(word)
    data = {'word': format_braid_word(word),
            'writhe': writhe(word),
            'permutation': format_permutation(perm),
            'components': closure_component_count(word),
            'char_poly': str(burau_char_poly(word)),
            'char_poly_terms': burau_char_poly(word).to_json(),
            'genus': None,
            'alexander': None,
            'knot': None}

    if data['components'] == 1:
        alexander = alexander_of_closure(word)
        data['alexander'] = str(alexander)
        data['knot'] = identify_knot(word).name
        try:
            data['genus'] = genus_of_positive_closure(word)
        except InvariantError as e:
            LOGGER.debug('No genus for {}: {}'.format(word, e))

    keys = ['word', 'writhe', 'permutation', 'components', 'genus', 'char_poly', 'alexander', 'knot']
    return Result(EXIT_OK, data, _lines((k, data[k]) for k in keys if data[k] is not None))


def cmd_enumerate(args, config):
    entries = census.census_entries(args.size, max_n=config['max_n'])
    text = '\n'.join('{}\t{}\t{}'.format(format_permutation(e.permutation),
                                         format_braid_word(e.word),
                                         e.crossings)
                     for e in entries)
    return Result(EXIT_OK,
                  [e.to_json() for e in entries],
                  text,
                  markdown=export.census_markdown_table(entries))


def cmd_classify(args, config):
    reports = census.classify(args.size, max_n=config['max_n'], summit_cap=config['summit_cap'])
    entries = census.census(args.size, max_n=config['max_n'], summit_cap=config['summit_cap'])
    mismatches = census.census_mismatches(args.size, reports)

    lines = []
    for report in reports:
        lines.append('crossings {}: {} braids, {} classes'.format(
            report.crossings, report.count, len(report.classes)))
        for c in report.classes:
            lines.append('  class {}: size {}, {}, representative {} ({})'.format(
                c.class_id,
                c.size,
                c.knot.name,
                format_permutation(c.representative.permutation),
                format_braid_word(c.representative.word)))
    lines.extend('MISMATCH: {}'.format(m) for m in mismatches)

    data = {'n': args.size,
            'reports': [r.to_json() for r in reports],
            'entries': [e.to_json() for e in entries],
            'mismatches': mismatches}
    markdown = export.class_markdown_table(reports) + '\n' + export.census_markdown_table(entries)
    return Result(EXIT_FALSE if mismatches else EXIT_OK, data, '\n'.join(lines), markdown=markdown)


def cmd_verify(args, config):
    report = census.check_theorem(args.theorem, args.size,
                                  max_n=config['max_n'],
                                  summit_cap=config['summit_cap'])
    lines = ['{} n={}: {} ({} checked)'.format(
        report.theorem, report.n, 'PASS' if report.passed else 'FAIL', report.checked)]
    lines.extend('  {}'.format(f) for f in report.failures)
    return Result(EXIT_OK if report.passed else EXIT_FALSE, report.to_json(), '\n'.join(lines))


def cmd_demo_nonconj(args, config):
    report = census.nonconjugate_pair_demo(summit_cap=config['summit_cap'])
    pairs = []
    for key, label in (('a', 'beta'), ('b', 'gamma')):
        side = report[key]
        pairs += [(label, side['word']),
                  ('{} permutation (inverse)'.format(label),
                   '{} ({})'.format(side['permutation'], side['inverse_permutation'])),
                  ('{} knot'.format(label), side['knot']),
                  ('{} squared components'.format(label),
                   ', '.join(c['knot'] for c in side['squared_components'])),
                  ('{} char poly'.format(label), side['char_poly'])]
    pairs += [('conjugate', 'yes' if report['conjugate'] else 'no'),
              ('summit sets disjoint', report.get('summit_sets_disjoint')),
              ('result', 'PASS' if report['passed'] else 'FAIL')]
    return Result(EXIT_OK if report['passed'] else EXIT_FALSE, report, _lines(pairs))


def cmd_selftest(args, config):
    report = rewrite.selftest(seed=config['seed'], trials=args.trials)
    lines = ['selftest seed={} trials={}: {}'.format(
        report['seed'], report['trials'], 'PASS' if report['passed'] else 'FAIL')]
    lines.extend('  {} -> {} changed {}'.format(f['word'], f['rewritten'], ', '.join(f['changed']))
                 for f in report['failures'])
    return Result(EXIT_OK if report['passed'] else EXIT_FALSE, report, '\n'.join(lines))


COMMANDS = {
    'perm2braid': cmd_perm2braid,
    'braid2perm': cmd_braid2perm,
    'nf': cmd_nf,
    'conj': cmd_conj,
    'invariants': cmd_invariants,
    'enumerate': cmd_enumerate,
    'classify': cmd_classify,
    'verify': cmd_verify,
    'demo-nonconj': cmd_demo_nonconj,
    'selftest': cmd_selftest,
}
