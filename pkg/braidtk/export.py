import json

import singer

from braidtk import json_schema
from braidtk.braid_core import format_permutation, parse_braid_word, parse_permutation
from braidtk.classify import CensusEntry
from braidtk.invariants import knot_lookup
from braidtk.json_schema import ARRAY, INTEGER, NULL, OBJECT, STRING

LOGGER = singer.get_logger()

CENSUS_ENTRY_SCHEMA = {
    'type': OBJECT,
    'required': ['n', 'permutation', 'image', 'word', 'crossings'],
    'properties': {
        'n': {'type': INTEGER, 'minimum': 1},
        'permutation': {'type': STRING},
        'image': {'type': ARRAY, 'items': {'type': INTEGER, 'minimum': 1}},
        'word': {'type': STRING},
        'crossings': {'type': INTEGER, 'minimum': 0},
        'class_id': {'type': [NULL, INTEGER]},
        'knot': {'type': [NULL, STRING]}
    },
    'additionalProperties': False
}

MARKDOWN_HEADER = ['| Permutation | Braid word | Number of crossings |',
                   '|---|---|---|']


def census_to_jsonl(entries):
    """
    One JSON object per line, in the order given.
    :param entries: [CensusEntry]
    :return: str
    """
    return ''.join(json.dumps(entry.to_json(), sort_keys=True) + '\n' for entry in entries)


def _knots_by_name():
    return {knot.name: knot for knot in knot_lookup().values()}


def census_from_jsonl(lines):
    """
    Parse census lines back into entries. Each line is validated against
    CENSUS_ENTRY_SCHEMA and the word is checked against the permutation.
    :param lines: iterable of str
    :return: [CensusEntry]
    """
    knots = _knots_by_name()
    entries = []
    for number, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            data = json.loads(line)
        except json.decoder.JSONDecodeError:
            LOGGER.error('Unable to parse JSON on line {}: {}'.format(number, line))
            raise

        json_schema.validate(CENSUS_ENTRY_SCHEMA, data, what='census entry on line {}'.format(number))

        word = parse_braid_word(data['word'], strands=data['n'])
        permutation = parse_permutation(data['permutation'], size=data['n'])
        if list(permutation.image) != data['image']:
            raise json_schema.JSONSchemaError('Line {}: `permutation` {} disagrees with `image` {}'.format(
                number, data['permutation'], data['image']))

        knot = None
        if data.get('knot') == 'Unidentified':
            LOGGER.warning('Line {}: unidentified knot loaded without invariants'.format(number))
        elif data.get('knot') is not None:
            knot = knots.get(data['knot'])
            if knot is None:
                raise json_schema.JSONSchemaError('Line {}: unknown knot `{}`'.format(number, data['knot']))

        entries.append(CensusEntry(data['n'], permutation, word, data['crossings'],
                                   class_id=data.get('class_id'), knot=knot))
    return entries


def format_sigma_word(word):
    """
    σ2σ1 style rendering. Generators from 10 upwards are braced, σ{10}.
    """
    return ''.join('σ{}'.format(k) if k < 10 else 'σ{{{}}}'.format(k) for k in word.letters)


def census_markdown_table(entries):
    """
    Rows ordered by crossings, then cycle notation.
    :param entries: [CensusEntry]
    :return: str
    """
    rows = sorted(entries, key=lambda e: (e.crossings, format_permutation(e.permutation)))
    lines = list(MARKDOWN_HEADER)
    for entry in rows:
        lines.append('| {} | {} | {} |'.format(format_permutation(entry.permutation),
                                              format_sigma_word(entry.word),
                                              entry.crossings))
    return '\n'.join(lines) + '\n'


def class_markdown_table(reports):
    """
    One row per conjugacy class.
    :param reports: [ClassReport]
    """
    lines = ['| Crossings | Class | Size | Knot | Representative |',
             '|---|---|---|---|---|']
    for report in reports:
        for c in report.classes:
            lines.append('| {} | {} | {} | {} | {} |'.format(
                report.crossings,
                c.class_id,
                c.size,
                c.knot.name,
                format_permutation(c.representative.permutation)))
    return '\n'.join(lines) + '\n'
