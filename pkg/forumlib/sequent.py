"""G-Forum sequents and the multiset algebra of their contexts.

A sequent has a classical program `psi` and a linear program `gamma`
(both multisets of goals), an atomic context `lam` (a multiset of atoms)
and at most one goal in focus on the right. A sequent without a focus
is a state sequent.

Contexts are tuples; a member is identified by its position in the
tuple that holds it. Multisets are compared up to α-equivalence of
their members.

"""

import json
import logging
from collections import Counter, namedtuple

from forumlib.errors import MultisetError, SequentFormatError
from forumlib.normalize import to_goal
from forumlib.syntax.parser import Parser
from forumlib.syntax.struct import alpha_key, free_vars
from forumlib.syntax.visitors import print_goal, print_formula

__all__ = [
    'Contexts',
    'GSequent',
    'mset_union',
    'mset_diff',
    'mset_member',
    'mset_count',
    'mset_eq',
    'seq_eq',
    'parse_sequent',
    'format_sequent',
    'read_sequent',
    'write_sequent',
    'sequent_to_record',
    'sequent_from_record',
]

logger = logging.getLogger(__name__)

Contexts = namedtuple('Contexts', 'psi gamma lam')


class GSequent(object):
    """A sequent `[psi; gamma] |- [lam; focus]`."""

    __slots__ = ('psi', 'gamma', 'lam', 'focus')

    def __init__(self, psi=(), gamma=(), lam=(), focus=None):
        self.psi = tuple(psi)
        self.gamma = tuple(gamma)
        self.lam = tuple(lam)
        self.focus = focus

    @property
    def contexts(self):
        return Contexts(self.psi, self.gamma, self.lam)

    @property
    def is_state(self):
        return self.focus is None

    def replace(self, **kwargs):
        """Return a copy with the given components replaced."""
        values = {'psi': self.psi, 'gamma': self.gamma, 'lam': self.lam, 'focus': self.focus}
        values.update(kwargs)
        return GSequent(**values)

    def free_vars(self):
        rv = set()
        for item in self.psi + self.gamma + self.lam:
            rv |= free_vars(item)
        if self.focus is not None:
            rv |= free_vars(self.focus)
        return rv

    def __eq__(self, other):
        return isinstance(other, GSequent) and seq_eq(self, other)

    def __hash__(self):
        focus = None if self.focus is None else alpha_key(self.focus)
        return hash((_frozen(self.psi), _frozen(self.gamma), _frozen(self.lam), focus))

    def __str__(self):
        def show(items, fn):
            return ', '.join(fn(x) for x in items)
        text = '[{0}; {1}] |- [{2}'.format(show(self.psi, print_goal), show(self.gamma, print_goal),
                                           show(self.lam, print_formula))
        if self.focus is not None:
            text += '; {0}'.format(print_goal(self.focus))
        return text + ']'

    def __repr__(self):
        return '<GSequent: {0}>'.format(str(self))


def _frozen(items):
    return frozenset(Counter(alpha_key(x) for x in items).items())


# multisets

def mset_union(*parts):
    """Return the multiset union of the given tuples."""
    rv = ()
    for p in parts:
        rv += tuple(p)
    return rv


def mset_diff(items, removed):
    """Return `items` without one occurrence of each element of `removed`.

    Raises MultisetError naming the first element of `removed` that has
    no (remaining) α-equivalent occurrence in `items`.

    """
    rest = list(items)
    for x in removed:
        k = alpha_key(x)
        for i, y in enumerate(rest):
            if alpha_key(y) == k:
                del rest[i]
                break
        else:
            raise MultisetError(x)
    return tuple(rest)


def mset_member(x, items):
    k = alpha_key(x)
    return any(alpha_key(y) == k for y in items)


def mset_count(x, items):
    k = alpha_key(x)
    return sum(1 for y in items if alpha_key(y) == k)


def mset_eq(a, b):
    return Counter(alpha_key(x) for x in a) == Counter(alpha_key(x) for x in b)


def seq_eq(s1, s2):
    """Return True if the sequents agree component-wise as multisets."""
    if (s1.focus is None) != (s2.focus is None):
        return False
    if s1.focus is not None and alpha_key(s1.focus) != alpha_key(s2.focus):
        return False
    return mset_eq(s1.psi, s2.psi) and mset_eq(s1.gamma, s2.gamma) and mset_eq(s1.lam, s2.lam)


# text and record formats

_keys = ('psi', 'gamma', 'lambda', 'focus')


def _read_goal(text, parser):
    return to_goal(parser.formula(text))


def parse_sequent(text, parser=None):
    """Parse a sequent from its text or JSON record form.

    The text form has one `key: formula` entry per line where the key is
    one of `psi`, `gamma`, `lambda` or `focus`. Lines starting with `#`
    and blank lines are ignored.

    """
    parser = parser or Parser()
    stripped = text.lstrip()
    if stripped.startswith('{'):
        try:
            record = json.loads(stripped)
        except ValueError as e:
            raise SequentFormatError('malformed sequent record: {0}'.format(e))
        return sequent_from_record(record, parser)
    entries = {key: [] for key in _keys}
    for number, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        key, sep, value = line.partition(':')
        key = key.strip().lower()
        if not sep or key not in entries:
            raise SequentFormatError('line {0}: expected one of {1} followed by ":"'
                                     .format(number, ', '.join(_keys)))
        entries[key].append(value.strip())
    if len(entries['focus']) > 1:
        raise SequentFormatError('a sequent has at most one focused goal')
    record = {
        'psi': entries['psi'],
        'gamma': entries['gamma'],
        'lambda': entries['lambda'],
        'focus': entries['focus'][0] if entries['focus'] else None,
    }
    return sequent_from_record(record, parser)


def sequent_from_record(record, parser=None):
    """Build a sequent from a record with string entries."""
    parser = parser or Parser()
    if not isinstance(record, dict):
        raise SequentFormatError('sequent record must be an object')
    unknown = set(record) - set(_keys)
    if unknown:
        raise SequentFormatError('unknown sequent fields: {0}'.format(', '.join(sorted(unknown))))
    try:
        psi = [_read_goal(x, parser) for x in record.get('psi', ())]
        gamma = [_read_goal(x, parser) for x in record.get('gamma', ())]
        lam = [parser.atom(x) for x in record.get('lambda', ())]
        focus = record.get('focus')
        focus = None if focus is None else _read_goal(focus, parser)
    except (TypeError, AttributeError) as e:
        raise SequentFormatError('malformed sequent record: {0}'.format(e))
    return GSequent(psi, gamma, lam, focus)


def sequent_to_record(s):
    return {
        'psi': [print_goal(g) for g in s.psi],
        'gamma': [print_goal(g) for g in s.gamma],
        'lambda': [print_formula(a) for a in s.lam],
        'focus': None if s.focus is None else print_goal(s.focus),
    }


def format_sequent(s):
    """Return the text form of sequent `s`."""
    lines = []
    for g in s.psi:
        lines.append('psi: ' + print_goal(g))
    for g in s.gamma:
        lines.append('gamma: ' + print_goal(g))
    for a in s.lam:
        lines.append('lambda: ' + print_formula(a))
    if s.focus is not None:
        lines.append('focus: ' + print_goal(s.focus))
    return '\n'.join(lines) + '\n'


def read_sequent(path, parser=None):
    logger.debug('reading sequent from "{0}"'.format(path))
    try:
        with open(path, encoding='utf-8') as f:
            text = f.read()
    except OSError as e:
        raise SequentFormatError('cannot read "{0}": {1}'.format(path, e))
    try:
        return parse_sequent(text, parser)
    except SequentFormatError as e:
        raise SequentFormatError('{0}: {1}'.format(path, e)) from e


def write_sequent(s, path):
    with open(path, 'w', encoding='utf-8') as f:
        f.write(format_sequent(s))
