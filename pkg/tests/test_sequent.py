import json
import os
import tempfile
import unittest

from forumlib.errors import MultisetError, SequentFormatError, FormulaSyntaxError
from forumlib.normalize import to_goal
from forumlib.sequent import *
from forumlib.syntax import parse_formula, Atom, Var, Goal, Clause


def goal(text):
    return to_goal(parse_formula(text))


a, b = Atom('a'), Atom('b')

TEXT = """
# a small sequent
psi: a => b
gamma: a
gamma: a -o b
lambda: b
focus: forall x. p(x)
"""


class TestMultisets(unittest.TestCase):

    def test_union(self):
        self.assertEqual((a, b, a), mset_union((a,), [b], (a,)))

    def test_diff(self):
        self.assertEqual((b, a), mset_diff((a, b, a), [a]))
        self.assertEqual((b,), mset_diff((a, b, a), [a, a]))

    def test_diff_missing(self):
        with self.assertRaises(MultisetError) as cm:
            mset_diff((a, b), [a, a])
        self.assertEqual(a, cm.exception.missing)

    def test_alpha_equivalent_members(self):
        x, y = Var('x'), Var('y')
        g1 = Goal([x], [Clause(head=[Atom('p', [x])])])
        g2 = Goal([y], [Clause(head=[Atom('p', [y])])])
        self.assertTrue(mset_member(g1, [g2]))
        self.assertEqual(2, mset_count(g1, [g2, g1, goal('a')]))
        self.assertEqual((), mset_diff([g2], [g1]))

    def test_eq(self):
        self.assertTrue(mset_eq((a, b, a), (b, a, a)))
        self.assertFalse(mset_eq((a, b), (a, b, b)))


class TestSequent(unittest.TestCase):

    def test_state(self):
        self.assertTrue(GSequent((), (), (a,)).is_state)
        self.assertFalse(GSequent((), (), (), goal('a')).is_state)

    def test_seq_eq(self):
        s1 = GSequent([goal('a')], [goal('b'), goal('a')], [a, b], goal('a -o b'))
        s2 = GSequent([goal('a')], [goal('a'), goal('b')], [b, a], goal('a -o b'))
        self.assertEqual(s1, s2)
        self.assertEqual(hash(s1), hash(s2))
        self.assertNotEqual(s1, s2.replace(focus=None))
        self.assertNotEqual(s1, s2.replace(lam=(a,)))

    def test_contexts(self):
        s = GSequent([goal('a')], [goal('b')], [a], goal('b'))
        psi, gamma, lam = s.contexts
        self.assertEqual((goal('a'),), psi)
        self.assertEqual((a,), s.contexts.lam)
        self.assertEqual(Contexts(psi, gamma, lam), s.contexts)

    def test_replace(self):
        s = GSequent((), [goal('a')], [a])
        t = s.replace(lam=())
        self.assertEqual((a,), s.lam)
        self.assertEqual((), t.lam)
        self.assertEqual(s.gamma, t.gamma)

    def test_free_vars(self):
        x = Var('x')
        s = GSequent((), (), [Atom('p', [x])], goal('forall y. p(y)'))
        self.assertEqual({x}, s.free_vars())

    def test_str(self):
        s = GSequent([goal('a')], [goal('a -o b')], [b], goal('b'))
        self.assertEqual('[a; a -o b] |- [b; b]', str(s))


class TestFormats(unittest.TestCase):

    def test_parse_text(self):
        s = parse_sequent(TEXT)
        self.assertEqual(1, len(s.psi))
        self.assertEqual(2, len(s.gamma))
        self.assertEqual((b,), s.lam)
        self.assertEqual(goal('forall y. p(y)'), s.focus)

    def test_parse_record(self):
        record = {'psi': [], 'gamma': ['a'], 'lambda': ['a'], 'focus': None}
        s = parse_sequent(json.dumps(record))
        self.assertEqual(GSequent((), [goal('a')], [a]), s)

    def test_format_round_trip(self):
        s = parse_sequent(TEXT)
        self.assertEqual(s, parse_sequent(format_sequent(s)))
        self.assertEqual(s, sequent_from_record(sequent_to_record(s)))

    def test_unknown_key(self):
        with self.assertRaises(SequentFormatError):
            parse_sequent('delta: a')
        with self.assertRaises(SequentFormatError):
            parse_sequent('just a formula')

    def test_two_focused_goals(self):
        with self.assertRaises(SequentFormatError):
            parse_sequent('focus: a\nfocus: b')

    def test_bad_records(self):
        with self.assertRaises(SequentFormatError):
            parse_sequent('{"gamma": ["a"], "omega": []}')
        with self.assertRaises(SequentFormatError):
            parse_sequent('{"gamma": ')
        with self.assertRaises(SequentFormatError):
            sequent_from_record(['a'])

    def test_atomic_context_holds_atoms(self):
        with self.assertRaises(FormulaSyntaxError):
            parse_sequent('lambda: a par b')

    def test_read_write(self):
        s = parse_sequent(TEXT)
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'test.seq')
            write_sequent(s, path)
            self.assertEqual(s, read_sequent(path))

    def test_read_missing(self):
        with tempfile.TemporaryDirectory() as tmp:
            with self.assertRaises(SequentFormatError):
                read_sequent(os.path.join(tmp, 'missing.seq'))


# main
if __name__ == '__main__':
    unittest.main()
