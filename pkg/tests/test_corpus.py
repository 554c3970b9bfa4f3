import os
import tempfile
import unittest

from forumlib.corpus import *
from forumlib.engine import SearchConfig
from forumlib.proofs import GR, GEN_CUT, CUT_LINEAR, check
from forumlib.sequent import format_sequent
from forumlib.syntax import category, free_vars


def texts(generator, count):
    return [format_sequent(s) for s in generator.sequents(count)]


class TestGenerator(unittest.TestCase):

    def test_determinism(self):
        self.assertEqual(texts(CorpusGenerator(seed=1), 10), texts(CorpusGenerator(seed=1), 10))
        self.assertNotEqual(texts(CorpusGenerator(seed=1), 10), texts(CorpusGenerator(seed=2), 10))

    def test_atoms(self):
        generator = CorpusGenerator(seed=4, atoms=2)
        for s in generator.sequents(20):
            self.assertTrue(all(x.pred in ('a', 'b') for x in s.lam))
        with self.assertRaises(ValueError):
            CorpusGenerator(atoms=0)
        with self.assertRaises(ValueError):
            CorpusGenerator(atoms=7)

    def test_ground(self):
        for s in CorpusGenerator(seed=8).sequents(20):
            self.assertEqual(set(), s.free_vars())

    def test_formula(self):
        f = CorpusGenerator(seed=2).formula(7)
        allowed = category.constants | category.binary | category.unary | {category.ATOM}
        self.assertIn(f.category, allowed)

    def test_first_order(self):
        generator = CorpusGenerator(seed=4, first_order=True)
        sequents = generator.sequents(30)
        for s in sequents:
            self.assertEqual(set(), s.free_vars())
            self.assertTrue(all(x.arity == 1 for x in s.lam))
        self.assertTrue(any(g.binder for s in sequents for g in s.gamma + s.psi))
        f = generator.formula(8)
        self.assertTrue(all(v.role in (category.EIGEN, category.META) for v in free_vars(f)))

    def test_provable(self):
        generator = CorpusGenerator(seed=6, depth=2, cfg=SearchConfig(max_gl_depth=4))
        s, proof = generator.provable(require_gamma=True)
        self.assertTrue(s.gamma)
        self.assertTrue(check(proof))


class TestCutProofs(unittest.TestCase):

    def setUp(self):
        self.generator = CorpusGenerator(seed=5, depth=2, cfg=SearchConfig(max_gl_depth=4))

    def test_kinds(self):
        self.assertEqual(CUT_LINEAR, self.generator.cut_proof('linear').rule)
        for copies in (0, 1, 2):
            p = self.generator.cut_proof('classical', copies)
            self.assertEqual(GEN_CUT, p.rule)
            self.assertEqual(copies, p.payload['copies'])
            self.assertTrue(check(p))
        nested = self.generator.cut_proof('nested')
        self.assertEqual(GEN_CUT, nested.rule)
        self.assertEqual(CUT_LINEAR, nested.children[1].rule)

    def test_focused_proof(self):
        p = self.generator.focused_proof()
        self.assertEqual(GR, p.rule)
        self.assertTrue(check(p))
        q = self.generator.focused_proof(classical=True)
        self.assertTrue(check(q))
        self.assertEqual((), q.conclusion.gamma)
        self.assertEqual((), q.conclusion.lam)

    def test_left_premise_is_not_an_identity(self):
        for kind in CUT_KINDS:
            p = self.generator.cut_proof(kind)
            self.assertTrue(check(p))
            left = p.children[0]
            self.assertEqual(GR, left.rule)
            self.assertEqual(1, len(left.children))
            self.assertIsNone(left.children[0].conclusion.focus)

    def test_unknown_kind(self):
        with self.assertRaises(ValueError):
            self.generator.cut_proof('additive')


class TestFiles(unittest.TestCase):

    def test_write_read(self):
        sequents = CorpusGenerator(seed=3).sequents(5)
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'corpus')
            names = write_corpus(path, sequents)
            self.assertEqual(['0000.seq', '0001.seq', '0002.seq', '0003.seq', '0004.seq'],
                             [os.path.basename(n) for n in names])
            with open(os.path.join(path, 'notes.txt'), 'w') as f:
                f.write('not a sequent')
            rv = read_corpus(path)
        self.assertEqual(5, len(rv))
        self.assertEqual(sequents, [s for _, s in rv])


# main
if __name__ == '__main__':
    unittest.main()
