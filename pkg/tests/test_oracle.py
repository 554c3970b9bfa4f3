import unittest

from forumlib.cli import compare_sequent
from forumlib.corpus import CorpusGenerator
from forumlib.engine import prove, SearchConfig, UNKNOWN as SEARCH_UNKNOWN
from forumlib.errors import ExpansionMismatch, NotForumFragment
from forumlib.normalize import to_goal
from forumlib.oracle import *
from forumlib.oracle import forum
from forumlib.oracle.forum import DEFAULT_STEP_BOUND
from forumlib.proofs import GR, ProofNode, cut_linear_node
from forumlib.sequent import GSequent
from forumlib.syntax import parse_formula, parse_atom, Atom
from forumlib.syntax.visitors import print_formula


def goal(text):
    return to_goal(parse_formula(text))


def proof_of(sequent):
    result = prove(sequent)
    assert result.proved, str(sequent)
    return result.proof


a, b = Atom('a'), Atom('b')


class TestOracle(unittest.TestCase):

    def test_par_in_focus(self):
        s = ForumSequent(focus=parse_formula('a par (b par a)'), lam=[a, a, b])
        result = prove_forum(s)
        self.assertEqual(PROVABLE, result.status)
        self.assertTrue(result.derivation.is_proof())
        self.assertEqual(2, result.derivation.rules()[forum.PAR_L])

    def test_initial(self):
        result = prove_forum(ForumSequent(focus=a, lam=[a]))
        self.assertTrue(result.provable)
        self.assertEqual(forum.I, result.derivation.rule)
        self.assertEqual(1, result.derivation.size())

    def test_not_provable(self):
        self.assertEqual(NOT_PROVABLE, prove_forum(ForumSequent(focus=a, lam=[b])).status)
        self.assertEqual(NOT_PROVABLE, prove_forum(ForumSequent(gamma=[a], lam=[a, a])).status)

    def test_step_bound(self):
        s = ForumSequent(focus=parse_formula('a par (b par a)'), lam=[a, a, b])
        result = prove_forum(s, step_bound=1)
        self.assertEqual(UNKNOWN, result.status)
        self.assertIsNone(result.derivation)

    def test_instantiation(self):
        program = [parse_formula('forall x. p(x)')]
        self.assertTrue(prove_forum(ForumSequent(gamma=program, lam=[parse_atom('p(d)')])).provable)
        # no closed term of the sequent fits, other terms are not tried
        self.assertEqual(UNKNOWN, prove_forum(ForumSequent(gamma=program, lam=[parse_atom('q')])).status)

    def test_uniform(self):
        s = embed_sequent(GSequent((), [goal('a'), goal('a -o b')], (), goal('b')))
        result = ForumOracle()(s)
        self.assertTrue(result.provable)
        self.assertTrue(result.derivation.is_uniform())
        self.assertEqual(1, result.derivation.rules()[forum.LOLLI_L])

    def test_fragment(self):
        with self.assertRaises(NotForumFragment):
            prove_forum(ForumSequent(xi=[parse_formula('a * b')]))

    def test_focus_excludes_right_context(self):
        with self.assertRaises(ValueError):
            ForumSequent(xi=[a], focus=b)


class TestEmbedding(unittest.TestCase):

    def test_embed(self):
        s = embed_sequent(GSequent([goal('a')], [goal('a -o b')], [b], goal('b')))
        self.assertEqual(['a'], [print_formula(f) for f in s.psi])
        self.assertEqual(['a -o b'], [print_formula(f) for f in s.gamma])
        self.assertEqual(['b'], [print_formula(f) for f in s.xi])
        self.assertEqual((b,), s.lam)
        self.assertIsNone(s.focus)

    def test_state(self):
        s = embed_sequent(GSequent((), [goal('a')], [a]))
        self.assertTrue(s.is_state)
        self.assertEqual(s, ForumSequent(gamma=[a], lam=[a]))


class TestMacro(unittest.TestCase):

    def test_gr(self):
        proof = proof_of(GSequent((), [goal('a'), goal('a -o b')], (), goal('b')))
        derivation = expand_macro(proof)
        self.assertEqual(forum.A, derivation.rule)
        self.assertEqual([embed_sequent(proof.children[0].conclusion)], derivation.open_leaves())

    def test_gl(self):
        proof = proof_of(GSequent((), [goal('a'), goal('a -o b')], [b]))
        derivation = expand_macro(proof)
        self.assertEqual(forum.D_L, derivation.rule)
        self.assertEqual(1, len(derivation.open_leaves()))

    def test_expand_proof(self):
        sequents = [
            GSequent((), [goal('a'), goal('a -o b')], (), goal('b')),
            GSequent([goal('a')], [goal('a -o a -o b')], [b]),
            GSequent((), [goal('forall y. p(y)')], (), goal('forall x. p(x)')),
            GSequent((), [goal('a & b')], [b]),
            GSequent((), [goal('top -o a')], [a, b]),
        ]
        for s in sequents:
            derivation = expand_proof(proof_of(s))
            self.assertTrue(derivation.is_proof(), str(s))
            self.assertTrue(derivation.is_uniform(), str(s))
            self.assertEqual(embed_sequent(s), derivation.sequent)

    def test_mismatch(self):
        proof = proof_of(GSequent((), [goal('a'), goal('a -o b')], (), goal('b')))
        with self.assertRaises(ExpansionMismatch):
            expand_macro(ProofNode(GR, proof.conclusion, proof.payload, ()))
        cut = cut_linear_node(proof_of(GSequent((), [goal('a')], (), goal('a'))),
                              proof_of(GSequent((), [goal('a')], [a])))
        with self.assertRaises(ExpansionMismatch):
            expand_macro(cut)


class TestAgreement(unittest.TestCase):

    def test_corpus(self):
        cfg = SearchConfig(max_gl_depth=6)
        corpus = CorpusGenerator(seed=3, atoms=3, depth=3).sequents(200)
        decided = 0
        for s in corpus:
            engine, oracle, problems = compare_sequent(s, cfg, DEFAULT_STEP_BOUND)
            self.assertEqual([], problems, str(s))
            decided += engine != SEARCH_UNKNOWN and oracle != UNKNOWN
        self.assertGreaterEqual(decided, 0.9 * len(corpus))


# main
if __name__ == '__main__':
    unittest.main()
