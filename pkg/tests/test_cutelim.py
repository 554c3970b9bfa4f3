import unittest

from forumlib.corpus import CorpusGenerator, CUT_KINDS
from forumlib.cutelim import *
from forumlib.engine import prove, SearchConfig
from forumlib.errors import CutEliminationError, InvalidProof, NonTermination
from forumlib.normalize import to_goal
from forumlib.proofs import (
    GR, GL, CONTRACT, GEN_CUT, cut_rules, check, cut_rank_proof, cut_linear_node, gen_cut_node, contract_node,
    gl_node, rule_counts
)
from forumlib.sequent import GSequent, seq_eq, mset_eq
from forumlib.syntax import parse_formula, Atom, goal_of_atom


def goal(text):
    return to_goal(parse_formula(text))


def proof_of(sequent):
    result = prove(sequent)
    assert result.proved, str(sequent)
    return result.proof


a, b = Atom('a'), Atom('b')


class CutFreeMixin(object):

    def assertNormal(self, original, result):
        checked = check(result)
        self.assertTrue(checked, str(checked))
        self.assertTrue(seq_eq(original.conclusion, result.conclusion))
        self.assertEqual(0, cut_rank_proof(result))
        self.assertEqual(set(), set(rule_counts(result)) - {GR, GL})


class TestLinearCuts(CutFreeMixin, unittest.TestCase):

    def setUp(self):
        self.identity = proof_of(GSequent((), [goal('a')], (), goal('a')))

    def test_principal(self):
        cut = cut_linear_node(self.identity, proof_of(GSequent((), [goal('a')], [a])))
        eliminator = CutEliminator()
        result = eliminator(cut)
        self.assertNormal(cut, result)
        self.assertEqual(['linear-cut principal rank 2 -> 0'], eliminator.steps)

    def test_commute_gl(self):
        right = proof_of(GSequent((), [goal('a'), goal('a -o b')], [b]))
        cut = cut_linear_node(self.identity, right, goal('a'))
        eliminator = CutEliminator(check_steps=True)
        self.assertNormal(cut, eliminator(cut))
        self.assertTrue(eliminator.steps[0].startswith('linear-cut principal'))
        self.assertTrue(eliminator.steps[-1].startswith('linear-cut gl'))

    def test_non_identity_left(self):
        left = proof_of(GSequent((), [goal('c'), goal('c -o a')], (), goal('a')))
        right = proof_of(GSequent((), [goal('a'), goal('a -o b')], [b]))
        cut = cut_linear_node(left, right, goal('a'))
        self.assertTrue(check(cut))
        eliminator = CutEliminator(check_steps=True)
        with self.assertLogs('forumlib.cutelim', level='DEBUG') as cm:
            result = eliminator(cut)
        self.assertNormal(cut, result)
        self.assertEqual(['principal', 'gr', 'gl'], [line.split()[1] for line in eliminator.steps])
        self.assertIn('linear-cut key rank 2 -> 0', '\n'.join(cm.output))

    def test_commute_gr(self):
        right = proof_of(GSequent((), [goal('a')], (), goal('a & a')))
        cut = cut_linear_node(self.identity, right)
        eliminator = CutEliminator(check_steps=True)
        self.assertNormal(cut, eliminator(cut))
        self.assertEqual('linear-cut gr rank 2 -> 0', eliminator.steps[-1])

    def test_top(self):
        right = proof_of(GSequent((), [goal('a')], [b], goal('top')))
        cut = cut_linear_node(self.identity, right)
        eliminator = CutEliminator()
        self.assertNormal(cut, eliminator(cut))
        self.assertEqual(['linear-cut top rank 2 -> 0'], eliminator.steps)

    def test_basis(self):
        left = proof_of(GSequent((), (), (), goal('top')))
        right = proof_of(GSequent((), [goal('top')], (), goal('top')))
        cut = cut_linear_node(left, right)
        eliminator = CutEliminator()
        self.assertNormal(cut, eliminator(cut))
        self.assertEqual(['linear-cut basis rank 1 -> 0'], eliminator.steps)

    def test_premises_of_selected_clause(self):
        g = goal('b -o a')
        left = proof_of(GSequent((), [g], (), g))
        right = proof_of(GSequent((), [g, goal('b')], [a]))
        self.assertEqual(0, cut_rank_proof(left))
        cut = cut_linear_node(left, right)
        self.assertEqual(4, cut_rank_proof(cut))
        self.assertNormal(cut, cut_eliminate(cut))

    def test_first_order(self):
        g = goal('forall x. (p(x) par b)')
        left = proof_of(GSequent((), [goal('forall y. (p(y) par b)')], (), g))
        right = proof_of(GSequent((), [g], [parse_formula('p(c)'), b]))
        cut = cut_linear_node(left, right)
        self.assertTrue(check(cut))
        self.assertNormal(cut, cut_eliminate(cut))

    def test_nested(self):
        inner = cut_linear_node(self.identity, proof_of(GSequent((), [goal('a')], [a])))
        cut = cut_linear_node(self.identity, inner)
        self.assertTrue(check(cut))
        self.assertNormal(cut, eliminate_cut_linear(cut))


class TestClassicalCuts(CutFreeMixin, unittest.TestCase):

    def setUp(self):
        self.g = goal('a -o a')
        self.left = proof_of(GSequent((), (), (), self.g))

    def test_unused(self):
        right = proof_of(GSequent((), [goal('a')], [a]))
        cut = gen_cut_node(self.left, right, self.g, copies=0)
        eliminator = CutEliminator()
        result = eliminator.eliminate_gen_cut_classical(cut)
        self.assertNormal(cut, result)
        self.assertEqual(['gen-cut unused rank 4 -> 0'], eliminator.steps)

    def test_weakened_copies(self):
        right = weaken_classical(proof_of(GSequent((), [goal('a')], [a])), [self.g, self.g])
        cut = gen_cut_node(self.left, right, self.g, copies=2)
        self.assertTrue(check(cut))
        self.assertNormal(cut, cut_eliminate(cut))

    def test_principal(self):
        premise = proof_of(GSequent([self.g], [goal('a')], (), goal('a')))
        right = gl_node([self.g], 'psi', self.g, 0, (), (), [premise])
        self.assertTrue(check(right))
        cut = gen_cut_node(self.left, right, self.g)
        self.assertTrue(check(cut))
        eliminator = CutEliminator(check_steps=True)
        self.assertNormal(cut, eliminator(cut))
        cases = [line.split()[1] for line in eliminator.steps]
        self.assertIn('gl-principal', cases)
        self.assertIn('principal', cases)

    def test_through_linear_cut(self):
        identity = proof_of(GSequent((), [goal('a')], (), goal('a')))
        inner = cut_linear_node(identity, proof_of(GSequent((), [goal('a')], [a])))
        right = weaken_classical(inner, [self.g])
        cut = gen_cut_node(self.left, right, self.g)
        self.assertTrue(check(cut))
        eliminator = CutEliminator()
        result = eliminator.eliminate_gen_cut_classical(cut)
        self.assertTrue(check(result))
        self.assertFalse(any(node.rule == 'GenCutClassical' for _, node in result.walk()))
        self.assertIn('gen-cut cut-linear rank 4 -> 2', eliminator.steps)
        self.assertNormal(cut, cut_eliminate(cut))

    def test_order_of_passes(self):
        right = proof_of(GSequent([self.g], [goal('a')], [a]))
        cut = gen_cut_node(self.left, right, self.g)
        with self.assertRaises(CutEliminationError):
            eliminate_cut_linear(cut)
        with self.assertRaises(CutEliminationError):
            eliminate_contraction(cut)


class TestContraction(CutFreeMixin, unittest.TestCase):

    def test_contraction(self):
        g = goal('a')
        p = contract_node(proof_of(GSequent([g, g], (), [a])), g)
        eliminator = CutEliminator()
        result = eliminator.eliminate_contraction(p)
        self.assertNormal(p, result)
        self.assertEqual(1, len(result.conclusion.psi))
        self.assertEqual(['contraction leaf rank 0 -> 0'], eliminator.steps)

    def test_contraction_above_gr(self):
        g = goal('a')
        p = contract_node(proof_of(GSequent([g, g], (), (), goal('b => a'))), g)
        self.assertTrue(check(p))
        self.assertNormal(p, cut_eliminate(p))


class TestWeakening(unittest.TestCase):

    def test_weaken(self):
        identity = proof_of(GSequent((), [goal('a')], (), goal('a')))
        cut = cut_linear_node(identity, proof_of(GSequent((), [goal('a')], [a])))
        g = goal('forall x. p(x)')
        weakened = weaken_classical(cut, [g])
        self.assertTrue(check(weakened))
        self.assertTrue(mset_eq([g], weakened.conclusion.psi))
        self.assertEqual((), weakened.children[0].conclusion.psi)
        self.assertEqual(cut_rank_proof(cut), cut_rank_proof(weakened))

    def test_eigenvariables_stay_fresh(self):
        p = proof_of(GSequent((), [goal('forall y. p(y)')], (), goal('forall x. p(x)')))
        e, = p.payload['eigen']
        g = goal_of_atom(Atom('q', [e]))
        weakened = weaken_classical(p, [g])
        self.assertTrue(check(weakened))
        self.assertNotEqual(e, weakened.payload['eigen'][0])


class TestGuards(unittest.TestCase):

    def test_invalid_input(self):
        cut = cut_linear_node(proof_of(GSequent((), [goal('a')], (), goal('a'))),
                              proof_of(GSequent((), [goal('a')], [a])))
        broken = cut.__class__(cut.rule, cut.conclusion.replace(lam=()), cut.payload, cut.children)
        with self.assertRaises(InvalidProof) as cm:
            cut_eliminate(broken)
        self.assertFalse(cm.exception.result)

    def test_step_budget(self):
        cut = cut_linear_node(proof_of(GSequent((), [goal('a')], (), goal('a'))),
                              proof_of(GSequent((), [goal('a')], [a])))
        with self.assertRaises(NonTermination):
            CutEliminator(max_steps=0)(cut)


class TestCorpus(CutFreeMixin, unittest.TestCase):

    def test_generated_cut_proofs(self):
        generator = CorpusGenerator(seed=5, depth=2, cfg=SearchConfig(max_gl_depth=4))
        copies = set()
        cases = set()
        for i in range(60):
            kind = CUT_KINDS[i % len(CUT_KINDS)]
            proof = generator.cut_proof(kind)
            checked = check(proof)
            self.assertTrue(checked, '{0}: {1}'.format(kind, checked))
            self.assertTrue(any(node.rule in cut_rules for _, node in proof.walk()))
            if proof.rule == GEN_CUT:
                copies.add(proof.payload['copies'])
            eliminator = CutEliminator()
            self.assertNormal(proof, eliminator(proof))
            cases |= set(line.split()[1] for line in eliminator.steps)
        self.assertEqual({0, 1, 2}, copies)
        self.assertTrue({'principal', 'gl', 'gl-principal'} <= cases, cases)

    def test_rank_discipline(self):
        generator = CorpusGenerator(seed=9, depth=2, cfg=SearchConfig(max_gl_depth=4))
        for proof in generator.cut_proofs(60):
            eliminator = CutEliminator()
            before = cut_rank_proof(proof)
            without_classical = eliminator.eliminate_gen_cut_classical(proof)
            self.assertLessEqual(cut_rank_proof(without_classical), before)
            with self.assertLogs('forumlib.cutelim', level='DEBUG') as cm:
                without_linear = eliminator.eliminate_cut_linear(without_classical)
            self.assertEqual(0, cut_rank_proof(without_linear))
            for line in cm.output:
                if 'key rank' in line or 'pass rank' in line:
                    tokens = line.split()
                    self.assertLess(int(tokens[-1]), int(tokens[-3]), line)
            result = eliminator.eliminate_contraction(without_linear)
            self.assertFalse(any(node.rule == CONTRACT for _, node in result.walk()))
            for line in eliminator.steps:
                lemma, case, _, before_rank, _, after_rank = line.split()
                self.assertLessEqual(int(after_rank), int(before_rank), line)


# main
if __name__ == '__main__':
    unittest.main()
