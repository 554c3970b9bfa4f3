import itertools
import unittest
from collections import Counter

from forumlib.corpus import CorpusGenerator
from forumlib.engine import *
from forumlib.engine.unify import BindingStore
from forumlib.errors import ConfigError
from forumlib.normalize import to_goal
from forumlib.proofs import GR, GL, check
from forumlib.sequent import GSequent, mset_eq, seq_eq
from forumlib.syntax import parse_formula, parse_atom, App, Atom, Var


def goal(text):
    return to_goal(parse_formula(text))


a, b = Atom('a'), Atom('b')


class TestConfig(unittest.TestCase):

    def test_defaults(self):
        cfg = SearchConfig()
        self.assertEqual(6, cfg.max_gl_depth)
        self.assertFalse(cfg.iterative_deepening)
        self.assertEqual(0, cfg.rng_seed)

    def test_validation(self):
        with self.assertRaises(ConfigError):
            SearchConfig(max_gl_depth=-1)
        with self.assertRaises(ConfigError):
            SearchConfig(max_gl_depth='3')
        with self.assertRaises(ConfigError):
            SearchConfig(rng_seed=True)

    def test_from_env(self):
        self.assertEqual(3, SearchConfig.from_env({'FORUMLIB_DEPTH': '3'}).max_gl_depth)
        self.assertEqual(6, SearchConfig.from_env({}).max_gl_depth)
        self.assertEqual(2, SearchConfig.from_env({'FORUMLIB_DEPTH': '3'}, max_gl_depth=2).max_gl_depth)
        with self.assertRaises(ConfigError):
            SearchConfig.from_env({'FORUMLIB_DEPTH': 'deep'})

    def test_replace(self):
        cfg = SearchConfig(max_gl_depth=2).replace(trace=True)
        self.assertEqual(2, cfg.max_gl_depth)
        self.assertTrue(cfg.trace)


class TestRightReduction(unittest.TestCase):

    def test_association(self):
        store = BindingStore()
        p1 = reduce_right(GSequent((), (), (), goal('a par (b par a)')), store)
        p2 = reduce_right(GSequent((), (), (), goal('(a par b) par a')), store)
        self.assertEqual(1, len(p1))
        self.assertTrue(seq_eq(p1[0], p2[0]))
        self.assertTrue(mset_eq([a, a, b], p1[0].lam))

    def test_amp_association(self):
        def associations(parts):
            if len(parts) == 1:
                yield parts[0]
                return
            for i in range(1, len(parts)):
                for left in associations(parts[:i]):
                    for right in associations(parts[i:]):
                        yield '({0} & {1})'.format(left, right)

        clauses = ['a', 'b -o c', 'a => b', 'a par c']
        for h in range(1, 5):
            expected = None
            for text in associations(clauses[:h]):
                premises = Counter(reduce_right(GSequent((), (), (), goal(text)), BindingStore()))
                self.assertEqual(h, sum(premises.values()))
                if expected is None:
                    expected = premises
                self.assertEqual(expected, premises, text)

    def test_premises(self):
        s = GSequent([goal('c')], [goal('d')], [a], goal('(a => b) & (c -o d)'))
        premises = reduce_right(s, BindingStore())
        self.assertEqual(2, len(premises))
        self.assertTrue(mset_eq([goal('c'), goal('a')], premises[0].psi))
        self.assertTrue(mset_eq([a, b], premises[0].lam))
        self.assertTrue(mset_eq([goal('d'), goal('c')], premises[1].gamma))

    def test_top(self):
        self.assertEqual([], reduce_right(GSequent((), (), (), goal('a par top')), BindingStore()))

    def test_eigenvariables(self):
        store = BindingStore()
        premise, = reduce_right(GSequent((), (), (), goal('forall x. p(x)')), store)
        e, = premise.lam[0].args
        self.assertTrue(e.is_eigen)
        self.assertEqual(store.level, e.level)


class TestMatchHead(unittest.TestCase):

    def test_example(self):
        head = [a, b, a]
        rv = list(match_head(head, [a, a, b], BindingStore()))
        self.assertEqual([((0, 2, 1), ())], rv)

    def test_residual(self):
        c = Atom('c')
        rv = list(match_head([b], [a, b, c], BindingStore()))
        self.assertEqual([((1,), (a, c))], rv)

    def test_no_match(self):
        self.assertEqual([], list(match_head([a, a], [a, b], BindingStore())))

    def test_exhaustive(self):
        symbols = (a, b)
        for k in range(4):
            for head in itertools.product(symbols, repeat=k):
                for n in range(5):
                    for lam in itertools.product(symbols, repeat=n):
                        rv = list(match_head(head, lam, BindingStore()))
                        fits = not (Counter(head) - Counter(lam))
                        self.assertEqual(1 if fits else 0, len(rv), (head, lam))
                        for positions, residual in rv:
                            self.assertEqual(len(head), len(set(positions)))
                            self.assertEqual(list(head), [lam[i] for i in positions])
                            self.assertEqual(Counter(lam) - Counter(head), Counter(residual))

    def test_unification(self):
        store = BindingStore()
        x, = store.new_metas([Var('x')])
        rv = list(match_head([Atom('p', [x])], [parse_atom('q(c)'), parse_atom('p(d)')], store))
        self.assertEqual([((1,), (parse_atom('q(c)'),))], rv)


class TestSearch(unittest.TestCase):

    def assertProves(self, sequent, cfg=None):
        result = prove(sequent, cfg)
        self.assertEqual(PROVED, result.status, str(sequent))
        checked = check(result.proof)
        self.assertTrue(checked, str(checked))
        self.assertTrue(seq_eq(sequent, result.proof.conclusion))
        return result.proof

    def test_modus_ponens(self):
        s = GSequent((), [goal('a'), goal('a -o b')], (), goal('b'))
        proof = self.assertProves(s)
        self.assertEqual(GR, proof.rule)
        self.assertEqual(GL, proof.children[0].rule)

    def test_resource_refutation(self):
        result = prove(GSequent((), [goal('a')], [a, a]))
        self.assertEqual(REFUTED, result.status)
        self.assertIsNone(result.proof)

    def test_classical_reuse(self):
        self.assertProves(GSequent([goal('a')], [goal('a -o a -o b')], [b]))
        self.assertEqual(REFUTED, prove(GSequent([goal('a')], (), [a, a])).status)

    def test_unused_linear_goal(self):
        self.assertEqual(REFUTED, prove(GSequent((), [goal('a'), goal('b')], [a])).status)

    def test_forall_top(self):
        proof = self.assertProves(GSequent((), (), (), goal('forall x. top')))
        self.assertEqual(1, len(proof.payload['eigen']))
        self.assertEqual((), proof.children)

    def test_top_absorbs(self):
        self.assertProves(GSequent((), [goal('a')], [b], goal('forall x. top')))
        proof = self.assertProves(GSequent((), [goal('top -o a')], [a, b]))
        premise = proof.children[0]
        self.assertTrue(mset_eq([b], premise.conclusion.lam))

    def test_first_order(self):
        proof = self.assertProves(GSequent((), [goal('forall x. p(x)')], [parse_atom('p(c)')]))
        self.assertEqual((App('c'),), proof.payload['sigma'])

    def test_eigenvariable_escape(self):
        self.assertProves(GSequent((), [goal('forall y. p(y)')], (), goal('forall x. p(x)')))
        result = prove(GSequent((), [goal('p(c)')], (), goal('forall x. p(x)')))
        self.assertEqual(REFUTED, result.status)

    def test_additive(self):
        self.assertProves(GSequent((), [goal('a')], (), goal('a & a')))
        self.assertProves(GSequent((), [goal('a & b')], [b]))

    def test_depth_bound(self):
        s = GSequent((), [goal('a'), goal('a -o b')], [b])
        self.assertEqual(UNKNOWN, prove(s, SearchConfig(max_gl_depth=1)).status)
        result = prove(s, SearchConfig(iterative_deepening=True))
        self.assertEqual(PROVED, result.status)
        self.assertEqual(2, result.depth)

    def test_trace(self):
        s = GSequent((), [goal('a'), goal('a -o b')], (), goal('b'))
        result = prove(s, SearchConfig(trace=True))
        self.assertTrue(result.trace[0].startswith('GR goal=1 branches=1'))
        self.assertTrue(any(line.startswith('GL sel=gamma') for line in result.trace))

    def test_seed_determinism(self):
        s = GSequent([goal('a -o b')], [goal('a'), goal('b -o c')], (), goal('c'))
        cfg = SearchConfig(rng_seed=7, trace=True)
        first = prove(s, cfg)
        second = prove(s, cfg)
        self.assertEqual(PROVED, first.status)
        self.assertEqual(first.trace, second.trace)

    def test_lazy_and_eager_agree(self):
        cfg = SearchConfig(max_gl_depth=3)
        eager = cfg.replace(eager_split=True)
        for s in CorpusGenerator(seed=11, depth=2).sequents(20):
            lazy_result = prove(s, cfg)
            eager_result = prove(s, eager)
            self.assertEqual(lazy_result.proved, eager_result.proved, str(s))
            for result in (lazy_result, eager_result):
                if result.proved:
                    self.assertTrue(check(result.proof))


class TestSteps(unittest.TestCase):

    def test_expand_and_thread(self):
        store = BindingStore()
        s = GSequent((), [goal('a'), goal('a -o b')], [b])
        steps = list(expand_state(s, store))
        self.assertEqual(1, len(steps))
        instance, obligations = steps[0]
        self.assertEqual(('gamma', 1, 0, (0,)), (instance.side, instance.index, instance.clause, instance.head))
        self.assertEqual(1, len(obligations))
        self.assertEqual(goal('a'), obligations[0].focus)
        proofs = list(thread_linear(obligations, [goal('a')], [], store))
        self.assertTrue(proofs)
        node, = proofs[0]
        self.assertTrue(check(node))
        self.assertTrue(mset_eq([goal('a')], node.conclusion.gamma))

    def test_thread_leftovers(self):
        store = BindingStore()
        obligations = [GSequent((), (), (), goal('a'))]
        self.assertEqual([], list(thread_linear(obligations, [goal('a'), goal('b')], [], store)))


class TestProver(unittest.TestCase):

    def test_prove(self):
        prover = ForumProver()
        self.assertTrue(prover.prove('b', ['a', 'a -o b']))
        self.assertFalse(prover.prove('b', ['a']))
        self.assertEqual(REFUTED, prover.last_result.status)

    def test_formulae(self):
        prover = ForumProver(SearchConfig(max_gl_depth=3))
        self.assertTrue(prover.prove(parse_formula('a * b'), [parse_formula('b'), parse_formula('a')]))


# main
if __name__ == '__main__':
    unittest.main()
