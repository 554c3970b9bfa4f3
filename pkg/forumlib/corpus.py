"""Seeded generators of formulae, goals, sequents and proofs with cuts.

The same seed and parameters always give the same corpus. Generated
sequents are ground. By default everything is propositional; with
`first_order` the atoms take a term argument, goals may bind a variable
and formulae may contain quantifiers, eigenvariables and metavariables.

"""

import logging
import os
import random

from forumlib.cutelim import weaken_classical
from forumlib.engine.search import SearchConfig, prove
from forumlib.errors import ForumError
from forumlib.proofs.struct import cut_linear_node, gen_cut_node, gl_node, gr_node
from forumlib.sequent import GSequent, mset_diff, read_sequent, write_sequent
from forumlib.syntax import category
from forumlib.syntax.struct import (
    Var, App, Atom, Binary, Unary, Quantifier, Clause, Goal, goal_of_atom, ONE, BOT, TOP, ZERO
)

__all__ = ['CorpusGenerator', 'write_corpus', 'read_corpus', 'CUT_KINDS']

logger = logging.getLogger(__name__)

PREDICATES = ('a', 'b', 'c', 'd', 'e', 'f')
CONSTANTS = ('k', 'm')
FUNCTION = 's'
VARIABLES = ('x', 'y', 'z')

CUT_KINDS = ('linear', 'classical', 'nested')

_binary = (category.TENSOR, category.PAR, category.AMP, category.PLUS, category.LOLLI, category.IMPLIES)
_unary = (category.BANG, category.WHYNOT, category.DUAL)
_quantifiers = (category.FORALL, category.EXISTS)
_constants = (ONE, BOT, TOP, ZERO)


class CorpusGenerator(object):
    """Generate random test material from a seed.

    `atoms` is the number of predicate symbols used and `depth` the
    largest nesting of goals inside clauses.

    """

    def __init__(self, seed=0, atoms=3, depth=3, cfg=None, attempts=50, first_order=False):
        if not 1 <= atoms <= len(PREDICATES):
            raise ValueError('atoms must be between 1 and {0}'.format(len(PREDICATES)))
        self.seed = seed
        self.rng = random.Random(seed)
        self.predicates = PREDICATES[:atoms]
        self.depth = depth
        self.cfg = cfg or SearchConfig()
        self.attempts = attempts
        self.first_order = first_order
        # free variables that may occur in generated formulae
        self.free_terms = (Var('e', role=category.EIGEN, level=1), Var('u', role=category.META, level=2))

    def term(self, scope=(), free=False):
        """Return a term over the variables of `scope`, and the free variables when `free`."""
        rng = self.rng
        if rng.random() < 0.15:
            return App(FUNCTION, [self.term(scope, free)])
        pool = list(scope) + (list(self.free_terms) if free else [])
        if pool and rng.random() < 0.6:
            return rng.choice(pool)
        return App(rng.choice(CONSTANTS))

    def atom(self, scope=(), free=False):
        if not self.first_order:
            return Atom(self.rng.choice(self.predicates))
        return Atom(self.rng.choice(self.predicates), [self.term(scope, free)])

    # formulae

    def formula(self, size=5, scope=()):
        """Return a formula with `size` leaves, connectives or quantifiers in total."""
        rng = self.rng
        if size <= 1:
            if rng.random() < 0.8:
                return self.atom(scope, free=True)
            return rng.choice(_constants)
        if size == 2 or rng.random() < 0.2:
            if self.first_order and rng.random() < 0.4:
                var = Var(rng.choice(VARIABLES))
                return Quantifier(rng.choice(_quantifiers), var, self.formula(size - 1, scope + (var,)))
            return Unary(rng.choice(_unary), self.formula(size - 1, scope))
        left = rng.randint(1, size - 2)
        return Binary(rng.choice(_binary), self.formula(left, scope), self.formula(size - 1 - left, scope))

    # goals

    def goal(self, depth=None, scope=()):
        """Return a goal of at most two clauses whose nesting is at most `depth`."""
        depth = self.depth if depth is None else depth
        binder = ()
        if self.first_order and self.rng.random() < 0.5:
            binder = (Var(self.rng.choice(VARIABLES)),)
        scope = tuple(scope) + binder
        n = self.rng.choice((0, 1, 1, 1, 2, 2))
        return Goal(binder, [self.clause(depth, scope) for _ in range(n)])

    def clause(self, depth=None, scope=()):
        depth = self.depth if depth is None else depth
        rng = self.rng
        cp, lp = [], []
        if depth > 1:
            if rng.random() < 0.25:
                cp.append(self.goal(depth - 1, scope))
            if rng.random() < 0.4:
                lp.append(self.goal(depth - 1, scope))
        k = rng.choice((0, 1, 1, 1, 2, 2))
        return Clause(cp, lp, [self.atom(scope) for _ in range(k)])

    # sequents

    def sequent(self):
        """Return a ground sequent."""
        rng = self.rng
        psi = [self.goal(self.depth - 1) for _ in range(rng.choice((0, 0, 1)))]
        gamma = [self.goal() for _ in range(rng.choice((0, 1, 1, 2, 2)))]
        lam = [self.atom() for _ in range(rng.choice((0, 1, 1, 2, 3)))]
        focus = self.goal() if rng.random() < 0.3 else None
        return GSequent(psi, gamma, lam, focus)

    def sequents(self, count):
        return [self.sequent() for _ in range(count)]

    def provable(self, require_gamma=False, require_psi=False, state=False):
        """Return (sequent, proof) for a random sequent the engine proves.

        With `state` the sequent has no goal in focus. Falls back to
        `[ ; G |- ; G]` for a random goal `G`, or to `[ ; a |- a ; ]` for
        a state, when no random sequent is proved within the configured
        attempts.

        """
        for _ in range(self.attempts):
            s = self.sequent()
            if require_gamma and not s.gamma:
                continue
            if require_psi and not s.psi:
                continue
            if state and s.focus is not None:
                continue
            result = prove(s, self.cfg)
            if result.proved:
                return s, result.proof
        if state:
            a = self.atom()
            g = goal_of_atom(a)
            s = GSequent([g] if require_psi else (), [g], [a])
        else:
            g = self.goal()
            s = GSequent([g] if require_psi else (), [g], (), g)
        return s, self._prove(s)

    def _prove(self, s):
        result = prove(s, self.cfg)
        if not result.proved:
            raise ForumError('cannot prove {0} within depth {1}'.format(s, self.cfg.max_gl_depth))
        return result.proof

    def identity(self, goal, classical=False):
        """Return a proof of `[ ; G |- ; G]`, or of `[G ; |- ; G]` when `classical`."""
        s = GSequent([goal], (), (), goal) if classical else GSequent((), [goal], (), goal)
        return self._prove(s)

    def _split(self, items):
        kept, moved = [], []
        for x in items:
            (moved if self.rng.random() < 0.5 else kept).append(x)
        return kept, moved

    def focused_proof(self, classical=False):
        """Return a proof ending with GR on top of an engine proof of a state.

        Random parts of the contexts of a provable state `[psi; gamma |- lam]`
        become the premises and the head of the single clause of the goal
        in focus. When `classical` all of the linear program and the atoms
        are moved, so the conclusion has empty linear contexts.

        """
        s, proof = self.provable(state=True)
        psi, cp = self._split(s.psi)
        if classical:
            gamma, lp, lam, head = (), s.gamma, (), s.lam
        else:
            gamma, lp = self._split(s.gamma)
            lam, head = self._split(s.lam)
        goal = Goal((), [Clause(cp, lp, head)])
        return gr_node(psi, gamma, lam, goal, (), [proof])

    def _select(self, psi, side, goal):
        """Return a GL proof selecting the only clause of `goal` with identities as premises."""
        clause = goal.clauses[0]
        classical = [weaken_classical(self.identity(g, classical=True), mset_diff(psi, [g])) for g in clause.cp]
        linear = [weaken_classical(self.identity(h), psi) for h in clause.lp]
        return gl_node(psi, side, goal, 0, (), classical, linear)

    # proofs with cuts

    def cut_proof(self, kind='linear', copies=None):
        """Return a valid proof ending with a cut of the given kind.

        The left premise of every cut is built from an engine proof by
        `focused_proof`. `linear` cuts it against a selection of the goal
        from the linear program, `classical` cuts `copies` copies (0, 1 or
        2, random by default) from the classical program and `nested` puts
        a linear cut above a classical one.

        """
        if kind == 'linear':
            left = self.focused_proof()
            goal = left.conclusion.focus
            right = self._select(goal.clauses[0].cp, 'gamma', goal)
            return cut_linear_node(left, right, goal)
        elif kind == 'classical':
            copies = self.rng.choice((0, 1, 2)) if copies is None else copies
            return self._classical_cut(copies)
        elif kind == 'nested':
            return self._classical_cut(1 if copies is None else copies, self.cut_proof('linear'))
        raise ValueError('unknown cut kind "{0}"'.format(kind))

    def _classical_cut(self, copies, right=None):
        left = self.focused_proof(classical=True)
        goal = left.conclusion.focus
        if right is None:
            right = self._select((goal,) + goal.clauses[0].cp, 'psi', goal)
            present = 1
        else:
            present = 0
        if copies > present:
            right = weaken_classical(right, [goal] * (copies - present))
        return gen_cut_node(left, right, goal, copies)

    def cut_proofs(self, count):
        return [self.cut_proof(CUT_KINDS[i % len(CUT_KINDS)]) for i in range(count)]


def write_corpus(path, sequents):
    """Write `sequents` to numbered files in directory `path`."""
    os.makedirs(path, exist_ok=True)
    names = []
    for i, s in enumerate(sequents):
        name = os.path.join(path, '{0:04d}.seq'.format(i))
        write_sequent(s, name)
        names.append(name)
    logger.info('wrote {0} sequent(s) to "{1}"'.format(len(names), path))
    return names


def read_corpus(path):
    """Return a list of (file name, sequent) for the sequent files of `path`."""
    rv = []
    for name in sorted(os.listdir(path)):
        if name.endswith('.seq'):
            rv.append((name, read_sequent(os.path.join(path, name))))
    return rv
