"""A small-step prover for the Forum sequent calculus.

Sequents are `[psi; gamma] F |- [xi; lam]` where `F` is an optional
formula in left focus, `xi` the sequence of formulae still to be
decomposed on the right and `lam` the multiset of atoms. Right rules act
on the first formula of `xi`; when `xi` is empty a formula of the program
is decided upon and decomposed by left rules.

The prover explores derivations depth first and bounds the number of
rule applications of the derivation being built. Universal quantifiers
in left focus are instantiated with the closed terms of the sequent, so
a negative answer is only given for sequents where no such
instantiation was needed.

"""

import logging
from collections import Counter

from nltk.tree import Tree

from forumlib.errors import NotForumFragment
from forumlib.syntax import category
from forumlib.syntax.struct import (
    App, Substitution, alpha_key, apply_subst, free_vars, subterms, goal_to_formula
)
from forumlib.syntax.visitors import print_formula
from forumlib.utils import sub_multisets

__all__ = [
    'PROVABLE',
    'NOT_PROVABLE',
    'UNKNOWN',
    'ForumSequent',
    'Derivation',
    'OracleResult',
    'ForumOracle',
    'embed_sequent',
    'prove_forum',
    'left_rules',
    'right_rules',
]

PROVABLE = 'provable'
NOT_PROVABLE = 'not-provable'
UNKNOWN = 'unknown'

DEFAULT_STEP_BOUND = 200

# rule names
I = 'i'
D_L = 'd_L'
D_C = 'd_C'
A = 'a'
BOT_L = 'bot_L'
BOT_R = 'bot_R'
TOP_R = 'top_R'
PAR_L = 'par_L'
PAR_R = 'par_R'
AMP_LL = 'amp_LL'
AMP_LR = 'amp_LR'
AMP_R = 'amp_R'
LOLLI_L = 'lolli_L'
LOLLI_R = 'lolli_R'
IMPLIES_L = 'implies_L'
IMPLIES_R = 'implies_R'
FORALL_L = 'forall_L'
FORALL_R = 'forall_R'

left_rules = {I, D_L, D_C, BOT_L, PAR_L, AMP_LL, AMP_LR, LOLLI_L, IMPLIES_L, FORALL_L}
right_rules = {A, BOT_R, TOP_R, PAR_R, AMP_R, LOLLI_R, IMPLIES_R, FORALL_R}

# instance of the domain used when a sequent has no closed term
DEFAULT_TERM = App('c')


def _mkey(items):
    return tuple(sorted((repr(alpha_key(x)) for x in items)))


class ForumSequent(object):
    """A sequent of the small-step calculus."""

    __slots__ = ('psi', 'gamma', 'focus', 'xi', 'lam')

    def __init__(self, psi=(), gamma=(), xi=(), lam=(), focus=None):
        self.psi = tuple(psi)
        self.gamma = tuple(gamma)
        self.xi = tuple(xi)
        self.lam = tuple(lam)
        self.focus = focus
        if focus is not None and self.xi:
            raise ValueError('a sequent with a focused formula has no right linear context')

    @property
    def is_state(self):
        return self.focus is None and not self.xi

    def replace(self, **kwargs):
        values = {k: getattr(self, k) for k in self.__slots__}
        values.update(kwargs)
        return ForumSequent(**values)

    def key(self):
        """Return a key shared by sequents equal up to the order of multisets."""
        focus = None if self.focus is None else repr(alpha_key(self.focus))
        return (_mkey(self.psi), _mkey(self.gamma), focus,
                tuple(repr(alpha_key(f)) for f in self.xi), _mkey(self.lam))

    def closed_terms(self):
        """Return the distinct terms of the sequent whose variables are all eigenvariables."""
        rv = []
        seen = set()
        for f in self.psi + self.gamma + self.xi + self.lam + ((self.focus,) if self.focus is not None else ()):
            for t in subterms(f):
                if t not in seen and all(v.role == category.EIGEN for v in _term_vars(t)):
                    seen.add(t)
                    rv.append(t)
        return rv

    def __eq__(self, other):
        return isinstance(other, ForumSequent) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __str__(self):
        def show(items):
            return ', '.join(print_formula(x) for x in items)
        focus = '' if self.focus is None else ' ' + print_formula(self.focus)
        return '[{0}; {1}]{2} |- [{3}; {4}]'.format(show(self.psi), show(self.gamma), focus,
                                                    show(self.xi), show(self.lam))

    def __repr__(self):
        return '<ForumSequent: {0}>'.format(str(self))


def _term_vars(t):
    if t.category == category.VAR:
        return [t]
    rv = []
    for a in t.args:
        rv.extend(_term_vars(a))
    return rv


class Derivation(object):
    """A small-step derivation; open leaves have no rule."""

    __slots__ = ('rule', 'sequent', 'premises')

    def __init__(self, rule, sequent, premises=()):
        self.rule = rule
        self.sequent = sequent
        self.premises = tuple(premises)

    def __repr__(self):
        return '<Derivation {0}: {1}>'.format(self.rule, self.sequent)

    def __str__(self):
        return str(self.to_tree())

    @property
    def is_open(self):
        return self.rule is None

    def walk(self):
        yield self
        for p in self.premises:
            yield from p.walk()

    def open_leaves(self):
        """Return the sequents of the open leaves from left to right."""
        return [d.sequent for d in self.walk() if d.is_open]

    def is_proof(self):
        return not self.open_leaves()

    def is_uniform(self):
        """Return True if no left rule is applied while the right linear context is not empty."""
        return all(not (d.rule in left_rules and d.sequent.xi) for d in self.walk())

    def size(self):
        return sum(1 for d in self.walk() if not d.is_open)

    def depth(self):
        if self.is_open:
            return 0
        return max([p.depth() for p in self.premises] + [0]) + 1

    def rules(self):
        return Counter(d.rule for d in self.walk() if not d.is_open)

    def plug(self, fn):
        """Replace every open leaf by the derivation `fn(sequent)`."""
        if self.is_open:
            return fn(self.sequent)
        return Derivation(self.rule, self.sequent, [p.plug(fn) for p in self.premises])

    def to_tree(self):
        label = '{0} {1}'.format(self.rule or '...', self.sequent)
        return Tree(label, [p.to_tree() for p in self.premises])


class OracleResult(object):

    __slots__ = ('status', 'derivation', 'steps')

    def __init__(self, status, derivation=None, steps=0):
        self.status = status
        self.derivation = derivation
        self.steps = steps

    @property
    def provable(self):
        return self.status == PROVABLE

    def __repr__(self):
        return '<OracleResult: {0} after {1} step(s)>'.format(self.status, self.steps)


def embed_sequent(s):
    """Return the Forum sequent of a G-Forum sequent."""
    xi = () if s.focus is None else (goal_to_formula(s.focus),)
    return ForumSequent([goal_to_formula(g) for g in s.psi],
                        [goal_to_formula(g) for g in s.gamma],
                        xi, s.lam)


def _distinct(items):
    """Yield (index, item) for the first of every group of α-equivalent items."""
    seen = set()
    for i, x in enumerate(items):
        k = alpha_key(x)
        if k not in seen:
            seen.add(k)
            yield i, x


def _splits(s):
    def key(x):
        return repr(alpha_key(x))

    for g1, g2 in sub_multisets(s.gamma, key=key):
        for l1, l2 in sub_multisets(s.lam, key=key):
            yield ([s.gamma[i] for i in g1], [s.lam[i] for i in l1],
                   [s.gamma[i] for i in g2], [s.lam[i] for i in l2])


class ForumOracle(object):
    """Bounded exhaustive search in the small-step calculus."""

    def __init__(self, step_bound=DEFAULT_STEP_BOUND, logger=None):
        self.step_bound = step_bound
        self.logger = logger or logging.getLogger(__name__)
        self.bound_hit = False
        self.incomplete = False
        self.steps = 0

    def __call__(self, sequent):
        return self.prove(sequent)

    def prove(self, sequent):
        """Return an `OracleResult` for a `ForumSequent` or a G-Forum sequent."""
        if not isinstance(sequent, ForumSequent):
            sequent = embed_sequent(sequent)
        self._check_fragment(sequent)
        self.bound_hit = False
        self.incomplete = False
        self.steps = 0
        for derivation, _ in self.derive(sequent, self.step_bound):
            self.logger.debug('oracle proved {0} in {1} step(s)'.format(sequent, self.steps))
            return OracleResult(PROVABLE, derivation, self.steps)
        if self.bound_hit or self.incomplete:
            return OracleResult(UNKNOWN, None, self.steps)
        return OracleResult(NOT_PROVABLE, None, self.steps)

    def _check_fragment(self, s):
        for f in s.psi + s.gamma + s.xi + s.lam + ((s.focus,) if s.focus is not None else ()):
            stack = [f]
            while stack:
                g = stack.pop()
                if g.category not in category.forum:
                    raise NotForumFragment(g)
                if g.category in category.binary:
                    stack.extend([g.left, g.right])
                elif g.category in category.quantifiers:
                    stack.append(g.body)

    def derive(self, s, budget):
        """Yield pairs (derivation, budget left) of proofs of `s`."""
        if budget <= 0:
            self.bound_hit = True
            return
        self.steps += 1
        budget -= 1
        if s.xi:
            yield from self._right(s, budget)
        elif s.focus is not None:
            yield from self._left(s, budget)
        else:
            for i, f in _distinct(s.gamma):
                rest = s.gamma[:i] + s.gamma[i + 1:]
                for d, b in self.derive(s.replace(gamma=rest, focus=f), budget):
                    yield Derivation(D_L, s, [d]), b
            for _, f in _distinct(s.psi):
                for d, b in self.derive(s.replace(focus=f), budget):
                    yield Derivation(D_C, s, [d]), b

    def _one(self, rule, s, premise, budget):
        for d, b in self.derive(premise, budget):
            yield Derivation(rule, s, [d]), b

    def _two(self, rule, s, first, second, budget):
        for d1, b1 in self.derive(first, budget):
            for d2, b2 in self.derive(second, b1):
                yield Derivation(rule, s, [d1, d2]), b2

    def _right(self, s, budget):
        f, rest = s.xi[0], s.xi[1:]
        cat = f.category
        if cat == category.ATOM:
            yield from self._one(A, s, s.replace(xi=rest, lam=s.lam + (f,)), budget)
        elif cat == category.BOT:
            yield from self._one(BOT_R, s, s.replace(xi=rest), budget)
        elif cat == category.TOP:
            yield Derivation(TOP_R, s), budget
        elif cat == category.PAR:
            yield from self._one(PAR_R, s, s.replace(xi=(f.left, f.right) + rest), budget)
        elif cat == category.AMP:
            yield from self._two(AMP_R, s, s.replace(xi=(f.left,) + rest), s.replace(xi=(f.right,) + rest), budget)
        elif cat == category.LOLLI:
            yield from self._one(LOLLI_R, s, s.replace(gamma=s.gamma + (f.left,), xi=(f.right,) + rest), budget)
        elif cat == category.IMPLIES:
            yield from self._one(IMPLIES_R, s, s.replace(psi=s.psi + (f.left,), xi=(f.right,) + rest), budget)
        elif cat == category.FORALL:
            eigen = f.var.fresh(role=category.EIGEN)
            body = apply_subst(f.body, Substitution({f.var: eigen}))
            yield from self._one(FORALL_R, s, s.replace(xi=(body,) + rest), budget)
        else:
            raise NotForumFragment(f)

    def _left(self, s, budget):
        f = s.focus
        cat = f.category
        if cat == category.ATOM:
            if not s.gamma and len(s.lam) == 1 and alpha_key(s.lam[0]) == alpha_key(f):
                yield Derivation(I, s), budget
        elif cat == category.BOT:
            if not s.gamma and not s.lam:
                yield Derivation(BOT_L, s), budget
        elif cat == category.TOP:
            return
        elif cat == category.PAR:
            for g1, l1, g2, l2 in _splits(s):
                first = ForumSequent(s.psi, g1, (), l1, focus=f.left)
                second = ForumSequent(s.psi, g2, (), l2, focus=f.right)
                yield from self._two(PAR_L, s, first, second, budget)
        elif cat == category.AMP:
            yield from self._one(AMP_LL, s, s.replace(focus=f.left), budget)
            yield from self._one(AMP_LR, s, s.replace(focus=f.right), budget)
        elif cat == category.LOLLI:
            for g1, l1, g2, l2 in _splits(s):
                first = ForumSequent(s.psi, g1, (f.left,), l1)
                second = ForumSequent(s.psi, g2, (), l2, focus=f.right)
                yield from self._two(LOLLI_L, s, first, second, budget)
        elif cat == category.IMPLIES:
            first = ForumSequent(s.psi, (), (f.left,), ())
            second = s.replace(focus=f.right)
            yield from self._two(IMPLIES_L, s, first, second, budget)
        elif cat == category.FORALL:
            terms = s.closed_terms() or [DEFAULT_TERM]
            if f.var in free_vars(f.body):
                self.incomplete = True
            else:
                terms = terms[:1]
            for t in terms:
                body = apply_subst(f.body, Substitution({f.var: t}))
                yield from self._one(FORALL_L, s, s.replace(focus=body), budget)
        else:
            raise NotForumFragment(f)


def prove_forum(sequent, step_bound=DEFAULT_STEP_BOUND):
    """Search for a small-step proof of `sequent` within `step_bound` rule applications.

    >>> from forumlib.syntax import parse_formula, parse_atom
    >>> s = ForumSequent(focus=parse_formula('a par (b par a)'),
    ...                  lam=[parse_atom('a'), parse_atom('a'), parse_atom('b')])
    >>> prove_forum(s).status
    'provable'

    """
    return ForumOracle(step_bound).prove(sequent)
