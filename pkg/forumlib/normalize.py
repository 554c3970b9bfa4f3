"""Translation of formulae into the Forum fragment, goals and clauses.

`foll_to_forum` removes 1, 0, tensor, plus, the modalities, the
existential quantifier and negation using their Forum equivalents.
`formula_to_goal` and `formula_to_clause` then bring a formula of the
Forum fragment into one of the two normal forms used by the engine.

All translations work bottom-up: the children of a node are translated
before the node itself.

"""

import logging

from forumlib.errors import NotForumFragment
from forumlib.syntax import category
from forumlib.syntax.struct import (
    BOT, TOP, TOP_GOAL, Goal, Clause, Substitution,
    par, amp, lolli, implies, forall, apply_subst,
)

__all__ = [
    'Normaliser',
    'foll_to_forum',
    'formula_to_goal',
    'formula_to_clause',
    'goal_double_negate',
    'to_goal',
    'to_clause',
    'is_forum',
    'degenerate_clauses',
]


def _neg(f):
    return lolli(f, BOT)


def _freshen(goal):
    """Return `goal` with its binder renamed to fresh variables."""
    if not goal.binder:
        return goal
    subst = Substitution((v, v.fresh()) for v in goal.binder)
    return Goal([subst[v] for v in goal.binder], [apply_subst(c, subst) for c in goal.clauses])


def _merge(c1, c2):
    return Clause(c1.cp + c2.cp, c1.lp + c2.lp, c1.head + c2.head)


def goal_double_negate(g):
    """Return the clause `(g -o bot) -o bot` equivalent to goal `g`."""
    return Clause(lp=(Goal((), (Clause(lp=(g,)),)),))


class Normaliser(object):
    """Apply the rewrite systems that bring formulae into normal forms.

    Each translation dispatches on the category of the formula
    (see `forumlib.syntax.category`) to a method of the same name with
    a prefix naming the translation.

    """

    def __init__(self, logger=None):
        self.logger = logger or logging.getLogger(__name__)

    def _dispatch(self, prefix, f):
        fn = getattr(self, '{0}_{1}'.format(prefix, f.category.lower()), None)
        if fn is None:
            raise NotForumFragment(f)
        return fn(f)

    # FOLL to the Forum fragment

    def forum(self, f):
        """Return the Forum equivalent of any formula `f`."""
        return self._dispatch('forum', f)

    def forum_atom(self, f):
        return f

    forum_bot = forum_top = forum_atom

    def forum_one(self, f):
        return _neg(BOT)

    def forum_zero(self, f):
        return _neg(TOP)

    def forum_par(self, f):
        return par(self.forum(f.left), self.forum(f.right))

    def forum_amp(self, f):
        return amp(self.forum(f.left), self.forum(f.right))

    def forum_lolli(self, f):
        return lolli(self.forum(f.left), self.forum(f.right))

    def forum_implies(self, f):
        return implies(self.forum(f.left), self.forum(f.right))

    def forum_tensor(self, f):
        return _neg(par(_neg(self.forum(f.left)), _neg(self.forum(f.right))))

    def forum_plus(self, f):
        return _neg(amp(_neg(self.forum(f.left)), _neg(self.forum(f.right))))

    def forum_bang(self, f):
        return _neg(implies(self.forum(f.body), BOT))

    def forum_whynot(self, f):
        return implies(_neg(self.forum(f.body)), BOT)

    def forum_dual(self, f):
        return _neg(self.forum(f.body))

    def forum_forall(self, f):
        return forall(f.var, self.forum(f.body))

    def forum_exists(self, f):
        return _neg(forall(f.var, _neg(self.forum(f.body))))

    # Forum formulae to goals

    def goal(self, f):
        """Return the goal equivalent to the Forum formula `f`."""
        return self._dispatch('goal', f)

    def goal_atom(self, f):
        return Goal((), (Clause(head=(f,)),))

    def goal_bot(self, f):
        return Goal((), (Clause(),))

    def goal_top(self, f):
        return TOP_GOAL

    def goal_forall(self, f):
        body = self.goal(f.body)
        var = f.var.fresh()
        subst = Substitution({f.var: var})
        return Goal((var,) + body.binder, [apply_subst(c, subst) for c in body.clauses])

    def goal_par(self, f):
        left = self.goal(f.left)
        right = _freshen(self.goal(f.right))
        binder = left.binder + right.binder
        if left.is_top or right.is_top:
            return Goal(binder, ())
        return Goal(binder, [_merge(c1, c2) for c1 in left.clauses for c2 in right.clauses])

    def goal_amp(self, f):
        left = self.goal(f.left)
        right = _freshen(self.goal(f.right))
        return Goal(left.binder + right.binder, left.clauses + right.clauses)

    def goal_lolli(self, f):
        premise = self.goal(f.left)
        body = _freshen(self.goal(f.right))
        return Goal(body.binder, [Clause(c.cp, (premise,) + c.lp, c.head) for c in body.clauses])

    def goal_implies(self, f):
        premise = self.goal(f.left)
        body = _freshen(self.goal(f.right))
        return Goal(body.binder, [Clause((premise,) + c.cp, c.lp, c.head) for c in body.clauses])

    # Forum formulae to clauses

    def clause(self, f):
        """Return the clause equivalent to the Forum formula `f`."""
        return self._dispatch('clause', f)

    def clause_atom(self, f):
        return Clause(head=(f,))

    def clause_bot(self, f):
        return Clause()

    def clause_top(self, f):
        return goal_double_negate(TOP_GOAL)

    def clause_par(self, f):
        return _merge(self.clause(f.left), self.clause(f.right))

    def clause_amp(self, f):
        both = Goal((), (self.clause(f.left), self.clause(f.right)))
        return goal_double_negate(both)

    def clause_lolli(self, f):
        body = self.clause(f.right)
        return Clause(body.cp, (self.goal(f.left),) + body.lp, body.head)

    def clause_implies(self, f):
        body = self.clause(f.right)
        return Clause((self.goal(f.left),) + body.cp, body.lp, body.head)

    def clause_forall(self, f):
        variables = []
        while f.category == category.FORALL:
            variables.append(f.var)
            f = f.body
        goal = _freshen(Goal(variables, (self.clause(f),)))
        return goal_double_negate(goal)

    # diagnostics

    def to_goal(self, f):
        rv = self.goal(self.forum(f))
        self._report_degenerate(rv)
        return rv

    def to_clause(self, f):
        rv = self.clause(self.forum(f))
        self._report_degenerate(rv)
        return rv

    def _report_degenerate(self, obj):
        found = degenerate_clauses(obj)
        if found:
            self.logger.debug('{0} clause(s) with empty head in {1}'.format(len(found), obj))


_normaliser = Normaliser()


def foll_to_forum(f):
    """Return a formula of the Forum fragment equivalent to `f`.

    >>> from forumlib.syntax import parse_formula
    >>> print(foll_to_forum(parse_formula('1')))
    bot -o bot

    """
    return _normaliser.forum(f)


def formula_to_goal(f):
    """Return the goal equivalent to `f`; raise NotForumFragment outside the fragment."""
    return _normaliser.goal(f)


def formula_to_clause(f):
    return _normaliser.clause(f)


def to_goal(f):
    """Translate any formula into a goal."""
    return _normaliser.to_goal(f)


def to_clause(f):
    return _normaliser.to_clause(f)


def is_forum(f):
    """Return True if `f` only uses the connectives of the Forum fragment."""
    cat = f.category
    if cat not in category.forum:
        return False
    if cat in category.binary:
        return is_forum(f.left) and is_forum(f.right)
    if cat in category.quantifiers:
        return is_forum(f.body)
    return True


def degenerate_clauses(obj):
    """Return the clauses with an empty head occurring anywhere in `obj`."""
    rv = []
    stack = [obj]
    while stack:
        item = stack.pop()
        if item.category == category.GOAL:
            stack.extend(item.clauses)
        elif item.category == category.CLAUSE:
            if not item.head:
                rv.append(item)
            stack.extend(item.cp + item.lp)
    return rv
