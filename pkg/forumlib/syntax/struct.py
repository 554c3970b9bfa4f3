"""Data structures for terms, formulae, goals and clauses.

All structures are treated as immutable values after construction.
Formulae, goals and clauses compare equal when they are equal up to
renaming of bound variables; the components of a clause are compared
as multisets. Terms and atoms compare structurally.

"""

from forumlib.syntax import category
from forumlib.utils import ids

__all__ = [
    'Term',
    'Var',
    'App',
    'Formula',
    'Atom',
    'Constant',
    'Binary',
    'Unary',
    'Quantifier',
    'Goal',
    'Clause',
    'Substitution',
    'ONE',
    'BOT',
    'TOP',
    'ZERO',
    'TOP_GOAL',
    'tensor',
    'par',
    'amp',
    'plus',
    'lolli',
    'implies',
    'bang',
    'whynot',
    'dual',
    'forall',
    'exists',
    'alpha_eq',
    'alpha_key',
    'apply_subst',
    'free_vars',
    'subterms',
    'symbol_names',
    'atoms',
    'map_terms',
    'goal_of_atom',
    'goal_of_clause',
    'goal_to_formula',
    'clause_to_formula',
]


class Term(object):
    """Base class of first order terms."""

    __slots__ = ()
    category = None

    def accept(self, visitor):
        return getattr(visitor, self.category.lower())(self)

    def __str__(self):
        from forumlib.syntax import visitors
        return visitors.print_term(self)


class Var(Term):
    """A variable occurrence.

    Variables are identified by an interned id and a role; the name is only
    used for display. Source variables have the role `bound`, the engine
    introduces `eigen` and `meta` variables, both carrying a level.

    """

    __slots__ = ('name', 'role', 'level', 'uid')
    category = category.VAR

    def __init__(self, name, role=None, level=0, uid=None):
        role = role or category.BOUND
        if role not in category.variable_roles:
            raise ValueError('unknown variable role "{0}"'.format(role))
        self.name = name
        self.role = role
        self.level = level
        if uid is None:
            self.uid = ids.fresh()
        else:
            ids.reserve(uid)
            self.uid = uid

    def __eq__(self, other):
        return isinstance(other, Var) and self.uid == other.uid and self.role == other.role

    def __hash__(self):
        return hash((self.role, self.uid))

    def __repr__(self):
        return 'Var({0!r}, {1!r}, level={2}, uid={3})'.format(self.name, self.role, self.level, self.uid)

    @property
    def is_eigen(self):
        return self.role == category.EIGEN

    @property
    def is_meta(self):
        return self.role == category.META

    def fresh(self, role=None, level=None):
        """Return a new variable with the same display name."""
        return Var(self.name.rstrip("'"),
                   role=self.role if role is None else role,
                   level=self.level if level is None else level)


class App(Term):
    """A function symbol applied to a sequence of terms."""

    __slots__ = ('name', 'args')
    category = category.APP

    def __init__(self, name, args=()):
        self.name = name
        self.args = tuple(args)

    def __eq__(self, other):
        return isinstance(other, App) and self.name == other.name and self.args == other.args

    def __hash__(self):
        return hash((self.name, self.args))

    def __repr__(self):
        return 'App({0!r}, {1!r})'.format(self.name, self.args)

    @property
    def arity(self):
        return len(self.args)


class Formula(object):
    """Base class of first order linear logic formulae."""

    __slots__ = ('_key',)
    category = None

    def accept(self, visitor):
        return getattr(visitor, self.category.lower())(self)

    def key(self):
        """Return the canonical key (equal for α-equivalent formulae)."""
        try:
            return self._key
        except AttributeError:
            self._key = _key(self, {}, 0)
            return self._key

    def __eq__(self, other):
        return isinstance(other, Formula) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __str__(self):
        from forumlib.syntax import visitors
        return visitors.print_formula(self)

    def __repr__(self):
        return '<{0}: {1}>'.format(type(self).__name__, str(self))

    @property
    def is_atom(self):
        return self.category == category.ATOM


class Atom(Formula):
    """A predicate symbol applied to terms."""

    __slots__ = ('pred', 'args')
    category = category.ATOM

    def __init__(self, pred, args=()):
        self.pred = pred
        self.args = tuple(args)

    @property
    def arity(self):
        return len(self.args)


class Constant(Formula):
    """One of the four constants 1, bot, top and 0."""

    __slots__ = ('category',)

    def __init__(self, cat):
        if cat not in category.constants:
            raise ValueError('not a constant: {0}'.format(cat))
        self.category = cat


class Binary(Formula):
    __slots__ = ('category', 'left', 'right')

    def __init__(self, cat, left, right):
        if cat not in category.binary:
            raise ValueError('not a binary connective: {0}'.format(cat))
        self.category = cat
        self.left = left
        self.right = right


class Unary(Formula):
    """A modality or the linear negation of a formula."""

    __slots__ = ('category', 'body')

    def __init__(self, cat, body):
        if cat not in category.unary:
            raise ValueError('not a unary connective: {0}'.format(cat))
        self.category = cat
        self.body = body


class Quantifier(Formula):
    __slots__ = ('category', 'var', 'body')

    def __init__(self, cat, var, body):
        if cat not in category.quantifiers:
            raise ValueError('not a quantifier: {0}'.format(cat))
        self.category = cat
        self.var = var
        self.body = body


ONE = Constant(category.ONE)
BOT = Constant(category.BOT)
TOP = Constant(category.TOP)
ZERO = Constant(category.ZERO)


def tensor(left, right):
    return Binary(category.TENSOR, left, right)


def par(left, right):
    return Binary(category.PAR, left, right)


def amp(left, right):
    return Binary(category.AMP, left, right)


def plus(left, right):
    return Binary(category.PLUS, left, right)


def lolli(left, right):
    return Binary(category.LOLLI, left, right)


def implies(left, right):
    return Binary(category.IMPLIES, left, right)


def bang(body):
    return Unary(category.BANG, body)


def whynot(body):
    return Unary(category.WHYNOT, body)


def dual(body):
    return Unary(category.DUAL, body)


def forall(variables, body):
    """Return the universal closure of `body` over one or more variables."""
    if isinstance(variables, Var):
        variables = (variables,)
    for v in reversed(tuple(variables)):
        body = Quantifier(category.FORALL, v, body)
    return body


def exists(variables, body):
    if isinstance(variables, Var):
        variables = (variables,)
    for v in reversed(tuple(variables)):
        body = Quantifier(category.EXISTS, v, body)
    return body


class Clause(object):
    """A clause `G1 => ... => Gk'' => H1 -o ... -o Hk' -o a1 par ... par ak`.

    `cp` holds the classical premises, `lp` the linear premises and `head`
    the atoms of the head; an empty head stands for bot.

    """

    __slots__ = ('cp', 'lp', 'head', '_key')
    category = category.CLAUSE

    def __init__(self, cp=(), lp=(), head=()):
        self.cp = tuple(cp)
        self.lp = tuple(lp)
        self.head = tuple(head)

    @property
    def hd(self):
        return self.head

    def key(self):
        try:
            return self._key
        except AttributeError:
            self._key = _key(self, {}, 0)
            return self._key

    def __eq__(self, other):
        return isinstance(other, Clause) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __str__(self):
        return str(clause_to_formula(self))

    def __repr__(self):
        return '<Clause: {0}>'.format(str(self))

    @property
    def is_degenerate(self):
        """True if the head is empty (the clause is always applicable)."""
        return not self.head


class Goal(object):
    """A goal `forall x1 ... xn. (d1 & ... & dh)`; no clauses means top."""

    __slots__ = ('binder', 'clauses', '_key')
    category = category.GOAL

    def __init__(self, binder=(), clauses=()):
        self.binder = tuple(binder)
        self.clauses = tuple(clauses)
        if len(set(self.binder)) != len(self.binder):
            raise ValueError('binder variables of a goal must be distinct')

    def key(self):
        try:
            return self._key
        except AttributeError:
            self._key = _key(self, {}, 0)
            return self._key

    def __eq__(self, other):
        return isinstance(other, Goal) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __str__(self):
        return str(goal_to_formula(self))

    def __repr__(self):
        return '<Goal: {0}>'.format(str(self))

    @property
    def is_top(self):
        return not self.clauses


TOP_GOAL = Goal((), ())


class Substitution(dict):
    """A finite map from variables to terms.

    Calling a substitution applies it (capture avoiding) to its argument.

    """

    def __call__(self, target):
        return apply_subst(target, self)

    def __repr__(self):
        items = ', '.join('{0} := {1}'.format(k, v) for k, v in self.items())
        return '<Substitution: {{{0}}}>'.format(items)

    def range_vars(self):
        rv = set()
        for t in self.values():
            rv |= free_vars(t)
        return rv

    def normalized(self):
        """Return an idempotent version of this substitution."""
        current = Substitution(self)
        for _ in range(len(current) + 1):
            updated = Substitution((k, apply_subst(v, current)) for k, v in current.items())
            if updated == current:
                return updated
            current = updated
        raise ValueError('substitution is cyclic: {0!r}'.format(self))


# canonical keys

def _sorted(keys):
    return tuple(sorted(keys, key=repr))


def _key(obj, env, depth):
    cat = obj.category
    if cat == category.VAR:
        index = env.get(obj)
        if index is not None:
            return ('b', index)
        return ('v', obj.role, obj.uid)
    elif cat == category.APP:
        return ('f', obj.name, tuple(_key(a, env, depth) for a in obj.args))
    elif cat == category.ATOM:
        return ('a', obj.pred, tuple(_key(a, env, depth) for a in obj.args))
    elif cat in category.constants:
        return (cat,)
    elif cat in category.binary:
        return (cat, _key(obj.left, env, depth), _key(obj.right, env, depth))
    elif cat in category.unary:
        return (cat, _key(obj.body, env, depth))
    elif cat in category.quantifiers:
        inner = dict(env)
        inner[obj.var] = depth
        return (cat, _key(obj.body, inner, depth + 1))
    elif cat == category.GOAL:
        inner = dict(env)
        for i, v in enumerate(obj.binder):
            inner[v] = depth + i
        depth += len(obj.binder)
        return ('G', len(obj.binder), tuple(_key(c, inner, depth) for c in obj.clauses))
    elif cat == category.CLAUSE:
        return ('C',
                _sorted(_key(g, env, depth) for g in obj.cp),
                _sorted(_key(g, env, depth) for g in obj.lp),
                _sorted(_key(a, env, depth) for a in obj.head))
    raise TypeError('no canonical key for {0!r}'.format(obj))


def alpha_key(obj):
    """Return a hashable key shared exactly by α-equivalent structures."""
    if hasattr(obj, 'key'):
        return obj.key()
    return _key(obj, {}, 0)


def alpha_eq(f, g):
    """Return True if `f` and `g` are equal up to renaming of bound variables.

    >>> x, y = Var('x'), Var('y')
    >>> alpha_eq(forall(x, Atom('a', [x])), forall(y, Atom('a', [y])))
    True

    """
    if f.category != g.category:
        return False
    return alpha_key(f) == alpha_key(g)


# free variables and substitution

def free_vars(obj):
    """Return the set of variables occurring free in `obj`."""
    rv = set()
    _free_vars(obj, frozenset(), rv)
    return rv


def _free_vars(obj, bound, acc):
    cat = obj.category
    if cat == category.VAR:
        if obj not in bound:
            acc.add(obj)
    elif cat in (category.APP, category.ATOM):
        for a in obj.args:
            _free_vars(a, bound, acc)
    elif cat in category.binary:
        _free_vars(obj.left, bound, acc)
        _free_vars(obj.right, bound, acc)
    elif cat in category.unary:
        _free_vars(obj.body, bound, acc)
    elif cat in category.quantifiers:
        _free_vars(obj.body, bound | {obj.var}, acc)
    elif cat == category.GOAL:
        inner = bound | set(obj.binder)
        for c in obj.clauses:
            _free_vars(c, inner, acc)
    elif cat == category.CLAUSE:
        for g in obj.cp + obj.lp:
            _free_vars(g, bound, acc)
        for a in obj.head:
            _free_vars(a, bound, acc)


def apply_subst(target, subst):
    """Apply the substitution `subst` to `target`, avoiding capture.

    Bound variables that clash with the free variables of the range of
    `subst` are renamed apart.

    """
    if not subst:
        return target
    range_vars = set()
    for t in subst.values():
        range_vars |= free_vars(t)
    return _subst(target, dict(subst), range_vars)


def _rebind(var, subst, range_vars):
    """Drop `var` from `subst`; rename it if the range would capture it."""
    subst.pop(var, None)
    if var in range_vars:
        fresh = var.fresh()
        subst[var] = fresh
        return fresh
    return var


def _subst(obj, subst, range_vars):
    if not subst:
        return obj
    cat = obj.category
    if cat == category.VAR:
        return subst.get(obj, obj)
    elif cat == category.APP:
        return App(obj.name, [_subst(a, subst, range_vars) for a in obj.args])
    elif cat == category.ATOM:
        return Atom(obj.pred, [_subst(a, subst, range_vars) for a in obj.args])
    elif cat in category.constants:
        return obj
    elif cat in category.binary:
        return Binary(cat, _subst(obj.left, subst, range_vars), _subst(obj.right, subst, range_vars))
    elif cat in category.unary:
        return Unary(cat, _subst(obj.body, subst, range_vars))
    elif cat in category.quantifiers:
        inner = dict(subst)
        var = _rebind(obj.var, inner, range_vars)
        return Quantifier(cat, var, _subst(obj.body, inner, range_vars))
    elif cat == category.GOAL:
        inner = dict(subst)
        binder = [_rebind(v, inner, range_vars) for v in obj.binder]
        return Goal(binder, [_subst(c, inner, range_vars) for c in obj.clauses])
    elif cat == category.CLAUSE:
        return Clause([_subst(g, subst, range_vars) for g in obj.cp],
                      [_subst(g, subst, range_vars) for g in obj.lp],
                      [_subst(a, subst, range_vars) for a in obj.head])
    raise TypeError('cannot substitute into {0!r}'.format(obj))


def map_terms(obj, fn):
    """Return `obj` with `fn` applied to every argument term of every atom."""
    cat = obj.category
    if cat == category.ATOM:
        return Atom(obj.pred, [fn(a) for a in obj.args])
    elif cat in category.constants:
        return obj
    elif cat in category.binary:
        return Binary(cat, map_terms(obj.left, fn), map_terms(obj.right, fn))
    elif cat in category.unary:
        return Unary(cat, map_terms(obj.body, fn))
    elif cat in category.quantifiers:
        return Quantifier(cat, obj.var, map_terms(obj.body, fn))
    elif cat == category.GOAL:
        return Goal(obj.binder, [map_terms(c, fn) for c in obj.clauses])
    elif cat == category.CLAUSE:
        return Clause([map_terms(g, fn) for g in obj.cp],
                      [map_terms(g, fn) for g in obj.lp],
                      [map_terms(a, fn) for a in obj.head])
    raise TypeError('cannot map terms of {0!r}'.format(obj))


def subterms(obj):
    """ Return a generator to iterate through all terms occurring in `obj`. """
    cat = obj.category
    if cat == category.VAR:
        yield obj
    elif cat == category.APP:
        yield obj
        for a in obj.args:
            yield from subterms(a)
    elif cat == category.ATOM:
        for a in obj.args:
            yield from subterms(a)
    elif cat in category.binary:
        yield from subterms(obj.left)
        yield from subterms(obj.right)
    elif cat in category.unary or cat in category.quantifiers:
        yield from subterms(obj.body)
    elif cat == category.GOAL:
        for c in obj.clauses:
            yield from subterms(c)
    elif cat == category.CLAUSE:
        for g in obj.cp + obj.lp:
            yield from subterms(g)
        for a in obj.head:
            yield from subterms(a)


def symbol_names(obj):
    """Return the names of all function and predicate symbols in `obj`."""
    rv = set(t.name for t in subterms(obj) if t.category == category.APP)
    rv |= set(a.pred for a in atoms(obj))
    return rv


def atoms(obj):
    cat = obj.category
    if cat == category.ATOM:
        yield obj
    elif cat in category.binary:
        yield from atoms(obj.left)
        yield from atoms(obj.right)
    elif cat in category.unary or cat in category.quantifiers:
        yield from atoms(obj.body)
    elif cat == category.GOAL:
        for c in obj.clauses:
            yield from atoms(c)
    elif cat == category.CLAUSE:
        for g in obj.cp + obj.lp:
            yield from atoms(g)
        yield from obj.head


# goals and clauses as formulae

def goal_of_atom(atom):
    """Return the goal made of the single clause `atom`."""
    return Goal((), (Clause((), (), (atom,)),))


def goal_of_clause(clause, binder=()):
    return Goal(binder, (clause,))


def goal_to_formula(goal):
    """Return the formula `forall x. (d1 & ... & dh)` embedding `goal`."""
    if goal.clauses:
        body = clause_to_formula(goal.clauses[0])
        for c in goal.clauses[1:]:
            body = amp(body, clause_to_formula(c))
    else:
        body = TOP
    return forall(goal.binder, body)


def clause_to_formula(clause):
    """Return the formula `G1 => ... => H1 -o ... -o a1 par ... par ak`."""
    if clause.head:
        body = clause.head[0]
        for a in clause.head[1:]:
            body = par(body, a)
    else:
        body = BOT
    for g in reversed(clause.lp):
        body = lolli(goal_to_formula(g), body)
    for g in reversed(clause.cp):
        body = implies(goal_to_formula(g), body)
    return body
