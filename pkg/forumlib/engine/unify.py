"""Metavariable bindings with a trail for backtracking.

Every binding is recorded on a trail; `mark` returns the current length
of the trail and `undo` restores the store to a mark. Bindings obey two
side conditions:

 * occurs check: a metavariable is never bound to a term containing it;
 * level check: a metavariable of level n is never bound to a term
   containing an eigenvariable of level greater than n.

Binding a metavariable lowers the level of the metavariables occurring
in its value to its own level.

"""

from forumlib.syntax import category
from forumlib.syntax.struct import Var, App, map_terms

__all__ = ['BindingStore', 'unify']


class BindingStore(object):
    """Bindings of metavariables and the level counter of one search."""

    def __init__(self):
        self.bindings = {}
        self.levels = {}
        self.trail = []
        self.level = 0

    def __repr__(self):
        return '<BindingStore: {0} binding(s), level {1}>'.format(len(self.bindings), self.level)

    # variables

    def new_eigens(self, variables):
        """Return fresh eigenvariables at a new level, one per variable."""
        self.level += 1
        return [Var(v.name.rstrip("'"), role=category.EIGEN, level=self.level) for v in variables]

    def new_metas(self, variables):
        rv = [Var(v.name.rstrip("'").upper(), role=category.META, level=self.level) for v in variables]
        for m in rv:
            self.levels[m.uid] = m.level
        return rv

    def level_of(self, var):
        if var.role == category.META:
            return self.levels.get(var.uid, var.level)
        return var.level

    # trail

    def mark(self):
        return len(self.trail)

    def undo(self, mark):
        while len(self.trail) > mark:
            entry = self.trail.pop()
            if entry[0] == 'bind':
                del self.bindings[entry[1]]
            else:
                self.levels[entry[1]] = entry[2]

    # terms

    def walk(self, t):
        while t.category == category.VAR and t.role == category.META and t.uid in self.bindings:
            t = self.bindings[t.uid]
        return t

    def resolve(self, obj):
        """Return `obj` with all bound metavariables replaced by their values."""
        if obj.category == category.VAR:
            t = self.walk(obj)
            return t if t.category == category.VAR else self.resolve(t)
        if obj.category == category.APP:
            return App(obj.name, [self.resolve(a) for a in obj.args])
        if not self.bindings:
            return obj
        return map_terms(obj, self.resolve)

    def _variables(self, t, acc):
        t = self.walk(t)
        if t.category == category.VAR:
            acc.append(t)
        else:
            for a in t.args:
                self._variables(a, acc)
        return acc

    def bind(self, meta, value):
        variables = self._variables(value, [])
        if meta in variables:
            return False
        level = self.level_of(meta)
        for v in variables:
            if v.role == category.EIGEN and v.level > level:
                return False
        for v in variables:
            if v.role == category.META and self.level_of(v) > level:
                self.trail.append(('level', v.uid, self.level_of(v)))
                self.levels[v.uid] = level
        self.bindings[meta.uid] = value
        self.trail.append(('bind', meta.uid))
        return True

    def unify(self, t1, t2):
        """Unify two terms; on failure the store is left unchanged."""
        mark = self.mark()
        if self._unify(t1, t2):
            return True
        self.undo(mark)
        return False

    def _unify(self, t1, t2):
        t1, t2 = self.walk(t1), self.walk(t2)
        if t1.category == category.VAR and t2.category == category.VAR and t1 == t2:
            return True
        if t1.category == category.VAR and t1.role == category.META:
            return self.bind(t1, t2)
        if t2.category == category.VAR and t2.role == category.META:
            return self.bind(t2, t1)
        if t1.category == category.APP and t2.category == category.APP:
            if t1.name != t2.name or len(t1.args) != len(t2.args):
                return False
            return all(self._unify(a, b) for a, b in zip(t1.args, t2.args))
        return False

    def unify_atoms(self, a, b):
        if a.pred != b.pred or len(a.args) != len(b.args):
            return False
        mark = self.mark()
        if all(self._unify(x, y) for x, y in zip(a.args, b.args)):
            return True
        self.undo(mark)
        return False


def unify(t1, t2, store):
    """Unify `t1` and `t2` extending `store`; return False on failure.

    >>> store = BindingStore()
    >>> x, = store.new_metas([Var('x')])
    >>> unify(x, App('f', [App('c')]), store)
    True
    >>> unify(x, App('f', [x]), BindingStore())
    False

    """
    return store.unify(t1, t2)
