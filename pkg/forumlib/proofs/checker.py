"""Independent checking of proof trees.

The checker re-derives the premises of every node from its conclusion
and payload and compares them with the conclusions of the sub-proofs.
It only uses multiset arithmetic and α-equivalence; it never consults
the state of a proof search.

"""

import logging

from forumlib.errors import MultisetError
from forumlib.proofs.struct import gr_premises, gl_instance
from forumlib.sequent import GSequent, seq_eq, mset_diff, mset_count, mset_eq
from forumlib.syntax.struct import alpha_eq

__all__ = ['CheckResult', 'Checker', 'check']


class CheckResult(object):
    """The outcome of checking a proof.

    `path` lists the child indices leading from the root to the first
    node that is not an instance of its rule.

    """

    __slots__ = ('valid', 'path', 'reason')

    def __init__(self, valid=True, path=(), reason=''):
        self.valid = valid
        self.path = tuple(path)
        self.reason = reason

    def __bool__(self):
        return self.valid

    def __str__(self):
        if self.valid:
            return 'valid'
        where = '.'.join(str(i) for i in self.path) or 'root'
        return 'invalid at {0}: {1}'.format(where, self.reason)

    def __repr__(self):
        return '<CheckResult: {0}>'.format(str(self))


VALID = CheckResult()


class _Violation(Exception):
    pass


def _require(condition, reason, *args):
    if not condition:
        raise _Violation(reason.format(*args))


class Checker(object):

    def __init__(self, logger=None):
        self.logger = logger or logging.getLogger(__name__)

    def __call__(self, proof):
        return self.check(proof)

    def check(self, proof):
        for path, node in proof.walk():
            fn = getattr(self, node.rule.lower(), None)
            try:
                _require(fn is not None, 'unknown rule {0}', node.rule)
                fn(node)
            except _Violation as e:
                result = CheckResult(False, path, '{0}: {1}'.format(node.rule, e))
                self.logger.info(str(result))
                return result
            except (MultisetError, KeyError, IndexError, TypeError) as e:
                result = CheckResult(False, path, '{0}: malformed node ({1!r})'.format(node.rule, e))
                self.logger.info(str(result))
                return result
        return VALID

    def _children(self, node, count):
        _require(len(node.children) == count, 'expected {0} premises, found {1}', count, len(node.children))

    def gr(self, node):
        c = node.conclusion
        _require(c.focus is not None, 'the conclusion has no goal in focus')
        eigens = node.payload['eigen']
        _require(len(eigens) == len(c.focus.binder), 'expected {0} eigenvariables, found {1}',
                 len(c.focus.binder), len(eigens))
        _require(all(getattr(e, 'is_eigen', False) for e in eigens), 'the renaming must use eigenvariables')
        _require(len(set(eigens)) == len(eigens), 'eigenvariables must be distinct')
        free = c.free_vars()
        for e in eigens:
            _require(e not in free, 'eigenvariable {0} is free in the conclusion', e)
        premises = gr_premises(c, eigens)
        self._children(node, len(premises))
        for i, (child, expected) in enumerate(zip(node.children, premises)):
            _require(seq_eq(child.conclusion, expected), 'premise {0} is {1}, expected {2}',
                     i, child.conclusion, expected)

    def gl(self, node):
        c = node.conclusion
        p = node.payload
        _require(c.focus is None, 'the conclusion must be a state sequent')
        side = p['side']
        _require(side in ('psi', 'gamma'), 'unknown side {0}', side)
        source = c.psi if side == 'psi' else c.gamma
        index = p['index']
        _require(0 <= index < len(source), 'no goal at position {0} of {1}', index, side)
        goal = source[index]
        _require(0 <= p['clause'] < len(goal.clauses), 'goal {0} has no clause {1}', goal, p['clause'])
        _require(len(p['sigma']) == len(goal.binder), 'substitution does not match the binder of {0}', goal)
        inst = gl_instance(goal, p['clause'], p['sigma'])
        head = p['head']
        _require(len(set(head)) == len(head) and all(0 <= i < len(c.lam) for i in head),
                 'head positions {0} are not distinct positions of the atomic context', list(head))
        _require(mset_eq([c.lam[i] for i in head], inst.head), 'head {0} does not match the atomic context',
                 ', '.join(str(a) for a in inst.head))
        split = p['split']
        _require(len(split) == len(inst.lp), 'expected {0} parts in the split, found {1}', len(inst.lp), len(split))
        rest_gamma = [i for i in range(len(c.gamma)) if side == 'psi' or i != index]
        rest_lam = [i for i in range(len(c.lam)) if i not in head]
        used_gamma = sorted(i for s in split for i in s['gamma'])
        used_lam = sorted(i for s in split for i in s['lambda'])
        _require(used_gamma == rest_gamma, 'the split does not partition the linear program')
        _require(used_lam == rest_lam, 'the split does not partition the atomic context')
        self._children(node, len(inst.cp) + len(inst.lp))
        classical = node.children[:len(inst.cp)]
        linear = node.children[len(inst.cp):]
        for j, (child, g) in enumerate(zip(classical, inst.cp)):
            expected = GSequent(c.psi, (), (), g)
            _require(seq_eq(child.conclusion, expected), 'classical premise {0} is {1}, expected {2}',
                     j, child.conclusion, expected)
        for i, (child, h) in enumerate(zip(linear, inst.lp)):
            expected = GSequent(c.psi, [c.gamma[k] for k in split[i]['gamma']],
                                [c.lam[k] for k in split[i]['lambda']], h)
            _require(seq_eq(child.conclusion, expected), 'linear premise {0} is {1}, expected {2}',
                     i, child.conclusion, expected)

    def cutlinear(self, node):
        self._children(node, 2)
        goal = node.goal
        left, right = (n.conclusion for n in node.children)
        _require(left.focus is not None and alpha_eq(left.focus, goal),
                 'the left premise does not prove the cut goal {0}', goal)
        _require(mset_count(goal, right.gamma) > 0, 'the cut goal {0} is not in the right linear program', goal)
        expected = GSequent(left.psi + right.psi, left.gamma + mset_diff(right.gamma, [goal]),
                            left.lam + right.lam, right.focus)
        _require(seq_eq(node.conclusion, expected), 'conclusion is {0}, expected {1}', node.conclusion, expected)

    def gencutclassical(self, node):
        self._children(node, 2)
        goal = node.goal
        copies = node.payload['copies']
        left, right = (n.conclusion for n in node.children)
        _require(copies >= 0, 'negative number of copies')
        _require(left.focus is not None and alpha_eq(left.focus, goal),
                 'the left premise does not prove the cut goal {0}', goal)
        _require(not left.gamma and not left.lam, 'the left premise must have empty linear contexts')
        _require(mset_count(goal, right.psi) >= copies, 'fewer than {0} copies of {1} in the right premise',
                 copies, goal)
        expected = GSequent(left.psi + mset_diff(right.psi, [goal] * copies), right.gamma, right.lam, right.focus)
        _require(seq_eq(node.conclusion, expected), 'conclusion is {0}, expected {1}', node.conclusion, expected)

    def contract(self, node):
        self._children(node, 1)
        goal = node.goal
        child = node.children[0].conclusion
        _require(mset_count(goal, child.psi) >= 2, 'fewer than two copies of {0} in the premise', goal)
        expected = GSequent(mset_diff(child.psi, [goal]), child.gamma, child.lam, child.focus)
        _require(seq_eq(node.conclusion, expected), 'conclusion is {0}, expected {1}', node.conclusion, expected)


_checker = Checker()


def check(proof):
    """Return a `CheckResult` for `proof`."""
    return _checker.check(proof)
