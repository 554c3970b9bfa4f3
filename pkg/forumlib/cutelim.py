"""Cut elimination for G-Forum proofs.

The elimination runs in three passes, each preserving the conclusion:

 1. generalized classical cuts are pushed into the right sub-proof until
    the cut goal is either unused (and dropped by weakening) or selected
    from the classical program, where the selection is turned into a
    linear cut and the duplicated classical program is contracted;
 2. linear cuts are commuted upwards through the right sub-proof until
    the cut goal is selected, then replaced by cuts on the premises of
    the selected clause, which have a smaller cut-rank;
 3. contractions are removed by deleting one copy of the contracted goal
    from the classical program of every sequent above them.

Every pass works bottom-up, so the sub-proofs of a cut being reduced
never contain a cut of the same kind.

"""

import logging

from forumlib.errors import CutEliminationError, InvalidProof, NonTermination, RankViolation
from forumlib.proofs.checker import Checker
from forumlib.proofs.struct import (
    GR, GL, CUT_LINEAR, GEN_CUT, CONTRACT,
    ProofNode, gl_instance, gl_node, gr_node, cut_linear_node, gen_cut_node, contract_node,
    subst_proof, cut_rank_goal, cut_rank_proof, dump_proof
)
from forumlib.sequent import GSequent, mset_diff, mset_count, mset_member, seq_eq
from forumlib.syntax.struct import Substitution, alpha_eq, free_vars

__all__ = [
    'CutEliminator',
    'weaken_classical',
    'eliminate_gen_cut_classical',
    'eliminate_cut_linear',
    'eliminate_contraction',
    'cut_eliminate',
]

DEFAULT_MAX_STEPS = 100000


def _rebuild(p, children):
    children = tuple(children)
    if all(a is b for a, b in zip(children, p.children)):
        return p
    return ProofNode(p.rule, p.conclusion, p.payload, children)


def _fresh_eigens(p, avoid):
    """Rename the eigenvariables of a GR root that occur in `avoid`."""
    if p.rule != GR:
        return p
    clash = [e for e in p.payload['eigen'] if e in avoid]
    if not clash:
        return p
    rho = Substitution((e, e.fresh()) for e in clash)
    eigens = tuple(rho.get(e, e) for e in p.payload['eigen'])
    payload = dict(p.payload, eigen=eigens)
    return ProofNode(GR, p.conclusion, payload, [subst_proof(c, rho) for c in p.children])


def _contract_all(p, goals):
    for g in goals:
        p = contract_node(p, g)
    return p


def _weaken(p, extra, avoid):
    p = _fresh_eigens(p, avoid)
    c = p.conclusion
    if p.rule in (CUT_LINEAR, GEN_CUT):
        left, right = p.children
        children = (left, _weaken(right, extra, avoid))
    else:
        children = [_weaken(child, extra, avoid) for child in p.children]
    return ProofNode(p.rule, c.replace(psi=c.psi + extra), p.payload, children)


def _drop(p, goal):
    """Remove one copy of `goal` from the classical program of every sequent of `p`."""
    c = p.conclusion
    psi = mset_diff(c.psi, [goal])
    payload = p.payload
    if p.rule == GL and payload['side'] == 'psi':
        selected = c.psi[payload['index']]
        index = next(i for i, g in enumerate(psi) if alpha_eq(g, selected))
        payload = dict(payload, index=index)
    return ProofNode(p.rule, c.replace(psi=psi), payload, [_drop(child, goal) for child in p.children])


def _selected(p):
    c, payload = p.conclusion, p.payload
    source = c.psi if payload['side'] == 'psi' else c.gamma
    return source[payload['index']]


def _split_premises(p):
    """Return the classical and the linear premises of a GL node."""
    payload = p.payload
    inst = gl_instance(_selected(p), payload['clause'], payload['sigma'])
    k = len(inst.cp)
    return list(p.children[:k]), list(p.children[k:])


class CutEliminator(object):
    """Normalise proofs to cut-free and contraction-free form.

    `steps` records one line per applied case:
    `<lemma> <case> rank <before> -> <after>`. With `check_steps` the
    result of every case is re-checked. More than `max_steps` cases raise
    NonTermination.

    """

    def __init__(self, check_steps=False, max_steps=DEFAULT_MAX_STEPS, logger=None):
        self.check_steps = check_steps
        self.max_steps = max_steps
        self.logger = logger or logging.getLogger(__name__)
        self.checker = Checker(logger=self.logger)
        self.steps = []

    def __call__(self, proof):
        return self.cut_eliminate(proof)

    def _require_valid(self, p):
        result = self.checker.check(p)
        if not result:
            raise InvalidProof(result)

    def _step(self, lemma, case, before, result):
        if len(self.steps) >= self.max_steps:
            raise NonTermination('more than {0} elimination steps; current proof:\n{1}'
                                 .format(self.max_steps, dump_proof(result)))
        line = '{0} {1} rank {2} -> {3}'.format(lemma, case, before, cut_rank_proof(result))
        self.steps.append(line)
        self.logger.debug(line)
        if self.check_steps:
            self._require_valid(result)
        return result

    # weakening

    def weaken_classical(self, p, psi_extra):
        """Add `psi_extra` to the classical program of the conclusion of `p`."""
        extra = tuple(psi_extra)
        if not extra:
            return p
        avoid = set()
        for g in extra:
            avoid |= free_vars(g)
        return _weaken(p, extra, avoid)

    # generalized classical cuts

    def eliminate_gen_cut_classical(self, p):
        """Return a proof of the same sequent without classical cuts."""
        self._require_valid(p)
        return self._gen_pass(p)

    def _gen_pass(self, p):
        children = [self._gen_pass(c) for c in p.children]
        if p.rule == GEN_CUT:
            left, right = children
            return self._push_gen(left, p.goal, p.payload['copies'], right)
        return _rebuild(p, children)

    def _push_gen(self, left, goal, copies, right):
        lc = left.conclusion
        before = max(cut_rank_goal(goal), cut_rank_proof(left), cut_rank_proof(right))
        if copies == 0:
            return self._step('gen-cut', 'unused', before, self.weaken_classical(right, lc.psi))
        right = _fresh_eigens(right, lc.free_vars())
        rc = right.conclusion
        psi = lc.psi + mset_diff(rc.psi, [goal] * copies)
        if right.rule == GR:
            children = [self._push_gen(left, goal, copies, c) for c in right.children]
            rv = ProofNode(GR, GSequent(psi, rc.gamma, rc.lam, rc.focus), right.payload, children)
            case = 'gr' if children else 'top'
        elif right.rule == GL:
            payload = right.payload
            selected = _selected(right)
            classical, linear = _split_premises(right)
            classical = [self._push_gen(left, goal, copies, c) for c in classical]
            linear = [self._push_gen(left, goal, copies, c) for c in linear]
            if payload['side'] == 'psi' and alpha_eq(selected, goal) and mset_count(goal, rc.psi) == copies:
                # the selection used a cut copy: select it from the linear program instead
                node = gl_node(psi, 'gamma', selected, payload['clause'], payload['sigma'], classical, linear)
                rv = _contract_all(cut_linear_node(left, node), lc.psi)
                case = 'gl-principal'
            else:
                rv = gl_node(psi, payload['side'], selected, payload['clause'], payload['sigma'], classical, linear)
                case = 'gl'
        elif right.rule == CUT_LINEAR:
            a, b = right.children
            na = min(copies, mset_count(goal, a.conclusion.psi))
            nb = copies - na
            a = self._push_gen(left, goal, na, a) if na else a
            b = self._push_gen(left, goal, nb, b) if nb else b
            rv = cut_linear_node(a, b, right.goal)
            if na and nb:
                rv = _contract_all(rv, lc.psi)
            case = 'cut-linear'
        elif right.rule == CONTRACT:
            child = right.children[0]
            if alpha_eq(right.goal, goal):
                rv = self._push_gen(left, goal, copies + 1, child)
                case = 'contraction-principal'
            else:
                rv = contract_node(self._push_gen(left, goal, copies, child), right.goal)
                case = 'contraction'
        else:
            raise CutEliminationError('cannot push a classical cut into a {0} node'.format(right.rule))
        return self._step('gen-cut', case, before, rv)

    # linear cuts

    def eliminate_cut_linear(self, p):
        """Return a proof of the same sequent without linear cuts.

        The proof must not contain classical cuts.

        """
        self._require_valid(p)
        if any(node.rule == GEN_CUT for _, node in p.walk()):
            raise CutEliminationError('eliminate classical cuts before linear cuts')
        rank = cut_rank_proof(p)
        self.logger.debug('linear cuts up to rank {0}'.format(rank))
        while rank > 0:
            p = self._linear_pass(p)
            after = cut_rank_proof(p)
            self.logger.debug('linear-cut pass rank {0} -> {1}'.format(rank, after))
            if after >= rank:
                raise RankViolation('linear cut elimination left cut-rank {0} (was {1})'.format(after, rank))
            rank = after
        return p

    def _linear_pass(self, p):
        children = [self._linear_pass(c) for c in p.children]
        if p.rule == CUT_LINEAR:
            left, right = children
            return self._push_linear(left, right, p.goal)
        return _rebuild(p, children)

    def _push_linear(self, left, right, goal):
        before = max(cut_rank_goal(goal), cut_rank_proof(left), cut_rank_proof(right))
        if left.rule == CONTRACT:
            rv = contract_node(self._push_linear(left.children[0], right, goal), left.goal)
            return self._step('linear-cut', 'contraction-left', before, rv)
        if right.rule == CONTRACT:
            rv = contract_node(self._push_linear(left, right.children[0], goal), right.goal)
            return self._step('linear-cut', 'contraction', before, rv)
        lc = left.conclusion
        right = _fresh_eigens(right, lc.free_vars())
        rc = right.conclusion
        if right.rule == GR:
            children = [self._push_linear(left, c, goal) for c in right.children]
            rv = gr_node(lc.psi + rc.psi, lc.gamma + mset_diff(rc.gamma, [goal]), lc.lam + rc.lam, rc.focus,
                         right.payload['eigen'], children)
            if children:
                case = 'gr'
            else:
                case = 'basis' if left.rule == GR and not left.children else 'top'
        elif right.rule == GL:
            payload = right.payload
            selected = _selected(right)
            if payload['side'] == 'gamma' and alpha_eq(selected, goal):
                rv = self._key_case(left, right)
                case = 'principal'
            else:
                classical, linear = _split_premises(right)
                owner = next((i for i, c in enumerate(linear) if mset_member(goal, c.conclusion.gamma)), None)
                if owner is None:
                    raise CutEliminationError('cut goal {0} is not used by {1!r}'.format(goal, right))
                classical = [self.weaken_classical(c, lc.psi) for c in classical]
                linear = [self._push_linear(left, c, goal) if i == owner else self.weaken_classical(c, lc.psi)
                          for i, c in enumerate(linear)]
                rv = gl_node(lc.psi + rc.psi, payload['side'], selected, payload['clause'], payload['sigma'],
                             classical, linear)
                case = 'gl'
        else:
            raise CutEliminationError('cannot push a linear cut into a {0} node'.format(right.rule))
        return self._step('linear-cut', case, before, rv)

    def _key_case(self, left, right):
        """Replace a cut on a selected goal by cuts on the premises of the selected clause."""
        if left.rule != GR:
            raise CutEliminationError('the left premise of a linear cut must end with GR, not {0}'.format(left.rule))
        rc = right.conclusion
        payload = right.payload
        classical, linear = _split_premises(right)
        rho = Substitution(zip(left.payload['eigen'], payload['sigma']))
        rv = subst_proof(left.children[payload['clause']], rho)
        for child in linear:
            rv = cut_linear_node(child, rv)
        for child in classical:
            rv = gen_cut_node(child, rv)
        n = len(linear) + len(classical)
        if n == 0:
            rv = self.weaken_classical(rv, rc.psi)
        for _ in range(n - 1):
            rv = _contract_all(rv, rc.psi)
        self.logger.debug('linear-cut key rank {0} -> {1}'.format(cut_rank_goal(_selected(right)), cut_rank_proof(rv)))
        rv = self._gen_pass(rv)
        return self._linear_pass(rv)

    # contraction

    def eliminate_contraction(self, p):
        """Return a proof of the same sequent without contractions.

        The proof may only contain GR, GL and contraction nodes.

        """
        self._require_valid(p)
        rules = set(node.rule for _, node in p.walk()) - {GR, GL, CONTRACT}
        if rules:
            raise CutEliminationError('eliminate cuts before contractions (found {0})'
                                      .format(', '.join(sorted(rules))))
        return self._contraction_pass(p)

    def _contraction_pass(self, p):
        children = [self._contraction_pass(c) for c in p.children]
        if p.rule != CONTRACT:
            return _rebuild(p, children)
        child = children[0]
        if not child.children:
            case = 'leaf'
        elif child.rule == GL and child.payload['side'] == 'psi' and alpha_eq(_selected(child), p.goal):
            case = 'gl-redirect'
        else:
            case = child.rule.lower()
        return self._step('contraction', case, 0, _drop(child, p.goal))

    # pipeline

    def cut_eliminate(self, p):
        """Return a cut-free and contraction-free proof of the conclusion of `p`."""
        self._require_valid(p)
        self.logger.debug('eliminating cuts from a proof of {0}'.format(p.conclusion))
        rv = self.eliminate_gen_cut_classical(p)
        rv = self.eliminate_cut_linear(rv)
        rv = self.eliminate_contraction(rv)
        if not seq_eq(p.conclusion, rv.conclusion):
            raise CutEliminationError('conclusion changed from {0} to {1}'.format(p.conclusion, rv.conclusion))
        self.logger.info('cut elimination finished after {0} step(s)'.format(len(self.steps)))
        return rv


def weaken_classical(p, psi_extra):
    return CutEliminator().weaken_classical(p, psi_extra)


def eliminate_gen_cut_classical(p):
    return CutEliminator().eliminate_gen_cut_classical(p)


def eliminate_cut_linear(p):
    return CutEliminator().eliminate_cut_linear(p)


def eliminate_contraction(p):
    return CutEliminator().eliminate_contraction(p)


def cut_eliminate(p):
    """Return a cut-free proof with the same conclusion as `p`.

    >>> from forumlib.engine import prove
    >>> from forumlib.sequent import parse_sequent
    >>> p = prove(parse_sequent('gamma: a\\nlambda: a')).proof
    >>> cut_eliminate(p).conclusion == p.conclusion
    True

    """
    return CutEliminator().cut_eliminate(p)
