"""Proof trees of G-Forum and its extensions with cuts and contraction.

A proof node stores its rule, its conclusion, a payload with the data
needed to re-derive the premises and the list of sub-proofs. Payloads
by rule:

    GR                {'eigen': eigenvariables replacing the binder}
    GL                {'side': 'psi' or 'gamma', 'index': position of the
                       selected goal, 'clause': clause index,
                       'sigma': terms replacing the binder,
                       'head': positions in lam matched by the head,
                       'split': one {'gamma': [...], 'lambda': [...]} per
                       linear premise (positions in the conclusion)}
    CutLinear         {'goal': principal goal}
    GenCutClassical   {'goal': principal goal, 'copies': count}
    Contract          {'goal': contracted goal}

Classical premises of a GL node precede the linear ones.

"""

import json
from collections import Counter

from nltk.tree import Tree

from forumlib.errors import ProofFormatError, ForumError
from forumlib.sequent import (
    GSequent, mset_diff, seq_eq, sequent_to_record, sequent_from_record
)
from forumlib.syntax import category
from forumlib.syntax.parser import Parser
from forumlib.syntax.struct import Substitution, apply_subst, alpha_eq
from forumlib.syntax.visitors import print_goal, print_term
from forumlib.normalize import to_goal

__all__ = [
    'GR',
    'GL',
    'CUT_LINEAR',
    'CUT_CLASSICAL',
    'GEN_CUT',
    'CONTRACT',
    'rules',
    'cut_rules',
    'ProofNode',
    'gr_premises',
    'gl_instance',
    'gr_node',
    'gl_node',
    'cut_linear_node',
    'gen_cut_node',
    'contract_node',
    'subst_proof',
    'cut_rank_goal',
    'cut_rank_clause',
    'cut_rank_proof',
    'depth',
    'size',
    'rule_counts',
    'same_proof',
    'proof_to_tree',
    'ProofEncoder',
    'ProofDecoder',
    'dump_proof',
    'load_proof',
]

GR = 'GR'
GL = 'GL'
CUT_LINEAR = 'CutLinear'
CUT_CLASSICAL = 'CutClassical'
GEN_CUT = 'GenCutClassical'
CONTRACT = 'Contract'

rules = {GR, GL, CUT_LINEAR, GEN_CUT, CONTRACT}
cut_rules = {CUT_LINEAR, GEN_CUT}


class ProofNode(object):
    """A node of a proof tree."""

    __slots__ = ('rule', 'conclusion', 'payload', 'children')

    def __init__(self, rule, conclusion, payload=None, children=()):
        if rule not in rules:
            raise ValueError('unknown proof rule "{0}"'.format(rule))
        self.rule = rule
        self.conclusion = conclusion
        self.payload = dict(payload or {})
        self.children = tuple(children)

    def __repr__(self):
        return '<ProofNode {0}: {1}>'.format(self.rule, self.conclusion)

    def __str__(self):
        return str(proof_to_tree(self))

    @property
    def goal(self):
        """The principal goal of a cut or contraction node."""
        return self.payload.get('goal')

    def walk(self, path=()):
        """Yield pairs (path, node) in pre-order."""
        yield path, self
        for i, child in enumerate(self.children):
            yield from child.walk(path + (i,))


# premises of the macro rules

def gr_premises(conclusion, eigens):
    """Return the premises of GR applied to the focus of `conclusion`."""
    goal = conclusion.focus
    rho = Substitution(zip(goal.binder, eigens))
    rv = []
    for clause in goal.clauses:
        inst = apply_subst(clause, rho)
        rv.append(GSequent(conclusion.psi + inst.cp, conclusion.gamma + inst.lp, conclusion.lam + inst.head))
    return rv


def gl_instance(goal, clause_index, sigma):
    """Return the clause `clause_index` of `goal` instantiated by `sigma`."""
    subst = Substitution(zip(goal.binder, sigma))
    return apply_subst(goal.clauses[clause_index], subst)


# constructors

def gr_node(psi, gamma, lam, focus, eigens=None, children=()):
    """Build a GR node; fresh eigenvariables are created when none are given."""
    if eigens is None:
        eigens = [v.fresh(role=category.EIGEN, level=0) for v in focus.binder]
    conclusion = GSequent(psi, gamma, lam, focus)
    return ProofNode(GR, conclusion, {'eigen': tuple(eigens)}, children)


def gl_node(psi, side, goal, clause_index, sigma, classical=(), linear=()):
    """Build a GL node whose conclusion is derived from its premises.

    The selected `goal` must occur in `psi` when `side` is 'psi'; when
    `side` is 'gamma' it is placed first in the linear program of the
    conclusion. The atomic context is the instantiated head followed by
    the atomic contexts of the linear premises.

    """
    psi = tuple(psi)
    inst = gl_instance(goal, clause_index, sigma)
    gamma = (goal,) if side == 'gamma' else ()
    lam = tuple(inst.head)
    split = []
    for child in linear:
        c = child.conclusion
        split.append({'gamma': tuple(range(len(gamma), len(gamma) + len(c.gamma))),
                      'lambda': tuple(range(len(lam), len(lam) + len(c.lam)))})
        gamma += c.gamma
        lam += c.lam
    if side == 'gamma':
        index = 0
    else:
        index = next((i for i, g in enumerate(psi) if alpha_eq(g, goal)), None)
        if index is None:
            raise ForumError('selected goal {0} is not in the classical program'.format(goal))
    payload = {
        'side': side,
        'index': index,
        'clause': clause_index,
        'sigma': tuple(sigma),
        'head': tuple(range(len(inst.head))),
        'split': tuple(split),
    }
    return ProofNode(GL, GSequent(psi, gamma, lam), payload, tuple(classical) + tuple(linear))


def cut_linear_node(left, right, goal=None):
    """Cut the focused goal of `left` against the linear program of `right`."""
    goal = left.conclusion.focus if goal is None else goal
    lc, rc = left.conclusion, right.conclusion
    conclusion = GSequent(lc.psi + rc.psi, lc.gamma + mset_diff(rc.gamma, [goal]), lc.lam + rc.lam, rc.focus)
    return ProofNode(CUT_LINEAR, conclusion, {'goal': goal}, (left, right))


def gen_cut_node(left, right, goal=None, copies=1):
    """Cut `copies` occurrences of the goal proved by `left` from the classical program of `right`."""
    goal = left.conclusion.focus if goal is None else goal
    lc, rc = left.conclusion, right.conclusion
    conclusion = GSequent(lc.psi + mset_diff(rc.psi, [goal] * copies), rc.gamma, rc.lam, rc.focus)
    return ProofNode(GEN_CUT, conclusion, {'goal': goal, 'copies': copies}, (left, right))


def contract_node(child, goal):
    """Merge two occurrences of `goal` in the classical program of `child`."""
    c = child.conclusion
    conclusion = GSequent(mset_diff(c.psi, [goal]), c.gamma, c.lam, c.focus)
    return ProofNode(CONTRACT, conclusion, {'goal': goal}, (child,))


# substitution

def _subst_payload(rule, payload, subst):
    rv = dict(payload)
    if rule == GL:
        rv['sigma'] = tuple(apply_subst(t, subst) for t in payload['sigma'])
    elif 'goal' in payload:
        rv['goal'] = apply_subst(payload['goal'], subst)
    return rv


def _subst_sequent(s, subst):
    return GSequent([apply_subst(g, subst) for g in s.psi],
                    [apply_subst(g, subst) for g in s.gamma],
                    [apply_subst(a, subst) for a in s.lam],
                    None if s.focus is None else apply_subst(s.focus, subst))


def subst_proof(p, subst):
    """Apply `subst` to every sequent and payload of `p`.

    Eigenvariables of GR nodes that occur in the domain or in the range
    of `subst` are renamed to fresh ones in the sub-proofs above them.

    """
    if not subst:
        return p
    subst = Substitution(subst)
    range_vars = subst.range_vars()
    payload = _subst_payload(p.rule, p.payload, subst)
    inner = subst
    if p.rule == GR:
        eigens = []
        inner = Substitution(subst)
        for e in p.payload['eigen']:
            if e in subst or e in range_vars:
                fresh = e.fresh()
                inner[e] = fresh
                eigens.append(fresh)
            else:
                eigens.append(e)
        payload['eigen'] = tuple(eigens)
    children = [subst_proof(c, inner) for c in p.children]
    return ProofNode(p.rule, _subst_sequent(p.conclusion, subst), payload, children)


# measures

def cut_rank_goal(goal):
    """Return the cut-rank of `goal`: one more than the largest rank of its clauses."""
    return max([cut_rank_clause(c) for c in goal.clauses] + [0]) + 1


def cut_rank_clause(clause):
    return max([cut_rank_goal(g) for g in clause.cp + clause.lp] + [0]) + 1


def cut_rank_proof(p):
    """Return the largest cut-rank of a principal goal of a cut in `p`; 0 if cut-free."""
    rv = 0
    for _, node in p.walk():
        if node.rule in cut_rules:
            rv = max(rv, cut_rank_goal(node.goal))
    return rv


def depth(p):
    return max([depth(c) for c in p.children] + [0]) + 1


def size(p):
    return sum(1 for _ in p.walk())


def rule_counts(p):
    return Counter(node.rule for _, node in p.walk())


def same_proof(p, q):
    """Return True if `p` and `q` have the same rules, conclusions and shape."""
    if p.rule != q.rule or len(p.children) != len(q.children):
        return False
    if not seq_eq(p.conclusion, q.conclusion):
        return False
    return all(same_proof(a, b) for a, b in zip(p.children, q.children))


def proof_to_tree(p):
    """Return an nltk `Tree` with one labelled node per rule application."""
    label = '{0} {1}'.format(p.rule, p.conclusion)
    return Tree(label, [proof_to_tree(c) for c in p.children])


# JSON representation

def _payload_to_json(rule, payload):
    rv = dict(payload)
    if rule == GR:
        rv['eigen'] = [print_term(e) for e in payload['eigen']]
    elif rule == GL:
        rv['sigma'] = [print_term(t) for t in payload['sigma']]
        rv['head'] = list(payload['head'])
        rv['split'] = [{'gamma': list(s['gamma']), 'lambda': list(s['lambda'])} for s in payload['split']]
    if 'goal' in payload:
        rv['goal'] = print_goal(payload['goal'])
    return rv


class ProofEncoder(json.JSONEncoder):

    def default(self, python_object):
        if isinstance(python_object, ProofNode):
            return {
                'rule': python_object.rule,
                'conclusion': sequent_to_record(python_object.conclusion),
                'payload': _payload_to_json(python_object.rule, python_object.payload),
                'children': list(python_object.children),
            }
        elif isinstance(python_object, GSequent):
            return sequent_to_record(python_object)
        return super(ProofEncoder, self).default(python_object)


class ProofDecoder(json.JSONDecoder):
    """Decode proof records; all records of one document share a parser.

    Records of the classical cut are read as generalized classical cuts
    with one copy.

    """

    def __init__(self, *args, **kwargs):
        self.parser = kwargs.pop('parser', None) or Parser()
        kwargs['object_hook'] = self.from_json
        super(ProofDecoder, self).__init__(*args, **kwargs)

    def from_json(self, json_object):
        if 'rule' not in json_object or 'conclusion' not in json_object:
            return json_object
        try:
            return self._node(json_object)
        except ForumError:
            raise
        except (KeyError, TypeError, ValueError, AttributeError) as e:
            raise ProofFormatError('malformed proof record: {0!r}'.format(e))

    def _node(self, record):
        rule = record['rule']
        payload = dict(record.get('payload') or {})
        if rule == CUT_CLASSICAL:
            rule = GEN_CUT
            payload.setdefault('copies', 1)
        if rule not in rules:
            raise ProofFormatError('unknown rule "{0}"'.format(rule))
        children = record.get('children') or []
        if not all(isinstance(c, ProofNode) for c in children):
            raise ProofFormatError('children of a {0} node must be proof records'.format(rule))
        conclusion = sequent_from_record(record['conclusion'], self.parser)
        if rule == GR:
            payload['eigen'] = tuple(self.parser.term(t) for t in payload['eigen'])
        elif rule == GL:
            payload['sigma'] = tuple(self.parser.term(t) for t in payload['sigma'])
            payload['head'] = tuple(payload['head'])
            payload['split'] = tuple({'gamma': tuple(s['gamma']), 'lambda': tuple(s['lambda'])}
                                     for s in payload['split'])
        if 'goal' in payload:
            payload['goal'] = to_goal(self.parser.formula(payload['goal']))
        if rule == GEN_CUT:
            payload['copies'] = int(payload['copies'])
        return ProofNode(rule, conclusion, payload, children)


def dump_proof(p, fp=None, indent=1):
    """Return the JSON text of `p` or write it to the file object `fp`."""
    if fp is None:
        return json.dumps(p, cls=ProofEncoder, indent=indent, ensure_ascii=False)
    json.dump(p, fp, cls=ProofEncoder, indent=indent, ensure_ascii=False)


def load_proof(text):
    try:
        rv = json.loads(text, cls=ProofDecoder)
    except ValueError as e:
        if isinstance(e, ForumError):
            raise
        raise ProofFormatError('malformed proof document: {0}'.format(e))
    if not isinstance(rv, ProofNode):
        raise ProofFormatError('document does not contain a proof')
    return rv
