"""Expansion of the GR and GL rules into small-step derivations.

Every step of an expansion is forced by the shape of the goal in focus,
so a GR or GL node determines a unique derivation whose open leaves have
to be the embedded premises of the node.

"""

from forumlib.errors import ExpansionMismatch
from forumlib.oracle import forum
from forumlib.oracle.forum import Derivation, ForumSequent, embed_sequent
from forumlib.proofs.struct import GR, GL, gl_instance
from forumlib.syntax import category
from forumlib.syntax.struct import Substitution, alpha_key, apply_subst, goal_to_formula

__all__ = ['expand_macro', 'expand_proof']


def _mismatch(node, reason):
    return ExpansionMismatch('{0} at {1}: {2}'.format(node.rule, node.conclusion, reason))


def _right_phase(s, eigens):
    """Decompose the right linear context of `s` using `eigens` for universal quantifiers."""
    if not s.xi:
        return Derivation(None, s)
    f, rest = s.xi[0], s.xi[1:]
    cat = f.category
    if cat == category.ATOM:
        return Derivation(forum.A, s, [_right_phase(s.replace(xi=rest, lam=s.lam + (f,)), eigens)])
    elif cat == category.BOT:
        return Derivation(forum.BOT_R, s, [_right_phase(s.replace(xi=rest), eigens)])
    elif cat == category.TOP:
        return Derivation(forum.TOP_R, s)
    elif cat == category.PAR:
        return Derivation(forum.PAR_R, s, [_right_phase(s.replace(xi=(f.left, f.right) + rest), eigens)])
    elif cat == category.AMP:
        return Derivation(forum.AMP_R, s, [_right_phase(s.replace(xi=(f.left,) + rest), eigens),
                                           _right_phase(s.replace(xi=(f.right,) + rest), eigens)])
    elif cat == category.LOLLI:
        premise = s.replace(gamma=s.gamma + (f.left,), xi=(f.right,) + rest)
        return Derivation(forum.LOLLI_R, s, [_right_phase(premise, eigens)])
    elif cat == category.IMPLIES:
        premise = s.replace(psi=s.psi + (f.left,), xi=(f.right,) + rest)
        return Derivation(forum.IMPLIES_R, s, [_right_phase(premise, eigens)])
    elif cat == category.FORALL:
        eigen, eigens = eigens[0], eigens[1:]
        body = apply_subst(f.body, Substitution({f.var: eigen}))
        return Derivation(forum.FORALL_R, s, [_right_phase(s.replace(xi=(body,) + rest), eigens)])
    raise ExpansionMismatch('no right rule for {0}'.format(f))


def _expand_gr(node):
    s = embed_sequent(node.conclusion)
    return _right_phase(s, tuple(node.payload['eigen']))


def _select_clause(s, f, index, count):
    """Apply the with rules picking clause `index` of `count` from the focused formula."""
    if count == 1:
        return [], f
    steps = []
    while count > 1:
        if index == count - 1:
            steps.append((forum.AMP_LR, s))
            f = f.right
            break
        steps.append((forum.AMP_LL, s))
        f = f.left
        count -= 1
        s = s.replace(focus=f)
    return steps, f


def _head_phase(psi, f, atoms, node):
    """Match the head `f` against `atoms`, a list pairing head atoms with context atoms."""
    if f.category == category.BOT:
        if atoms:
            raise _mismatch(node, 'empty head against a non-empty atomic context')
        return Derivation(forum.BOT_L, ForumSequent(psi, (), (), (), focus=f))
    s = ForumSequent(psi, (), (), [a for _, a in atoms], focus=f)
    if f.category == category.ATOM:
        if len(atoms) != 1 or alpha_key(atoms[0][1]) != alpha_key(f):
            raise _mismatch(node, 'head atom {0} does not match'.format(f))
        return Derivation(forum.I, s)
    if f.category != category.PAR:
        raise _mismatch(node, 'unexpected head formula {0}'.format(f))
    n = _width(f.left)
    left = _head_phase(psi, f.left, atoms[:n], node)
    right = _head_phase(psi, f.right, atoms[n:], node)
    return Derivation(forum.PAR_L, s, [left, right])


def _width(f):
    if f.category == category.PAR:
        return _width(f.left) + _width(f.right)
    return 1


def _expand_gl(node):
    c = node.conclusion
    payload = node.payload
    root = embed_sequent(c)
    side = payload['side']
    if side == 'gamma':
        goal = c.gamma[payload['index']]
        gamma = c.gamma[:payload['index']] + c.gamma[payload['index'] + 1:]
        decide = forum.D_L
    else:
        goal = c.psi[payload['index']]
        gamma = c.gamma
        decide = forum.D_C
    psi = root.psi
    inst = gl_instance(goal, payload['clause'], payload['sigma'])
    # the focused formula carries the instantiated clause
    f = goal_to_formula(goal)
    s = ForumSequent(psi, [goal_to_formula(g) for g in gamma], (), c.lam, focus=f)
    steps = [(decide, root)]
    subst = Substitution()
    for term in payload['sigma']:
        steps.append((forum.FORALL_L, s))
        subst[f.var] = term
        f = f.body
        s = s.replace(focus=apply_subst(f, subst))
    f = apply_subst(f, subst)
    s = s.replace(focus=f)
    amp_steps, f = _select_clause(s, f, payload['clause'], len(goal.clauses))
    steps.extend(amp_steps)
    s = s.replace(focus=f)
    leaves = []
    for g in inst.cp:
        if f.category != category.IMPLIES:
            raise _mismatch(node, 'expected a classical premise')
        leaves.append(Derivation(None, ForumSequent(psi, (), (f.left,), ())))
        steps.append((forum.IMPLIES_L, s))
        f = f.right
        s = s.replace(focus=f)
    for i, h in enumerate(inst.lp):
        if f.category != category.LOLLI:
            raise _mismatch(node, 'expected a linear premise')
        part = payload['split'][i]
        gi = [goal_to_formula(c.gamma[k]) for k in part['gamma']]
        li = [c.lam[k] for k in part['lambda']]
        leaves.append(Derivation(None, ForumSequent(psi, gi, (f.left,), li)))
        steps.append((forum.LOLLI_L, s))
        f = f.right
        used_g = set(k for p in payload['split'][i + 1:] for k in p['gamma'])
        used_l = set(k for p in payload['split'][i + 1:] for k in p['lambda']) | set(payload['head'])
        s = ForumSequent(psi, [goal_to_formula(c.gamma[k]) for k in sorted(used_g)], (),
                         [c.lam[k] for k in sorted(used_l)], focus=f)
    atoms = list(zip(_head_atoms(f), [c.lam[k] for k in payload['head']]))
    if len(atoms) != len(payload['head']):
        raise _mismatch(node, 'head size differs from the matched atoms')
    if s.gamma or sorted(repr(alpha_key(a)) for a in s.lam) != sorted(repr(alpha_key(a)) for _, a in atoms):
        raise _mismatch(node, 'the head does not consume the remaining linear context')
    tip = _head_phase(psi, f, atoms, node)
    return _assemble(steps, leaves, tip)


def _head_atoms(f):
    if f.category == category.PAR:
        return _head_atoms(f.left) + _head_atoms(f.right)
    if f.category == category.BOT:
        return []
    return [f]


def _assemble(steps, leaves, tip):
    """Build the chain of left steps; two premise rules take the next leaf as first premise."""
    rv = tip
    pending = list(leaves)
    for rule, s in reversed(steps):
        if rule in (forum.IMPLIES_L, forum.LOLLI_L):
            rv = Derivation(rule, s, [pending.pop(), rv])
        else:
            rv = Derivation(rule, s, [rv])
    return rv


def expand_macro(node):
    """Return the small-step derivation of a GR or GL node.

    The open leaves of the derivation are compared with the embedded
    conclusions of the sub-proofs of `node`; ExpansionMismatch is raised
    when they differ.

    """
    if node.rule == GR:
        rv = _expand_gr(node)
    elif node.rule == GL:
        rv = _expand_gl(node)
    else:
        raise ExpansionMismatch('{0} is not a macro rule'.format(node.rule))
    leaves = rv.open_leaves()
    expected = [embed_sequent(child.conclusion) for child in node.children]
    if len(leaves) != len(expected):
        raise _mismatch(node, 'expansion has {0} open leaves, the node has {1} premises'
                        .format(len(leaves), len(expected)))
    for i, (leaf, premise) in enumerate(zip(leaves, expected)):
        if leaf.key() != premise.key():
            raise _mismatch(node, 'leaf {0} is {1}, expected {2}'.format(i, leaf, premise))
    return rv


def expand_proof(proof):
    """Return the small-step proof obtained by expanding every node of a cut-free proof."""
    rv = expand_macro(proof)
    children = iter([expand_proof(child) for child in proof.children])
    return rv.plug(lambda _: next(children))
