"""Bounded backtracking proof search for G-Forum.

The search alternates the deterministic right reduction GR, which
decomposes the goal in focus, and the left reduction GL, which selects a
goal of the classical or linear program, instantiates one of its clauses
with fresh metavariables, matches the head against the atomic context
and continues with the premises of the clause.

Linear resources are threaded through the premises: a premise receives
the resources its left siblings did not consume and returns the ones it
did not consume itself. A premise closed by a goal without clauses
(top) sets a slack flag; resources left over in the presence of slack
are absorbed by such a premise when the proof is assembled.

Every GL application costs one unit of the depth bound.

"""

import itertools
import logging
import os
import random
from collections import namedtuple

from forumlib.engine.unify import BindingStore
from forumlib.errors import ConfigError, ForumError
from forumlib.proofs.struct import ProofNode, GR, GL, gr_premises, gl_instance
from forumlib.sequent import GSequent
from forumlib.syntax.struct import Substitution, apply_subst, alpha_key
from forumlib.syntax.visitors import print_term
from forumlib.utils import sub_multisets

__all__ = [
    'PROVED',
    'UNKNOWN',
    'REFUTED',
    'SearchConfig',
    'SearchResult',
    'GLInstance',
    'Search',
    'reduce_right',
    'match_head',
    'expand_state',
    'thread_linear',
    'prove',
]

PROVED = 'proved'
UNKNOWN = 'unknown'
REFUTED = 'refuted'

DEFAULT_DEPTH = 6


class SearchConfig(object):
    """Options of a proof search.

    `max_gl_depth` bounds the number of nested GL applications on a
    branch. With `iterative_deepening` the bounds 1 to `max_gl_depth`
    are tried in order. A non-zero `rng_seed` shuffles the order in which
    goals are selected. `eager_split` enumerates the splits of the linear
    context up front instead of threading it through the premises.

    """

    __slots__ = ('max_gl_depth', 'iterative_deepening', 'rng_seed', 'trace', 'eager_split')

    def __init__(self, max_gl_depth=DEFAULT_DEPTH, iterative_deepening=False, rng_seed=0,
                 trace=False, eager_split=False):
        for name, value in (('max_gl_depth', max_gl_depth), ('rng_seed', rng_seed)):
            if isinstance(value, bool) or not isinstance(value, int) or value < 0:
                raise ConfigError('{0} must be a non-negative integer, got {1!r}'.format(name, value))
        self.max_gl_depth = max_gl_depth
        self.iterative_deepening = bool(iterative_deepening)
        self.rng_seed = rng_seed
        self.trace = bool(trace)
        self.eager_split = bool(eager_split)

    def __repr__(self):
        items = ', '.join('{0}={1!r}'.format(k, getattr(self, k)) for k in self.__slots__)
        return 'SearchConfig({0})'.format(items)

    def replace(self, **kwargs):
        values = {k: getattr(self, k) for k in self.__slots__}
        values.update(kwargs)
        return SearchConfig(**values)

    @classmethod
    def from_env(cls, environ=None, **kwargs):
        """Create a configuration using FORUMLIB_DEPTH as the default depth bound."""
        environ = os.environ if environ is None else environ
        if 'max_gl_depth' not in kwargs and environ.get('FORUMLIB_DEPTH'):
            text = environ['FORUMLIB_DEPTH']
            try:
                kwargs['max_gl_depth'] = int(text)
            except ValueError:
                raise ConfigError('FORUMLIB_DEPTH must be an integer, got "{0}"'.format(text))
        return cls(**kwargs)


class SearchResult(object):
    """The outcome of a search.

    `status` is PROVED with a `proof`, REFUTED when the whole search space
    was explored without reaching the depth bound or UNKNOWN when the
    bound cut the search short.

    """

    __slots__ = ('status', 'proof', 'depth', 'trace')

    def __init__(self, status, proof=None, depth=0, trace=()):
        self.status = status
        self.proof = proof
        self.depth = depth
        self.trace = list(trace)

    @property
    def proved(self):
        return self.status == PROVED

    def __repr__(self):
        return '<SearchResult: {0} at depth {1}>'.format(self.status, self.depth)


# a resource of the linear program or the atomic context
Entry = namedtuple('Entry', 'rid item')

# a GL step: `index` is the position of the selected goal in psi or gamma
GLInstance = namedtuple('GLInstance', 'side index clause goal sigma head')


class _State(object):
    """Search record of a GL application at a state sequent."""

    __slots__ = ('psi', 'gin', 'lin', 'side', 'sel', 'clause', 'metas', 'head',
                 'classical', 'linear', 'out_g', 'out_l', 'slack')

    def __init__(self, **kwargs):
        for k, v in kwargs.items():
            setattr(self, k, v)


class _Focus(object):
    """Search record of a GR application."""

    __slots__ = ('psi', 'goal', 'gin', 'lin', 'eigens', 'branches', 'out_g', 'out_l', 'slack')

    def __init__(self, **kwargs):
        for k, v in kwargs.items():
            setattr(self, k, v)


class _Branch(object):
    """One premise of a GR application together with its local resources."""

    __slots__ = ('state', 'in_g', 'in_l', 'local', 'out_g', 'out_l', 'slack')

    def __init__(self, **kwargs):
        for k, v in kwargs.items():
            setattr(self, k, v)


def _rids(entries):
    return set(e.rid for e in entries)


def _by_rid(entries):
    return tuple(sorted(entries, key=lambda e: e.rid))


class Search(object):
    """One proof search owning one binding store."""

    def __init__(self, cfg=None, store=None, logger=None):
        self.cfg = cfg or SearchConfig()
        self.store = store or BindingStore()
        self.logger = logger or logging.getLogger(__name__)
        self.rng = random.Random(self.cfg.rng_seed) if self.cfg.rng_seed else None
        self.bound_hit = False
        self.trace = []
        self._goal_ids = {}
        self._meta_names = {}
        self._rids = itertools.count()

    def entries(self, items):
        return tuple(Entry(next(self._rids), x) for x in items)

    # trace

    def _goal_id(self, goal):
        key = alpha_key(self.store.resolve(goal))
        return self._goal_ids.setdefault(key, len(self._goal_ids) + 1)

    def _meta_name(self, meta):
        if meta.uid not in self._meta_names:
            self._meta_names[meta.uid] = '?{0}{1}'.format(meta.name, len(self._meta_names) + 1)
        return self._meta_names[meta.uid]

    def _emit(self, line):
        self.trace.append(line)
        self.logger.debug(line)

    def _trace_gl(self, side, goal, clause, metas):
        if self.cfg.trace:
            sigma = ','.join('{0}:={1}'.format(v.name, self._meta_name(m)) for v, m in zip(goal.binder, metas))
            self._emit('GL sel={0} goal={1} clause={2} sigma={3}'.format(side, self._goal_id(goal), clause, sigma))

    def _trace_gr(self, goal):
        if self.cfg.trace:
            self._emit('GR goal={0} branches={1}'.format(self._goal_id(goal), len(goal.clauses)))

    # left reduction

    def candidates(self, psi, gin):
        """Return the selectable goals as triples (side, selector, goal).

        The selector is the resource id for the linear program and the
        position for the classical program. Goals without clauses and
        α-equivalent duplicates are skipped.

        """
        rv = []
        seen = set()
        for e in gin:
            if e.item.is_top:
                continue
            key = alpha_key(self.store.resolve(e.item))
            if key not in seen:
                seen.add(key)
                rv.append(('gamma', e.rid, e.item))
        seen = set()
        for i, g in enumerate(psi):
            if g.is_top:
                continue
            key = alpha_key(self.store.resolve(g))
            if key not in seen:
                seen.add(key)
                rv.append(('psi', i, g))
        if self.rng is not None:
            self.rng.shuffle(rv)
        return rv

    def match(self, head, lin):
        """Yield (rids, residual) assigning each head atom to a distinct entry of `lin`.

        Entries that are equal under the current bindings are tried only
        once for each head atom.

        """
        if not head:
            yield (), lin
            return
        first, rest = head[0], head[1:]
        tried = set()
        for e in lin:
            key = alpha_key(self.store.resolve(e.item))
            if key in tried:
                continue
            tried.add(key)
            mark = self.store.mark()
            if self.store.unify_atoms(first, e.item):
                remaining = tuple(x for x in lin if x.rid != e.rid)
                for rids, residual in self.match(rest, remaining):
                    yield (e.rid,) + rids, residual
            self.store.undo(mark)

    def prove_state(self, psi, gin, lin, depth):
        """Yield (record, gamma out, lambda out, slack) for the state [psi; gin |- lin]."""
        candidates = self.candidates(psi, gin)
        if not candidates:
            return
        if depth <= 0:
            self.bound_hit = True
            return
        for side, sel, goal in candidates:
            rest_g = tuple(e for e in gin if e.rid != sel) if side == 'gamma' else gin
            for index in range(len(goal.clauses)):
                mark = self.store.mark()
                metas = self.store.new_metas(goal.binder)
                inst = gl_instance(goal, index, metas)
                for head, rest_l in self.match(inst.head, lin):
                    self._trace_gl(side, goal, index, metas)
                    split = self._thread_eager if self.cfg.eager_split else self._thread
                    for linear, out_g, out_l, slack in split(psi, inst.lp, rest_g, rest_l, depth - 1):
                        for classical in self._classical(psi, inst.cp, depth - 1):
                            record = _State(psi=psi, gin=gin, lin=lin, side=side, sel=sel, clause=index,
                                            metas=metas, head=head, classical=classical, linear=linear,
                                            out_g=out_g, out_l=out_l, slack=slack)
                            yield record, out_g, out_l, slack
                self.store.undo(mark)

    def _thread(self, psi, goals, gin, lin, depth):
        if not goals:
            yield (), gin, lin, False
            return
        for record, g1, l1, s1 in self.prove_focus(psi, goals[0], gin, lin, depth):
            for rest, g2, l2, s2 in self._thread(psi, goals[1:], g1, l1, depth):
                yield ((record, (), ()),) + rest, g2, l2, s1 or s2

    def _thread_eager(self, psi, goals, gin, lin, depth):
        if not goals:
            yield (), gin, lin, False
            return

        def key(e):
            return repr(alpha_key(self.store.resolve(e.item)))

        for g_chosen, g_rest in sub_multisets(gin, key=key):
            chosen_g = tuple(gin[i] for i in g_chosen)
            rest_g = tuple(gin[i] for i in g_rest)
            for l_chosen, l_rest in sub_multisets(lin, key=key):
                chosen_l = tuple(lin[i] for i in l_chosen)
                rest_l = tuple(lin[i] for i in l_rest)
                for record, og, ol, s in self.prove_focus(psi, goals[0], chosen_g, chosen_l, depth):
                    if (og or ol) and not s:
                        continue
                    for rest, g2, l2, s2 in self._thread_eager(psi, goals[1:], rest_g, rest_l, depth):
                        yield ((record, og, ol),) + rest, g2, l2, s or s2

    def _classical(self, psi, goals, depth):
        if not goals:
            yield ()
            return
        for record, _, _, _ in self.prove_focus(psi, goals[0], (), (), depth):
            for rest in self._classical(psi, goals[1:], depth):
                yield (record,) + rest

    # right reduction

    def prove_focus(self, psi, goal, gin, lin, depth):
        """Yield (record, gamma out, lambda out, slack) for [psi; gin |- lin; goal]."""
        eigens = self.store.new_eigens(goal.binder)
        self._trace_gr(goal)
        if goal.is_top:
            record = _Focus(psi=psi, goal=goal, gin=gin, lin=lin, eigens=eigens, branches=(),
                            out_g=gin, out_l=lin, slack=True)
            yield record, gin, lin, True
            return
        rho = Substitution(zip(goal.binder, eigens))
        branches = []
        for clause in goal.clauses:
            inst = apply_subst(clause, rho)
            branches.append((psi + inst.cp, self.entries(inst.lp), self.entries(inst.head)))
        for done, out_g, out_l, slack in self._branches(branches, gin, lin, depth, None):
            record = _Focus(psi=psi, goal=goal, gin=gin, lin=lin, eigens=eigens, branches=done,
                            out_g=out_g, out_l=out_l, slack=slack)
            yield record, out_g, out_l, slack

    def _branches(self, branches, gin, lin, depth, acc):
        if not branches:
            yield ((),) + acc
            return
        psi, loc_g, loc_l = branches[0]
        local = _rids(loc_g) | _rids(loc_l)
        in_g, in_l = gin + loc_g, lin + loc_l
        for state, og, ol, s in self.prove_state(psi, in_g, in_l, depth):
            if not s and local & (_rids(og) | _rids(ol)):
                continue
            combined = _combine(acc, (tuple(e for e in og if e.rid not in local),
                                      tuple(e for e in ol if e.rid not in local), s))
            if combined is None:
                continue
            branch = _Branch(state=state, in_g=in_g, in_l=in_l, local=local, out_g=og, out_l=ol, slack=s)
            for rest, out_g, out_l, slack in self._branches(branches[1:], gin, lin, depth, combined):
                yield (branch,) + rest, out_g, out_l, slack

    # assembling proofs

    def finish_state(self, record, extra_g=(), extra_l=()):
        """Return (GL node, gamma entries, lambda entries) for a state record."""
        resolve = self.store.resolve
        out_g, out_l = _rids(record.out_g), _rids(record.out_l)
        conc_g = _by_rid([e for e in record.gin if e.rid not in out_g] + list(extra_g))
        conc_l = _by_rid([e for e in record.lin if e.rid not in out_l] + list(extra_l))
        pos_g = {e.rid: i for i, e in enumerate(conc_g)}
        pos_l = {e.rid: i for i, e in enumerate(conc_l)}
        classical = [self.finish_focus(c)[0] for c in record.classical]
        linear = []
        split = []
        for node, cg, cl in self.finish_linear(record.linear, extra_g, extra_l):
            linear.append(node)
            split.append({'gamma': tuple(pos_g[e.rid] for e in cg), 'lambda': tuple(pos_l[e.rid] for e in cl)})
        payload = {
            'side': record.side,
            'index': pos_g[record.sel] if record.side == 'gamma' else record.sel,
            'clause': record.clause,
            'sigma': tuple(resolve(m) for m in record.metas),
            'head': tuple(pos_l[r] for r in record.head),
            'split': tuple(split),
        }
        conclusion = GSequent([resolve(g) for g in record.psi],
                              [resolve(e.item) for e in conc_g],
                              [resolve(e.item) for e in conc_l])
        return ProofNode(GL, conclusion, payload, classical + linear), conc_g, conc_l

    def finish_linear(self, linear, extra_g=(), extra_l=()):
        """Assemble threaded premises; leftovers go to the first premise with slack."""
        first = next((i for i, (record, _, _) in enumerate(linear) if record.slack), None)
        if (extra_g or extra_l) and first is None:
            raise ForumError('leftover resources without a premise to absorb them')
        rv = []
        for i, (record, own_g, own_l) in enumerate(linear):
            if i == first:
                rv.append(self.finish_focus(record, tuple(own_g) + tuple(extra_g), tuple(own_l) + tuple(extra_l)))
            else:
                rv.append(self.finish_focus(record, own_g, own_l))
        return rv

    def finish_focus(self, record, extra_g=(), extra_l=()):
        """Return (GR node, gamma entries, lambda entries) for a focus record."""
        resolve = self.store.resolve
        out_g, out_l = _rids(record.out_g), _rids(record.out_l)
        conc_g = _by_rid([e for e in record.gin if e.rid not in out_g] + list(extra_g))
        conc_l = _by_rid([e for e in record.lin if e.rid not in out_l] + list(extra_l))
        children = []
        for branch in record.branches:
            need = (_rids(conc_g) | _rids(conc_l) | branch.local)
            need -= (_rids(branch.in_g) - _rids(branch.out_g)) | (_rids(branch.in_l) - _rids(branch.out_l))
            eg = [e for e in branch.out_g if e.rid in need]
            el = [e for e in branch.out_l if e.rid in need]
            if len(eg) + len(el) != len(need) or (need and not branch.slack):
                raise ForumError('inconsistent resources in a branch of {0}'.format(record.goal))
            children.append(self.finish_state(branch.state, eg, el)[0])
        conclusion = GSequent([resolve(g) for g in record.psi],
                              [resolve(e.item) for e in conc_g],
                              [resolve(e.item) for e in conc_l],
                              resolve(record.goal))
        return ProofNode(GR, conclusion, {'eigen': tuple(record.eigens)}, children), conc_g, conc_l

    # top level

    def search(self, sequent, depth):
        """Yield the proofs of `sequent` found within `depth`."""
        gin = self.entries(sequent.gamma)
        lin = self.entries(sequent.lam)
        if sequent.focus is None:
            for record, og, ol, slack in self.prove_state(sequent.psi, gin, lin, depth):
                if (og or ol) and not slack:
                    continue
                yield self.finish_state(record, og, ol)[0]
        else:
            for record, og, ol, slack in self.prove_focus(sequent.psi, sequent.focus, gin, lin, depth):
                if (og or ol) and not slack:
                    continue
                yield self.finish_focus(record, og, ol)[0]

    def run(self, sequent):
        """Search for a proof of `sequent` and return a `SearchResult`."""
        bound = self.cfg.max_gl_depth
        if self.cfg.iterative_deepening and bound > 0:
            depths = range(1, bound + 1)
        else:
            depths = [bound]
        for d in depths:
            self.bound_hit = False
            self.store = BindingStore()
            self.logger.debug('searching {0} with depth bound {1}'.format(sequent, d))
            found = self.search(sequent, d)
            for proof in found:
                found.close()
                self.logger.info('proved {0} at depth bound {1}'.format(sequent, d))
                return SearchResult(PROVED, proof, d, self.trace)
            if not self.bound_hit:
                self.logger.info('no proof of {0}: search space exhausted'.format(sequent))
                return SearchResult(REFUTED, None, d, self.trace)
        self.logger.info('no proof of {0} within depth bound {1}'.format(sequent, bound))
        return SearchResult(UNKNOWN, None, bound, self.trace)


def _combine(acc, new):
    """Combine the outputs of two additive branches; None if incompatible."""
    if acc is None:
        return new
    ag, al, a_slack = acc
    bg, bl, b_slack = new
    a_rids = (_rids(ag), _rids(al))
    b_rids = (_rids(bg), _rids(bl))
    if not a_slack and not b_slack:
        return acc if a_rids == b_rids else None
    if a_slack and not b_slack:
        ok = b_rids[0] <= a_rids[0] and b_rids[1] <= a_rids[1]
        return new if ok else None
    if b_slack and not a_slack:
        ok = a_rids[0] <= b_rids[0] and a_rids[1] <= b_rids[1]
        return acc if ok else None
    return (tuple(e for e in ag if e.rid in b_rids[0]),
            tuple(e for e in al if e.rid in b_rids[1]),
            True)


# module level operations

def reduce_right(sequent, store):
    """Return the state premises of GR applied to the focus of `sequent`.

    The binder of the focused goal is replaced by fresh eigenvariables
    at a new level of `store`. A goal without clauses gives no premises.

    """
    eigens = store.new_eigens(sequent.focus.binder)
    return gr_premises(sequent, eigens)


def match_head(head, lam, store):
    """Yield (positions, residual) matching every atom of `head` to a distinct atom of `lam`.

    `positions[i]` is the position in `lam` matched by `head[i]`; the
    bindings that make them equal are active in `store` while the pair is
    being consumed.

    """
    search = Search(store=store)
    entries = search.entries(lam)
    position = {e.rid: i for i, e in enumerate(entries)}
    for rids, residual in search.match(tuple(head), entries):
        yield tuple(position[r] for r in rids), tuple(e.item for e in residual)


def expand_state(sequent, store, cfg=None):
    """Yield (GLInstance, obligations) for every GL step applicable to a state sequent.

    Classical obligations come first and have empty linear contexts; the
    linear obligations carry the whole remaining linear program and
    atomic context, to be split by `thread_linear`.

    """
    search = Search(cfg, store=store)
    gin = search.entries(sequent.gamma)
    lin = search.entries(sequent.lam)
    pos_g = {e.rid: i for i, e in enumerate(gin)}
    pos_l = {e.rid: i for i, e in enumerate(lin)}
    for side, sel, goal in search.candidates(sequent.psi, gin):
        rest_g = tuple(e.item for e in gin if side == 'psi' or e.rid != sel)
        for index in range(len(goal.clauses)):
            mark = store.mark()
            metas = store.new_metas(goal.binder)
            inst = gl_instance(goal, index, metas)
            for rids, rest_l in search.match(inst.head, lin):
                instance = GLInstance(side, pos_g[sel] if side == 'gamma' else sel, index, goal, tuple(metas),
                                      tuple(pos_l[r] for r in rids))
                obligations = [GSequent(sequent.psi, (), (), g) for g in inst.cp]
                obligations += [GSequent(sequent.psi, rest_g, [e.item for e in rest_l], h) for h in inst.lp]
                yield instance, obligations
            store.undo(mark)


def thread_linear(obligations, gamma, lam, store, cfg=None):
    """Yield lists of proofs of the linear `obligations` sharing `gamma` and `lam`.

    Only the focused goals and the classical program of the obligations
    are used; the resources are threaded through them and every yielded
    list consumes all of `gamma` and `lam`.

    """
    cfg = cfg or SearchConfig()
    search = Search(cfg, store=store)
    if not obligations:
        if not gamma and not lam:
            yield []
        return
    psi = obligations[0].psi
    goals = [o.focus for o in obligations]
    split = search._thread_eager if cfg.eager_split else search._thread
    for linear, og, ol, slack in split(psi, goals, search.entries(gamma), search.entries(lam), cfg.max_gl_depth):
        if (og or ol) and not slack:
            continue
        yield [node for node, _, _ in search.finish_linear(linear, og, ol)]


def prove(sequent, cfg=None, logger=None):
    """Search for a G-Forum proof of `sequent`.

    >>> from forumlib.sequent import parse_sequent
    >>> s = parse_sequent('gamma: a\\ngamma: a -o b\\nlambda: b')
    >>> prove(s).status
    'proved'

    """
    return Search(cfg, logger=logger).run(sequent)
