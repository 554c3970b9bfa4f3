"""Command line interface.

Exit codes: 0 for success, a proof or a valid proof; 1 for no proof, an
invalid proof or a disagreement; 2 when the search bound was reached
without a decision; 3 for usage, parse and format errors.

"""

import argparse
import logging
import os
import sys

from forumlib.corpus import CorpusGenerator, write_corpus, read_corpus
from forumlib.cutelim import CutEliminator
from forumlib.engine.search import SearchConfig, Search, PROVED, REFUTED, UNKNOWN as SEARCH_UNKNOWN
from forumlib.errors import ForumError, FormulaSyntaxError, SequentFormatError, ProofFormatError, \
    ConfigError, NotForumFragment, InvalidProof, ExpansionMismatch
from forumlib.normalize import to_goal, to_clause, degenerate_clauses
from forumlib.oracle.forum import ForumOracle, PROVABLE, NOT_PROVABLE, UNKNOWN as ORACLE_UNKNOWN, DEFAULT_STEP_BOUND
from forumlib.oracle.macro import expand_proof
from forumlib.proofs.checker import check
from forumlib.proofs.struct import dump_proof, load_proof
from forumlib.sequent import read_sequent
from forumlib.syntax.parser import Parser
from forumlib.syntax.visitors import print_goal, print_clause

__all__ = ['OK', 'NO', 'UNKNOWN', 'USAGE', 'build_parser', 'run', 'main']

logger = logging.getLogger(__name__)

OK = 0
NO = 1
UNKNOWN = 2
USAGE = 3

_levels = [logging.WARNING, logging.INFO, logging.DEBUG]


class ArgumentParser(argparse.ArgumentParser):
    """Argument parser reporting usage errors with the exit code 3."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE, '{0}: error: {1}\n'.format(self.prog, message))


def _read_text(path):
    try:
        with open(path, encoding='utf-8') as f:
            return f.read()
    except OSError as e:
        raise SequentFormatError('cannot read "{0}": {1}'.format(path, e))


def _write_text(path, text):
    if path is None or path == '-':
        sys.stdout.write(text)
        if not text.endswith('\n'):
            sys.stdout.write('\n')
    else:
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text)


def _config(args):
    kwargs = {}
    if getattr(args, 'depth', None) is not None:
        kwargs['max_gl_depth'] = args.depth
    return SearchConfig.from_env(iterative_deepening=getattr(args, 'iterative', False),
                                 rng_seed=getattr(args, 'seed', 0) or 0,
                                 trace=getattr(args, 'trace', False),
                                 eager_split=getattr(args, 'eager', False),
                                 **kwargs)


# subcommands

def cmd_normalize(args):
    f = Parser().formula(_read_text(args.file))
    if args.to == 'clause':
        result = to_clause(f)
        print(print_clause(result))
    else:
        result = to_goal(f)
        print(print_goal(result))
    degenerate = degenerate_clauses(result)
    if degenerate:
        logger.warning('{0} clause(s) with an empty head; they can be selected in any state'
                       .format(len(degenerate)))
    return OK


def cmd_prove(args):
    sequent = read_sequent(args.file)
    result = Search(_config(args)).run(sequent)
    for line in result.trace:
        print(line, file=sys.stderr)
    if result.status == PROVED:
        _write_text(args.out, dump_proof(result.proof))
        return OK
    print('{0} (depth bound {1})'.format(result.status, result.depth))
    return NO if result.status == REFUTED else UNKNOWN


def cmd_check(args):
    proof = load_proof(_read_text(args.file))
    result = check(proof)
    print(str(result))
    return OK if result else NO


def cmd_cutelim(args):
    proof = load_proof(_read_text(args.file))
    eliminator = CutEliminator(check_steps=args.check_steps)
    try:
        result = eliminator(proof)
    except InvalidProof as e:
        print(str(e.result))
        return NO
    _write_text(args.out, dump_proof(result))
    if args.log:
        _write_text(args.log, '\n'.join(eliminator.steps) + '\n')
    return OK


def cmd_oracle(args):
    sequent = read_sequent(args.file)
    result = ForumOracle(step_bound=args.steps)(sequent)
    print(result.status)
    if result.status == PROVABLE:
        if args.tree:
            print(str(result.derivation))
        return OK
    return NO if result.status == NOT_PROVABLE else UNKNOWN


def compare_sequent(sequent, cfg, step_bound):
    """Return (engine status, oracle status, problems) for one sequent."""
    problems = []
    result = Search(cfg).run(sequent)
    verdict = ForumOracle(step_bound=step_bound)(sequent)
    if result.status == PROVED:
        checked = check(result.proof)
        if not checked:
            problems.append(str(checked))
        try:
            expand_proof(result.proof)
        except ExpansionMismatch as e:
            problems.append(str(e))
    if result.status == PROVED and verdict.status == NOT_PROVABLE:
        problems.append('the engine proves a sequent the oracle refutes')
    if result.status == REFUTED and verdict.status == PROVABLE:
        problems.append('the oracle proves a sequent the engine refutes')
    return result.status, verdict.status, problems


def cmd_compare(args):
    corpus = read_corpus(args.dir)
    cfg = _config(args)
    disagreements = 0
    decided = 0
    for name, sequent in corpus:
        engine, oracle, problems = compare_sequent(sequent, cfg, args.steps)
        if engine != SEARCH_UNKNOWN and oracle != ORACLE_UNKNOWN:
            decided += 1
        print('{0} engine={1} oracle={2}'.format(name, engine, oracle))
        for p in problems:
            print('  {0}'.format(p))
        disagreements += bool(problems)
    print('{0} sequent(s), {1} decided by both, {2} disagreement(s)'.format(len(corpus), decided, disagreements))
    return NO if disagreements else OK


def cmd_corpus_gen(args):
    generator = CorpusGenerator(seed=args.seed, atoms=args.atoms, depth=args.depth)
    names = write_corpus(args.out, generator.sequents(args.count))
    print('wrote {0} sequent(s) to {1}'.format(len(names), os.path.abspath(args.out)))
    return OK


def _natural(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError('invalid number "{0}"'.format(text))
    if value < 0:
        raise argparse.ArgumentTypeError('value must not be negative')
    return value


def build_parser():
    parser = ArgumentParser(prog='forumlib', description='Proof search and cut elimination for Forum.')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='more output (repeat for debug)')
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    p = commands.add_parser('normalize', help='translate a formula to a goal or a clause')
    p.add_argument('file', help='file with one formula')
    p.add_argument('--to', choices=['goal', 'clause'], default='goal')
    p.set_defaults(func=cmd_normalize)

    p = commands.add_parser('prove', help='search for a proof of a sequent')
    p.add_argument('file', help='sequent file')
    p.add_argument('--depth', type=_natural, default=None,
                   help='bound on nested GL applications (default: FORUMLIB_DEPTH or 6)')
    p.add_argument('--iterative', action='store_true', help='try the depth bounds 1, 2, ... in order')
    p.add_argument('--seed', type=_natural, default=0, help='shuffle goal selection with this seed')
    p.add_argument('--trace', action='store_true', help='print one line per rule application to standard error')
    p.add_argument('--eager', action='store_true', help='enumerate linear context splits eagerly')
    p.add_argument('--out', default=None, help='proof file (default: standard output)')
    p.set_defaults(func=cmd_prove)

    p = commands.add_parser('check', help='check a proof file')
    p.add_argument('file', help='proof file')
    p.set_defaults(func=cmd_check)

    p = commands.add_parser('cutelim', help='eliminate cuts from a proof file')
    p.add_argument('file', help='proof file')
    p.add_argument('--out', default=None, help='normalised proof file (default: standard output)')
    p.add_argument('--log', default=None, help='file for the log of elimination steps')
    p.add_argument('--check-steps', action='store_true', help='check the proof after every step')
    p.set_defaults(func=cmd_cutelim)

    p = commands.add_parser('oracle', help='search for a small-step Forum proof')
    p.add_argument('file', help='sequent file')
    p.add_argument('--steps', type=_natural, default=DEFAULT_STEP_BOUND, help='bound on rule applications')
    p.add_argument('--tree', action='store_true', help='print the derivation')
    p.set_defaults(func=cmd_oracle)

    p = commands.add_parser('compare', help='compare the engine with the small-step prover on a corpus')
    p.add_argument('dir', help='directory of sequent files')
    p.add_argument('--depth', type=_natural, default=None,
                   help='bound on nested GL applications (default: FORUMLIB_DEPTH or 6)')
    p.add_argument('--iterative', action='store_true', help='try the depth bounds 1, 2, ... in order')
    p.add_argument('--seed', type=_natural, default=0, help='shuffle goal selection with this seed')
    p.add_argument('--eager', action='store_true', help='enumerate linear context splits eagerly')
    p.add_argument('--steps', type=_natural, default=DEFAULT_STEP_BOUND, help='bound on rule applications')
    p.set_defaults(func=cmd_compare)

    p = commands.add_parser('corpus', help='corpus tools')
    corpus = p.add_subparsers(dest='action', metavar='action')
    corpus.required = True
    g = corpus.add_parser('gen', help='generate a seeded corpus of ground sequents')
    g.add_argument('--seed', type=int, default=0)
    g.add_argument('--count', type=_natural, default=200)
    g.add_argument('--atoms', type=int, default=3)
    g.add_argument('--depth', type=_natural, default=3)
    g.add_argument('--out', default='corpus', help='output directory')
    g.set_defaults(func=cmd_corpus_gen)
    return parser


def run(argv=None):
    """Run the command line `argv` and return the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=_levels[min(args.verbose, len(_levels) - 1)],
                        format='%(levelname)s %(name)s: %(message)s')
    try:
        return args.func(args)
    except (FormulaSyntaxError, SequentFormatError, ProofFormatError, ConfigError, NotForumFragment) as e:
        print('error: {0}'.format(e), file=sys.stderr)
        return USAGE
    except ForumError as e:
        print('error: {0}'.format(e), file=sys.stderr)
        return NO


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
