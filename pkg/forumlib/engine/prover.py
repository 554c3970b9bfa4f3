"""Access to the engine through the nltk prover interface."""

import logging

from nltk.inference.api import Prover

from forumlib.engine.search import Search, SearchConfig, PROVED
from forumlib.normalize import to_goal
from forumlib.sequent import GSequent
from forumlib.syntax.parser import Parser

__all__ = ['ForumProver']


class ForumProver(Prover):
    """An nltk `Prover` for first order linear logic.

    Goals and assumptions are formulae or formula texts. Each assumption
    is translated to a goal of the linear program, so every assumption
    has to be used exactly once; the goal is put in focus.

    >>> ForumProver().prove('b', ['a', 'a -o b'])
    True

    """

    def __init__(self, cfg=None, logger=None):
        self.cfg = cfg or SearchConfig()
        self.logger = logger or logging.getLogger(__name__)
        self.last_result = None

    def sequent(self, goal=None, assumptions=None):
        parser = Parser()

        def read(f):
            return to_goal(parser.formula(f) if isinstance(f, str) else f)

        gamma = [read(a) for a in assumptions or ()]
        focus = None if goal is None else read(goal)
        return GSequent((), gamma, (), focus)

    def _prove(self, goal=None, assumptions=None, verbose=False):
        sequent = self.sequent(goal, assumptions)
        search = Search(self.cfg.replace(trace=self.cfg.trace or verbose), logger=self.logger)
        result = search.run(sequent)
        self.last_result = result
        if result.status == PROVED:
            output = str(result.proof)
        else:
            output = '{0} at depth bound {1}'.format(result.status, result.depth)
        if verbose:
            output = '\n'.join(result.trace + [output])
        return result.status == PROVED, output
