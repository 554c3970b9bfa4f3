"""
A small library for proof search and proof normalisation in linear logic.

Formulae of first order linear logic are translated into goals and clauses
of the Forum fragment, proved by a backtracking engine built on two big
inference rules, checked by an independent checker and normalised to
cut-free form. A small-step Forum prover is included for cross-checking.

"""

import logging

logger = logging.getLogger('forumlib')
logger.addHandler(logging.NullHandler())
logger.info('initialising forum library')
