"""This package contains the proof search engine."""

from forumlib.engine.unify import *
from forumlib.engine.search import *
from forumlib.engine.prover import *
