"""This package contains the small-step Forum prover used for cross-checking."""

from forumlib.oracle.forum import *
from forumlib.oracle.macro import *
