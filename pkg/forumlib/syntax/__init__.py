"""This package contains the syntax of first order linear logic."""

from forumlib.syntax.struct import *
from forumlib.syntax.visitors import *
from forumlib.syntax.parser import *
