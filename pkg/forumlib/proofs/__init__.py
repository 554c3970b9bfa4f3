"""This package contains proof trees and the proof checker."""

from forumlib.proofs.struct import *
from forumlib.proofs.checker import *
