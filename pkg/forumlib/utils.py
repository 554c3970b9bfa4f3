"""This module contains various utility functions and classes."""

import threading


class IdSupply(object):
    """A thread safe supply of fresh integer identifiers.

    Identifiers read back from files are reserved so that fresh ones
    never collide with them.

    """

    def __init__(self, start=1):
        self._next = start
        self._lock = threading.Lock()

    def fresh(self):
        with self._lock:
            rv = self._next
            self._next += 1
            return rv

    def reserve(self, ident):
        with self._lock:
            if ident >= self._next:
                self._next = ident + 1


# global supply used for variables and occurrence ids
ids = IdSupply()


def sub_multisets(items, key=repr):
    """Yield pairs (chosen, rest) of index tuples for every sub-multiset.

    Elements with equal `key` are interchangeable, so every distinct
    sub-multiset is produced once.

    """
    groups = []
    seen = {}
    for i, x in enumerate(items):
        k = key(x)
        if k in seen:
            groups[seen[k]].append(i)
        else:
            seen[k] = len(groups)
            groups.append([i])

    def choose(g):
        if g == len(groups):
            yield (), ()
            return
        members = groups[g]
        for n in range(len(members) + 1):
            for chosen, rest in choose(g + 1):
                yield tuple(members[:n]) + chosen, tuple(members[n:]) + rest

    for chosen, rest in choose(0):
        yield tuple(sorted(chosen)), tuple(sorted(rest))
