"""Holes: chordality with hole certificates, and enumeration of chordless cycles."""

from __future__ import annotations

from typing import Iterator

from . import _kernels
from .errors import LemmaViolation
from .graph import Graph, bfs_path
from .lexbfs import lexbfs


def is_chordal(G: Graph) -> bool:
    if G.n < 4:
        return True
    indptr, indices = G.csr
    return _kernels.peo_violation(indptr, indices, lexbfs(G, 0).order) is None


def find_hole(G: Graph) -> tuple[int, ...] | None:
    """A hole of ``G`` in cyclic order, or None when ``G`` is chordal.

    One LexBFS sweep and a clique test locate the first vertex ``v`` whose
    earlier neighbourhood contains a nonadjacent pair ``p, w``.  Inside the
    prefix ending at ``v`` there is a ``p``-``w`` path avoiding ``N[v]``; the
    shortest one closes a hole through ``v``.
    """
    if G.n < 4:
        return None
    o = lexbfs(G, 0)
    indptr, indices = G.csr
    bad = _kernels.peo_violation(indptr, indices, o.order)
    if bad is None:
        return None
    i, v, p, w = bad
    closed_v = G.neighbor_sets[v] | {v}
    prefix_pos = o.pos
    allowed = _PrefixOutside(prefix_pos, i, closed_v)
    path = bfs_path(G, p, w, allowed)
    if path is None:
        raise LemmaViolation(f"no {p}-{w} path avoiding N[{v}] in the prefix")
    return (v, *path)


class _PrefixOutside:
    __slots__ = ("pos", "limit", "excluded")

    def __init__(self, pos, limit, excluded):
        self.pos = pos
        self.limit = limit
        self.excluded = excluded

    def __contains__(self, u) -> bool:
        return self.pos[u] < self.limit and u not in self.excluded


def is_hole(G: Graph, cycle) -> bool:
    """True when ``cycle`` (cyclic vertex order) is a chordless cycle of length >= 4."""
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    sets = G.neighbor_sets
    members = set(cycle)
    for idx, v in enumerate(cycle):
        inside = sets[v] & members
        if inside != {cycle[idx - 1], cycle[(idx + 1) % k]}:
            return False
    return True


def chordless_cycles(G: Graph, min_length: int = 4, vertices=None) -> Iterator[tuple[int, ...]]:
    """Every hole of ``G`` (restricted to ``vertices`` if given), each exactly once.

    A hole is reported from its smallest vertex ``s``, walking first to the
    smaller of the two hole-neighbours of ``s``.  Exponential in general.
    """
    masks = G.masks
    if vertices is None:
        allowed_all = (1 << G.n) - 1
    else:
        allowed_all = 0
        for v in vertices:
            allowed_all |= 1 << v
    for s in range(G.n):
        if not allowed_all >> s & 1:
            continue
        allowed = allowed_all & ~((1 << (s + 1)) - 1)
        ns = masks[s] & allowed
        for u1 in _bits(ns):
            yield from _extend(masks, ns, allowed, [s, u1], (1 << s) | (1 << u1), min_length)


def _extend(masks, ns, allowed, path, blocked, min_length):
    # blocked: path vertices plus closed neighbourhoods of the path interior
    tail = path[-1]
    for w in _bits(masks[tail] & allowed & ~blocked):
        if ns >> w & 1:
            if w > path[1] and len(path) + 1 >= min_length:
                yield (*path, w)
        else:
            path.append(w)
            yield from _extend(masks, ns, allowed, path, blocked | masks[tail] | (1 << tail), min_length)
            path.pop()


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out
