"""Seeded graph generators.

All randomness comes from :class:`random.Random` (Mersenne Twister MT19937)
seeded with the given integer, so equal arguments give equal graphs.
Probabilities are exact rationals: a pair becomes an edge when
``randrange(denominator) < numerator``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .configurations import DEFAULT_CAP, ClassId, ConfigKind, in_class
from .errors import Exhausted, InvalidParameter
from .graph import Graph, build_graph

SEED_LIMIT = 1 << 64
DEFAULT_ATTEMPTS = 10_000


def _probability(p, what: str = "p") -> Fraction:
    try:
        q = Fraction(p)
    except (TypeError, ValueError, ZeroDivisionError):
        raise InvalidParameter(f"{what} must be a number in [0, 1], got {p!r}") from None
    if not 0 <= q <= 1:
        raise InvalidParameter(f"{what} must lie in [0, 1], got {p!r}")
    return q


def _rng(seed) -> random.Random:
    if not isinstance(seed, int) or not 0 <= seed < SEED_LIMIT:
        raise InvalidParameter(f"seed must be an unsigned 64-bit integer, got {seed!r}")
    return random.Random(seed)


def _count(n) -> int:
    if not isinstance(n, int) or n < 0:
        raise InvalidParameter(f"vertex count must be a non-negative integer, got {n!r}")
    return n


def gen_random(n: int, p, seed: int) -> Graph:
    """G(n, p): every pair ``u < v``, in lexicographic order, is an edge with probability ``p``.

    >>> gen_random(5, 1, 0).m
    10
    """
    n = _count(n)
    q = _probability(p)
    rng = _rng(seed)
    num, den = q.numerator, q.denominator
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.randrange(den) < num]
    return build_graph(n, edges)


def gen_chordal(n: int, density=Fraction(1, 2), seed: int = 0) -> Graph:
    """Connected chordal graph grown by attaching simplicial vertices.

    Vertex ``v`` picks an earlier vertex ``u`` and becomes adjacent to ``u``
    and to each of ``u``'s attachment clique with probability ``density``.
    Its own attachment clique is what it joined, so every new vertex is
    simplicial.  Labels are shuffled at the end.
    """
    n = _count(n)
    q = _probability(density, "density")
    rng = _rng(seed)
    num, den = q.numerator, q.denominator
    parents: list[list[int]] = [[] for _ in range(n)]
    edges = []
    for v in range(1, n):
        u = rng.randrange(v)
        chosen = [u] + [x for x in parents[u] if rng.randrange(den) < num]
        parents[v] = chosen
        edges.extend((x, v) for x in chosen)
    perm = list(range(n))
    rng.shuffle(perm)
    return build_graph(n, [(perm[a], perm[b]) for a, b in edges])


@dataclass(frozen=True)
class ConfigParams:
    """Parameters of a Truemper configuration.

    ``lengths`` are the three path lengths (in edges) of a theta, prism or
    pyramid.  A wheel uses ``rim`` (hole length) and ``center_nbrs`` (rim
    positions adjacent to the centre).
    """

    kind: ConfigKind
    lengths: tuple[int, ...] = ()
    rim: int = 0
    center_nbrs: tuple[int, ...] = ()


def gen_configuration(params: ConfigParams) -> tuple[Graph, dict[int, str]]:
    """Build the configuration exactly; returns the graph and a role per vertex.

    >>> G, roles = gen_configuration(ConfigParams(ConfigKind.THETA, (2, 2, 2)))
    >>> G.n, G.m
    (5, 6)
    """
    kind = ConfigKind(params.kind)
    if kind == ConfigKind.WHEEL:
        return _wheel(params.rim, params.center_nbrs)
    if kind not in (ConfigKind.THETA, ConfigKind.PRISM, ConfigKind.PYRAMID):
        raise InvalidParameter(f"cannot generate {kind}; use Theta, Prism, Pyramid or Wheel")
    lengths = tuple(params.lengths)
    if len(lengths) != 3 or not all(isinstance(x, int) for x in lengths):
        raise InvalidParameter("three integer path lengths are required")
    if kind == ConfigKind.THETA and min(lengths) < 2:
        raise InvalidParameter("theta paths need length at least 2")
    if kind == ConfigKind.PRISM and min(lengths) < 1:
        raise InvalidParameter("prism paths need length at least 1")
    if kind == ConfigKind.PYRAMID and (min(lengths) < 1 or sorted(lengths)[1] < 2):
        raise InvalidParameter("pyramid paths need length at least 1, at most one of length 1")
    roles: dict[int, str] = {}
    edges = []
    if kind == ConfigKind.THETA:
        starts, ends = [0, 0, 0], [1, 1, 1]
        roles.update({0: "hub", 1: "hub"})
        nxt = 2
    elif kind == ConfigKind.PRISM:
        starts, ends = [0, 1, 2], [3, 4, 5]
        roles.update({v: "triangle1" for v in starts})
        roles.update({v: "triangle2" for v in ends})
        edges += [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]
        nxt = 6
    else:
        starts, ends = [0, 0, 0], [1, 2, 3]
        roles[0] = "apex"
        roles.update({v: "triangle" for v in ends})
        edges += [(1, 2), (1, 3), (2, 3)]
        nxt = 4
    for idx, (s, t, length) in enumerate(zip(starts, ends, lengths), 1):
        prev = s
        for _ in range(length - 1):
            roles[nxt] = f"path{idx}"
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, t))
    return build_graph(nxt, edges), roles


def _wheel(rim: int, center_nbrs) -> tuple[Graph, dict[int, str]]:
    nbrs = sorted(set(center_nbrs))
    if not isinstance(rim, int) or rim < 4:
        raise InvalidParameter("wheel rim needs length at least 4")
    if len(nbrs) < 3 or nbrs[0] < 0 or nbrs[-1] >= rim:
        raise InvalidParameter("wheel centre needs at least 3 distinct rim neighbours")
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(i, rim) for i in nbrs]
    roles = {i: "rim" for i in range(rim)}
    roles[rim] = "center"
    return build_graph(rim + 1, edges), roles


def sample_class(c: ClassId, n: int, p, seed: int, attempts: int = DEFAULT_ATTEMPTS,
                 cap: int = DEFAULT_CAP) -> Graph:
    """Rejection-sample ``gen_random(n, p, .)`` until the graph lies in class ``c``.

    Attempt seeds are drawn from a generator seeded with ``seed``.  Raises
    Exhausted after ``attempts`` rejections.
    """
    c = ClassId(c)
    _probability(p)
    master = _rng(seed)
    for _ in range(attempts):
        G = gen_random(n, p, master.getrandbits(64))
        if in_class(G, c, cap):
            return G
    raise Exhausted(f"no member of {c} found in {attempts} attempts (n={n}, p={p})")
