"""Truemper configurations, wheel subtypes, and class membership by brute force.

Recognition is structural: degree profiles, path tracing between the two
ends of a 3-path configuration, and explicit checks that every pair of paths
induces a hole.  Containment searches vertex subsets in order of size, then
lexicographically, so witnesses are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from .errors import NotAWheel, TooLarge
from .graph import Graph
from .holes import chordless_cycles, find_hole, is_chordal

DEFAULT_CAP = 16


class ConfigKind(str, Enum):
    HOLE = "Hole"
    FOUR_HOLE = "FourHole"
    LONG_HOLE = "LongHole"
    EVEN_HOLE = "EvenHole"
    THETA = "Theta"
    SQUARE_THETA = "SquareTheta"
    PRISM = "Prism"
    PYRAMID = "Pyramid"
    WHEEL = "Wheel"
    ONE_WHEEL = "OneWheel"
    TWO_WHEEL = "TwoWheel"
    THREE_WHEEL = "ThreeWheel"
    UNIVERSAL_WHEEL = "UniversalWheel"
    EVEN_WHEEL = "EvenWheel"
    ODD_WHEEL = "OddWheel"
    D_HOLE = "DHole"
    CAP = "Cap"
    DIAMOND = "Diamond"
    CLAW = "Claw"
    S2 = "S2"
    S3 = "S3"
    P3 = "P3"
    P3BAR = "P3bar"

    def __str__(self) -> str:
        return self.value


K = ConfigKind

HOLE_KINDS = frozenset({K.HOLE, K.FOUR_HOLE, K.LONG_HOLE, K.EVEN_HOLE})
WHEEL_KINDS = frozenset({K.WHEEL, K.ONE_WHEEL, K.TWO_WHEEL, K.THREE_WHEEL,
                         K.UNIVERSAL_WHEEL, K.EVEN_WHEEL, K.ODD_WHEEL, K.D_HOLE})
SMALL_KINDS = frozenset({K.DIAMOND, K.CLAW, K.S2, K.S3, K.P3, K.P3BAR})
# kinds whose graphs contain a hole: they live inside the 2-core and vanish on chordal graphs
HOLEY_KINDS = frozenset(K) - SMALL_KINDS

MIN_ORDER = {
    K.HOLE: 4, K.FOUR_HOLE: 4, K.LONG_HOLE: 5, K.EVEN_HOLE: 4,
    K.THETA: 5, K.SQUARE_THETA: 5, K.PRISM: 6, K.PYRAMID: 6,
    K.WHEEL: 5, K.ONE_WHEEL: 6, K.TWO_WHEEL: 5, K.THREE_WHEEL: 5,
    K.UNIVERSAL_WHEEL: 5, K.EVEN_WHEEL: 5, K.ODD_WHEEL: 5, K.D_HOLE: 5,
    K.CAP: 5, K.DIAMOND: 4, K.CLAW: 4, K.S2: 2, K.S3: 3, K.P3: 3, K.P3BAR: 3,
}

# listing order used in reports
REPORT_KINDS = (
    K.HOLE, K.FOUR_HOLE, K.LONG_HOLE, K.EVEN_HOLE, K.THETA, K.SQUARE_THETA,
    K.PRISM, K.PYRAMID, K.WHEEL, K.ONE_WHEEL, K.TWO_WHEEL, K.THREE_WHEEL,
    K.UNIVERSAL_WHEEL, K.EVEN_WHEEL, K.ODD_WHEEL, K.D_HOLE, K.CAP,
)


class ClassId(str, Enum):
    C1 = "C1"
    C2 = "C2"
    C3 = "C3"
    C4 = "C4"
    C5 = "C5"
    C6 = "C6"
    C7 = "C7"
    C8 = "C8"
    ODD_SIGNABLE = "OddSignable"
    EVEN_SIGNABLE = "EvenSignable"
    EVEN_HOLE_FREE = "EvenHoleFree"
    WHEEL_FREE = "WheelFree"
    FOUR_HOLE_FREE_ODD_SIGNABLE = "FourHoleFreeOddSignable"
    SQUARE_THETA_FREE_EVEN_SIGNABLE = "SquareThetaFreeEvenSignable"
    UNIVERSALLY_SIGNABLE = "C7"
    CHORDAL = "C8"

    def __str__(self) -> str:
        return self.value


FORBIDDEN: dict[ClassId, tuple[ConfigKind, ...]] = {
    ClassId.C1: (K.ONE_WHEEL, K.THETA, K.PYRAMID),
    ClassId.C2: (K.THREE_WHEEL,),
    ClassId.C3: (K.TWO_WHEEL, K.PRISM, K.PYRAMID),
    ClassId.C4: (K.ONE_WHEEL, K.THREE_WHEEL, K.THETA, K.PYRAMID),
    ClassId.C5: (K.ONE_WHEEL, K.TWO_WHEEL, K.PRISM, K.THETA, K.PYRAMID),
    ClassId.C6: (K.TWO_WHEEL, K.THREE_WHEEL, K.PRISM, K.PYRAMID),
    ClassId.C7: (K.WHEEL, K.PRISM, K.THETA, K.PYRAMID),
    ClassId.C8: (K.HOLE,),
    ClassId.ODD_SIGNABLE: (K.THETA, K.PRISM, K.EVEN_WHEEL),
    ClassId.EVEN_SIGNABLE: (K.PYRAMID, K.ODD_WHEEL),
    ClassId.EVEN_HOLE_FREE: (K.EVEN_HOLE,),
    ClassId.WHEEL_FREE: (K.WHEEL,),
    ClassId.FOUR_HOLE_FREE_ODD_SIGNABLE: (K.FOUR_HOLE, K.THETA, K.PRISM, K.EVEN_WHEEL),
    ClassId.SQUARE_THETA_FREE_EVEN_SIGNABLE: (K.SQUARE_THETA, K.PYRAMID, K.ODD_WHEEL),
}

TABLE_CLASSES = (ClassId.C1, ClassId.C2, ClassId.C3, ClassId.C4,
                 ClassId.C5, ClassId.C6, ClassId.C7, ClassId.C8)


@dataclass(frozen=True)
class ConfigurationWitness:
    """An induced copy of ``kind`` on ``vertices`` (sorted original ids).

    ``roles`` maps each vertex to its part: ``center``/``rim`` for wheels,
    ``hub``/``apex``/``triangle1``/``triangle2``/``path1..3`` for 3-path
    configurations, ``hole`` for holes.
    """

    kind: ConfigKind
    vertices: tuple[int, ...]
    roles: dict = field(default_factory=dict, compare=False)


# --- structural recognition on bitmask-induced subgraphs -------------------


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _connected(masks, S: int) -> bool:
    if not S:
        return True
    seen = S & -S
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= masks[v]
        nxt &= S & ~seen
        seen |= nxt
        frontier = nxt
    return seen == S


def _is_hole_mask(masks, S: int) -> bool:
    if S.bit_count() < 4:
        return False
    for v in _bits(S):
        if (masks[v] & S).bit_count() != 2:
            return False
    return _connected(masks, S)


def _cycle_order(masks, S: int) -> list[int]:
    # S induces a cycle; walk from its smallest vertex towards its smaller neighbour
    start = (S & -S).bit_length() - 1
    order = [start]
    prev, cur = start, _bits(masks[start] & S)[0]
    while cur != start:
        order.append(cur)
        nb = masks[cur] & S & ~(1 << prev)
        prev, cur = cur, nb.bit_length() - 1
    return order


def _trace(masks, S, start, first, ends, deg3):
    # follow degree-2 vertices from start through first until a vertex in ends
    path = [start]
    prev, cur = start, first
    while not ends >> cur & 1:
        if deg3 >> cur & 1:
            return None
        path.append(cur)
        nb = masks[cur] & S & ~(1 << prev)
        prev, cur = cur, nb.bit_length() - 1
    path.append(cur)
    return path


def _mask_of(vs) -> int:
    mask = 0
    for v in vs:
        mask |= 1 << v
    return mask


def _three_paths_ok(masks, paths, k: int, shared: int) -> bool:
    # paths internally disjoint, cover all k vertices, pairwise unions are holes
    covered = shared
    total = shared.bit_count()
    for p in paths:
        inner = _mask_of(p[1:-1])
        if covered & inner:
            return False
        covered |= inner
        total += len(p) - 2
    if total != k:
        return False
    pm = [_mask_of(p) for p in paths]
    return all(_is_hole_mask(masks, pm[i] | pm[j]) for i, j in ((0, 1), (0, 2), (1, 2)))


def _path_roles(roles, paths):
    for idx, p in enumerate(paths, 1):
        for v in p[1:-1]:
            roles[v] = f"path{idx}"


def _theta(masks, S, k, hubs, deg3):
    a, b = hubs
    if masks[a] >> b & 1:
        return None
    ends = 1 << b
    paths = []
    for first in _bits(masks[a] & S):
        p = _trace(masks, S, a, first, ends, deg3)
        if p is None:
            return None
        paths.append(p)
    if not _three_paths_ok(masks, paths, k, (1 << a) | (1 << b)):
        return None
    roles = {a: "hub", b: "hub"}
    _path_roles(roles, paths)
    square = sorted(len(p) - 1 for p in paths)[:2] == [2, 2]
    return roles, square


def _pyramid(masks, S, k, deg3_list, deg3):
    for apex in deg3_list:
        tri = [v for v in deg3_list if v != apex]
        x, y, z = tri
        if not (masks[x] >> y & 1 and masks[x] >> z & 1 and masks[y] >> z & 1):
            continue
        ends = _mask_of(tri)
        paths = []
        for first in _bits(masks[apex] & S):
            p = _trace(masks, S, apex, first, ends, deg3)
            if p is None:
                break
            paths.append(p)
        else:
            if len({p[-1] for p in paths}) != 3:
                continue
            if not _three_paths_ok(masks, paths, k, (1 << apex) | ends):
                continue
            roles = {apex: "apex", x: "triangle", y: "triangle", z: "triangle"}
            _path_roles(roles, paths)
            return roles
    return None


def _prism(masks, S, k, deg3_list, deg3):
    v0 = deg3_list[0]
    for pair in combinations(deg3_list[1:], 2):
        X = (v0, *pair)
        Y = [v for v in deg3_list if v not in X]
        if not all(masks[u] >> w & 1 for u, w in combinations(X, 2)):
            continue
        if not all(masks[u] >> w & 1 for u, w in combinations(Y, 2)):
            continue
        xm, ym = _mask_of(X), _mask_of(Y)
        paths = []
        for x in X:
            out = masks[x] & S & ~xm
            if out.bit_count() != 1:
                break
            p = _trace(masks, S, x, out.bit_length() - 1, ym, deg3)
            if p is None:
                break
            paths.append(p)
        else:
            if len({p[-1] for p in paths}) != 3:
                continue
            if not _three_paths_ok(masks, paths, k, xm | ym):
                continue
            roles = {v: "triangle1" for v in X}
            roles.update({v: "triangle2" for v in Y})
            _path_roles(roles, paths)
            return roles
    return None


def wheel_kinds(rim: list[int], center_mask: int) -> set[ConfigKind]:
    """Subtype flags of a wheel given its rim in cyclic order and the centre's neighbours."""
    k = len(rim)
    inA = [bool(center_mask >> v & 1) for v in rim]
    kinds = {K.WHEEL}
    for i in range(k):
        a, b, c = inA[i - 1], inA[i], inA[(i + 1) % k]
        if b and not a and not c:
            kinds.add(K.ONE_WHEEL)
        if b and (a != c):
            kinds.add(K.TWO_WHEEL)
        if a and b and c:
            kinds.add(K.THREE_WHEEL)
    if all(inA):
        kinds.add(K.UNIVERSAL_WHEEL)
    sectors = _sectors(inA)
    if len(sectors) % 2 == 0:
        kinds.add(K.EVEN_WHEEL)
    if sum(1 for s in sectors if s == 1) % 2 == 1:
        kinds.add(K.ODD_WHEEL)
    if K.THREE_WHEEL in kinds and sum(inA) == 3:
        kinds.add(K.D_HOLE)
    return kinds


def _sectors(inA: list[bool]) -> list[int]:
    idx = [i for i, b in enumerate(inA) if b]
    k = len(inA)
    return [(idx[(j + 1) % len(idx)] - idx[j]) % k or k for j in range(len(idx))]


def _analyze(masks, S: int, small: bool = True) -> dict[ConfigKind, dict[int, str]]:
    """Every kind realised by ``G[S]`` itself, with a role map for each."""
    found: dict[ConfigKind, dict[int, str]] = {}
    verts = _bits(S)
    k = len(verts)
    deg = {v: (masks[v] & S).bit_count() for v in verts}
    m = sum(deg.values()) // 2
    if small and k <= 4:
        plain = {v: "vertex" for v in verts}
        if k == 2 and m == 0:
            found[K.S2] = plain
        elif k == 3 and m < 3:
            found[(K.S3, K.P3BAR, K.P3)[m]] = plain
        elif k == 4:
            if m == 5:
                found[K.DIAMOND] = plain
            elif m == 3 and max(deg.values()) == 3:
                found[K.CLAW] = {v: ("center" if deg[v] == 3 else "leaf") for v in verts}
    if k < 4 or min(deg.values()) < 2 or not _connected(masks, S):
        return found
    if all(d == 2 for d in deg.values()):
        roles = {v: "hole" for v in verts}
        found[K.HOLE] = roles
        found[K.FOUR_HOLE if k == 4 else K.LONG_HOLE] = roles
        if k % 2 == 0:
            found[K.EVEN_HOLE] = roles
        return found
    # wheels: a centre whose removal leaves a hole
    if k >= 5:
        for c in verts:
            cm = masks[c] & S
            if deg[c] < 3:
                continue
            if any(deg[u] - (cm >> u & 1) != 2 for u in verts if u != c):
                continue
            rest = S & ~(1 << c)
            if not _connected(masks, rest):
                continue
            rim = _cycle_order(masks, rest)
            roles = {v: "rim" for v in rim}
            roles[c] = "center"
            for kind in wheel_kinds(rim, cm):
                found.setdefault(kind, roles)
    if any(d > 3 for d in deg.values()):
        return found
    deg3_list = [v for v in verts if deg[v] == 3]
    deg3 = _mask_of(deg3_list)
    t = len(deg3_list)
    if t == 2:
        a, b = deg3_list
        res = _theta(masks, S, k, (a, b), deg3)
        if res is not None:
            roles, square = res
            found[K.THETA] = roles
            if square:
                found[K.SQUARE_THETA] = roles
        elif k >= 5 and masks[a] >> b & 1:
            common = masks[a] & masks[b] & S
            if common.bit_count() == 1:
                w = common.bit_length() - 1
                if deg[w] == 2 and _is_hole_mask(masks, S & ~common):
                    roles = {v: "hole" for v in verts}
                    roles[w] = "hat"
                    found[K.CAP] = roles
    elif t == 4 and k >= 6:
        roles = _pyramid(masks, S, k, deg3_list, deg3)
        if roles is not None:
            found[K.PYRAMID] = roles
    elif t == 6:
        roles = _prism(masks, S, k, deg3_list, deg3)
        if roles is not None:
            found[K.PRISM] = roles
    return found


# --- public API -------------------------------------------------------------


def classify_configuration(G: Graph) -> frozenset[ConfigKind]:
    """Every kind that ``G`` as a whole realises (empty if none).

    >>> from lexelim.graph import complete_bipartite
    >>> sorted(map(str, classify_configuration(complete_bipartite(2, 3))))
    ['SquareTheta', 'Theta']
    """
    return frozenset(_analyze(G.masks, (1 << G.n) - 1))


def configuration_roles(G: Graph, kind: ConfigKind) -> dict[int, str] | None:
    return _analyze(G.masks, (1 << G.n) - 1).get(ConfigKind(kind))


def wheel_sectors(G: Graph, center: int) -> list[int]:
    """Cyclic sector lengths of the wheel ``(G - center, center)``.

    The rim is walked from its smallest vertex towards that vertex's smaller
    rim neighbour; the list starts at the first centre neighbour met.
    """
    masks = G.masks
    full = (1 << G.n) - 1
    rest = full & ~(1 << center)
    cm = masks[center]
    if not _is_hole_mask(masks, rest) or (cm & rest).bit_count() < 3:
        raise NotAWheel(f"G - {center} is not a hole with >= 3 neighbours of {center}")
    rim = _cycle_order(masks, rest)
    return _sectors([bool(cm >> v & 1) for v in rim])


def two_core(G: Graph) -> list[int]:
    """Vertices of the 2-core (iteratively strip vertices of degree < 2)."""
    deg = G.degrees()
    alive = [True] * G.n
    stack = [v for v in range(G.n) if deg[v] < 2]
    for v in stack:
        alive[v] = False
    while stack:
        v = stack.pop()
        for u in G.neighbors(v):
            if alive[u]:
                deg[u] -= 1
                if deg[u] < 2:
                    alive[u] = False
                    stack.append(u)
    return [v for v in range(G.n) if alive[v]]


def _check_cap(G: Graph, cap: int):
    if G.n > cap:
        raise TooLarge(f"brute-force search limited to {cap} vertices, got {G.n}")


def _subset_masks(verts: list[int], min_size: int, max_size: int | None = None):
    bits = [1 << v for v in verts]
    top = len(verts) if max_size is None else min(max_size, len(verts))
    for r in range(min_size, top + 1):
        for combo in combinations(bits, r):
            yield sum(combo)


def _scan(G: Graph, wanted: frozenset[ConfigKind]):
    """First subset in (size, lex) order realising a wanted kind: ``(mask, analysis)``."""
    if not wanted:
        return None
    min_size = min(MIN_ORDER[k] for k in wanted)
    holey_only = wanted <= HOLEY_KINDS
    if holey_only:
        if is_chordal(G):
            return None
        verts = two_core(G)
    else:
        verts = list(range(G.n))
    masks = G.masks
    small = not holey_only
    for S in _subset_masks(verts, min_size):
        if holey_only:
            ok = True
            for v in _bits(S):
                if (masks[v] & S).bit_count() < 2:
                    ok = False
                    break
            if not ok:
                continue
        found = _analyze(masks, S, small)
        if found and not wanted.isdisjoint(found):
            return S, found
    return None


def _hole_witness(G: Graph, kind: ConfigKind) -> ConfigurationWitness | None:
    # targeted search: chordless cycles instead of all subsets
    if is_chordal(G):
        return None
    if kind == K.HOLE:
        keep = lambda c: True  # noqa: E731
    elif kind == K.FOUR_HOLE:
        keep = lambda c: len(c) == 4  # noqa: E731
    elif kind == K.LONG_HOLE:
        keep = lambda c: len(c) >= 5  # noqa: E731
    else:
        keep = lambda c: len(c) % 2 == 0  # noqa: E731
    min_len = 5 if kind == K.LONG_HOLE else 4
    best = None
    for cyc in chordless_cycles(G, min_len):
        if not keep(cyc):
            continue
        key = (len(cyc), tuple(sorted(cyc)))
        if best is None or key < best:
            best = key
    if best is None:
        return None
    verts = best[1]
    return ConfigurationWitness(kind, verts, {v: "hole" for v in verts})


def contains_configuration(G: Graph, kind: ConfigKind, cap: int = DEFAULT_CAP,
                           targeted_holes: bool = True) -> ConfigurationWitness | None:
    """The first induced copy of ``kind`` in (size, lex) subset order, or None."""
    kind = ConfigKind(kind)
    _check_cap(G, cap)
    if targeted_holes and kind in HOLE_KINDS:
        return _hole_witness(G, kind)
    hit = _scan(G, frozenset({kind}))
    if hit is None:
        return None
    S, found = hit
    return ConfigurationWitness(kind, tuple(_bits(S)), found[kind])


def configuration_inventory(G: Graph, cap: int = DEFAULT_CAP) -> frozenset[ConfigKind]:
    """All hole-containing kinds realised by some induced subgraph of ``G`` (cached)."""
    inv = G._cache.get("inventory")
    if inv is not None:
        return inv
    _check_cap(G, cap)
    kinds: set[ConfigKind] = set()
    if not is_chordal(G):
        masks = G.masks
        for S in _subset_masks(two_core(G), 4):
            ok = True
            for v in _bits(S):
                if (masks[v] & S).bit_count() < 2:
                    ok = False
                    break
            if ok:
                kinds.update(_analyze(masks, S, False))
    inv = G._cache["inventory"] = frozenset(kinds)
    return inv


def forbidden_witness(G: Graph, c: ClassId, cap: int = DEFAULT_CAP) -> ConfigurationWitness | None:
    """A forbidden configuration of class ``c`` inside ``G``, or None if ``G`` is a member."""
    c = ClassId(c)
    forbidden = FORBIDDEN[c]
    if c == ClassId.C8:
        hole = find_hole(G)
        if hole is None:
            return None
        return ConfigurationWitness(K.HOLE, tuple(sorted(hole)), {v: "hole" for v in hole})
    _check_cap(G, cap)
    inv = G._cache.get("inventory")
    if inv is not None and inv.isdisjoint(forbidden):
        return None
    hit = _scan(G, frozenset(forbidden))
    if hit is None:
        return None
    S, found = hit
    kind = next(k for k in forbidden if k in found)
    return ConfigurationWitness(kind, tuple(_bits(S)), found[kind])


def in_class(G: Graph, c: ClassId, cap: int = DEFAULT_CAP) -> bool:
    """Membership by excluding the class's forbidden configurations.

    C8 (chordal) uses linear-time recognition and ignores ``cap``.
    """
    c = ClassId(c)
    if c == ClassId.C8:
        return is_chordal(G)
    inv = G._cache.get("inventory")
    if inv is not None:
        return inv.isdisjoint(FORBIDDEN[c])
    return forbidden_witness(G, c, cap) is None


def classes_of(G: Graph, cap: int = DEFAULT_CAP) -> list[ClassId]:
    """Every class (Table classes, then signable classes) that ``G`` belongs to."""
    inv = configuration_inventory(G, cap)
    out = []
    for c in (*TABLE_CLASSES, ClassId.ODD_SIGNABLE, ClassId.EVEN_SIGNABLE):
        if inv.isdisjoint(FORBIDDEN[c]):
            out.append(c)
    return out
