"""F-elimination orderings: verification with first-violation certificates."""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .configurations import ClassId
from .decomposability import (
    HOLES, LONG_HOLES, P3, P3_P3BAR, P3BAR, S2, S3, S3_P3, S3_P3_P3BAR, S3_P3BAR,
    SHAPE_OF_FAMILY, PatternFamily, find_pattern, structure_of,
)
from .graph import Graph
from .lexbfs import VertexOrdering, as_ordering, lexbfs

CLASS_FAMILY: dict[ClassId, PatternFamily] = {
    ClassId.C1: S3,
    ClassId.C2: P3,
    ClassId.C3: P3BAR,
    ClassId.C4: S3_P3,
    ClassId.C5: S3_P3BAR,
    ClassId.C6: P3_P3BAR,
    ClassId.C7: S3_P3_P3BAR,
    ClassId.C8: S2,
    ClassId.EVEN_HOLE_FREE: HOLES,
    ClassId.FOUR_HOLE_FREE_ODD_SIGNABLE: HOLES,
    ClassId.SQUARE_THETA_FREE_EVEN_SIGNABLE: LONG_HOLES,
    ClassId.WHEEL_FREE: P3,
}


def class_family(c: ClassId) -> PatternFamily:
    """The family whose elimination orderings LexBFS produces on members of ``c``."""
    c = ClassId(c)
    if c not in CLASS_FAMILY:
        raise ValueError(f"no elimination family for class {c}")
    return CLASS_FAMILY[c]


@dataclass(frozen=True)
class EliminationCertificate:
    """Position ``position`` (1-based) where the earlier neighbours of ``vertex``
    contain ``witness``, an induced member of ``family`` (holes in cyclic order)."""

    position: int
    vertex: int
    witness: tuple[int, ...]
    family: PatternFamily

    def verify(self, G: Graph, o) -> bool:
        o = as_ordering(G, o)
        i = self.position - 1
        if not 0 <= i < len(o) or o[i] != self.vertex:
            return False
        earlier = set(o.earlier_neighbors(G, self.vertex))
        return set(self.witness) <= earlier and self.family.realized_by(G, self.witness)


def elimination_violation(G: Graph, o, fam: PatternFamily, cap: int = 16) -> EliminationCertificate | None:
    """The first position whose earlier neighbourhood contains a member of ``fam``."""
    o = as_ordering(G, o)
    if fam.is_empty:
        return None
    if fam == S2:
        indptr, indices = G.csr
        bad = _kernels.peo_violation(indptr, indices, o.order)
        if bad is None:
            return None
        i, v, p, w = bad
        return EliminationCertificate(i + 1, v, (min(p, w), max(p, w)), fam)
    shape = SHAPE_OF_FAMILY.get(fam)
    for i, v in enumerate(o.order):
        earlier = o.earlier_neighbors(G, v)
        if len(earlier) < 2:
            continue
        if shape is not None and shape in structure_of(G, earlier):
            continue
        W = find_pattern(G, fam, earlier, cap)
        if W is not None:
            return EliminationCertificate(i + 1, v, W, fam)
    return None


def is_elimination_ordering(G: Graph, o, fam: PatternFamily, cap: int = 16) -> bool:
    """True when no earlier neighbourhood along ``o`` contains a member of ``fam``."""
    return elimination_violation(G, o, fam, cap) is None


def perfect_elimination_ordering(G: Graph) -> VertexOrdering | EliminationCertificate:
    """A LexBFS ordering whose earlier neighbourhoods are cliques, or the first failure.

    >>> from lexelim.graph import cycle_graph
    >>> perfect_elimination_ordering(cycle_graph(4)).witness
    (1, 3)
    """
    o = lexbfs(G, 0)
    return elimination_violation(G, o, S2) or o


def elimination_ordering(G: Graph, c: ClassId, cap: int = 16) -> VertexOrdering | EliminationCertificate:
    """LexBFS from vertex 0, verified against the family of class ``c``.

    A certificate proves that ``G`` is outside the class.  Success says only
    that this ordering eliminates the family; it does not prove membership.
    """
    fam = class_family(c)
    o = lexbfs(G, 0)
    return elimination_violation(G, o, fam, cap) or o

