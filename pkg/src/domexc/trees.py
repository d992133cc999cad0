"""Tree-specific machinery for domination excellence.

Covers isomorph-free tree enumeration, 0/1-labeled trees, labeled
1-coronas, the gluing operation that composes excellent trees from
coronas, the labeling characterization of excellent trees, and the
closed-form prediction of a tree's excellent family.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .canon import IsoKey, canonical_key, tree_key
from .domination import Param, critical_split, min_sets, satisfies
from .excellence import is_excellent
from .graphs import Graph, coalescence, corona1, edgeless, iter_bits, set_of

TREE_ENUM_CAP = 14


@dataclass(frozen=True)
class LabeledTree:
    """A tree whose vertices carry 0/1 labels as two disjoint masks."""

    tree: Graph
    zeros: int
    ones: int

    def __post_init__(self):
        if not self.tree.is_tree():
            raise ValueError("labeled trees require a tree")
        if self.zeros & self.ones:
            raise ValueError("labels overlap")
        if (self.zeros | self.ones) != self.tree.full_mask:
            raise ValueError("labels must cover every vertex")

    def report(self) -> dict:
        from .graph6 import to_graph6

        return {"graph6": to_graph6(self.tree), "zeros": hex(self.zeros)}


def enumerate_trees(n: int) -> list[Graph]:
    """One representative per isomorphism class of trees of order n."""
    if not 1 <= n <= TREE_ENUM_CAP:
        raise ValueError(f"order must be between 1 and {TREE_ENUM_CAP}")
    return list(_trees(n))


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (edgeless(1),)
    # attach one new leaf everywhere on every smaller tree, dedup by key
    out: dict[object, Graph] = {}
    for t in _trees(n - 1):
        for v in range(t.n):
            grown = t.with_vertex(1 << v)
            out.setdefault(tree_key(grown), grown)
    return tuple(out.values())


def leaves_mask(g: Graph) -> int:
    m = 0
    for v in range(g.n):
        if g.degree(v) == 1:
            m |= 1 << v
    return m


def labeled_corona(u: Graph) -> LabeledTree:
    """Corona of a tree with the added leaves labeled 0, originals 1.

    The input must have at least two vertices so the corona reaches
    order four.
    """
    if not u.is_tree():
        raise ValueError("corona base must be a tree")
    if u.n < 2:
        raise ValueError("corona base must have at least 2 vertices")
    t = corona1(u)
    ones = u.full_mask
    return LabeledTree(t, t.full_mask & ~ones, ones)


def is_labeled_corona(lt: LabeledTree) -> bool:
    """Whether lt is a corona of a tree with leaves 0 and supports 1."""
    if lt.tree.n < 4 or corona_base(lt.tree) is None:
        return False
    return lt.zeros == leaves_mask(lt.tree)


def corona_base(t: Graph) -> Graph | None:
    """The tree u with corona1(u) isomorphic to t, or None.

    The base comes back as the induced subgraph on the support vertices,
    so t literally equals its corona up to the leaf numbering.
    """
    if not t.is_tree() or t.n < 2 or t.n % 2:
        return None
    if t.n == 2:
        return edgeless(1)
    leaves = leaves_mask(t)
    if 2 * leaves.bit_count() != t.n:
        return None
    for v in iter_bits(t.full_mask & ~leaves):
        if (t.adj[v] & leaves).bit_count() != 1:
            return None
    return t.induced(t.full_mask & ~leaves)


def glue_corona(t: LabeledTree, c: LabeledTree, u: int, v: int) -> LabeledTree:
    """Glue a labeled corona c onto a labeled tree t at 0-labeled vertices.

    Requires (a) labels 0 on both glued vertices u of t and v of c, and
    (b) that c actually is a labeled corona. Identifies u with v; the
    merged vertex keeps label 0 and every other label carries over.
    """
    if not t.zeros >> u & 1 or not c.zeros >> v & 1:
        raise ValueError("clause (a): both glued vertices must be labeled 0")
    if not is_labeled_corona(c):
        raise ValueError("clause (b): the glued part must be a labeled corona")
    merged = coalescence([(t.tree, u), (c.tree, v)])
    m0, m1 = merged.maps
    zeros = ones = 0
    for x in set_of(t.zeros):
        zeros |= 1 << m0[x]
    for x in set_of(c.zeros & ~(1 << v)):
        zeros |= 1 << m1[x]
    for x in set_of(t.ones):
        ones |= 1 << m0[x]
    for x in set_of(c.ones):
        ones |= 1 << m1[x]
    return LabeledTree(merged.graph, zeros, ones)


def excellent_tree_labeling(t: Graph) -> LabeledTree | None:
    """The characteristic labeling of an excellent tree, if there is one.

    For a tree of order at least four that is excellent for plain
    domination, the vertices whose removal drops the domination number
    get label 0 and the rest label 1; the 0 side is then itself a
    minimum dominating set. Non-excellent trees yield None.
    """
    if not t.is_tree():
        raise ValueError("input must be a tree")
    if t.n < 4:
        raise ValueError("order must be at least 4")
    res = min_sets(t, Param.GAMMA)
    if not is_excellent(t, Param.GAMMA, result=res):
        return None
    drops, stays = critical_split(t, Param.GAMMA)
    assert drops.bit_count() == res.value and satisfies(t, drops, Param.GAMMA)
    return LabeledTree(t, drops, stays)


def tree_family_prediction(t: Graph) -> tuple[IsoKey, ...]:
    """Predicted excellent family of an excellent tree, closed form.

    A cut vertex whose removal drops the domination number forces the
    family down to the single-vertex graph. Otherwise the tree is a
    corona and the family is exactly the edgeless graphs up to half its
    order.
    """
    if not t.is_tree():
        raise ValueError("input must be a tree")
    if t.n < 4:
        raise ValueError("order must be at least 4")
    if not is_excellent(t, Param.GAMMA):
        raise ValueError("input must be excellent for domination")
    drops, _ = critical_split(t, Param.GAMMA)
    internal = t.full_mask & ~leaves_mask(t)
    if drops & internal:
        return (canonical_key(edgeless(1)),)
    assert corona_base(t) is not None
    return tuple(canonical_key(edgeless(r)) for r in range(1, t.n // 2 + 1))
