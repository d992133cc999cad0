"""Excellence with respect to a domination-type parameter.

A graph is excellent for a parameter when every vertex lies in some
optimal set. The refinement studied here asks more: a graph is
pattern-excellent for a pattern graph H when (i) every vertex lies in an
induced copy of H whose vertices sit inside one optimal set, and (ii)
every induced copy of H sits inside some optimal set. The excellent
family collects all such patterns up to isomorphism; by condition (i)
each member must appear inside an optimal set, so candidates are drawn
from induced subgraphs of optimal sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .canon import IsoKey, canonical_key, induced_copies, iter_induced_copies
from .domination import Param, ParamResult, min_sets
from .graphs import Graph, mask_of, set_of


@dataclass(frozen=True)
class FamilyResult:
    """Excellent family of a graph under one parameter.

    members holds the canonical keys sorted by (order, edge count, key
    bits). witness[i][x] is a (copy mask, optimal-set mask) pair showing
    condition (i) for member i at vertex x.
    """

    param: Param
    excellent: bool
    value: int
    members: tuple[IsoKey, ...]
    witness: tuple[tuple[tuple[int, int], ...], ...]

    def member_graphs(self) -> tuple[Graph, ...]:
        return tuple(k.graph() for k in self.members)


def sets_union(sets) -> int:
    m = 0
    for s in sets:
        m |= s
    return m


def is_excellent(g: Graph, param: Param, *, result: ParamResult | None = None) -> bool:
    """Whether every vertex of g belongs to some optimal set."""
    res = result if result is not None else min_sets(g, param)
    return sets_union(res.sets) == g.full_mask


def _passes_both(g: Graph, pattern: Graph, sets) -> bool:
    """Early-exit test of the two excellence conditions for one pattern.

    Stops at the first induced copy outside every optimal set; otherwise
    accumulates copy coverage and demands it reach every vertex.
    """
    covered = 0
    for copy in iter_induced_copies(g, pattern):
        if all(copy & ~d for d in sets):
            return False
        covered |= copy
    return covered == g.full_mask


def _copy_report(g: Graph, pattern: Graph, sets):
    """Check both excellence conditions for one pattern.

    Returns (cond_i, cond_ii, witness) where witness maps each vertex to
    a certifying (copy mask, optimal-set mask) pair, or None for vertices
    lacking one.
    """
    copies = induced_copies(g, pattern)
    inside: list[tuple[int, int]] = []
    cond_ii = True
    for copy in copies:
        home = next((d for d in sets if copy & ~d == 0), None)
        if home is None:
            cond_ii = False
        else:
            inside.append((copy, home))
    witness: list[tuple[int, int] | None] = []
    cond_i = True
    for x in range(g.n):
        cert = next(((c, d) for c, d in inside if c >> x & 1), None)
        witness.append(cert)
        if cert is None:
            cond_i = False
    return cond_i, cond_ii, witness


def is_pattern_excellent(
    g: Graph, pattern: Graph, param: Param, *, result: ParamResult | None = None
) -> bool:
    """Decide pattern-excellence: conditions (i) and (ii) together.

    (i) every vertex lies in an induced copy of the pattern contained in
    some optimal set; (ii) every induced copy of the pattern is contained
    in some optimal set.
    """
    if pattern.n < 1:
        raise ValueError("pattern must have at least one vertex")
    res = result if result is not None else min_sets(g, param)
    return _passes_both(g, pattern, res.sets)


def excellent_family(
    g: Graph, param: Param, *, result: ParamResult | None = None
) -> FamilyResult:
    """All patterns (up to isomorphism) for which g is pattern-excellent.

    Candidate patterns are the isomorphism classes of induced subgraphs
    of optimal sets, over all nonempty subset sizes; condition (i) makes
    this exhaustive. A non-excellent graph yields no members.
    """
    res = result if result is not None else min_sets(g, param)
    if sets_union(res.sets) != g.full_mask:
        return FamilyResult(param, False, res.value, (), ())

    subset_masks: set[int] = set()
    for d in res.sets:
        verts = set_of(d)
        for r in range(1, len(verts) + 1):
            for combo in combinations(verts, r):
                subset_masks.add(mask_of(combo))
    candidates: dict[IsoKey, None] = {}
    for mask in sorted(subset_masks):
        candidates.setdefault(canonical_key(g.induced(mask)))

    members = []
    witnesses = []
    for key in sorted(candidates, key=lambda k: (k.n, k.bits.bit_count(), k.bits)):
        pattern = key.graph()
        if not _passes_both(g, pattern, res.sets):
            continue
        _, _, witness = _copy_report(g, pattern, res.sets)
        members.append(key)
        witnesses.append(tuple(witness))
    return FamilyResult(param, True, res.value, tuple(members), tuple(witnesses))


def family_names(fam: FamilyResult) -> list[str]:
    """Readable member names (complete, edgeless, path, cycle, unions)."""
    return [describe_pattern(k.graph()) for k in fam.members]


def describe_pattern(g: Graph) -> str:
    """Short conventional name for a small pattern graph."""
    if g.n >= 2 and g.edge_count() == 0:
        return f"E{g.n}"
    parts = sorted(
        (g.induced(c) for c in g.components()),
        key=lambda h: (h.n, h.edge_count()),
    )
    lone = sum(1 for h in parts if h.n == 1)
    names = [_component_name(h) for h in parts[lone:]]
    if lone == 1:
        names.insert(0, "K1")
    elif lone > 1:
        names.insert(0, f"E{lone}")
    return "+".join(names)


def _component_name(h: Graph) -> str:
    n, m = h.n, h.edge_count()
    if m == 0:
        return "K1" if n == 1 else f"E{n}"
    if m == n * (n - 1) // 2:
        return f"K{n}"
    degs = h.degree_sequence()
    if m == n - 1 and degs[0] <= 2:
        return f"P{n}"
    if all(d == 2 for d in degs):
        return f"C{n}"
    from .graph6 import to_graph6

    return to_graph6(h)
