"""Canonical forms, isomorphism tests, and induced pattern search.

canonical_key computes a label-independent key for graphs of order at
most 12: a backtracking placement search for the lexicographically
smallest upper-triangle adjacency string over all vertex orderings.
Exactness comes from two prunings that never lose the optimum: at each
position only rows achieving the locally minimal bit block are extended,
and whole subtrees are cut once their block prefix exceeds the best
complete string found so far. Orderings that differ only by swapping
unplaced twins are explored once. Trees of any supported order get an
AHU-style key via tree_key instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .graphs import Graph, iter_bits, mask_of

CANON_CAP = 12
PATTERN_CAP = 8


@dataclass(frozen=True, order=True)
class IsoKey:
    """Canonical identity of a graph: order plus packed adjacency bits.

    bits holds the upper triangle of the canonical adjacency matrix,
    column major, first bit most significant. Equal keys mean isomorphic
    graphs and vice versa (within the supported order cap).
    """

    n: int
    bits: int

    def graph(self) -> Graph:
        """Reconstruct the canonical representative."""
        nbits = self.n * (self.n - 1) // 2
        rows = [0] * self.n
        at = nbits - 1
        for col in range(1, self.n):
            for row in range(col):
                if self.bits >> at & 1:
                    rows[row] |= 1 << col
                    rows[col] |= 1 << row
                at -= 1
        return Graph(self.n, tuple(rows))

    def graph6(self) -> str:
        from .graph6 import to_graph6

        return to_graph6(self.graph())


def _twin_classes(g: Graph) -> list[int]:
    """twin_class[v] == twin_class[u] when swapping u, v is an automorphism."""
    buckets: dict[tuple, list[int]] = {}
    for v in range(g.n):
        buckets.setdefault(("open", g.adj[v]), []).append(v)
        buckets.setdefault(("closed", g.adj[v] | (1 << v)), []).append(v)
    cls = list(range(g.n))
    for members in buckets.values():
        root = min(cls[v] for v in members)
        for v in members:
            cls[v] = root
    return cls


def canonical_key(g: Graph) -> IsoKey:
    """Canonical key for g; supported for orders up to 12."""
    if g.n > CANON_CAP:
        raise ValueError(f"canonical_key supports orders up to {CANON_CAP}, got {g.n}")
    n = g.n
    if n <= 1:
        return IsoKey(n, 0)

    twins = _twin_classes(g)
    adj = g.adj
    full = g.full_mask

    best_blocks: list[int] | None = None
    order = [0] * n
    blocks = [0] * n

    def place(depth: int, placed_mask: int):
        nonlocal best_blocks
        if depth == n:
            if best_blocks is None or blocks < best_blocks:
                best_blocks = blocks.copy()
            return
        candidates: list[int] = []
        row = None
        for v in iter_bits(full & ~placed_mask):
            r = 0
            for i in range(depth):
                r = r << 1 | (adj[v] >> order[i] & 1)
            if row is None or r < row:
                row = r
                candidates = [v]
            elif r == row:
                candidates.append(v)
        blocks[depth] = row
        seen_twin: set[int] = set()
        for v in candidates:
            if twins[v] in seen_twin:
                continue
            seen_twin.add(twins[v])
            if best_blocks is not None:
                # best_blocks may have moved since the last child, recheck
                for i in range(depth + 1):
                    if blocks[i] != best_blocks[i]:
                        if blocks[i] > best_blocks[i]:
                            return
                        break
            order[depth] = v
            place(depth + 1, placed_mask | (1 << v))

    place(0, 0)
    assert best_blocks is not None
    bits = 0
    for depth, block in enumerate(best_blocks):
        bits = bits << depth | block
    return IsoKey(n, bits)


def _brute_key(g: Graph) -> IsoKey:
    """Reference key by exhaustive permutation; small orders only."""
    if g.n > PATTERN_CAP:
        raise ValueError("exhaustive keying is limited to order 8")
    n = g.n
    best = None
    for perm in permutations(range(n)):
        bits = 0
        for col in range(1, n):
            for row in range(col):
                bits = bits << 1 | (g.adj[perm[row]] >> perm[col] & 1)
        if best is None or bits < best:
            best = bits
    return IsoKey(n, best or 0)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Isomorphism test via canonical keys (tree keys above order 12)."""
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    if g.n > CANON_CAP:
        if g.is_tree() and h.is_tree():
            return tree_key(g) == tree_key(h)
        raise ValueError(f"isomorphism beyond order {CANON_CAP} is supported for trees only")
    return canonical_key(g) == canonical_key(h)


def induced_copies(g: Graph, pattern: Graph) -> list[int]:
    """Vertex masks of all induced subgraphs of g isomorphic to pattern.

    Masks come back sorted ascending. Pattern order is capped at 8; the
    host graph may use the full capacity.
    """
    return sorted(iter_induced_copies(g, pattern))


def iter_induced_copies(g: Graph, pattern: Graph):
    """Yield induced-copy masks lazily, in vertex-combination order."""
    p = pattern.n
    if p > PATTERN_CAP:
        raise ValueError(f"pattern order {p} exceeds the cap {PATTERN_CAP}")
    if p == 0:
        yield 0
        return
    if p > g.n:
        return
    pattern_edges = pattern.edge_count()
    if pattern_edges == 0 or pattern_edges == p * (p - 1) // 2:
        want = p - 1 if pattern_edges else 0
        for combo in combinations(range(g.n), p):
            mask = mask_of(combo)
            if all((g.adj[v] & mask).bit_count() == want for v in combo):
                yield mask
        return
    pat_seq = pattern.degree_sequence()
    pat_key = canonical_key(pattern)
    for combo in combinations(range(g.n), p):
        mask = mask_of(combo)
        seq = sorted(((g.adj[v] & mask).bit_count() for v in combo), reverse=True)
        if tuple(seq) != pat_seq:
            continue
        if canonical_key(g.induced(mask)) == pat_key:
            yield mask


@dataclass(frozen=True, order=True)
class TreeKey:
    """Canonical identity of a tree of any supported order."""

    n: int
    code: str


def _ahu(g: Graph, root: int, parent: int, down: int) -> str:
    kids = sorted(
        _ahu(g, u, root, down) for u in iter_bits(g.adj[root] & down) if u != parent
    )
    return "(" + "".join(kids) + ")"


def tree_key(t: Graph) -> TreeKey:
    """AHU-style canonical key, rooted at the center; trees only."""
    if not t.is_tree():
        raise ValueError("tree_key requires a tree")
    if t.n == 1:
        return TreeKey(1, "()")
    # peel leaves to find the one or two center vertices
    alive = t.full_mask
    degs = list(t.degrees())
    while alive.bit_count() > 2:
        drop = [v for v in iter_bits(alive) if degs[v] <= 1]
        for v in drop:
            alive &= ~(1 << v)
            for u in iter_bits(t.adj[v] & alive):
                degs[u] -= 1
    centers = list(iter_bits(alive))
    if len(centers) == 1:
        return TreeKey(t.n, "c" + _ahu(t, centers[0], -1, t.full_mask))
    a, b = centers
    side_a = t.reach(1 << a, t.full_mask & ~(1 << b))
    side_b = t.full_mask & ~side_a
    codes = sorted((_ahu(t, a, -1, side_a), _ahu(t, b, -1, side_b)))
    return TreeKey(t.n, "e" + codes[0] + codes[1])
