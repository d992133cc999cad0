"""Isomorph-free graph catalogs and predicate search.

Builds exhaustive catalogs (all graphs of small order, regular graphs)
with one representative per isomorphism class, reads and writes graph6
catalog files with a JSON metadata sidecar, and filters catalogs by
domination-style queries.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path

from .canon import IsoKey, canonical_key
from .domination import PARAM_IDS, Param, min_sets
from .excellence import FamilyResult, excellent_family, is_excellent, is_pattern_excellent
from .graph6 import parse_lines, to_graph6
from .graphs import Graph, edgeless

ALL_GRAPHS_CAP = 7
REGULAR_CAP = 12


@dataclass(frozen=True)
class Catalog:
    """Isomorph-free list of graphs with parallel canonical keys."""

    source: str
    graphs: tuple[Graph, ...]
    keys: tuple[IsoKey, ...]
    warnings: tuple[str, ...] = ()

    def __post_init__(self):
        if len(self.graphs) != len(self.keys):
            raise ValueError("graphs and keys must run in parallel")
        if len(set(self.keys)) != len(self.keys):
            raise ValueError("catalog contains isomorphic duplicates")

    def __len__(self) -> int:
        return len(self.graphs)

    def __iter__(self):
        return iter(self.graphs)


def _sorted_catalog(source: str, reps: dict[IsoKey, Graph], warnings=()) -> Catalog:
    keys = sorted(reps)
    return Catalog(source, tuple(reps[k] for k in keys), tuple(keys), tuple(warnings))


def generate_all_graphs(n: int, connected_only: bool = False) -> Catalog:
    """Every graph of order n up to isomorphism.

    Grows order by order: each class on n vertices extends some class on
    n - 1 (delete any vertex), so attaching a new vertex in all 2^(n-1)
    ways to every smaller representative and deduplicating by canonical
    key is exhaustive. Capped at order 7.
    """
    if not 1 <= n <= ALL_GRAPHS_CAP:
        raise ValueError(f"order must be between 1 and {ALL_GRAPHS_CAP}")
    level = {canonical_key(edgeless(1)): edgeless(1)}
    for _ in range(n - 1):
        grown: dict[IsoKey, Graph] = {}
        for g in level.values():
            for nbrs in range(1 << g.n):
                h = g.with_vertex(nbrs)
                grown.setdefault(canonical_key(h), h)
        level = grown
    if connected_only:
        level = {k: g for k, g in level.items() if g.is_connected()}
    src = f"generated:all:n={n}:connected={str(connected_only).lower()}"
    return _sorted_catalog(src, level)


def _residual_realizable(res: list[int]) -> bool:
    """Erdos-Gallai test: can res be the degree sequence of some graph."""
    seq = sorted(res, reverse=True)
    total = sum(seq)
    if total % 2:
        return False
    prefix = 0
    for k in range(1, len(seq) + 1):
        prefix += seq[k - 1]
        tail = sum(min(d, k) for d in seq[k:])
        if prefix > k * (k - 1) + tail:
            return False
    return True


def generate_regular(n: int, k: int, connected_only: bool = False) -> Catalog:
    """Every k-regular graph of order n up to isomorphism.

    Fills neighbor rows vertex by vertex. Vertices not yet wired are
    interchangeable whenever their decided columns agree, so each such
    class only ever donates a prefix of its members; surviving symmetry
    falls to a final canonical-key dedup. An Erdos-Gallai check prunes
    branches whose residual degrees have no realization.
    """
    if not 0 <= k < n <= REGULAR_CAP:
        raise ValueError(f"need 0 <= degree < order <= {REGULAR_CAP}")
    if n * k % 2:
        raise ValueError("order times degree must be even")
    reps: dict[IsoKey, Graph] = {}
    rows = [0] * n
    res = [k] * n

    def extend(v: int):
        if v == n:
            g = Graph(n, tuple(rows))
            if not connected_only or g.is_connected():
                reps.setdefault(canonical_key(g), g)
            return
        need = res[v]
        later = list(range(v + 1, n))
        if need == 0:
            extend(v + 1)
            return
        if need > sum(1 for w in later if res[w] > 0):
            return
        # columns with equal decided prefixes are interchangeable
        classes: dict[int, list[int]] = {}
        for w in later:
            if res[w] > 0:
                classes.setdefault(rows[w], []).append(w)
        groups = list(classes.values())

        def pick(gi: int, left: int, chosen: list[int]):
            if left == 0:
                for w in chosen:
                    rows[v] |= 1 << w
                    rows[w] |= 1 << v
                    res[w] -= 1
                saved = res[v]
                res[v] = 0
                if _residual_realizable([res[w] for w in later]):
                    extend(v + 1)
                res[v] = saved
                for w in chosen:
                    rows[v] &= ~(1 << w)
                    rows[w] &= ~(1 << v)
                    res[w] += 1
                return
            if gi == len(groups):
                return
            avail = sum(len(groups[j]) for j in range(gi, len(groups)))
            if avail < left:
                return
            group = groups[gi]
            for take in range(min(left, len(group)), -1, -1):
                pick(gi + 1, left - take, chosen + group[:take])

        pick(0, need, [])

    extend(0)
    src = f"generated:regular:n={n}:k={k}:connected={str(connected_only).lower()}"
    return _sorted_catalog(src, reps)


def save_catalog(cat: Catalog, path) -> None:
    """Write graph6 lines plus a JSON metadata sidecar."""
    p = Path(path)
    p.write_text("".join(to_graph6(g) + "\n" for g in cat.graphs))
    meta = {
        "source": cat.source,
        "count": len(cat),
        "warnings": list(cat.warnings),
    }
    Path(str(p) + ".meta.json").write_text(json.dumps(meta, indent=2) + "\n")


def load_catalog(path) -> Catalog:
    """Read a graph6 catalog file; duplicates are kept out but reported."""
    p = Path(path)
    reps: dict[IsoKey, Graph] = {}
    first_line: dict[IsoKey, int] = {}
    warnings = []
    for lineno, item in parse_lines(p.read_text()):
        if isinstance(item, Exception):
            raise type(item)(f"line {lineno}: {item}")
        key = canonical_key(item) if item.n <= 12 else None
        if key is None:
            key = IsoKey(item.n, _big_bits(item))
        if key in reps:
            warnings.append(
                f"line {lineno} duplicates line {first_line[key]} up to isomorphism"
            )
            continue
        reps[key] = item
        first_line[key] = lineno
    return _sorted_catalog(f"file:{p}", reps, warnings)


def _big_bits(g: Graph) -> int:
    # labeled identity fallback for graphs beyond the canonical-key cap
    bits = 0
    for j in range(1, g.n):
        for i in range(j):
            bits = bits << 1 | (g.adj[i] >> j & 1)
    return bits


@dataclass(frozen=True)
class CatalogQuery:
    """Conjunctive catalog filter.

    param_values pins exact parameter values by id; excellent_for and
    pattern ask for plain or pattern excellence under pattern_param;
    regular/connected restrict structure. include_family attaches each
    match's excellent family under pattern_param to the evidence.
    """

    param_values: dict = field(default_factory=dict)
    excellent_for: str | None = None
    pattern: Graph | None = None
    pattern_param: str = "gamma"
    regular: bool | None = None
    connected: bool | None = None
    include_family: bool = False

    def __post_init__(self):
        for pid in self.param_values:
            if pid not in PARAM_IDS:
                raise ValueError(f"unknown parameter id {pid!r}")
        if self.excellent_for is not None and self.excellent_for not in PARAM_IDS:
            raise ValueError(f"unknown parameter id {self.excellent_for!r}")
        if self.pattern_param not in PARAM_IDS:
            raise ValueError(f"unknown parameter id {self.pattern_param!r}")


@dataclass(frozen=True)
class SearchMatch:
    index: int
    graph: Graph
    key: IsoKey
    values: dict
    family: FamilyResult | None = None


def search(cat: Catalog, query: CatalogQuery) -> list[SearchMatch]:
    """Catalog entries satisfying every clause of the query."""
    out = []
    for idx, (g, key) in enumerate(zip(cat.graphs, cat.keys)):
        if query.regular is not None and g.is_regular() != query.regular:
            continue
        if query.connected is not None and g.is_connected() != query.connected:
            continue
        values = {}
        ok = True
        for pid, want in query.param_values.items():
            got = min_sets(g, Param.from_id(pid)).value
            values[pid] = got
            if got != want:
                ok = False
                break
        if not ok:
            continue
        if query.excellent_for is not None:
            res = min_sets(g, Param.from_id(query.excellent_for))
            values[query.excellent_for] = res.value
            if not is_excellent(g, Param.from_id(query.excellent_for), result=res):
                continue
        if query.pattern is not None:
            par = Param.from_id(query.pattern_param)
            res = min_sets(g, par)
            values[query.pattern_param] = res.value
            if not is_pattern_excellent(g, query.pattern, par, result=res):
                continue
        family = None
        if query.include_family:
            family = excellent_family(g, Param.from_id(query.pattern_param))
        out.append(SearchMatch(idx, g, key, values, family))
    return out
