"""Exact domination-type parameters and complete minimum-set enumeration.

Eight parameters are supported. Six are minimization problems solved by
iterative deepening on the target size: a depth-first cover search
branches on an uncovered vertex with the fewest remaining covering
options, and once coverage saturates below the target the remaining
slots are filled by explicit completion, so sets that are not minimal
dominating sets (they exist for the restrained and outer-connected
variants) are still found. At the first feasible size every satisfying
set is collected. Independence-based parameters take different routes:
the independence number by branch and bound that keeps all optima, the
independent domination number by enumerating all maximal independent
sets with a pivoting recursion.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .graphs import Graph, iter_bits, mask_of


class ParameterUndefinedError(ValueError):
    """Total-type parameters are undefined on graphs with isolated vertices."""


class Param(Enum):
    """Domination-type parameter selector.

    value tuple: (identifier, minimizing?, open neighborhoods for
    coverage?, needs restrained condition?, needs connected complement?)
    """

    GAMMA = ("gamma", True, False, False, False)
    IND_DOM = ("i", True, False, False, False)
    INDEPENDENCE = ("beta0", False, False, False, False)
    TOTAL = ("gamma_t", True, True, False, False)
    RESTRAINED = ("gamma_r", True, False, True, False)
    OUTER_CONNECTED = ("gamma_oc", True, False, False, True)
    TOTAL_RESTRAINED = ("gamma_tr", True, True, True, False)
    TOTAL_OUTER_CONNECTED = ("gamma_t_oc", True, True, False, True)

    @property
    def id(self) -> str:
        return self.value[0]

    @property
    def minimizing(self) -> bool:
        return self.value[1]

    @property
    def open_cover(self) -> bool:
        return self.value[2]

    @property
    def restrained(self) -> bool:
        return self.value[3]

    @property
    def outer_connected(self) -> bool:
        return self.value[4]

    @classmethod
    def from_id(cls, name: str) -> "Param":
        for p in cls:
            if p.id == name:
                return p
        raise ValueError(f"unknown parameter {name!r}")


PARAM_IDS = tuple(p.id for p in Param)


@dataclass(frozen=True)
class ParamResult:
    """Optimal value and every optimal set (as bitmasks, sorted)."""

    param: Param
    value: int
    sets: tuple[int, ...]


def _is_independent(g: Graph, mask: int) -> bool:
    for v in iter_bits(mask):
        if g.adj[v] & mask:
            return False
    return True


def _is_dominating(g: Graph, mask: int, open_cover: bool) -> bool:
    covered = 0
    for v in iter_bits(mask):
        covered |= g.adj[v]
        if not open_cover:
            covered |= 1 << v
    return covered == g.full_mask


def _extra_ok(g: Graph, mask: int, param: Param) -> bool:
    outside = g.full_mask & ~mask
    if param.restrained:
        for v in iter_bits(outside):
            if not g.adj[v] & outside:
                return False
    if param.outer_connected:
        if not g.connected_within(outside):
            return False
    return True


def satisfies(g: Graph, mask: int, param: Param) -> bool:
    """Whether mask meets the defining predicate of param.

    For minimization parameters this is the membership test (dominating,
    plus side conditions); for the independence number it is independence;
    for independent domination it is maximal independence. The empty set
    satisfies the domination predicates exactly on the 0-vertex graph.
    """
    if mask & ~g.full_mask:
        raise ValueError("vertex set outside the graph")
    if param is Param.INDEPENDENCE:
        return _is_independent(g, mask)
    if param is Param.IND_DOM:
        if not _is_independent(g, mask):
            return False
        # maximality: every outside vertex sees the set
        for v in iter_bits(g.full_mask & ~mask):
            if not g.adj[v] & mask:
                return False
        return True
    if not _is_dominating(g, mask, param.open_cover):
        return False
    return _extra_ok(g, mask, param)


def _maximal_independent_sets(g: Graph) -> list[int]:
    """All maximal independent sets (pivoting recursion on non-adjacency)."""
    full = g.full_mask
    allowed = [full & ~(g.adj[v] | (1 << v)) for v in range(g.n)]
    out: list[int] = []

    def expand(r: int, p: int, x: int):
        if not p and not x:
            out.append(r)
            return
        pivot, best = -1, -1
        for u in iter_bits(p | x):
            cnt = (allowed[u] & p).bit_count()
            if cnt > best:
                pivot, best = u, cnt
        for v in iter_bits(p & ~allowed[pivot]):
            expand(r | (1 << v), p & allowed[v], x & allowed[v])
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, full, 0)
    return out


def _maximum_independent_sets(g: Graph) -> tuple[int, list[int]]:
    """Independence number and all maximum independent sets."""
    full = g.full_mask
    allowed = [full & ~(g.adj[v] | (1 << v)) for v in range(g.n)]
    best_size = -1
    best: set[int] = set()
    by_degree = sorted(range(g.n), key=lambda v: g.adj[v].bit_count(), reverse=True)

    def grow(r: int, p: int):
        nonlocal best_size, best
        size = r.bit_count()
        if size + p.bit_count() < best_size:
            return
        if not p:
            if size > best_size:
                best_size = size
                best = {r}
            elif size == best_size:
                best.add(r)
            return
        for v in by_degree:
            if p >> v & 1:
                break
        grow(r | (1 << v), p & allowed[v])
        grow(r, p & ~(1 << v))

    grow(0, full)
    return best_size, sorted(best)


def _cover_search(g: Graph, k: int, param: Param, first_only: bool):
    """All (or any) sets of size exactly k satisfying param's predicate."""
    full = g.full_mask
    if param.open_cover:
        foot = list(g.adj)
    else:
        foot = [g.adj[v] | (1 << v) for v in range(g.n)]
    max_new = max((f.bit_count() for f in foot), default=0)
    plain = not (param.restrained or param.outer_connected)
    results: set[int] = set()
    seen: set[int] = set()

    def accept(mask: int) -> bool:
        return plain or _extra_ok(g, mask, param)

    def dfs(s: int, covered: int) -> bool:
        if s in seen:
            return False
        seen.add(s)
        size = s.bit_count()
        if covered == full:
            if size == k:
                if accept(s):
                    results.add(s)
                    return True
                return False
            pool = list(iter_bits(full & ~s))
            hit = False
            for extra in combinations(pool, k - size):
                t = s | mask_of(extra)
                if t not in results and accept(t):
                    results.add(t)
                    hit = True
                    if first_only:
                        return True
            return hit
        if size == k:
            return False
        uncovered = full & ~covered
        if uncovered.bit_count() > (k - size) * max_new:
            return False
        branch, options = -1, None
        for v in iter_bits(uncovered):
            cnt = foot[v].bit_count()
            if options is None or cnt < options:
                branch, options = v, cnt
                if cnt <= 1:
                    break
        if options == 0:
            return False
        hit = False
        for u in iter_bits(foot[branch]):
            if dfs(s | (1 << u), covered | foot[u]):
                hit = True
                if first_only:
                    return True
        return hit

    dfs(0, 0)
    return sorted(results)


def _solve(g: Graph, param: Param, first_only: bool) -> ParamResult:
    if g.n < 1:
        raise ValueError("parameters are defined for graphs of order at least 1")
    if param is Param.INDEPENDENCE:
        size, sets = _maximum_independent_sets(g)
        return ParamResult(param, size, tuple(sets))
    if param is Param.IND_DOM:
        sets = _maximal_independent_sets(g)
        value = min(s.bit_count() for s in sets)
        keep = sorted(s for s in sets if s.bit_count() == value)
        return ParamResult(param, value, tuple(keep))
    if param.open_cover and g.isolated_vertices():
        raise ParameterUndefinedError(
            f"{param.id} is undefined: graph has an isolated vertex"
        )
    lower = -(-g.n // (g.max_degree() + 1))
    for k in range(max(1, lower), g.n + 1):
        found = _cover_search(g, k, param, first_only)
        if found:
            return ParamResult(param, k, tuple(found))
    raise AssertionError(f"no feasible set found for {param.id}")


def param_value(g: Graph, param: Param) -> int:
    """Exact parameter value; raises ParameterUndefinedError when undefined."""
    return _solve(g, param, first_only=True).value


def min_sets(g: Graph, param: Param) -> ParamResult:
    """Every optimal set for param (maximum sets for the independence number)."""
    return _solve(g, param, first_only=False)


def critical_split(g: Graph, param: Param = Param.GAMMA) -> tuple[int, int]:
    """Split vertices by whether deletion lowers the parameter value.

    Returns (drops, stays) masks: drops holds the vertices x with
    value(g - x) < value(g). Requires order at least 2 so deletions stay
    nonempty.
    """
    if g.n < 2:
        raise ValueError("criticality needs order at least 2")
    base = param_value(g, param)
    drops = 0
    for v in range(g.n):
        if param_value(g.delete_vertex(v), param) < base:
            drops |= 1 << v
    return drops, g.full_mask & ~drops


def private_neighbors(g: Graph, x: int, mask: int) -> int:
    """Vertices whose closed neighborhood meets mask exactly in {x}."""
    if not mask >> x & 1:
        raise ValueError("x must belong to the set")
    want = 1 << x
    out = 0
    for y in range(g.n):
        if (g.adj[y] | (1 << y)) & mask == want:
            out |= 1 << y
    return out


def is_edge_addition_critical(g: Graph) -> bool:
    """True when adding any missing edge changes the domination number.

    Complete graphs qualify vacuously.
    """
    base = param_value(g, Param.GAMMA)
    for u, v in g.non_edges():
        if param_value(g.add_edge(u, v), Param.GAMMA) == base:
            return False
    return True


@dataclass(frozen=True)
class BoundCheck:
    name: str
    applicable: bool
    holds: bool | None
    detail: str


def bound_checks(g: Graph, factors: tuple[Graph, Graph] | None = None) -> list[BoundCheck]:
    """Evaluate known domination bounds against exact values.

    Minimum-degree bounds gamma <= n*d/(3d-1) for d in 3..5 apply when
    the minimum degree reaches d. When factors (a, b) are given and g is
    their box product, the lower bound gamma >= min(|a|, |b|) is checked.
    All comparisons are exact integer cross-multiplications.
    """
    out = []
    gamma = param_value(g, Param.GAMMA) if g.n else 0
    delta = g.min_degree()
    for d in (3, 4, 5):
        name = f"min-degree-{d}"
        if delta < d:
            out.append(BoundCheck(name, False, None, f"min degree {delta} < {d}"))
            continue
        lhs = gamma * (3 * d - 1)
        rhs = g.n * d
        out.append(
            BoundCheck(
                name,
                True,
                lhs <= rhs,
                f"gamma*{3 * d - 1} = {lhs} vs n*{d} = {rhs}",
            )
        )
    if factors is not None:
        a, b = factors
        bound = min(a.n, b.n)
        out.append(
            BoundCheck(
                "product-lower",
                True,
                gamma >= bound,
                f"gamma = {gamma} vs min(orders) = {bound}",
            )
        )
    return out
