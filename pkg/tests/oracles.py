"""Independent brute-force oracles for cross-checking the solvers.

Everything here works from adjacency lists with plain subset sweeps and
its own breadth-first connectivity, so it shares no search code with the
package. Values and optimal-set collections are recomputed from the
defining predicates directly.
"""

from itertools import combinations


def adjacency(g) -> list[list[int]]:
    return [[u for u in range(g.n) if g.adj[v] >> u & 1] for v in range(g.n)]


def _connected(nbrs: list[list[int]], verts: set[int]) -> bool:
    if not verts:
        return True
    start = next(iter(verts))
    seen = {start}
    queue = [start]
    while queue:
        v = queue.pop()
        for u in nbrs[v]:
            if u in verts and u not in seen:
                seen.add(u)
                queue.append(u)
    return seen == verts


def _dominating(nbrs, n, sel: set[int], open_cover: bool) -> bool:
    for v in range(n):
        if not open_cover and v in sel:
            continue
        if not any(u in sel for u in nbrs[v]):
            return False
    return True


def _independent(nbrs, sel: set[int]) -> bool:
    return not any(u in sel for v in sel for u in nbrs[v])


def _predicate(nbrs, n, sel: set[int], pid: str) -> bool:
    if pid == "beta0":
        return _independent(nbrs, sel)
    if pid == "i":
        # independent dominating = maximal independent
        return _independent(nbrs, sel) and _dominating(nbrs, n, sel, False)
    open_cover = pid in ("gamma_t", "gamma_tr", "gamma_t_oc")
    if not _dominating(nbrs, n, sel, open_cover):
        return False
    rest = set(range(n)) - sel
    if pid in ("gamma_r", "gamma_tr"):
        for v in rest:
            if not any(u in rest for u in nbrs[v]):
                return False
    if pid in ("gamma_oc", "gamma_t_oc"):
        if not _connected(nbrs, rest):
            return False
    return True


def brute(g, pid: str):
    """(value, sorted optimal masks) by sweeping every subset size.

    Raises ValueError for total-type parameters on graphs with an
    isolated vertex, mirroring where the parameter is undefined.
    """
    n = g.n
    nbrs = adjacency(g)
    if pid in ("gamma_t", "gamma_tr", "gamma_t_oc") and any(not a for a in nbrs):
        raise ValueError("undefined with an isolated vertex")
    sizes = range(n, -1, -1) if pid == "beta0" else range(1, n + 1)
    for k in sizes:
        hits = []
        for combo in combinations(range(n), k):
            if _predicate(nbrs, n, set(combo), pid):
                hits.append(sum(1 << v for v in combo))
        if hits:
            return k, sorted(hits)
    raise AssertionError(f"no set found for {pid}")


def brute_excellent(g, pid: str) -> bool:
    _, sets = brute(g, pid)
    union = 0
    for s in sets:
        union |= s
    return union == (1 << g.n) - 1
