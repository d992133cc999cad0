"""Registry of verifiable facts about domination excellence.

Each claim binds one recorded combinatorial fact about concrete small
graphs to an executable check returning (expected, computed, ok).
Claims carry suite tags: quick claims finish in well under a second
each, the paper suite is the full registry, and long claims are skipped
unless explicitly enabled. Reports are plain data with deterministic
ordering, so identical runs serialize identically.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from math import ceil
from typing import Callable

from .canon import canonical_key
from .catalog import CatalogQuery, generate_all_graphs, generate_regular, search
from .domination import (
    Param,
    bound_checks,
    critical_split,
    is_edge_addition_critical,
    min_sets,
    param_value,
    satisfies,
)
from .graph6 import to_graph6
from .excellence import (
    excellent_family,
    family_names,
    is_excellent,
    is_pattern_excellent,
)
from .graphs import (
    Graph,
    cartesian_product,
    coalescence,
    complete,
    complete_multipartite,
    cycle,
    disjoint_union,
    edgeless,
    lex_product,
    path,
    set_of,
)
from .trees import (
    enumerate_trees,
    excellent_tree_labeling,
    leaves_mask,
    tree_family_prediction,
)

SUITES = ("quick", "paper", "long")


@dataclass(frozen=True)
class Claim:
    claim_id: str
    anchor: str
    quick: bool
    long: bool
    check: Callable


@dataclass(frozen=True)
class ClaimReport:
    claim_id: str
    anchor: str
    status: str
    expected: object
    computed: object
    runtime: float | None

    def to_json(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "anchor": self.anchor,
            "status": self.status,
            "expected": self.expected,
            "computed": self.computed,
            "runtime": self.runtime,
        }


@lru_cache(maxsize=None)
def _all_graphs(n: int, connected: bool = False):
    return generate_all_graphs(n, connected_only=connected)


@lru_cache(maxsize=None)
def _regular(n: int, k: int, connected: bool = False):
    return generate_regular(n, k, connected_only=connected)


def _names(g: Graph, param: Param) -> list[str]:
    return family_names(excellent_family(g, param))


def _check_path_cycle_values():
    bad = []
    for n in range(1, 22):
        want = ceil(n / 3)
        for par in (Param.GAMMA, Param.IND_DOM):
            got = param_value(path(n), par)
            if got != want:
                bad.append(f"path {n} {par.id}: {got} != {want}")
    for n in range(3, 22):
        got = param_value(cycle(n), Param.GAMMA)
        if got != ceil(n / 3):
            bad.append(f"cycle {n} gamma: {got} != {ceil(n / 3)}")
    return [], bad, bad == []


def _check_cycle_excellence():
    bad = []
    for n in range(3, 22):
        for par in (Param.GAMMA, Param.IND_DOM):
            if not is_excellent(cycle(n), par):
                bad.append(f"cycle {n} not excellent for {par.id}")
    return [], bad, bad == []


def _check_path_excellence():
    bad = []
    for n in range(1, 22):
        want = n == 2 or n % 3 == 1
        for par in (Param.GAMMA, Param.IND_DOM):
            got = is_excellent(path(n), par)
            if got != want:
                bad.append(f"path {n} {par.id}: excellent={got}, want {want}")
    return [], bad, bad == []


PATH_FAMILIES = {
    "P1": ["K1"],
    "P2": ["K1"],
    "P4": ["K1", "E2"],
    "P7": ["K1"],
    "P10": ["K1"],
}


def _check_path_families():
    computed = {}
    expected = {}
    for name, members in sorted(PATH_FAMILIES.items()):
        n = int(name[1:])
        for par in (Param.GAMMA, Param.IND_DOM):
            expected[f"{name}:{par.id}"] = members
            computed[f"{name}:{par.id}"] = _names(path(n), par)
    return expected, computed, expected == computed


CYCLE_FAMILIES_DOM = {
    4: ["K1", "E2", "K2"],
    5: ["K1", "E2"],
    6: ["K1"],
    7: ["K1", "E2", "K2", "E3"],
    9: ["K1"],
    10: ["K1", "E2", "K2"],
    12: ["K1"],
    13: ["K1", "E2", "K2"],
}

CYCLE_FAMILIES_IND = {
    4: ["K1", "E2"],
    5: ["K1", "E2"],
    6: ["K1"],
    7: ["K1", "E2", "E3"],
    9: ["K1"],
    10: ["K1", "E2"],
    12: ["K1"],
    13: ["K1", "E2"],
}


def _check_cycle_families_domination():
    expected = {f"C{n}": v for n, v in sorted(CYCLE_FAMILIES_DOM.items())}
    computed = {f"C{n}": _names(cycle(n), Param.GAMMA) for n in sorted(CYCLE_FAMILIES_DOM)}
    return expected, computed, expected == computed


def _check_cycle_families_independent():
    expected = {f"C{n}": v for n, v in sorted(CYCLE_FAMILIES_IND.items())}
    computed = {f"C{n}": _names(cycle(n), Param.IND_DOM) for n in sorted(CYCLE_FAMILIES_IND)}
    return expected, computed, expected == computed


UNION_FAMILIES = {
    (5, 5): ["K1", "E2", "E3", "E4"],
    (6, 9): ["K1"],
    (7, 7): ["K1", "E2", "K2", "E3", "E4", "E5", "E6"],
    (10, 10): ["K1", "E2", "K2"],
}


def _check_cycle_union_families():
    expected = {}
    computed = {}
    for (a, b), members in sorted(UNION_FAMILIES.items()):
        key = f"C{a}+C{b}"
        expected[key] = members
        computed[key] = _names(disjoint_union([cycle(a), cycle(b)]), Param.GAMMA)
    return expected, computed, expected == computed


def _edgeless_names(m: int) -> list[str]:
    return ["K1"] + [f"E{r}" for r in range(2, m + 1)]


COMPLETE_PRODUCT_DOM = {
    (2, 2): ["K1", "E2", "K2"],
    (2, 3): ["K1", "E2"],
    (2, 4): ["K1", "E2"],
    (3, 3): ["K1", "E2", "K2", "E3", "K1+K2", "K3"],
    (3, 4): ["K1", "E2", "E3"],
    (3, 5): ["K1", "E2", "E3"],
    (4, 4): ["K1", "E2", "K2", "E3", "K1+K2", "K3", "E4", "E2+K2", "K1+K3", "K4"],
}


def _check_complete_product_families():
    expected = {}
    computed = {}
    for (m, n), members in sorted(COMPLETE_PRODUCT_DOM.items()):
        g = cartesian_product(complete(m), complete(n))
        key = f"K{m}xK{n}"
        expected[f"{key}:gamma"] = members
        computed[f"{key}:gamma"] = _names(g, Param.GAMMA)
        for par in (Param.IND_DOM, Param.INDEPENDENCE):
            expected[f"{key}:{par.id}"] = _edgeless_names(m)
            computed[f"{key}:{par.id}"] = _names(g, par)
    return expected, computed, expected == computed


SIX_MEMBER = ["K1", "E2", "K2", "E3", "K1+K2", "K3"]
FIVE_MEMBER = ["K1", "E2", "K2", "K1+K2", "K3"]


def _co_product(m: int, n: int) -> Graph:
    return cartesian_product(complete(m), complete(n)).complement()


def _check_complement_product_base():
    expected = {"co(K3xK3)": SIX_MEMBER, "co(K4xK4)": FIVE_MEMBER}
    computed = {
        "co(K3xK3)": _names(_co_product(3, 3), Param.GAMMA),
        "co(K4xK4)": _names(_co_product(4, 4), Param.GAMMA),
    }
    return expected, computed, expected == computed


def _check_complement_product_extended():
    expected = {"co(K3xK4)": SIX_MEMBER, "co(K3xK5)": SIX_MEMBER}
    computed = {
        "co(K3xK4)": _names(_co_product(3, 4), Param.GAMMA),
        "co(K3xK5)": _names(_co_product(3, 5), Param.GAMMA),
    }
    return expected, computed, expected == computed


MULTIPARTITE_FAMILIES = {
    (2, 2): ["K1", "E2", "K2"],
    (2, 2, 2): ["K1", "E2", "K2"],
    (2, 3): ["K1", "K2"],
    (3, 3): ["K1", "K2"],
    (2, 2, 3): ["K1", "K2"],
}


def _check_multipartite_families():
    expected = {}
    computed = {}
    for sizes, members in sorted(MULTIPARTITE_FAMILIES.items()):
        key = "K_" + ",".join(map(str, sizes))
        expected[key] = members
        computed[key] = _names(complete_multipartite(list(sizes)), Param.GAMMA)
    return expected, computed, expected == computed


def _check_edge_critical_pairs():
    bad = []
    for n in range(2, 7):
        for g in _all_graphs(n):
            if g.edge_count() == n * (n - 1) // 2:
                continue
            if not is_edge_addition_critical(g):
                continue
            res = min_sets(g, Param.GAMMA)
            for pat in (edgeless(1), edgeless(2)):
                if not is_pattern_excellent(g, pat, Param.GAMMA, result=res):
                    bad.append(f"{to_graph6(g)} misses E{pat.n}")
    return [], bad, bad == []


def _check_independence_equals_domination():
    bad = []
    for n in range(1, 7):
        for g in _all_graphs(n):
            s = param_value(g, Param.INDEPENDENCE)
            if param_value(g, Param.GAMMA) != s:
                continue
            want = _edgeless_names(s)
            gam = _names(g, Param.GAMMA)
            if [m for m in gam if m in want] != want:
                bad.append(f"n={n} gamma family misses an edgeless member")
            if _names(g, Param.IND_DOM) != want or _names(g, Param.INDEPENDENCE) != want:
                bad.append(f"n={n} independence families differ from edgeless run")
    return [], bad, bad == []


def _check_no_path3_at_three():
    bad = []
    p3 = path(3)
    for n in range(1, 8):
        for g in _all_graphs(n):
            res = min_sets(g, Param.GAMMA)
            if res.value != 3:
                continue
            if is_pattern_excellent(g, p3, Param.GAMMA, result=res):
                bad.append(to_graph6(g))
    return [], bad, bad == []


PRODUCT_PAIRS = [
    (complete(2), complete(2)),
    (complete(2), complete(3)),
    (complete(2), complete(4)),
    (complete(3), complete(3)),
    (complete(3), complete(4)),
    (complete(3), complete(5)),
    (complete(4), complete(4)),
    (complete(5), cycle(5)),
    (complete(3), cycle(7)),
    (path(4), cycle(5)),
]


def _check_product_lower_bound():
    bad = []
    for a, b in PRODUCT_PAIRS:
        g = cartesian_product(a, b)
        for chk in bound_checks(g, factors=(a, b)):
            if chk.name == "product-lower" and chk.applicable and not chk.holds:
                bad.append(f"orders ({a.n},{b.n}): {chk.detail}")
    return [], bad, bad == []


def _check_complete_cycle_product():
    g = cartesian_product(complete(5), cycle(5))
    res = min_sets(g, Param.GAMMA)
    computed = {
        "gamma": res.value,
        "cycle_layer_excellent": is_pattern_excellent(g, cycle(5), Param.GAMMA, result=res),
    }
    expected = {"gamma": 5, "cycle_layer_excellent": True}
    return expected, computed, expected == computed


PLAIN_CHAIN = (Param.GAMMA, Param.RESTRAINED, Param.OUTER_CONNECTED)
TOTAL_CHAIN = (Param.TOTAL, Param.TOTAL_RESTRAINED, Param.TOTAL_OUTER_CONNECTED)


def _family_signature(g: Graph, par: Param):
    fam = excellent_family(g, par)
    return (fam.excellent, family_names(fam))


def _check_lex_six_families():
    bad = []
    split_cases = [
        ("P2[C4,C4]", lex_product(path(2), [cycle(4), cycle(4)])),
        ("P3[P3,C4,P3]", lex_product(path(3), [path(3), cycle(4), path(3)])),
    ]
    for label, g in split_cases:
        for chain in (PLAIN_CHAIN, TOTAL_CHAIN):
            sigs = [_family_signature(g, par) for par in chain]
            if len(set(map(str, sigs))) != 1:
                bad.append(f"{label}: {'/'.join(p.id for p in chain)} differ")
    full_cases = [
        ("P2[P7,P7]", lex_product(path(2), [path(7), path(7)])),
        ("P3[P7,P7,P7]", lex_product(path(3), [path(7), path(7), path(7)])),
    ]
    for label, g in full_cases:
        sigs = [_family_signature(g, par) for par in PLAIN_CHAIN + TOTAL_CHAIN]
        if len(set(map(str, sigs))) != 1:
            bad.append(f"{label}: six families differ")
    return [], bad, bad == []


def _check_lex_complete_fibers():
    bad = []
    cases = [
        ("P3", path(3), [complete(2), complete(3), complete(2)]),
        ("P4", path(4), [complete(2), complete(3), complete(2), complete(3)]),
        ("C5", cycle(5), [complete(3), complete(2), complete(2), complete(3), complete(2)]),
    ]
    for label, base, fibers in cases:
        prod = lex_product(base, fibers)
        for s in (1, 2):
            lhs = is_pattern_excellent(prod, edgeless(s), Param.GAMMA)
            rhs = is_pattern_excellent(base, edgeless(s), Param.GAMMA)
            if lhs != rhs:
                bad.append(f"{label} s={s}: product {lhs} vs base {rhs}")
    return [], bad, bad == []


def _check_degree_ratio_bound():
    bad = []
    pools = [list(_regular(10, 5)), list(_regular(9, 4)), list(_regular(8, 3))]
    pools.append([g for g in _all_graphs(7) if g.min_degree() >= 3])
    for pool in pools:
        for g in pool:
            for chk in bound_checks(g):
                if chk.applicable and not chk.holds:
                    bad.append(f"{to_graph6(g)}: {chk.name}")
    return [], bad, bad == []


def _check_five_regular_order_ten():
    cat = _regular(10, 5)
    values = sorted({param_value(g, Param.GAMMA) for g in cat})
    expected = {"count": 60, "gamma_values": [2]}
    computed = {"count": len(cat), "gamma_values": values}
    return expected, computed, expected == computed


def _check_four_regular_nine_count():
    expected = {"count": 16}
    computed = {"count": len(_regular(9, 4))}
    return expected, computed, expected == computed


def _pattern_hits(cat, pattern: Graph):
    return search(cat, CatalogQuery(pattern=pattern, pattern_param="gamma"))


def _check_four_regular_nine_survey():
    hits = _pattern_hits(_regular(9, 4), complete(3))
    expected = {"count": 2}
    computed = {"count": len(hits), "graph6": [to_graph6(h.graph) for h in hits]}
    return expected, computed, computed["count"] == expected["count"]


def _check_four_regular_nine_product():
    hits = _pattern_hits(_regular(9, 4), complete(3))
    kk = canonical_key(cartesian_product(complete(3), complete(3)))
    expected = {"product_matches": 1}
    computed = {"product_matches": sum(1 for h in hits if h.key == kk)}
    return expected, computed, expected == computed


def _check_regular_order_bound():
    bad = []
    for n, k in [(9, 4), (8, 3), (10, 4)]:
        for h in _pattern_hits(_regular(n, k), complete(3)):
            if not h.graph.is_connected() or h.values.get("gamma") != 3:
                continue
            if h.graph.n > 3 * (k - 1):
                bad.append(f"({n},{k}): triangle-excellent hit above the order bound")
    return [], bad, bad == []


def _check_glued_cycles():
    bad = []
    for u, v in [(0, 0), (2, 5), (3, 1)]:
        g = coalescence([(cycle(7), u), (cycle(7), v)]).graph
        res = min_sets(g, Param.GAMMA)
        if res.value != 5:
            bad.append(f"glue ({u},{v}): gamma {res.value} != 5")
        if not is_pattern_excellent(g, complete(2), Param.GAMMA, result=res):
            bad.append(f"glue ({u},{v}): not edge-excellent")
    return [], bad, bad == []


COALESCENCE_CASES = [
    (cycle(7), 0, cycle(7), 3),
    (cycle(7), 1, cycle(10), 4),
    (cycle(4), 0, cycle(6), 2),
    (path(4), 0, path(4), 3),
    (path(4), 1, cycle(7), 0),
    (path(7), 3, path(7), 0),
    (cycle(5), 2, path(6), 5),
]


def _check_coalescence_critical():
    bad = []
    for f, x, h, y in COALESCENCE_CASES:
        merged = coalescence([(f, x), (h, y)])
        g = merged.graph
        in_f = bool(critical_split(f, Param.GAMMA)[0] >> x & 1)
        in_h = bool(critical_split(h, Param.GAMMA)[0] >> y & 1)
        in_g = bool(critical_split(g, Param.GAMMA)[0] >> merged.glued & 1)
        if in_g != (in_f and in_h):
            bad.append(f"{f.n}@{x}+{h.n}@{y}: critical {in_g} vs parts {in_f}&{in_h}")
        if in_g:
            total = param_value(f, Param.GAMMA) + param_value(h, Param.GAMMA) - 1
            if param_value(g, Param.GAMMA) != total:
                bad.append(f"{f.n}@{x}+{h.n}@{y}: additivity broken")
    return [], bad, bad == []


def _check_coalescence_closure():
    bad = []
    cases = [
        ([cycle(7), cycle(10)], complete(2)),
        ([cycle(4), cycle(7)], edgeless(1)),
        ([cycle(7), cycle(7), cycle(7)], complete(2)),
    ]
    for parts, pattern in cases:
        label = "+".join(str(p.n) for p in parts)
        g = coalescence([(p, 0) for p in parts]).graph
        res = min_sets(g, Param.GAMMA)
        want = sum(param_value(p, Param.GAMMA) for p in parts) - len(parts) + 1
        if res.value != want:
            bad.append(f"{label}: gamma {res.value} != {want}")
        if not is_pattern_excellent(g, pattern, Param.GAMMA, result=res):
            bad.append(f"{label}: pattern excellence lost")
    return [], bad, bad == []


def _check_tree_labeling():
    bad = []
    for n in range(4, 13):
        for t in enumerate_trees(n):
            lab = excellent_tree_labeling(t)
            if (lab is not None) != is_excellent(t, Param.GAMMA):
                bad.append(f"order {n}: labeling presence disagrees with excellence")
                continue
            if lab is None:
                continue
            if not satisfies(t, lab.zeros, Param.GAMMA):
                bad.append(f"order {n}: zero labels are not a dominating set")
            if lab.zeros.bit_count() != param_value(t, Param.GAMMA):
                bad.append(f"order {n}: zero labels are not optimal")
            if leaves_mask(t) & lab.ones:
                bad.append(f"order {n}: a leaf carries label one")
    return [], bad, bad == []


def _check_tree_families():
    bad = []
    for n in range(4, 13):
        for t in enumerate_trees(n):
            res = min_sets(t, Param.GAMMA)
            if not is_excellent(t, Param.GAMMA, result=res):
                continue
            fam = excellent_family(t, Param.GAMMA, result=res)
            if fam.members != tree_family_prediction(t):
                bad.append(f"{to_graph6(t)}: family differs from prediction")
    return [], bad, bad == []


def _check_bridge_pairs():
    bad = []
    for n in range(2, 11):
        for t in enumerate_trees(n):
            res = min_sets(t, Param.GAMMA)
            drops, _ = critical_split(t, Param.GAMMA)
            for x in set_of(drops):
                nbrs = list(set_of(t.adj[x]))
                for d in res.sets:
                    if d >> x & 1 and t.adj[x] & d:
                        bad.append(f"order {n}: optimal set holds a critical vertex and neighbor")
                for i, y in enumerate(nbrs):
                    for z in nbrs[i + 1 :]:
                        pair = 1 << y | 1 << z
                        if any(d & pair == pair for d in res.sets):
                            bad.append(f"order {n}: optimal set holds both bridge partners")
    return [], bad, bad == []


def _check_five_regular_twelve_search():
    cat = _regular(12, 5, connected=True)
    hits = _pattern_hits(cat, complete(3))
    expected = {"min_matches": 1}
    computed = {
        "catalog": len(cat),
        "matches": sorted(to_graph6(h.key.graph()) for h in hits),
        "gamma_values": sorted({h.values.get("gamma") for h in hits}),
    }
    return expected, computed, len(hits) >= 1


CLAIMS = [
    Claim("path-cycle-values", "path and cycle domination values", True, False, _check_path_cycle_values),
    Claim("cycle-excellence", "cycles are excellent at every order", True, False, _check_cycle_excellence),
    Claim("path-excellence", "paths are excellent exactly at 2 and 1 mod 3", True, False, _check_path_excellence),
    Claim("path-families", "path excellent families", True, False, _check_path_families),
    Claim("cycle-families-domination", "cycle families under domination", True, False, _check_cycle_families_domination),
    Claim("cycle-families-independent", "cycle families under independent domination", True, False, _check_cycle_families_independent),
    Claim("cycle-union-families", "families of unions of two cycles", True, False, _check_cycle_union_families),
    Claim("complete-product-families", "complete-by-complete product families", True, False, _check_complete_product_families),
    Claim("complement-product-families-base", "complement product families, base cases", True, False, _check_complement_product_base),
    Claim("complement-product-families-extended", "complement product families, wider cases", False, False, _check_complement_product_extended),
    Claim("multipartite-families", "complete multipartite families at domination two", True, False, _check_multipartite_families),
    Claim("edge-critical-pairs", "edge-addition-critical graphs hold nonadjacent pairs", False, False, _check_edge_critical_pairs),
    Claim("independence-equals-domination", "independence equals domination forces edgeless families", False, False, _check_independence_equals_domination),
    Claim("no-path3-at-three", "no three-vertex-path excellence at domination three", False, False, _check_no_path3_at_three),
    Claim("product-lower-bound", "product domination at least the smaller order", True, False, _check_product_lower_bound),
    Claim("complete-cycle-product", "complete-by-cycle product layer excellence", True, False, _check_complete_cycle_product),
    Claim("lex-six-families", "layered products align six parameter families", False, False, _check_lex_six_families),
    Claim("lex-complete-fibers", "complete-fiber products preserve edgeless excellence", True, False, _check_lex_complete_fibers),
    Claim("degree-ratio-bound", "domination under the degree ratio bound", False, False, _check_degree_ratio_bound),
    Claim("five-regular-order-ten", "five-regular order ten all dominate with two", False, False, _check_five_regular_order_ten),
    Claim("four-regular-nine-count", "four-regular order nine class count", True, False, _check_four_regular_nine_count),
    Claim("four-regular-nine-survey", "triangle-excellent four-regular order nine survey", False, False, _check_four_regular_nine_survey),
    Claim("four-regular-nine-product", "rook-product occurrence in the order nine survey", False, False, _check_four_regular_nine_product),
    Claim("regular-order-bound", "order bound for triangle-excellent regular graphs", False, False, _check_regular_order_bound),
    Claim("glued-cycles", "two glued seven-cycles stay edge-excellent", True, False, _check_glued_cycles),
    Claim("coalescence-critical", "criticality of the glue vertex matches both parts", False, False, _check_coalescence_critical),
    Claim("coalescence-closure", "gluing at a critical vertex keeps pattern excellence", False, False, _check_coalescence_closure),
    Claim("tree-labeling", "excellent trees carry the criticality labeling", False, False, _check_tree_labeling),
    Claim("tree-families", "tree families match the closed form", False, False, _check_tree_families),
    Claim("bridge-pairs", "optimal sets avoid bridge partners of critical vertices", False, False, _check_bridge_pairs),
    Claim("five-regular-twelve-search", "five-regular order twelve triangle-excellent search", False, True, _check_five_regular_twelve_search),
]

_BY_ID = {c.claim_id: c for c in CLAIMS}


def claim_ids(suite: str = "paper") -> list[str]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    if suite == "quick":
        return [c.claim_id for c in CLAIMS if c.quick]
    return [c.claim_id for c in CLAIMS]


def run_claim(claim_id: str, run_long: bool = False, timings: bool = False) -> ClaimReport:
    claim = _BY_ID[claim_id]
    if claim.long and not run_long:
        return ClaimReport(claim.claim_id, claim.anchor, "skipped-long-running", None, None, None)
    t0 = time.perf_counter()
    expected, computed, ok = claim.check()
    dt = time.perf_counter() - t0
    status = "pass" if ok else "fail"
    return ClaimReport(
        claim.claim_id, claim.anchor, status, expected, computed, round(dt, 3) if timings else None
    )


def run_suite(
    suite: str = "paper", run_long: bool = False, jobs: int = 1, timings: bool = False
) -> list[ClaimReport]:
    ids = claim_ids(suite)
    if suite == "long":
        run_long = True
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        from functools import partial

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(partial(run_claim, run_long=run_long, timings=timings), ids))
    return [run_claim(i, run_long=run_long, timings=timings) for i in ids]
