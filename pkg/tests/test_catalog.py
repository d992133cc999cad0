"""Catalog generation, persistence, and predicate search."""

import json

import pytest

from domexc.canon import canonical_key
from domexc.catalog import (
    ALL_GRAPHS_CAP,
    Catalog,
    CatalogQuery,
    REGULAR_CAP,
    generate_all_graphs,
    generate_regular,
    load_catalog,
    save_catalog,
    search,
)
from domexc.domination import Param, min_sets
from domexc.excellence import is_excellent
from domexc.graph6 import to_graph6
from domexc.graphs import complete, cycle, path

ALL_COUNTS = [1, 2, 4, 11, 34, 156, 1044]
CONNECTED_COUNTS = [1, 1, 2, 6, 21, 112, 853]


def test_all_graphs_counts():
    for n, want in enumerate(ALL_COUNTS, start=1):
        assert len(generate_all_graphs(n)) == want
    for n, want in enumerate(CONNECTED_COUNTS, start=1):
        assert len(generate_all_graphs(n, connected_only=True)) == want


def test_all_graphs_isomorph_free():
    cat = generate_all_graphs(5)
    assert len(set(cat.keys)) == len(cat)
    assert list(cat.keys) == sorted(cat.keys)
    for g, key in zip(cat.graphs, cat.keys):
        assert canonical_key(g) == key


def test_regular_counts():
    cases = {
        (4, 3): 1,
        (6, 3): 2,
        (8, 3): 6,
        (9, 4): 16,
        (10, 3): 21,
        (10, 5): 60,
    }
    for (n, k), want in cases.items():
        cat = generate_regular(n, k)
        assert len(cat) == want
        assert all(g.is_regular() and g.degree(0) == k for g in cat)
    assert len(generate_regular(8, 3, connected_only=True)) == 5
    assert len(generate_regular(10, 3, connected_only=True)) == 19


def test_regular_edge_cases():
    assert len(generate_regular(5, 0)) == 1
    assert len(generate_regular(6, 5)) == 1
    assert to_graph6(generate_regular(6, 5).graphs[0]) == to_graph6(complete(6))


def test_generation_caps():
    with pytest.raises(ValueError):
        generate_all_graphs(0)
    with pytest.raises(ValueError):
        generate_all_graphs(ALL_GRAPHS_CAP + 1)
    with pytest.raises(ValueError):
        generate_regular(REGULAR_CAP + 1, 4)
    with pytest.raises(ValueError):
        generate_regular(5, 5)
    with pytest.raises(ValueError):
        generate_regular(5, 3)


def test_catalog_validation():
    g = cycle(4)
    key = canonical_key(g)
    with pytest.raises(ValueError):
        Catalog("x", (g, g), (key, key))
    with pytest.raises(ValueError):
        Catalog("x", (g,), (key, key))


def test_save_load_roundtrip(tmp_path):
    cat = generate_all_graphs(4)
    target = tmp_path / "four.g6"
    save_catalog(cat, target)
    back = load_catalog(target)
    assert back.keys == cat.keys
    assert len(back) == len(cat)
    assert back.warnings == ()
    meta = json.loads((tmp_path / "four.g6.meta.json").read_text())
    assert meta["count"] == 11
    assert meta["source"] == cat.source
    assert meta["warnings"] == []


def test_load_reports_duplicates(tmp_path):
    f = tmp_path / "dups.g6"
    f.write_text("C~\nCl\nC~\n")
    cat = load_catalog(f)
    assert len(cat) == 2
    assert len(cat.warnings) == 1
    assert "line 3 duplicates line 1" in cat.warnings[0]


def test_load_detects_relabeled_duplicates(tmp_path):
    a = cycle(5)
    b = a.relabel((2, 0, 3, 1, 4))
    f = tmp_path / "relab.g6"
    f.write_text(to_graph6(a) + "\n" + to_graph6(b) + "\n")
    cat = load_catalog(f)
    assert len(cat) == 1
    assert cat.warnings and "duplicates line 1" in cat.warnings[0]


def test_load_error_carries_line_number(tmp_path):
    f = tmp_path / "bad.g6"
    f.write_text("C~\nC\n")
    with pytest.raises(Exception, match="line 2"):
        load_catalog(f)


def test_load_skips_header(tmp_path):
    f = tmp_path / "hdr.g6"
    f.write_text(">>graph6<<\nC~\n")
    assert len(load_catalog(f)) == 1


def test_load_beyond_canonical_cap(tmp_path):
    # above order 12 only labeled identity dedups
    a = path(13)
    b = a.relabel((1, 0) + tuple(range(2, 13)))
    assert b.adj != a.adj
    f = tmp_path / "big.g6"
    f.write_text(to_graph6(a) + "\n" + to_graph6(a) + "\n" + to_graph6(b) + "\n")
    cat = load_catalog(f)
    assert len(cat) == 2
    assert len(cat.warnings) == 1


def test_search_param_filter():
    cat = generate_all_graphs(4)
    want = [g for g in cat if min_sets(g, Param.GAMMA).value == 2]
    got = search(cat, CatalogQuery(param_values={"gamma": 2}))
    assert [m.graph for m in got] == want
    assert all(m.values["gamma"] == 2 for m in got)
    assert [cat.graphs[m.index] for m in got] == want


def test_search_excellence_and_structure():
    cat = generate_all_graphs(5, connected_only=True)
    got = search(cat, CatalogQuery(excellent_for="gamma", regular=True))
    want = [
        g
        for g in cat
        if g.is_regular() and is_excellent(g, Param.GAMMA)
    ]
    assert [m.graph for m in got] == want
    assert any(canonical_key(cycle(5)) == m.key for m in got)


def test_search_pattern_and_family():
    cat = generate_regular(9, 4)
    q = CatalogQuery(
        pattern=complete(3), pattern_param="gamma", connected=True, include_family=True
    )
    got = search(cat, q)
    assert len(got) == 3
    for m in got:
        assert m.family is not None and m.family.excellent
        assert canonical_key(complete(3)) in m.family.members


def test_search_disconnected_clause():
    cat = generate_all_graphs(4)
    got = search(cat, CatalogQuery(connected=False))
    assert all(not m.graph.is_connected() for m in got)
    assert len(got) == 11 - 6


def test_query_validation():
    with pytest.raises(ValueError):
        CatalogQuery(param_values={"gamma2": 1})
    with pytest.raises(ValueError):
        CatalogQuery(excellent_for="domination")
    with pytest.raises(ValueError):
        CatalogQuery(pattern_param="nope")
