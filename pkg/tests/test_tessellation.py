from itertools import combinations

import pytest
from hypothesis import given

from conftest import graphs
from oracles import naive_maximal_cliques, naive_tessellations
from tesscover.graph import Graph, complete, extended_wheel, star, wheel, windmill
from tesscover.tessellation import (
    InvalidTessellation,
    Tessellation,
    TessellationCover,
    edge_set,
    enumerate_tessellations,
    enumerate_tessellations_restricted,
    is_valid_cover,
    uncovered_edges,
    validate_tessellation,
)
from tesscover.verify import W6_COVER, e3n_cover

W6 = wheel(6)


def kinds(violations):
    return {v.kind for v in violations}


def test_w6_t0_valid():
    assert validate_tessellation(W6, Tessellation.of(W6_COVER[0])) == []


def test_overlap_reported():
    t = Tessellation.of([(0, 1), (1, 2), (3,), (4,), (5,), (6,)])
    vs = validate_tessellation(W6, t)
    assert kinds(vs) == {"overlap"}
    assert vs[0].detail[0] == 1


def test_non_clique_reported():
    assert not W6.has_edge(0, 2)
    t = Tessellation.of([(0, 2), (1,), (3,), (4,), (5,), (6,)])
    vs = validate_tessellation(W6, t)
    assert kinds(vs) == {"non_clique"}
    assert vs[0].detail[1] == ((0, 2),)


def test_all_violations_reported():
    t = Tessellation.of([(0, 2), (2, 3)])
    assert kinds(validate_tessellation(W6, t)) == {"non_clique", "overlap", "missing"}


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_e3n_t0_edge_count(n):
    g = extended_wheel(n)
    for t in e3n_cover(n):
        assert len(edge_set(g, Tessellation.of(t))) == n * (n + 3) // 2


def test_singletons_cover_nothing():
    assert edge_set(W6, Tessellation.completed([], 7)) == set()


def test_complete4_single_polygon():
    assert edge_set(complete(4), Tessellation.of([(0, 1, 2, 3)])) == complete(4).edges


def test_edge_set_rejects_invalid():
    with pytest.raises(InvalidTessellation):
        edge_set(W6, Tessellation.of([(0, 2)]))


def test_w6_cover_valid():
    cover = TessellationCover(tuple(Tessellation.of(t) for t in W6_COVER))
    assert is_valid_cover(W6, cover) == []


def test_w6_two_of_three_missing():
    cover = TessellationCover(tuple(Tessellation.of(t) for t in W6_COVER[:2]))
    covered = set()
    for t in W6_COVER[:2]:
        for p in t:
            covered |= set(combinations(p, 2))
    assert uncovered_edges(W6, cover) == sorted(W6.edges - covered)
    assert uncovered_edges(W6, cover) == [(0, 1), (0, 6), (1, 6), (3, 4)]


def test_edgeless_empty_cover():
    assert is_valid_cover(Graph(3), TessellationCover()) == []


def test_complete3_restricted():
    assert list(enumerate_tessellations_restricted(complete(3))) == [Tessellation.of([(0, 1, 2)])]


def _restricted_oracle(g):
    mc = set(naive_maximal_cliques(g))
    out = set()
    for blocks in naive_tessellations(g):
        polys = [tuple(sorted(b)) for b in blocks]
        if any(p in mc for p in polys):
            out.add(Tessellation.of(polys))
    return out


def test_star3_restricted():
    got = list(enumerate_tessellations_restricted(star(3)))
    assert len(got) == 3
    assert set(got) == _restricted_oracle(star(3))
    assert all(len(t.nontrivial()) == 1 for t in got)


def test_windmill_2_3_restricted():
    g = windmill(2, 3)
    got = list(enumerate_tessellations_restricted(g))
    assert set(got) == _restricted_oracle(g)
    tri = {(0, 1, 2), (0, 3, 4)}
    for t in got:
        assert len(tri & set(t.polygons)) == 1


@given(graphs(max_n=7))
def test_restricted_stream_matches_oracle(g):
    got = list(enumerate_tessellations_restricted(g))
    assert len(got) == len(set(got))
    assert set(got) == _restricted_oracle(g)
    for t in got:
        assert validate_tessellation(g, t) == []
        assert len(edge_set(g, t)) == sum(len(p) * (len(p) - 1) // 2 for p in t.polygons)


@given(graphs(max_n=7))
def test_full_stream_matches_oracle(g):
    got = list(enumerate_tessellations(g, None))
    want = {Tessellation.of(tuple(sorted(b)) for b in blocks) for blocks in naive_tessellations(g)}
    assert len(got) == len(want) and set(got) == want


def test_stream_deterministic():
    g = extended_wheel(2)
    assert list(enumerate_tessellations_restricted(g)) == list(enumerate_tessellations_restricted(g))


def test_cap_truncates_explicitly():
    stream = enumerate_tessellations_restricted(extended_wheel(3), cap=10)
    got = list(stream)
    assert len(got) == 10 and stream.truncated
    stream = enumerate_tessellations_restricted(complete(3), cap=10)
    list(stream)
    assert not stream.truncated
