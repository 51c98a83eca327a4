import random

import pytest

from mops import (
    ParseError,
    Partition,
    ValidationError,
    connected_components,
    gen_random,
    gen_tight_family,
    graph_new,
    induced_subgraph,
    read_edgelist,
    write_edgelist,
)
from _builders import complete_graph, path_graph


def test_triangle_construction():
    g = graph_new(3, [(0, 1), (1, 2), (0, 2)])
    assert g.n == 3
    assert g.edges == ((0, 1), (0, 2), (1, 2))
    assert g.neighbors(0) == (1, 2)


def test_single_vertex():
    g = graph_new(1, [])
    assert g.n == 1 and g.m == 0


def test_duplicate_edges_collapse():
    g = graph_new(4, [(0, 1), (1, 0)])
    assert g.n == 4 and g.edges == ((0, 1),)


def test_self_loop_rejected():
    with pytest.raises(ValidationError, match=r"\(2, 2\)"):
        graph_new(3, [(2, 2)])


def test_out_of_range_rejected():
    with pytest.raises(ValidationError, match=r"\(1, 5\)"):
        graph_new(4, [(1, 5)])


def test_adjacency_symmetric_and_sorted():
    rng = random.Random(5)
    for _ in range(50):
        g = gen_random(rng.randint(1, 12), rng.random(), rng.randrange(10**6))
        seen = set()
        for v in range(g.n):
            nbrs = g.neighbors(v)
            assert list(nbrs) == sorted(nbrs)
            for w in nbrs:
                assert v in g.neighbors(w)
                seen.add((min(v, w), max(v, w)))
        assert seen == set(g.edges)


def test_components_triangle():
    g = graph_new(3, [(0, 1), (1, 2), (0, 2)])
    assert connected_components(g) == [0, 0, 0]


def test_components_with_isolated():
    g = graph_new(4, [(2, 3)])
    assert connected_components(g) == [0, 1, 2, 2]


def test_components_tight_family_connected():
    g = gen_tight_family(3)
    labels = connected_components(g)
    assert max(labels) == 0


def test_induced_k4_minus_vertex():
    sub, back = induced_subgraph(complete_graph(4), {0, 1, 2})
    assert sub.edges == ((0, 1), (0, 2), (1, 2))
    assert back == [0, 1, 2]


def test_induced_path_endpoints():
    sub, back = induced_subgraph(path_graph(3), {0, 2})
    assert sub.n == 2 and sub.m == 0
    assert back == [0, 2]


def test_induced_tight_family_hub():
    sub, _ = induced_subgraph(gen_tight_family(3), {0, 1, 2})
    assert sub.edges == ((0, 1), (0, 2), (1, 2))


def test_induced_requires_vertices():
    with pytest.raises(ValidationError):
        induced_subgraph(path_graph(3), set())


def test_read_basic():
    g = read_edgelist("p 3 3\ne 1 2\ne 2 3\ne 1 3")
    assert g.edges == ((0, 1), (0, 2), (1, 2))


def test_read_no_edges():
    g = read_edgelist("p 2 0")
    assert g.n == 2 and g.m == 0


def test_read_comments_ignored():
    g = read_edgelist("c hello\np 2 1\nc mid\ne 1 2\n")
    assert g.edges == ((0, 1),)


def test_read_index_out_of_range():
    with pytest.raises(ParseError, match="index 3 > n=2"):
        read_edgelist("p 2 1\ne 1 3")


def test_read_reports_line_number():
    with pytest.raises(ParseError, match="line 3"):
        read_edgelist("c x\np 2 1\ne 1 9")


def test_read_edge_count_mismatch():
    with pytest.raises(ParseError, match="claims 2"):
        read_edgelist("p 3 2\ne 1 2")


def test_read_missing_header():
    with pytest.raises(ParseError):
        read_edgelist("e 1 2")


def test_roundtrip_random_graphs():
    rng = random.Random(99)
    for _ in range(1000):
        g = gen_random(rng.randint(1, 10), rng.random(), rng.randrange(10**6))
        text = write_edgelist(g)
        assert read_edgelist(text) == g
        assert write_edgelist(read_edgelist(text)) == text


def test_partition_find_idempotent_union_counts():
    rng = random.Random(17)
    for _ in range(50):
        n = rng.randint(1, 20)
        part = Partition(n)
        for _ in range(30):
            u, v = rng.randrange(n), rng.randrange(n)
            if u == v:
                continue
            before = part.count
            merged = part.union(u, v)
            assert part.count == before - (1 if merged else 0)
            root = part.find(u)
            assert part.find(root) == root


def test_partition_matches_components():
    rng = random.Random(23)
    for _ in range(100):
        g = gen_random(rng.randint(1, 12), rng.random(), rng.randrange(10**6))
        part = Partition(g.n)
        for u, v in g.edges:
            part.union(u, v)
        labels = connected_components(g)
        assert part.count == max(labels) + 1
        for u, v in g.edges:
            assert part.same(u, v)


def test_partition_connected_graph_single_component():
    g = complete_graph(6)
    part = Partition(g.n)
    for u, v in g.edges:
        part.union(u, v)
    assert part.count == 1
