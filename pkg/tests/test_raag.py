import itertools
import random

from virtsym.raag import (graph, is_chordal, lex_bfs, pvt_commutator_free,
                          pvt_graph, verify_chordless_cycle, verify_peo)


def test_pvt_graph_small_counts():
    g3 = pvt_graph(3)
    assert len(g3.vertices) == 3 and len(g3.edges) == 0
    g4 = pvt_graph(4)
    assert len(g4.vertices) == 6 and len(g4.edges) == 3
    # the three edges form a perfect matching
    touched = [v for e in g4.edges for v in e]
    assert sorted(touched) == sorted(g4.vertices)


def test_pvt_graph_5_is_petersen_like():
    g = pvt_graph(5)
    assert len(g.vertices) == 10 and len(g.edges) == 15
    assert all(len(g.neighbors(v)) == 3 for v in g.vertices)


def test_edgeless_and_complete_are_chordal():
    ok, order = is_chordal(graph("abcd", []))
    assert ok and verify_peo(graph("abcd", []), order)
    complete = graph("abcd", list(itertools.combinations("abcd", 2)))
    ok, order = is_chordal(complete)
    assert ok and verify_peo(complete, order)


def test_four_cycle_not_chordal():
    c4 = graph("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
    ok, cycle = is_chordal(c4)
    assert not ok
    assert verify_chordless_cycle(c4, cycle)
    chorded = graph("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"),
                             ("a", "c")])
    ok, order = is_chordal(chorded)
    assert ok and verify_peo(chorded, order)


def test_pvt_commutator_freeness_boundary():
    for n in (2, 3, 4):
        assert pvt_commutator_free(n)
    for n in (5, 6, 7):
        assert not pvt_commutator_free(n)


def test_petersen_witness_is_five_cycle():
    g = pvt_graph(5)
    ok, cycle = is_chordal(g)
    assert not ok
    assert len(cycle) == 5
    assert verify_chordless_cycle(g, cycle)


def test_witness_replay_on_pvt_graphs():
    for n in range(2, 8):
        g = pvt_graph(n)
        ok, witness = is_chordal(g)
        if ok:
            assert verify_peo(g, witness)
        else:
            assert verify_chordless_cycle(g, witness)


def random_chordal_graph(rng, size):
    """Random interval graph; interval graphs are chordal."""
    intervals = []
    for v in range(size):
        a = rng.uniform(0, 10)
        intervals.append((v, a, a + rng.uniform(0.5, 4)))
    edges = [(u, v) for (u, ua, ub), (v, va, vb)
             in itertools.combinations(intervals, 2)
             if ua <= vb and va <= ub]
    return graph(range(size), edges)


def test_chordality_hereditary_on_induced_subgraphs():
    rng = random.Random(13)
    for _ in range(10):
        g = random_chordal_graph(rng, 12)
        ok, order = is_chordal(g)
        assert ok and verify_peo(g, order)
        keep = rng.sample(list(g.vertices), 7)
        sub = g.induced(keep)
        ok_sub, wit = is_chordal(sub)
        assert ok_sub and verify_peo(sub, wit)


def test_lex_bfs_starts_at_least_vertex():
    g = pvt_graph(5)
    assert lex_bfs(g)[0] == (1, 2)
    assert lex_bfs(g) == lex_bfs(g)


def test_graph_edges_match_commutation_relators():
    # an edge joins two pair symbols exactly when the presentation family
    # carries the corresponding commutator relator
    from virtsym.presentations import family
    from virtsym.words import GenSym, relator_canonical, word

    for n in (4, 5, 6):
        g = pvt_graph(n)
        p = family("pvt_raag", n)
        rels = set(p.relators)
        assert len(g.edges) == len(rels)
        for e in g.edges:
            (a, b), (c, d) = sorted(e)
            u, v = GenSym("lambda", a, b), GenSym("lambda", c, d)
            comm = relator_canonical(word(u, v) * ~word(v, u))
            assert comm in rels
