import pytest

from planfault import (
    EmbeddedDigraph,
    gen_grid,
    gen_tri_disk,
    incise_along,
    induced_subgraph,
    reach_set,
    co_reach_set,
    reverse_orientation,
    validate_embedding,
)
from planfault.embed import DirectedPath


def triangle():
    # 1->2->3->1 on vertices 0,1,2 (ids shifted down by one)
    arcs = [(0, 1), (1, 2), (2, 0)]
    rot = [
        [0, 5],   # at 0: tail of a0, head of a2
        [2, 1],   # at 1: tail of a1, head of a0
        [4, 3],   # at 2: tail of a2, head of a1
    ]
    return EmbeddedDigraph(3, arcs, rot)


def test_grid_euler():
    g = gen_grid(2, 2, 0, "layered")
    rep = validate_embedding(g)
    assert rep.ok
    assert rep.face_count == 2
    assert g.n - len(g.arcs) + rep.face_count == 2


def test_triangle_faces():
    rep = validate_embedding(triangle())
    assert rep.ok and rep.face_count == 2


def test_dangling_arc_end_rejected():
    g = triangle()
    bad = EmbeddedDigraph(3, g.arcs, [g.rot[0], g.rot[1][:1], g.rot[2]])
    rep = validate_embedding(bad)
    assert not rep.ok
    assert rep.violation == "dangling arc-end"


def test_self_loop_rejected():
    g = EmbeddedDigraph(2, [(0, 1), (1, 1)], [[0], [1, 2, 3]])
    assert not validate_embedding(g).ok


def test_reverse_triangle():
    g = triangle()
    r = reverse_orientation(g)
    assert r.arcs == [(1, 0), (2, 1), (0, 2)]
    assert validate_embedding(r).ok


def test_reverse_involution():
    for g in (triangle(), gen_grid(3, 4, 7), gen_tri_disk(12, 3)):
        assert reverse_orientation(reverse_orientation(g)) == g


def test_reverse_reach_equivalence():
    # reach(g, s) contains t  iff  reach(reverse(g), t) contains s
    for g in (gen_grid(4, 4, 11), gen_tri_disk(16, 5)):
        r = reverse_orientation(g)
        fwd = {v: reach_set(g, v) for v in g.vertices()}
        bwd = {v: reach_set(r, v) for v in g.vertices()}
        for s in g.vertices():
            for t in g.vertices():
                assert (t in fwd[s]) == (s in bwd[t])


def test_induced_subgraph():
    g = triangle()
    full = induced_subgraph(g, range(3))
    assert sorted(full.arc_list()) == sorted(g.arcs)
    sub = induced_subgraph(g, {0, 2})
    assert sub.arc_list() == [(2, 0)]
    empty = induced_subgraph(g, set())
    assert empty.arc_list() == []
    with pytest.raises(ValueError):
        induced_subgraph(g, {5})


def test_reach_set_basics():
    g = triangle()
    assert reach_set(g, 0) == {0, 1, 2}
    grid = gen_grid(2, 2, 0, "layered")
    sink = 3
    assert reach_set(grid, sink) == {sink}
    assert reach_set(grid, 0) == {0, 1, 2, 3}
    assert co_reach_set(grid, 3) == {0, 1, 2, 3}


def test_reach_matches_matrix_closure():
    import numpy as np

    g = gen_grid(4, 4, 3)
    n = g.n
    m = np.eye(n, dtype=bool)
    for t, h in g.arcs:
        m[t, h] = True
    # transitive closure by repeated squaring
    prev = None
    while prev is None or not np.array_equal(prev, m):
        prev = m.copy()
        m = m | (m @ m)
    for v in range(n):
        assert reach_set(g, v) == set(int(x) for x in np.nonzero(m[v])[0])


def test_directed_path():
    g = triangle()
    p = DirectedPath("p", [0, 1, 2]).check_in(g)
    assert p.pos[2] == 2 and 1 in p and len(p) == 3
    with pytest.raises(ValueError):
        DirectedPath("q", [0, 2]).check_in(g)
    with pytest.raises(ValueError):
        DirectedPath("r", [0, 1, 0])


def test_incise_empty_is_identity():
    g = gen_grid(3, 3, 2)
    inc = incise_along(g, set())
    assert inc.graph == g
    assert inc.old_of == list(range(g.n))


def test_incise_grid_euler():
    g = gen_grid(3, 3, 0, "layered")
    # cut one interior edge: the one between vertices 4 and 5 (row 1)
    aid = next(a for a, (t, h) in enumerate(g.arcs) if {t, h} == {4, 5})
    inc = incise_along(g, {aid})
    rep = validate_embedding(inc.graph)
    assert rep.ok, rep.violation


def test_incise_path_euler_and_reach():
    g = gen_grid(4, 4, 9)
    # cut the undirected path 5-6-10 (two edges), interior vertex 6
    a1 = next(a for a, (t, h) in enumerate(g.arcs) if {t, h} == {5, 6})
    a2 = next(a for a, (t, h) in enumerate(g.arcs) if {t, h} == {6, 10})
    inc = incise_along(g, {a1, a2})
    rep = validate_embedding(inc.graph)
    assert rep.ok, rep.violation
    # reachability never increases, and queries whose witness path avoids
    # the cut agree before/after
    cutset = {5, 6, 10}
    proj = inc.old_of
    for v0 in range(inc.graph.n):
        rv = {proj[x] for x in reach_set(inc.graph, v0)}
        assert rv <= reach_set(g, proj[v0])
    for s in range(g.n):
        if s in cutset:
            continue
        before = reach_set(g, s, avoid=cutset)
        news = proj.index(s)
        after = {proj[x] for x in reach_set(inc.graph, news)}
        assert before <= after


def test_incise_rejects_branching():
    g = gen_grid(3, 3, 0, "layered")
    # three edges sharing vertex 4 do not form simple paths
    aids = [a for a, (t, h) in enumerate(g.arcs) if 4 in (t, h)][:3]
    with pytest.raises(ValueError):
        incise_along(g, set(aids))
