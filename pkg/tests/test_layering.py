import pytest

from planfault import EmbeddedDigraph, gen_grid, gen_tri_disk, reach_set
from planfault.layering import (
    build_layering,
    tree_path_decomposition,
    tree_path_vertices,
)


def small_corpus():
    out = []
    for seed in range(6):
        out.append(gen_grid(4, 4, seed))
        out.append(gen_tri_disk(14, seed))
    out.append(gen_grid(5, 3, 77))
    return out


def path_graph():
    # a -> b -> c
    arcs = [(0, 1), (1, 2)]
    rot = [[0], [1, 2], [3]]
    return EmbeddedDigraph(3, arcs, rot)


def cycle_graph():
    arcs = [(0, 1), (1, 2), (2, 0)]
    rot = [[0, 5], [2, 1], [4, 3]]
    return EmbeddedDigraph(3, arcs, rot)


def test_directed_path_single_component():
    comps, cmap = build_layering(path_graph())
    assert len(comps) == 1
    c = comps[0]
    # every root-to-vertex path is a single directed run here
    assert max(c.depth_runs) <= 1
    for v in range(3):
        assert cmap.components_of(v) == [0]


def test_cycle_single_component():
    comps, _ = build_layering(cycle_graph())
    assert len(comps) == 1


def test_membership_bound():
    for g in small_corpus():
        comps, cmap = build_layering(g)
        for v in g.vertices():
            assert 1 <= len(cmap.components_of(v)) <= 2


def test_component_graphs_valid():
    for g in small_corpus():
        comps, _ = build_layering(g)
        for c in comps:
            rep = c.graph.validate()
            assert rep.ok, rep.violation


def test_path_covering_pairs():
    # reach in g  <=>  reach in some component containing both endpoints
    for g in small_corpus():
        comps, cmap = build_layering(g)
        reach = {v: reach_set(g, v) for v in g.vertices()}
        creach = []
        for c in comps:
            creach.append({v: reach_set(c.graph, v)
                           for v in range(c.graph.n)})
        for s in g.vertices():
            for t in g.vertices():
                expect = t in reach[s]
                got = False
                for ci in set(cmap.components_of(s)) & set(
                        cmap.components_of(t)):
                    c = comps[ci]
                    if c.to_local[t] in creach[ci][c.to_local[s]]:
                        got = True
                        break
                assert got == expect, (s, t)


def test_fault_covering():
    # s->t in g minus f  <=>  s->t in some shared component minus f
    for g in [gen_grid(3, 3, s) for s in range(4)] + [gen_tri_disk(10, 1)]:
        comps, cmap = build_layering(g)
        for f in g.vertices():
            keepg = set(g.vertices()) - {f}
            for s in keepg:
                reach_f = reach_set(g, s, avoid={f})
                for t in keepg:
                    expect = t in reach_f
                    got = False
                    for ci in set(cmap.components_of(s)) & set(
                            cmap.components_of(t)):
                        c = comps[ci]
                        fl = c.to_local.get(f)
                        avoid = {fl} if fl is not None else set()
                        if c.to_local[t] in reach_set(
                                c.graph, c.to_local[s], avoid=avoid):
                            got = True
                            break
                    assert got == expect, (s, t, f)


def test_tree_spans_and_run_bounds():
    for g in small_corpus():
        comps, _ = build_layering(g)
        for c in comps:
            n = c.graph.n
            assert sum(1 for p in c.parent if p < 0) == 1
            # all-pairs tree paths split into <= 4 runs
            for u in range(n):
                for v in range(u + 1, n):
                    runs = tree_path_decomposition(c, u, v)
                    assert len(runs) <= c.path_bound
                    # concatenation equals the tree path
                    seq = tree_path_vertices(c, u, v)
                    walked = [seq[0]]
                    for r in runs:
                        vs = list(r.vertices)
                        if vs[0] == walked[-1]:
                            walked.extend(vs[1:])
                        else:
                            assert vs[-1] == walked[-1]
                            walked.extend(vs[-2::-1])
                    assert walked == seq


def test_tree_path_trivials():
    comps, _ = build_layering(path_graph())
    c = comps[0]
    assert tree_path_decomposition(c, 0, 0) == []
    runs = tree_path_decomposition(c, c.to_local[0], c.to_local[2])
    assert len(runs) == 1
    assert list(runs[0].vertices) == [c.to_local[0], c.to_local[1],
                                      c.to_local[2]]
