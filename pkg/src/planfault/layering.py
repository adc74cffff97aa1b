"""Reduction of an arbitrary embedded digraph to layered components.

Downstream stages need a spanning tree whose tree paths split into few
directed runs.  We peel alternating reachability closures:

  even layer = out-closure of seed heads within the remaining graph,
  odd  layer = every remaining vertex that can reach the previous layer.

Arcs then never skip a layer (even layers emit nothing forward; anything
reaching an even layer would have joined the odd closure), so every
directed path lies inside two adjacent layers.  Components are the
undirected connected pieces of each adjacent layer pair; a vertex belongs
to at most two.  Trees are rooted so that root-to-vertex paths use at most
two directed runs whenever some root covers the component that way, with a
run-minimizing fallback; tree paths are asserted to split into at most
``PATH_BOUND`` runs either way.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .embed import DirectedPath, EmbeddedDigraph

PATH_BOUND = 4


class BuildError(AssertionError):
    pass


def _induced_embedded(g: EmbeddedDigraph, verts):
    """Embedded subgraph on ``verts`` (sorted); returns (graph, to_global)."""
    verts = sorted(verts)
    loc = {v: i for i, v in enumerate(verts)}
    arc_map = {}
    arcs = []
    for a, (t, h) in enumerate(g.arcs):
        if t in loc and h in loc:
            arc_map[a] = len(arcs)
            arcs.append((loc[t], loc[h]))
    rot = []
    for v in verts:
        r = []
        for e in g.rot[v]:
            a = e >> 1
            if a in arc_map:
                r.append(2 * arc_map[a] + (e & 1))
        rot.append(r)
    return EmbeddedDigraph(len(verts), arcs, rot), verts


def peel_layers(g: EmbeddedDigraph):
    """Alternating closure layers; returns list of sorted vertex lists."""
    remaining = set(g.vertices())
    out, inn = g.out_adj, g.in_adj
    layers = []
    prev = None          # previous layer if it was odd-kind... we track seeds
    prev_layer = None
    prev_kind = None
    while remaining:
        if prev_kind != "even":
            # even layer: close forward from seed heads out of the previous
            # odd layer, or a fresh minimum-id root
            seeds = set()
            if prev_kind == "odd":
                for v in prev_layer:
                    for _, w in out[v]:
                        if w in remaining:
                            seeds.add(w)
            if not seeds:
                seeds = {min(remaining)}
            layer = set()
            q = deque(sorted(seeds))
            layer.update(seeds)
            while q:
                v = q.popleft()
                for _, w in out[v]:
                    if w in remaining and w not in layer:
                        layer.add(w)
                        q.append(w)
            kind = "even"
        else:
            # odd layer: everything that can reach the previous even layer
            layer = set()
            q = deque()
            for v in prev_layer:
                for _, w in inn[v]:
                    if w in remaining and w not in layer:
                        layer.add(w)
                        q.append(w)
            while q:
                v = q.popleft()
                for _, w in inn[v]:
                    if w in remaining and w not in layer:
                        layer.add(w)
                        q.append(w)
            kind = "odd"
            if not layer:
                # nothing interacts with the even layer; start fresh
                prev_kind, prev_layer = None, None
                continue
        remaining -= layer
        layers.append(sorted(layer))
        prev_kind, prev_layer = kind, layer
    return layers


@dataclass
class LayeredComponent:
    comp_id: int
    graph: EmbeddedDigraph          # local ids
    to_global: list
    to_local: dict
    root: int                       # local id
    parent: list                    # local; parent[root] = -1
    parent_up: list                 # True: tree arc child->parent
    layer_of: dict                  # local id -> layer index in g
    depth_runs: list                # runs on root-to-v tree path
    path_bound: int = PATH_BOUND

    def tree_neighbors(self):
        nb = [[] for _ in range(self.graph.n)]
        for v, p in enumerate(self.parent):
            if p >= 0:
                nb[v].append(p)
                nb[p].append(v)
        return nb


@dataclass
class ComponentMap:
    of_vertex: list                 # global vertex -> list of comp ids

    def components_of(self, v):
        return self.of_vertex[v]


def _try_two_run_tree(cg: EmbeddedDigraph, root: int):
    """Spanning tree with <=2-run root paths, or None.

    Covers reach(root) with an out-tree and hangs everything that can reach
    the covered set with backward runs.
    """
    n = cg.n
    parent = [-1] * n
    parent_up = [False] * n
    runs = [0] * n
    seen = [False] * n
    seen[root] = True
    q = deque([root])
    while q:
        v = q.popleft()
        for _, w in sorted(cg.out_adj[v]):
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                parent_up[w] = False      # arc parent->child
                runs[w] = 1
                q.append(w)
    q = deque(i for i in range(n) if seen[i])
    while q:
        v = q.popleft()
        for _, w in sorted(cg.in_adj[v]):
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                parent_up[w] = True       # arc child->parent
                runs[w] = 2 if runs[v] >= 1 or v == root else 1
                q.append(w)
    if not all(seen):
        return None
    return parent, parent_up, runs


def _min_run_tree(cg: EmbeddedDigraph, root: int):
    """Run-minimizing spanning tree (Dijkstra over (runs, last-direction))."""
    import heapq

    n = cg.n
    INF = 1 << 30
    best = [(INF, 0)] * n
    parent = [-1] * n
    parent_up = [False] * n
    done = [False] * n
    heap = [(0, root, 0, -1, False)]     # runs, v, lastdir(0 none/1 f/2 b)
    states = {}
    while heap:
        r, v, last, pv, up = heapq.heappop(heap)
        key = v
        if done[v]:
            continue
        done[v] = True
        parent[v] = pv
        parent_up[v] = up
        best[v] = (r, last)
        for _, w in sorted(cg.out_adj[v]):
            if not done[w]:
                nr = r if last == 1 else r + 1
                heapq.heappush(heap, (nr, w, 1, v, False))
        for _, w in sorted(cg.in_adj[v]):
            if not done[w]:
                nr = r if last == 2 else r + 1
                heapq.heappush(heap, (nr, w, 2, v, True))
    if not all(done):
        return None
    runs = [b[0] for b in best]
    return parent, parent_up, runs


def _tree_path_runs(comp: LayeredComponent, u: int, v: int) -> int:
    return len(tree_path_decomposition(comp, u, v))


def build_layering(g: EmbeddedDigraph):
    """Decompose g into layered components; see module docstring."""
    rep = g.validate()
    if not rep.ok:
        raise ValueError(f"invalid graph: {rep.violation}")
    layers = peel_layers(g)
    layer_of = {}
    for i, lay in enumerate(layers):
        for v in lay:
            layer_of[v] = i

    groups = []
    if len(layers) == 1:
        groups.append(layers[0])
    else:
        for i in range(1, len(layers)):
            groups.append(sorted(set(layers[i - 1]) | set(layers[i])))

    comps = []
    of_vertex = [[] for _ in range(g.n)]
    for grp in groups:
        # split into undirected connected pieces
        grp_set = set(grp)
        unvisited = set(grp)
        while unvisited:
            start = min(unvisited)
            cc = {start}
            q = deque([start])
            while q:
                x = q.popleft()
                for _, w in g.out_adj[x]:
                    if w in grp_set and w not in cc:
                        cc.add(w)
                        q.append(w)
                for _, w in g.in_adj[x]:
                    if w in grp_set and w not in cc:
                        cc.add(w)
                        q.append(w)
            unvisited -= cc
            cg, to_global = _induced_embedded(g, cc)
            comp = _build_component_tree(cg, to_global, layer_of)
            comp.comp_id = len(comps)
            comps.append(comp)
            for gv in to_global:
                of_vertex[gv].append(comp.comp_id)
    for v in range(g.n):
        if not (1 <= len(of_vertex[v]) <= 2):
            raise BuildError(f"vertex {v} in {len(of_vertex[v])} components")
    return comps, ComponentMap(of_vertex)


def _build_component_tree(cg, to_global, layer_of) -> LayeredComponent:
    n = cg.n
    if n <= 400:
        roots = list(range(n))
    else:
        roots = sorted(set(list(range(64)) + [0, n - 1]))

    def make(root, parent, parent_up, runs):
        return LayeredComponent(
            comp_id=-1,
            graph=cg,
            to_global=list(to_global),
            to_local={gv: i for i, gv in enumerate(to_global)},
            root=root,
            parent=parent,
            parent_up=parent_up,
            layer_of={i: layer_of[gv] for i, gv in enumerate(to_global)},
            depth_runs=runs,
        )

    for r in roots:
        t = _try_two_run_tree(cg, r)
        if t is not None:
            return make(r, *t)
    # no root covers the component with two runs; fall back to
    # run-minimizing trees, gated by the tree-path bound
    last_err = None
    for r in roots:
        t = _min_run_tree(cg, r)
        if t is None:
            continue
        comp = make(r, *t)
        try:
            _assert_path_bound(comp)
            return comp
        except BuildError as e:
            last_err = e
    raise last_err or BuildError("component has no spanning tree")


def _assert_path_bound(comp: LayeredComponent):
    n = comp.graph.n
    maxruns = max(comp.depth_runs, default=0)
    if maxruns <= 2:
        return                      # any tree path then splits into <= 4
    # otherwise scan pairs involving deep vertices
    deep = [v for v in range(n) if comp.depth_runs[v] > 2]
    for u in deep:
        for v in range(n):
            if u != v and _tree_path_runs(comp, u, v) > comp.path_bound:
                raise BuildError(
                    f"tree path {u}..{v} exceeds {comp.path_bound} runs")


def _path_to_root(comp: LayeredComponent, v: int):
    seq = [v]
    while comp.parent[seq[-1]] >= 0:
        seq.append(comp.parent[seq[-1]])
    return seq


def tree_path_vertices(comp: LayeredComponent, u: int, v: int):
    """Vertex sequence of the unique tree path from u to v (local ids)."""
    pu = _path_to_root(comp, u)
    pv = _path_to_root(comp, v)
    iu, iv = len(pu) - 1, len(pv) - 1
    while iu > 0 and iv > 0 and pu[iu - 1] == pv[iv - 1]:
        iu -= 1
        iv -= 1
    return pu[: iu + 1] + pv[:iv][::-1]


def split_into_runs(cg: EmbeddedDigraph, seq):
    """Split a walk into maximal directed runs.

    Returns a list of (vertices, forward) where each run's vertices read in
    walk order; forward runs have arcs along the walk.
    """
    if len(seq) <= 1:
        return []
    has_arc = set()
    for t, h in cg.arcs:
        has_arc.add((t, h))
    runs = []
    cur = [seq[0], seq[1]]
    cur_fwd = (seq[0], seq[1]) in has_arc
    if not cur_fwd and (seq[1], seq[0]) not in has_arc:
        raise ValueError("walk uses a non-arc")
    for a, b in zip(seq[1:], seq[2:]):
        fwd = (a, b) in has_arc
        if not fwd and (b, a) not in has_arc:
            raise ValueError("walk uses a non-arc")
        if fwd == cur_fwd:
            cur.append(b)
        else:
            runs.append((cur, cur_fwd))
            cur = [a, b]
            cur_fwd = fwd
    runs.append((cur, cur_fwd))
    return runs


def tree_path_decomposition(comp: LayeredComponent, u: int, v: int):
    """The u-v tree path as a list of DirectedPath runs (local ids)."""
    if u == v:
        return []
    seq = tree_path_vertices(comp, u, v)
    out = []
    for i, (vs, fwd) in enumerate(split_into_runs(comp.graph, seq)):
        verts = vs if fwd else vs[::-1]
        out.append(DirectedPath(f"run{i}", verts))
    return out
