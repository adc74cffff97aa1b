"""Seeded generators of embedded planar digraph families.

All randomness comes from a splitmix64 stream written out below, so equal
parameters give byte-identical graphs on any platform.
"""

from __future__ import annotations

import math

from .embed import EmbeddedDigraph

_MASK = (1 << 64) - 1


class SplitMix64:
    """splitmix64: state += golden gamma; output mixed with xor-shifts."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def coin(self) -> bool:
        return bool(self.next_u64() & 1)

    def below(self, n: int) -> int:
        # rejection sampling keeps the distribution exact
        if n <= 0:
            raise ValueError("below() needs n >= 1")
        lim = _MASK - (_MASK % n)
        while True:
            x = self.next_u64()
            if x < lim:
                return x % n


def gen_grid(w: int, h: int, seed: int = 0,
             orientation_mode: str = "random") -> EmbeddedDigraph:
    """w x h grid with the planar rotation.

    layered: all edges point right/down; random: seeded coin flip per edge.
    Vertex (r, c) has id r*w + c.  Arc count is 2*w*h - w - h.
    """
    if w < 1 or h < 1:
        raise ValueError("grid needs w, h >= 1")
    if orientation_mode not in ("random", "layered"):
        raise ValueError(f"unknown orientation_mode {orientation_mode!r}")
    rng = SplitMix64(seed)

    def vid(r, c):
        return r * w + c

    arcs = []
    # horizontal edges then vertical edges, row-major; remember each
    # undirected edge's arc id and which endpoint is the tail.
    edge_arc = {}
    for r in range(h):
        for c in range(w - 1):
            u, v = vid(r, c), vid(r, c + 1)
            fwd = True if orientation_mode == "layered" else rng.coin()
            a = len(arcs)
            arcs.append((u, v) if fwd else (v, u))
            edge_arc[(u, v)] = a
    for r in range(h - 1):
        for c in range(w):
            u, v = vid(r, c), vid(r + 1, c)
            fwd = True if orientation_mode == "layered" else rng.coin()
            a = len(arcs)
            arcs.append((u, v) if fwd else (v, u))
            edge_arc[(u, v)] = a

    def end_at(u, v):
        # the end of edge {u,v} incident to u
        key = (u, v) if (u, v) in edge_arc else (v, u)
        a = edge_arc[key]
        t, _ = arcs[a]
        return 2 * a + (0 if t == u else 1)

    rot = []
    for r in range(h):
        for c in range(w):
            u = vid(r, c)
            ends = []
            if c + 1 < w:
                ends.append(end_at(u, vid(r, c + 1)))   # east
            if r + 1 < h:
                ends.append(end_at(u, vid(r + 1, c)))   # south
            if c > 0:
                ends.append(end_at(u, vid(r, c - 1)))   # west
            if r > 0:
                ends.append(end_at(u, vid(r - 1, c)))   # north
            rot.append(ends)
    return EmbeddedDigraph(w * h, arcs, rot)


def gen_tri_disk(n: int, seed: int = 0) -> EmbeddedDigraph:
    """Random triangulated disk on n vertices.

    Vertices sit on a circle (combinatorially); the interior is fan
    triangulated and then stirred with seeded random diagonal flips.  Every
    chord set of a convex polygon is planar, so the rotation is computed by
    sorting neighbors by circle position.
    """
    if n < 3:
        raise ValueError("tri_disk needs n >= 3")
    rng = SplitMix64(seed)

    edges = set()
    for i in range(n):
        edges.add(frozenset((i, (i + 1) % n)))
    # fan triangulation from 0 and the triangle list for flips
    tris = []
    for i in range(1, n - 1):
        tris.append((0, i, i + 1))
        if 1 < i:
            edges.add(frozenset((0, i)))

    # adjacency of diagonals to triangles, rebuilt lazily during flips
    def diag_tris(diags):
        m = {}
        for t in tris:
            for pair in ((t[0], t[1]), (t[1], t[2]), (t[0], t[2])):
                fs = frozenset(pair)
                if fs in diags:
                    m.setdefault(fs, []).append(t)
        return m

    diagonals = {e for e in edges
                 if (min(e) + 1) % n != max(e) and (max(e) + 1) % n != min(e)}
    flips = 3 * n
    for _ in range(flips):
        if not diagonals:
            break
        dlist = sorted(diagonals, key=sorted)
        d = dlist[rng.below(len(dlist))]
        m = diag_tris(diagonals)
        ts = m.get(d, [])
        if len(ts) != 2:
            continue
        a, b = sorted(d)
        others = []
        for t in ts:
            others.append(next(x for x in t if x not in d))
        c1, c2 = others
        nd = frozenset((c1, c2))
        if nd in edges or c1 == c2:
            continue
        edges.remove(d)
        edges.add(nd)
        diagonals.remove(d)
        if (min(nd) + 1) % n != max(nd) and (max(nd) + 1) % n != min(nd):
            diagonals.add(nd)
        tris.remove(ts[0])
        tris.remove(ts[1])
        tris.append(tuple(sorted((a, c1, c2))))
        tris.append(tuple(sorted((b, c1, c2))))

    # orient each edge by coin flip, in sorted edge order for determinism
    arcs = []
    arc_of = {}
    for e in sorted(edges, key=sorted):
        u, v = sorted(e)
        fwd = rng.coin()
        arc_of[e] = len(arcs)
        arcs.append((u, v) if fwd else (v, u))

    # rotation: neighbors sorted by angle around the circle
    rot = [[] for _ in range(n)]
    for i in range(n):
        nbrs = []
        for e in edges:
            if i in e:
                (j,) = e - {i}
                nbrs.append(j)
        nbrs.sort(key=lambda j: ((j - i) % n))
        ends = []
        for j in nbrs:
            a = arc_of[frozenset((i, j))]
            t, _ = arcs[a]
            ends.append(2 * a + (0 if t == i else 1))
        rot[i] = ends
    return EmbeddedDigraph(n, arcs, rot)
