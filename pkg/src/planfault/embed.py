"""Embedded planar directed multigraphs.

A graph is given combinatorially: arcs plus a rotation system (the cyclic
order of arc-ends around every vertex).  Faces are orbits of the dart
permutation, so planarity of an input is certified by Euler's relation
rather than by a planarity test.

Arc-end encoding: arc ``a`` has a tail end ``2*a`` and a head end
``2*a + 1``.  ``rot[v]`` lists the ends incident to ``v`` in cyclic order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field


def end_arc(e: int) -> int:
    return e >> 1


def end_is_head(e: int) -> bool:
    return bool(e & 1)


def twin(e: int) -> int:
    return e ^ 1


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    face_count: int
    violation: str | None = None


class DirectedPath:
    """A simple directed path, with O(1) position lookup."""

    def __init__(self, path_id, vertices):
        self.path_id = path_id
        self.vertices = tuple(vertices)
        self.pos = {v: i for i, v in enumerate(self.vertices)}
        if len(self.pos) != len(self.vertices):
            raise ValueError("path vertices must be distinct")

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, v):
        return v in self.pos

    def __getitem__(self, i):
        return self.vertices[i]

    def check_in(self, g: "EmbeddedDigraph"):
        """Verify consecutive vertices are joined by a forward arc of g."""
        out = g.out_adj
        for u, v in zip(self.vertices, self.vertices[1:]):
            if not any(w == v for _, w in out[u]):
                raise ValueError(f"missing arc {u}->{v}")
        return self

    def __repr__(self):
        return f"DirectedPath({self.path_id}, {list(self.vertices)})"


class EmbeddedDigraph:
    """Immutable directed planar multigraph with a rotation system."""

    def __init__(self, n: int, arcs, rot):
        self.n = n
        self.arcs = [(int(t), int(h)) for t, h in arcs]
        self.rot = [list(r) for r in rot]
        self._out = None
        self._in = None

    # -- adjacency ---------------------------------------------------------

    @property
    def out_adj(self):
        """out_adj[v] = list of (arc_id, head)."""
        if self._out is None:
            out = [[] for _ in range(self.n)]
            for a, (t, h) in enumerate(self.arcs):
                out[t].append((a, h))
            self._out = out
        return self._out

    @property
    def in_adj(self):
        """in_adj[v] = list of (arc_id, tail)."""
        if self._in is None:
            inn = [[] for _ in range(self.n)]
            for a, (t, h) in enumerate(self.arcs):
                inn[h].append((a, t))
            self._in = inn
        return self._in

    def end_vertex(self, e: int) -> int:
        t, h = self.arcs[end_arc(e)]
        return h if end_is_head(e) else t

    def vertices(self):
        return range(self.n)

    # -- faces and validation ----------------------------------------------

    def _rot_next(self):
        """Map end -> successor end in the rotation of its vertex."""
        nxt = {}
        for r in self.rot:
            k = len(r)
            for i, e in enumerate(r):
                nxt[e] = r[(i + 1) % k]
        return nxt

    def faces(self):
        """Faces as lists of darts; a dart is an end e leaving end_vertex(twin(e))...

        Concretely we trace orbits of e -> rot_next[twin(e)].  The number of
        orbits is the face count of the embedded (connected) graph.
        """
        nxt = self._rot_next()
        seen = set()
        out = []
        for r in self.rot:
            for e0 in r:
                if e0 in seen:
                    continue
                face = []
                e = e0
                while e not in seen:
                    seen.add(e)
                    face.append(e)
                    e = nxt[twin(e)]
                out.append(face)
        return out

    def face_count(self) -> int:
        return len(self.faces())

    def validate(self) -> ValidationReport:
        m = len(self.arcs)
        for t, h in self.arcs:
            if not (0 <= t < self.n and 0 <= h < self.n):
                return ValidationReport(False, 0, "arc endpoint out of range")
            if t == h:
                return ValidationReport(False, 0, "self-loop")
        # every arc-end appears exactly once, at its incident vertex
        count = {}
        for v, r in enumerate(self.rot):
            for e in r:
                if e in count:
                    return ValidationReport(False, 0, "duplicate arc-end")
                if not (0 <= end_arc(e) < m):
                    return ValidationReport(False, 0, "unknown arc-end")
                if self.end_vertex(e) != v:
                    return ValidationReport(False, 0, "arc-end at wrong vertex")
                count[e] = v
        if len(count) != 2 * m:
            return ValidationReport(False, 0, "dangling arc-end")
        if self.n and not self._undirected_connected():
            return ValidationReport(False, 0, "disconnected")
        f = self.face_count() if m else 1
        if self.n - m + f != 2:
            return ValidationReport(False, f, "Euler relation violated")
        return ValidationReport(True, f, None)

    def _undirected_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = bytearray(self.n)
        seen[0] = 1
        q = deque([0])
        while q:
            v = q.popleft()
            for _, w in self.out_adj[v]:
                if not seen[w]:
                    seen[w] = 1
                    q.append(w)
            for _, w in self.in_adj[v]:
                if not seen[w]:
                    seen[w] = 1
                    q.append(w)
        return all(seen)

    # -- derived graphs ------------------------------------------------------

    def reversed(self) -> "EmbeddedDigraph":
        """Reverse every arc; the embedding (cyclic orders) is unchanged.

        Arc ids are preserved, so the tail end of arc a becomes its head end;
        rotation entries flip their head bit in place.
        """
        arcs = [(h, t) for t, h in self.arcs]
        rot = [[e ^ 1 for e in r] for r in self.rot]
        return EmbeddedDigraph(self.n, arcs, rot)

    def __eq__(self, other):
        return (
            isinstance(other, EmbeddedDigraph)
            and self.n == other.n
            and self.arcs == other.arcs
            and self.rot == other.rot
        )

    def __repr__(self):
        return f"EmbeddedDigraph(n={self.n}, m={len(self.arcs)})"


def validate_embedding(g: EmbeddedDigraph) -> ValidationReport:
    return g.validate()


def reverse_orientation(g: EmbeddedDigraph) -> EmbeddedDigraph:
    return g.reversed()


class SubgraphView:
    """Vertex-induced subgraph; arcs kept iff both endpoints are kept."""

    def __init__(self, base: EmbeddedDigraph, keep):
        keep = frozenset(keep)
        for v in keep:
            if not (0 <= v < base.n):
                raise ValueError(f"unknown vertex {v}")
        self.base = base
        self.keep = keep

    @property
    def n(self):
        return self.base.n

    def __contains__(self, v):
        return v in self.keep

    def out_neighbors(self, v):
        if v not in self.keep:
            return
        for _, w in self.base.out_adj[v]:
            if w in self.keep:
                yield w

    def in_neighbors(self, v):
        if v not in self.keep:
            return
        for _, w in self.base.in_adj[v]:
            if w in self.keep:
                yield w

    def arc_list(self):
        return [
            (t, h)
            for (t, h) in self.base.arcs
            if t in self.keep and h in self.keep
        ]


def induced_subgraph(g: EmbeddedDigraph, keep) -> SubgraphView:
    return SubgraphView(g, keep)


def reach_set(g, v: int, avoid=()) -> set:
    """Vertices reachable from v by directed paths (v included).

    ``g`` is an EmbeddedDigraph or SubgraphView.  ``avoid`` vertices are not
    entered (v itself may appear in avoid: then the set is empty).
    """
    base = g.base if isinstance(g, SubgraphView) else g
    keep = g.keep if isinstance(g, SubgraphView) else None
    if not (0 <= v < base.n):
        raise ValueError(f"unknown vertex {v}")
    if keep is not None and v not in keep:
        raise ValueError(f"vertex {v} not in subgraph")
    avoid = set(avoid)
    if v in avoid:
        return set()
    seen = {v}
    q = deque([v])
    out = base.out_adj
    while q:
        u = q.popleft()
        for _, w in out[u]:
            if w in seen or w in avoid:
                continue
            if keep is not None and w not in keep:
                continue
            seen.add(w)
            q.append(w)
    return seen


def co_reach_set(g, v: int, avoid=()) -> set:
    """Vertices that can reach v by directed paths (v included)."""
    base = g.base if isinstance(g, SubgraphView) else g
    keep = g.keep if isinstance(g, SubgraphView) else None
    avoid = set(avoid)
    if v in avoid:
        return set()
    seen = {v}
    q = deque([v])
    inn = base.in_adj
    while q:
        u = q.popleft()
        for _, w in inn[u]:
            if w in seen or w in avoid:
                continue
            if keep is not None and w not in keep:
                continue
            seen.add(w)
            q.append(w)
    return seen


@dataclass
class Incision:
    """Result of cutting a graph along vertex-disjoint undirected paths.

    ``graph`` is the incised planar graph; ``old_of[v']`` maps its vertices
    back to the original ids.  Copies of a split vertex share old_of.
    """

    graph: EmbeddedDigraph
    old_of: list
    copies_of: dict = field(default_factory=dict)


def _paths_from_arc_set(g: EmbeddedDigraph, cut_arcs) -> list:
    """Group an arc set into vertex-disjoint undirected simple paths.

    Returns paths as lists of arc ids in path order.  Raises ValueError if
    the arcs do not form such paths.
    """
    cut_arcs = sorted(set(cut_arcs))
    if not cut_arcs:
        return []
    inc = {}
    for a in cut_arcs:
        t, h = g.arcs[a]
        inc.setdefault(t, []).append(a)
        inc.setdefault(h, []).append(a)
    for v, lst in inc.items():
        if len(lst) > 2:
            raise ValueError("cut arcs do not form simple paths")
    ends = sorted(v for v, lst in inc.items() if len(lst) == 1)
    paths = []
    used = set()
    for v0 in ends:
        a0 = inc[v0][0]
        if a0 in used:
            continue
        path = []
        v, a = v0, a0
        while True:
            used.add(a)
            path.append(a)
            t, h = g.arcs[a]
            v = h if t == v else t
            nxt = [b for b in inc[v] if b not in used]
            if not nxt:
                break
            a = nxt[0]
        paths.append(path)
    if len(used) != len(cut_arcs):
        raise ValueError("cut arcs contain a cycle")
    return paths


def incise_along(g: EmbeddedDigraph, cut_arcs) -> Incision:
    """Cut the plane along the given arcs.

    Every cut arc is duplicated and every interior vertex of each cut path is
    split in two, so that no path of the result crosses the cut.  Endpoints
    of a cut path are kept whole, so the graph stays connected and Euler's
    relation is preserved.
    """
    paths = _paths_from_arc_set(g, cut_arcs)
    return _incise_paths(g, paths)


def _incise_paths(g: EmbeddedDigraph, paths) -> Incision:
    cut = set()
    for p in paths:
        cut.update(p)

    # Vertex sequence of each path.
    vpaths = []
    for p in paths:
        t0, h0 = g.arcs[p[0]]
        if len(p) == 1:
            seq = [t0, h0]
        else:
            t1, h1 = g.arcs[p[1]]
            first = t0 if t0 not in (t1, h1) else h0
            seq = [first]
            for a in p:
                t, h = g.arcs[a]
                seq.append(h if seq[-1] == t else t)
        vpaths.append(seq)

    n = g.n
    old_of = list(range(n))
    copies = {}          # old vertex -> (left_copy, right_copy)
    new_rot = {v: None for v in range(n)}

    # side split of a rotation: ends strictly between e_in and e_out (cyclic,
    # exclusive) going forward form one side; the rest the other.
    def split_sides(v, e_a, e_b):
        r = g.rot[v]
        ia, ib = r.index(e_a), r.index(e_b)
        side1, side2 = [], []
        i = (ia + 1) % len(r)
        while i != ib:
            side1.append(r[i])
            i = (i + 1) % len(r)
        i = (ib + 1) % len(r)
        while i != ia:
            side2.append(r[i])
            i = (i + 1) % len(r)
        return side1, side2

    arc_copy_b = {}      # cut arc -> id of its duplicate (codes fixed later)
    new_arcs = list(g.arcs)
    for a in sorted(cut):
        arc_copy_b[a] = len(new_arcs)
        new_arcs.append(g.arcs[a])

    def arc_end(a, v):
        t, h = g.arcs[a]
        if v == t:
            return 2 * a
        if v == h:
            return 2 * a + 1
        raise ValueError

    # Plan the split of every path vertex.  side A keeps original arc ids,
    # side B gets the duplicates.
    for p, seq in zip(paths, vpaths):
        for i, v in enumerate(seq):
            if 0 < i < len(seq) - 1:
                e_prev = arc_end(p[i - 1], v)
                e_next = arc_end(p[i], v)
                s1, s2 = split_sides(v, e_prev, e_next)
                copies[v] = ("interior", e_prev, e_next, s1, s2)
            else:
                e0 = arc_end(p[0] if i == 0 else p[-1], v)
                copies[v] = ("endpoint", e0, i == 0)

    # Assign new vertex ids for B-copies.
    b_id = {}
    for v in sorted(copies):
        if copies[v][0] == "interior":
            b_id[v] = len(old_of)
            old_of.append(v)

    # Rewire duplicated arcs: along each path, the B-copy of arc i connects
    # the B-sides of its two endpoints (an unsplit endpoint hosts both).
    def b_vertex(v):
        return b_id.get(v, v)

    for p, seq in zip(paths, vpaths):
        for i, a in enumerate(p):
            t, h = g.arcs[a]
            nb = arc_copy_b[a]
            new_arcs[nb] = (b_vertex(t) if t in b_id else t,
                            b_vertex(h) if h in b_id else h)
            # A-copy keeps original endpoints but must target A-copies,
            # which reuse the original ids.

    # Build rotations.
    rot_out = {}
    for v in range(n):
        if v not in copies:
            rot_out[v] = list(g.rot[v])
            continue
        info = copies[v]
        if info[0] == "interior":
            _, e_prev, e_next, s1, s2 = info
            rot_out[v] = [e_prev] + s1 + [e_next]
            pb, nb = arc_copy_b[end_arc(e_prev)], arc_copy_b[end_arc(e_next)]
            eb_prev = 2 * pb + (e_prev & 1)
            eb_next = 2 * nb + (e_next & 1)
            rot_out[b_id[v]] = [eb_next] + s2 + [eb_prev]
        else:
            # the slit face closes only if the duplicate sits after the
            # original at the path's first endpoint and before it at the last
            _, e0, is_start = info
            ab = arc_copy_b[end_arc(e0)]
            r = list(g.rot[v])
            idx = r.index(e0)
            r.insert(idx + 1 if is_start else idx, 2 * ab + (e0 & 1))
            rot_out[v] = r

    # Ends listed in an s1/s2/rest block belong to uncut arcs whose far
    # endpoint may have been split; those arcs themselves keep their ids, but
    # their endpoint at v must move to the copy holding the end.  Fix arcs.
    end_home = {}
    for v, r in rot_out.items():
        for e in r:
            end_home[e] = v
    fixed_arcs = []
    for a, (t, h) in enumerate(new_arcs):
        te = end_home.get(2 * a)
        he = end_home.get(2 * a + 1)
        fixed_arcs.append((te if te is not None else t,
                           he if he is not None else h))

    nn = len(old_of)
    rot_list = [rot_out.get(v, []) for v in range(nn)]
    g2 = EmbeddedDigraph(nn, fixed_arcs, rot_list)
    pair = {v: (v, b_id[v]) for v in b_id}
    return Incision(g2, old_of, pair)
