"""Graph algorithm workhorses shared by the label builders.

Everything here works on plain adjacency lists (lists of int lists) so the
callers can present arbitrary subgraphs/orientations cheaply.
"""

from __future__ import annotations

INF = float("inf")


def strongly_connected_components(n: int, adj) -> tuple:
    """Iterative Tarjan.  Returns (comp_of, comps) with comps in reverse
    topological order of the condensation (i.e. comp 0 has no outgoing
    condensation arcs ... actually Tarjan emits sinks first)."""
    index = [0] * n
    low = [0] * n
    state = [0] * n          # 0 unseen, 1 on stack, 2 done
    comp_of = [-1] * n
    comps = []
    counter = 1
    stack = []
    for root in range(n):
        if state[root]:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                state[v] = 1
                stack.append(v)
            recurse = False
            lst = adj[v]
            while pi < len(lst):
                w = lst[pi]
                pi += 1
                if state[w] == 0:
                    work[-1] = (v, pi)
                    work.append((w, 0))
                    recurse = True
                    break
                elif state[w] == 1:
                    if index[w] < low[v]:
                        low[v] = index[w]
            if recurse:
                continue
            work.pop()
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    state[w] = 2
                    comp_of[w] = len(comps)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
            if work:
                u, _ = work[-1]
                if low[v] < low[u]:
                    low[u] = low[v]
    return comp_of, comps


def min_value_reachable(n: int, adj, value) -> list:
    """For every vertex v, min of value[w] over w reachable from v (incl. v).

    value entries are comparable or INF.  Linear via SCC condensation:
    Tarjan emits components in reverse topological order, so one pass
    suffices.
    """
    comp_of, comps = strongly_connected_components(n, adj)
    best = [INF] * len(comps)
    for ci, comp in enumerate(comps):
        b = INF
        for v in comp:
            if value[v] < b:
                b = value[v]
            for w in adj[v]:
                cw = comp_of[w]
                if cw != ci and best[cw] < b:
                    b = best[cw]
        best[ci] = b
    return [best[comp_of[v]] for v in range(n)]


def reachable_from(n: int, adj, sources) -> list:
    """0/1 list: reachable from any source (sources included)."""
    seen = [0] * n
    stack = []
    for s in sources:
        if not seen[s]:
            seen[s] = 1
            stack.append(s)
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = 1
                stack.append(w)
    return seen


def dominator_tree(n: int, adj, root: int) -> list:
    """Immediate dominators from ``root`` (Cooper-Harvey-Kennedy).

    idom[v] = -1 for unreachable vertices and idom[root] = root.
    A vertex f dominates v iff every root->v path passes f.
    """
    order = []          # reverse postorder
    visited = [False] * n
    stack = [(root, 0)]
    visited[root] = True
    post = []
    while stack:
        v, pi = stack[-1]
        lst = adj[v]
        advanced = False
        while pi < len(lst):
            w = lst[pi]
            pi += 1
            if not visited[w]:
                visited[w] = True
                stack[-1] = (v, pi)
                stack.append((w, 0))
                advanced = True
                break
        if advanced:
            continue
        stack.pop()
        post.append(v)
    order = post[::-1]
    rpo_num = {v: i for i, v in enumerate(order)}
    preds = [[] for _ in range(n)]
    for v in order:
        for w in adj[v]:
            if visited[w]:
                preds[w].append(v)
    idom = [-1] * n
    idom[root] = root

    def intersect(a, b):
        while a != b:
            while rpo_num[a] > rpo_num[b]:
                a = idom[a]
            while rpo_num[b] > rpo_num[a]:
                b = idom[b]
        return a

    changed = True
    while changed:
        changed = False
        for v in order:
            if v == root:
                continue
            new = -1
            for p in preds[v]:
                if idom[p] != -1:
                    new = p if new == -1 else intersect(new, p)
            if new != -1 and idom[v] != new:
                idom[v] = new
                changed = True
    return idom


class DomOracle:
    """O(1) 'does f dominate v' checks for a fixed source."""

    def __init__(self, n: int, adj, root: int):
        self.idom = dominator_tree(n, adj, root)
        children = [[] for _ in range(n)]
        for v, d in enumerate(self.idom):
            if d != -1 and v != root:
                children[d].append(v)
        self.tin = [-1] * n
        self.tout = [-1] * n
        t = 0
        stack = [(root, 0)]
        self.tin[root] = t
        t += 1
        while stack:
            v, ci = stack[-1]
            if ci < len(children[v]):
                stack[-1] = (v, ci + 1)
                w = children[v][ci]
                self.tin[w] = t
                t += 1
                stack.append((w, 0))
            else:
                self.tout[v] = t
                t += 1
                stack.pop()

    def reachable(self, v: int) -> bool:
        return self.tin[v] != -1

    def dominates(self, f: int, v: int) -> bool:
        """True iff every source->v path passes f (v unreachable: False)."""
        if self.tin[v] == -1 or self.tin[f] == -1:
            return False
        return self.tin[f] <= self.tin[v] and self.tout[v] <= self.tout[f]
