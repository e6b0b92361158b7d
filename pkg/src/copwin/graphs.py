"""Simple undirected graphs on dense integer labels, with bitmask adjacency.

Vertices are 0..n-1.  Adjacency rows are Python ints used as bitsets, so
graphs well beyond 64 vertices work without a separate representation;
the 64-vertex figure only appears as the default parser cap in graph6.
"""

from __future__ import annotations

import math
from collections import deque

from .errors import DisconnectedGraphError


class Graph:
    """Immutable simple undirected graph.

    Treat instances as read-only after construction; everything in this
    package shares Graph values freely across workers on that basis.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n, edges=()):
        if n < 1:
            raise ValueError("graph must have at least one vertex")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError("edge (%r, %r) out of range for n=%d" % (u, v, n))
            if u == v:
                raise ValueError("self-loop at vertex %d" % u)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)

    @classmethod
    def from_masks(cls, masks):
        g = cls.__new__(cls)
        g.n = len(masks)
        g.adj = tuple(masks)
        return g

    def has_edge(self, u, v):
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v):
        m = self.adj[v]
        out = []
        while m:
            low = m & -m
            out.append(low.bit_length() - 1)
            m ^= low
        return out

    def degree(self, v):
        return self.adj[v].bit_count()

    def degrees(self):
        return [m.bit_count() for m in self.adj]

    def max_degree(self):
        return max(self.degrees())

    def closed_mask(self, v):
        return self.adj[v] | (1 << v)

    def edges(self):
        out = []
        for u in range(self.n):
            m = self.adj[u] >> (u + 1) << (u + 1)
            while m:
                low = m & -m
                out.append((u, low.bit_length() - 1))
                m ^= low
        return out

    def edge_count(self):
        return sum(m.bit_count() for m in self.adj) // 2

    def __eq__(self, other):
        return (
            isinstance(other, Graph) and self.n == other.n and self.adj == other.adj
        )

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return "Graph(n=%d, edges=%r)" % (self.n, self.edges())


def bits(mask):
    """Iterate the set bit positions of an int bitmask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def reachable_mask(g, start):
    seen = 1 << start
    frontier = seen
    while frontier:
        new = 0
        for v in bits(frontier):
            new |= g.adj[v]
        frontier = new & ~seen
        seen |= new
    return seen


def is_connected(g):
    return reachable_mask(g, 0) == (1 << g.n) - 1


def bfs_distances(g, src):
    """Shortest-path distances from src; -1 for unreachable vertices."""
    dist = [-1] * g.n
    dist[src] = 0
    seen = 1 << src
    frontier = seen
    d = 0
    while frontier:
        d += 1
        new = 0
        for v in bits(frontier):
            new |= g.adj[v]
        new &= ~seen
        for v in bits(new):
            dist[v] = d
        seen |= new
        frontier = new
    return dist


def eccentricity(g, v):
    dist = bfs_distances(g, v)
    if -1 in dist:
        return math.inf
    return max(dist)


def diameter(g):
    """Max shortest-path distance over vertex pairs; math.inf if disconnected."""
    best = 0
    for v in range(g.n):
        e = eccentricity(g, v)
        if e == math.inf:
            return math.inf
        if e > best:
            best = e
    return best


def is_bipartite(g):
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return False
    return True


def girth(g):
    """Length of a shortest cycle; math.inf for forests."""
    best = math.inf
    for s in range(g.n):
        # BFS from s; a non-tree edge at depths (d1, d2) closes a cycle
        # through s of length d1 + d2 + 1.
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if dist[v] == -1:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif v != parent[u]:
                    cand = dist[u] + dist[v] + 1
                    if cand < best:
                        best = cand
    return best


def induced_subgraph(g, verts):
    """Induced subgraph on the given vertices, relabelled 0..m-1 ascending."""
    verts = sorted(set(verts))
    index = {v: i for i, v in enumerate(verts)}
    edges = [
        (index[u], index[v])
        for u in verts
        for v in g.neighbors(u)
        if u < v and v in index
    ]
    return Graph(len(verts), edges)


def delete_closed_neighborhood(g, v):
    """Induced subgraph on V minus N[v].

    The result may be the empty set of vertices; that is signalled by
    returning None rather than an (invalid) 0-vertex Graph.
    """
    if not 0 <= v < g.n:
        raise ValueError("vertex %d out of range" % v)
    keep = [u for u in range(g.n) if not (g.closed_mask(v) >> u & 1)]
    if not keep:
        return None
    return induced_subgraph(g, keep)


def is_dismantlable(g):
    """Cop-win test: repeatedly delete dominated vertices down to K_1.

    A vertex u is dominated by v when N[u] is contained in N[v].  The
    reduction order does not matter for the final verdict, so any
    dominated vertex is deleted greedily.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("is_dismantlable requires a connected graph")
    alive = list(range(g.n))
    closed = {v: g.closed_mask(v) for v in alive}
    while len(alive) > 1:
        victim = None
        for u in alive:
            cu = closed[u]
            for v in alive:
                if v != u and cu & ~closed[v] == 0:
                    victim = u
                    break
            if victim is not None:
                break
        if victim is None:
            return False
        alive.remove(victim)
        vb = 1 << victim
        for v in alive:
            closed[v] &= ~vb
    return True
