"""Exhaustive small-graph enumeration and cheap canonical labelling.

Two enumeration styles:

* ``enumerate_connected(n)`` -- every *labeled* simple connected graph on
  n vertices, exactly once.  2^(n(n-1)/2) candidates are generated and
  filtered, so this is for n <= 8 only (and practical up to ~7).

* ``connected_graph_classes(n)`` -- one canonically-labelled
  representative per isomorphism class, built by vertex augmentation
  with canonical-form dedup.  Scans that check isomorphism-invariant
  properties run over these.

The canonical form is a minimum adjacency code over orderings that
respect an iterated degree refinement.  Refinement only prunes the
search; it never merges non-isomorphic graphs.
"""

from __future__ import annotations

from functools import lru_cache

from .graphs import Graph, bits, is_connected

ENUMERATION_MAX_N = 8


def enumerate_connected(n, predicate=None):
    """Yield every labeled simple connected graph on n vertices once.

    ``predicate``, when given, additionally filters the yielded graphs
    (it sees the Graph, after the connectivity check).
    """
    if not 1 <= n <= ENUMERATION_MAX_N:
        raise ValueError(
            "enumerate_connected supports 1 <= n <= %d, got %d"
            % (ENUMERATION_MAX_N, n)
        )
    pairs = [(u, v) for v in range(1, n) for u in range(v)]
    nbits = len(pairs)
    full = (1 << n) - 1
    for mask in range(1 << nbits):
        adj = [0] * n
        m = mask
        while m:
            low = m & -m
            u, v = pairs[low.bit_length() - 1]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            m ^= low
        # connectivity via bitmask closure
        seen = 1
        frontier = 1
        while frontier:
            new = 0
            for v in bits(frontier):
                new |= adj[v]
            frontier = new & ~seen
            seen |= new
        if seen != full:
            continue
        g = Graph.from_masks(adj)
        if predicate is None or predicate(g):
            yield g


def _refine_colors(g):
    """Iterated neighbor-color refinement; returns a label-invariant
    coloring as a list of color indices, colors ordered by their key."""
    colors = [g.adj[v].bit_count() for v in range(g.n)]
    while True:
        keys = [
            (colors[v], tuple(sorted(colors[u] for u in g.neighbors(v))))
            for v in range(g.n)
        ]
        order = sorted(set(keys))
        index = {k: i for i, k in enumerate(order)}
        new = [index[k] for k in keys]
        if new == colors:
            return colors
        colors = new


def canonical_order(g):
    """A vertex ordering giving the minimum adjacency code among all
    orderings consistent with the degree refinement.

    The code of an ordering is the tuple of per-vertex adjacency rows
    restricted to earlier positions, compared lexicographically.
    """
    n = g.n
    colors = _refine_colors(g)
    cells = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    cell_seq = [cells[c] for c in sorted(cells)]

    adj = g.adj
    placed = [0] * n
    rows = [0] * n
    used = [False] * n
    best_code = None
    best_order = None

    def dfs(depth, cell_idx, equal_prefix):
        nonlocal best_code, best_order
        if depth == n:
            code = tuple(rows)
            if best_code is None or code < best_code:
                best_code = code
                best_order = placed[:]
            return
        cell = cell_seq[cell_idx]
        remaining = [v for v in cell if not used[v]]
        next_cell = cell_idx + (1 if len(remaining) == 1 else 0)
        for v in remaining:
            av = adj[v]
            row = 0
            for i in range(depth):
                row = (row << 1) | (av >> placed[i] & 1)
            eq = equal_prefix
            if best_code is not None and eq:
                if row > best_code[depth]:
                    continue
                eq = row == best_code[depth]
            placed[depth] = v
            rows[depth] = row
            used[v] = True
            dfs(depth + 1, next_cell, eq)
            used[v] = False

    dfs(0, 0, True)
    return best_order


def canonical_graph(g):
    """Relabel g canonically (isomorphic graphs map to equal Graphs)."""
    order = canonical_order(g)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    edges = [(pos[u], pos[v]) for u, v in g.edges()]
    return Graph(g.n, edges)


def canonical_key(g):
    cg = canonical_graph(g)
    return (cg.n, cg.adj)


@lru_cache(maxsize=None)
def graph_classes(n):
    """All isomorphism classes of simple graphs on n vertices, as
    canonically-labelled representatives (connected or not)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return (Graph(1),)
    reps = {}
    for base in graph_classes(n - 1):
        base_edges = base.edges()
        for nb_mask in range(1 << (n - 1)):
            edges = base_edges + [(u, n - 1) for u in bits(nb_mask)]
            cg = canonical_graph(Graph(n, edges))
            reps.setdefault((cg.n, cg.adj), cg)
    return tuple(sorted(reps.values(), key=lambda g: g.adj))


@lru_cache(maxsize=None)
def connected_graph_classes(n):
    """Isomorphism classes of *connected* graphs on n vertices."""
    return tuple(g for g in graph_classes(n) if is_connected(g))
