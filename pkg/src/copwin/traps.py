"""s-trap detection and exact hypergraph transversals.

A vertex v is an s-trap when floor(s) cops placed on G - {v} control
every neighbour of v (a cop controls a vertex by sitting on it or next
to it).  The per-vertex trap threshold is computed as an exact minimum
hitting set of the hypergraph whose edges are the closed neighbourhoods
of v's neighbours, with v itself excluded.

The Chvatal-McDiarmid transversal bound for k-uniform hypergraphs,
tau <= (floor(k/2)*m + n) / floor(3k/2), is exposed as a checked
inequality, never used in place of the exact solver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

TRANSVERSAL_MAX_N = 64
TRANSVERSAL_MAX_EDGES = 64


@dataclass(frozen=True)
class Hypergraph:
    """Vertex set 0..n-1 plus a list of edges (frozensets of vertices)."""

    n: int
    edges: tuple = ()

    def __post_init__(self):
        object.__setattr__(
            self, "edges", tuple(frozenset(e) for e in self.edges)
        )
        for e in self.edges:
            if not e:
                raise ValueError("hypergraph edge must be nonempty")
            if any(not 0 <= v < self.n for v in e):
                raise ValueError("edge %r out of range for n=%d" % (set(e), self.n))

    def uniformity(self):
        """Common edge size, or None if not uniform (or edgeless)."""
        sizes = {len(e) for e in self.edges}
        return sizes.pop() if len(sizes) == 1 else None

    @classmethod
    def from_text(cls, text):
        """Fixture format: first line "n m", then one edge per line as
        space-separated vertex indices."""
        lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
        n, m = map(int, lines[0].split())
        edges = [frozenset(map(int, ln.split())) for ln in lines[1 : 1 + m]]
        if len(edges) != m:
            raise ValueError("expected %d edges, found %d" % (m, len(edges)))
        return cls(n, edges)

    def to_text(self):
        rows = ["%d %d" % (self.n, len(self.edges))]
        rows += [" ".join(str(v) for v in sorted(e)) for e in self.edges]
        return "\n".join(rows) + "\n"


def _matching_lower_bound(edge_masks):
    """Greedy disjoint-edge matching: pairwise disjoint edges each need
    their own transversal vertex."""
    used = 0
    count = 0
    for e in edge_masks:
        if e & used == 0:
            used |= e
            count += 1
    return count


def _greedy_cover(edge_masks, n):
    """Greedy max-degree hitting set; upper bound and witness seed."""
    remaining = list(edge_masks)
    chosen = []
    while remaining:
        best_v, best_hits = -1, -1
        for v in range(n):
            hits = sum(1 for e in remaining if e >> v & 1)
            if hits > best_hits:
                best_v, best_hits = v, hits
        chosen.append(best_v)
        remaining = [e for e in remaining if not (e >> best_v & 1)]
    return chosen


def min_transversal(h):
    """Exact minimum hitting set: (size, witness frozenset).

    Branch and bound on the max-degree vertex of a smallest uncovered
    edge; lower bound from a greedy disjoint-edge matching, upper bound
    seeded by greedy cover.
    """
    if h.n > TRANSVERSAL_MAX_N or len(h.edges) > TRANSVERSAL_MAX_EDGES:
        raise ValueError(
            "transversal solver capped at n <= %d, m <= %d"
            % (TRANSVERSAL_MAX_N, TRANSVERSAL_MAX_EDGES)
        )
    edge_masks = []
    for e in h.edges:
        mask = 0
        for v in e:
            mask |= 1 << v
        edge_masks.append(mask)
    # dedup and drop supersets: an edge containing another is hit whenever
    # the smaller one is.
    edge_masks = sorted(set(edge_masks), key=lambda m: m.bit_count())
    kept = []
    for e in edge_masks:
        if not any(k & e == k for k in kept):
            kept.append(e)
    edge_masks = kept
    if not edge_masks:
        return 0, frozenset()

    greedy = _greedy_cover(edge_masks, h.n)
    best_size = len(greedy)
    best_set = frozenset(greedy)

    def branch(remaining, chosen):
        nonlocal best_size, best_set
        if not remaining:
            if len(chosen) < best_size:
                best_size = len(chosen)
                best_set = frozenset(chosen)
            return
        if len(chosen) + _matching_lower_bound(remaining) >= best_size:
            return
        # branch over the vertices of a smallest remaining edge, trying
        # high-degree vertices first
        pivot = min(remaining, key=lambda m: m.bit_count())
        cands = []
        m = pivot
        while m:
            low = m & -m
            v = low.bit_length() - 1
            deg = sum(1 for e in remaining if e >> v & 1)
            cands.append((-deg, v))
            m ^= low
        for _, v in sorted(cands):
            chosen.append(v)
            branch([e for e in remaining if not (e >> v & 1)], chosen)
            chosen.pop()

    branch(edge_masks, [])
    return best_size, best_set


def chvatal_bound(h):
    """Exact rational value of (floor(k/2)*m + n) / floor(3k/2) for a
    k-uniform hypergraph."""
    k = h.uniformity()
    if k is None:
        raise ValueError("chvatal_bound requires a k-uniform hypergraph")
    m = len(h.edges)
    return Fraction((k // 2) * m + h.n, (3 * k) // 2)


def trap_threshold(g, v):
    """Minimum cop count on G - {v} controlling all neighbours of v."""
    if not 0 <= v < g.n:
        raise ValueError("vertex %d out of range" % v)
    edges = []
    for u in g.neighbors(v):
        e = frozenset(w for w in range(g.n) if g.closed_mask(u) >> w & 1) - {v}
        edges.append(e)
    if not edges:
        return 0
    size, _ = min_transversal(Hypergraph(g.n, edges))
    return size


def is_s_trap(g, v, s):
    """True iff floor(s) cops suffice to control all neighbours of v."""
    return trap_threshold(g, v) <= math.floor(s)


def count_alpha_traps(g, alpha, check_range=False):
    """Number of alpha-traps.  With check_range, reject alpha outside the
    trap-count lemma's window sqrt(n) <= alpha <= n."""
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    if check_range and (alpha > g.n or alpha * alpha < g.n):
        raise ValueError(
            "alpha=%r outside [sqrt(n), n] for n=%d" % (alpha, g.n)
        )
    return sum(1 for v in range(g.n) if is_s_trap(g, v, alpha))


def trap_count_lower_bound_holds(g, alpha):
    """Exact check of count > alpha - sqrt(n - alpha) - 1 for integer
    alpha, done by comparing squares (no floating point)."""
    count = count_alpha_traps(g, alpha)
    # count > alpha - sqrt(n-alpha) - 1  <=>  sqrt(n-alpha) > alpha-1-count
    rhs = alpha - 1 - count
    if rhs < 0:
        return True
    return g.n - alpha > rhs * rhs


def check_lemma4(g):
    """True iff some vertex is a floor(sqrt(n))-trap."""
    s = math.isqrt(g.n)
    return any(trap_threshold(g, v) <= s for v in range(g.n))


def trap_report(g, alpha=None):
    """Per-vertex thresholds plus the alpha-trap count for the given
    alpha (default sqrt(n))."""
    thresholds = [trap_threshold(g, v) for v in range(g.n)]
    if alpha is None:
        alpha = math.isqrt(g.n)
    floor_alpha = math.floor(alpha)
    count = sum(1 for t in thresholds if t <= floor_alpha)
    return thresholds, count
