"""Deterministic generators for the graph families used throughout:
cycles, paths, complete graphs, the diameter-2 Moore graphs (C_5 via
cycle, Petersen, Hoffman-Singleton), polarity graphs ER_q, and the
point-line incidence graphs of the projective planes PG(2, q).

Finite-geometry generators accept prime q <= 13 only; prime-power
fields are deliberately out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import UnsupportedParameterError
from .graphs import Graph

MAX_PRIME = 13
FAMILIES = (
    "cycle",
    "path",
    "complete",
    "petersen",
    "hoffman_singleton",
    "polarity",
    "incidence",
)


@dataclass(frozen=True)
class GraphFamily:
    """A family tag plus its integer parameter (cycle/path/complete take a
    length n; polarity/incidence take a prime q; the named Moore graphs
    take no parameter)."""

    family: str
    parameter: int | None = None


def _is_prime(q):
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def cycle(n):
    if n < 3:
        raise UnsupportedParameterError("cycle needs n >= 3, got %d" % n)
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    if n < 1:
        raise UnsupportedParameterError("path needs n >= 1, got %d" % n)
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n):
    if n < 1:
        raise UnsupportedParameterError("complete needs n >= 1, got %d" % n)
    return Graph(n, list(combinations(range(n), 2)))


def petersen():
    """Petersen graph as the Kneser graph K(5,2): vertices are the 2-subsets
    of {0..4} in lexicographic order, adjacent iff disjoint."""
    pairs = list(combinations(range(5), 2))
    edges = [
        (i, j)
        for i, a in enumerate(pairs)
        for j, b in enumerate(pairs)
        if i < j and not set(a) & set(b)
    ]
    return Graph(10, edges)


def hoffman_singleton():
    """Hoffman-Singleton graph via five pentagons P_h and five pentagrams
    Q_h, with p(h,i) ~ q(k, h*k + i mod 5)."""

    def p(h, i):
        return 5 * h + i

    def q(k, j):
        return 25 + 5 * k + j

    edges = []
    for h in range(5):
        for i in range(5):
            edges.append((p(h, i), p(h, (i + 1) % 5)))
            edges.append((q(h, i), q(h, (i + 2) % 5)))
    for h in range(5):
        for k in range(5):
            for i in range(5):
                edges.append((p(h, i), q(k, (h * k + i) % 5)))
    return Graph(50, set(tuple(sorted(e)) for e in edges))


def _check_prime(q):
    if not _is_prime(q):
        raise UnsupportedParameterError("q=%d is not prime" % q)
    if q > MAX_PRIME:
        raise UnsupportedParameterError(
            "q=%d exceeds supported maximum %d" % (q, MAX_PRIME)
        )


def projective_points(q):
    """Normalized homogeneous coordinates of the points of PG(2, q):
    (1,a,b), then (0,1,a), then (0,0,1).  Count q^2 + q + 1."""
    pts = [(1, a, b) for a in range(q) for b in range(q)]
    pts += [(0, 1, a) for a in range(q)]
    pts.append((0, 0, 1))
    return pts


def polarity(q):
    """Erdos-Renyi polarity graph ER_q: points of PG(2, q), with x ~ y iff
    x . y = 0 (mod q) and x != y."""
    _check_prime(q)
    pts = projective_points(q)
    n = len(pts)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if sum(a * b for a, b in zip(pts[i], pts[j])) % q == 0:
                edges.append((i, j))
    return Graph(n, edges)


def incidence(q):
    """Point-line incidence graph of PG(2, q): bipartite on points
    (labels 0..N-1) and lines (labels N..2N-1), point ~ line iff the dot
    product of their coordinate vectors vanishes mod q."""
    _check_prime(q)
    pts = projective_points(q)
    n = len(pts)
    edges = []
    for i in range(n):
        for j in range(n):
            if sum(a * b for a, b in zip(pts[i], pts[j])) % q == 0:
                edges.append((i, n + j))
    return Graph(2 * n, edges)


def generate(fam):
    """Build the graph described by a GraphFamily."""
    tag = fam.family
    param = fam.parameter
    if tag not in FAMILIES:
        raise UnsupportedParameterError("unknown family %r" % tag)
    if tag in ("petersen", "hoffman_singleton"):
        if param is not None:
            raise UnsupportedParameterError("%s takes no parameter" % tag)
        return petersen() if tag == "petersen" else hoffman_singleton()
    if param is None:
        raise UnsupportedParameterError("%s requires a parameter" % tag)
    if tag == "cycle":
        return cycle(param)
    if tag == "path":
        return path(param)
    if tag == "complete":
        return complete(param)
    if tag == "polarity":
        return polarity(param)
    return incidence(param)
