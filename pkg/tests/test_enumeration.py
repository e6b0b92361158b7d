import random

import pytest
from hypothesis import given, settings, strategies as st

from copwin.enumeration import (
    canonical_graph,
    canonical_key,
    connected_graph_classes,
    enumerate_connected,
    graph_classes,
)
from copwin.graphs import Graph, is_connected


# labeled connected graph counts; n=3 by hand (path x3 + triangle), n=4 by
# complement counting
LABELED_CONNECTED = {1: 1, 2: 1, 3: 4, 4: 38, 5: 728}

# isomorphism classes of graphs / connected graphs on n vertices
CLASS_COUNTS = {
    1: (1, 1),
    2: (2, 1),
    3: (4, 2),
    4: (11, 6),
    5: (34, 21),
    6: (156, 112),
    7: (1044, 853),
}


class TestLabeledEnumeration:
    @pytest.mark.parametrize("n,count", sorted(LABELED_CONNECTED.items()))
    def test_counts(self, n, count):
        assert sum(1 for _ in enumerate_connected(n)) == count

    def test_only_connected(self):
        assert all(is_connected(g) for g in enumerate_connected(4))

    def test_no_duplicates(self):
        seen = set(g.adj for g in enumerate_connected(4))
        assert len(seen) == 38

    def test_predicate_filter(self):
        bulls = sum(1 for _ in enumerate_connected(4, lambda g: g.edge_count() == 3))
        # labeled trees on 4 vertices: Cayley 4^2
        assert bulls == 16

    def test_range_check(self):
        with pytest.raises(ValueError):
            list(enumerate_connected(9))
        with pytest.raises(ValueError):
            list(enumerate_connected(0))


def relabel(g, perm):
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


class TestCanonical:
    @given(st.integers(1, 7), st.integers(0, 1 << 21), st.randoms())
    @settings(max_examples=150, deadline=None)
    def test_invariant_under_relabeling(self, n, mask, rnd):
        pairs = [(u, v) for v in range(1, n) for u in range(v)]
        g = Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        perm = list(range(n))
        rnd.shuffle(perm)
        assert canonical_key(g) == canonical_key(relabel(g, perm))

    def test_distinguishes_nonisomorphic(self):
        g1 = Graph(4, [(0, 1), (1, 2), (2, 3)])  # path
        g2 = Graph(4, [(0, 1), (0, 2), (0, 3)])  # star
        assert canonical_key(g1) != canonical_key(g2)

    def test_idempotent(self):
        g = Graph(5, [(0, 2), (2, 4), (4, 1), (1, 3)])
        cg = canonical_graph(g)
        assert canonical_graph(cg).adj == cg.adj


class TestClasses:
    @pytest.mark.parametrize("n,counts", sorted(CLASS_COUNTS.items()))
    def test_class_counts(self, n, counts):
        assert len(graph_classes(n)) == counts[0]
        assert len(connected_graph_classes(n)) == counts[1]

    def test_classes_are_canonical(self):
        for g in graph_classes(5):
            assert canonical_graph(g).adj == g.adj

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_classes_cover_labeled_enumeration(self, n):
        # dedup must not drop any isomorphism class
        labeled_keys = {canonical_key(g) for g in enumerate_connected(n)}
        class_keys = {canonical_key(g) for g in connected_graph_classes(n)}
        assert labeled_keys == class_keys
