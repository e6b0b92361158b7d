"""Exact decision of "do k cops win?" by backward induction.

States are (cop multiset, robber vertex, side to move).  The cop team's
move relation is the reflexive closure of the k-fold strong product of G
(each cop moves along an edge or stays); that product graph is never
materialized, positions are expanded on demand.  Winning states are
computed as the cop attractor of the capture states, with levels counted
in cop rounds (the optimal rounds-to-capture).

Two variants:

* standard -- capture when a cop occupies the robber's vertex, checked
  at placement and after each side's move.
* teleport -- each cop may jump to any vertex except the robber's
  current one; the robber loses as soon as his own round (or his
  placement) ends in the closed neighbourhood of a cop.  A config switch
  gives the open-neighbourhood reading instead.

The robber may be restricted to a sub-arena (vertex subset with its own
edge set), which is what the restricted cop numbers c_G(H) and c_G(m)
are about.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product

from .errors import CopwinError, DisconnectedGraphError, StateBudgetError
from .graphs import Graph, bits, induced_subgraph, is_connected, is_dismantlable

DEFAULT_STATE_BUDGET = 50_000_000
DISMANTLABLE_CROSS_CHECK_MAX_N = 32


@dataclass(frozen=True)
class Arena:
    """The robber's playground: a vertex subset of G with an edge set
    that must be a subset of G's edges on those vertices."""

    vertices: tuple
    adj: tuple  # bitmasks indexed by G-vertex label; zero off the arena

    @classmethod
    def induced(cls, g, verts):
        verts = tuple(sorted(set(verts)))
        vm = 0
        for v in verts:
            vm |= 1 << v
        adj = [0] * g.n
        for v in verts:
            adj[v] = g.adj[v] & vm
        return cls(verts, tuple(adj))

    @classmethod
    def from_edges(cls, g, verts, edges):
        verts = tuple(sorted(set(verts)))
        vset = set(verts)
        adj = [0] * g.n
        for u, v in edges:
            if u not in vset or v not in vset:
                raise ValueError("arena edge (%d, %d) leaves the arena" % (u, v))
            if not g.has_edge(u, v):
                raise ValueError("arena edge (%d, %d) is not an edge of G" % (u, v))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(verts, tuple(adj))

    @classmethod
    def full(cls, g):
        return cls(tuple(range(g.n)), g.adj)

    def validate_against(self, g):
        if not self.vertices:
            raise ValueError("arena must be nonempty")
        for v in self.vertices:
            if not 0 <= v < g.n:
                raise ValueError("arena vertex %d out of range" % v)
            if self.adj[v] & ~g.adj[v]:
                raise ValueError("arena has a non-edge of G at vertex %d" % v)


@dataclass(frozen=True)
class GameConfig:
    """Everything pinning down one game instance apart from the graph."""

    k: int = 1
    variant: str = "standard"  # "standard" | "teleport"
    robber_may_pass: bool = True
    cops_may_pass: bool = True  # standard variant only
    robber_arena: Arena | None = None
    teleport_open_neighborhood: bool = False

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("cop count k must be >= 1")
        if self.variant not in ("standard", "teleport"):
            raise ValueError("unknown variant %r" % self.variant)


@dataclass(frozen=True)
class GameState:
    cop_position: tuple  # nondecreasing k-tuple (multiset)
    robber: int
    turn: str  # "cops" | "robber"


class SolveResult:
    """Win labels, capture levels and extracted strategies for one solved
    instance.  Immutable once returned; safe to share."""

    def __init__(
        self,
        g,
        cfg,
        positions,
        arena_vertices,
        labels,
        levels,
        cops_win,
        best_position,
        cop_strategy,
        robber_strategy,
        rob_moves,
    ):
        self.g = g
        self.cfg = cfg
        self.positions = positions
        self.arena_vertices = arena_vertices
        self._labels = labels  # dict (pos, r, turn) -> True for cop-win
        self._levels = levels  # dict, cop-win states only
        self.cops_win = cops_win
        self.best_position = best_position
        self.cop_strategy = cop_strategy  # (pos, r) -> next pos
        self.robber_strategy = robber_strategy  # (pos, r) -> next robber vertex
        self._rob_moves = rob_moves  # r -> tuple of destinations

    def is_cop_win(self, pos, r, turn):
        return self._labels.get((tuple(pos), r, turn), False)

    def level_of(self, pos, r, turn):
        """Optimal cop rounds to capture from a cop-winning state."""
        return self._levels[(tuple(pos), r, turn)]

    def robber_moves(self, r):
        return self._rob_moves[r]

    def placement_value(self, pos):
        """Max capture level over robber placements, or None if some
        placement is robber-win."""
        worst = 0
        for r in self.arena_vertices:
            key = (tuple(pos), r, "cops")
            if not self._labels.get(key, False):
                return None
            worst = max(worst, self._levels[key])
        return worst


def _positions(n, k):
    return list(combinations_with_replacement(range(n), k))


def _occupancy(positions):
    out = []
    for t in positions:
        m = 0
        for v in t:
            m |= 1 << v
        out.append(m)
    return out


def cops_win(g, cfg, budget=DEFAULT_STATE_BUDGET, allow_disconnected=False):
    """Solve one instance exactly; returns a SolveResult.

    Placement semantics: cops pick any position first; the robber, seeing
    it, picks his best arena vertex; play then alternates cops-first.
    """
    if not allow_disconnected and not is_connected(g):
        raise DisconnectedGraphError(
            "graph is disconnected (pass allow_disconnected to solve anyway)"
        )
    n = g.n
    k = cfg.k
    arena = cfg.robber_arena if cfg.robber_arena is not None else Arena.full(g)
    arena.validate_against(g)
    averts = arena.vertices
    A = len(averts)
    ridx = {v: i for i, v in enumerate(averts)}

    positions = _positions(n, k)
    P = len(positions)
    est = P * A * 2
    if est > budget:
        raise StateBudgetError(est, budget)
    occ = _occupancy(positions)
    teleport = cfg.variant == "teleport"

    if teleport:
        pos_succ = None
        danger = []
        for pi, t in enumerate(positions):
            d = occ[pi]  # standing on a cop is capture under either reading
            for c in set(t):
                d |= g.adj[c] if cfg.teleport_open_neighborhood else g.closed_mask(c)
            danger.append(d)
    else:
        pos_index = {t: i for i, t in enumerate(positions)}
        if cfg.cops_may_pass:
            copmoves = [[v] + g.neighbors(v) for v in range(n)]
        else:
            copmoves = [g.neighbors(v) for v in range(n)]
        pos_succ = []
        for t in positions:
            succ = {
                pos_index[tuple(sorted(c))]
                for c in product(*(copmoves[v] for v in t))
            }
            pos_succ.append(sorted(succ))

    rob_moves = []
    for r in averts:
        dests = [ridx[u] for u in bits(arena.adj[r])]
        if cfg.robber_may_pass:
            dests.append(ridx[r])
        rob_moves.append(sorted(dests))

    size = P * A * 2
    labels = bytearray(size)
    level = [-1] * size
    counters = [0] * (P * A)
    queues = [deque()]

    def mark(sid, lv):
        labels[sid] = 1
        level[sid] = lv
        while len(queues) <= lv:
            queues.append(deque())
        queues[lv].append(sid)

    # terminal states
    for pi in range(P):
        om = occ[pi]
        dm = danger[pi] if teleport else om
        for ri, r in enumerate(averts):
            base = (pi * A + ri) * 2
            counters[pi * A + ri] = len(rob_moves[ri])
            if teleport:
                if dm >> r & 1:
                    mark(base, 0)
                if om >> r & 1:
                    mark(base + 1, 0)
            else:
                if om >> r & 1:
                    mark(base, 0)
                    mark(base + 1, 0)
    # a robber with no legal move is lost
    for pi in range(P):
        for ri in range(A):
            sid = (pi * A + ri) * 2 + 1
            if not labels[sid] and not rob_moves[ri]:
                mark(sid, 0)

    # attractor propagation, level by level (levels count cop rounds)
    lv = 0
    while lv < len(queues):
        q = queues[lv]
        while q:
            sid = q.popleft()
            t = sid & 1
            pr = sid >> 1
            pi, ri = divmod(pr, A)
            if t == 1:
                # cop predecessors: cops move into position pi
                if teleport:
                    if occ[pi] >> averts[ri] & 1:
                        continue  # cops may not jump onto the robber
                    preds = range(P)
                else:
                    preds = pos_succ[pi]
                for pj in preds:
                    psid = (pj * A + ri) * 2
                    if not labels[psid]:
                        mark(psid, lv + 1)
            else:
                # robber predecessors at the same cop position
                for rj in rob_moves[ri]:
                    psid = (pi * A + rj) * 2 + 1
                    if not labels[psid]:
                        c = pi * A + rj
                        counters[c] -= 1
                        if counters[c] == 0:
                            mark(psid, lv)
        lv += 1

    # overall outcome: cops pick the position whose worst robber placement
    # is still cop-win, minimizing the worst capture level
    win_positions = []
    for pi in range(P):
        if all(labels[(pi * A + ri) * 2] for ri in range(A)):
            worst = max(level[(pi * A + ri) * 2] for ri in range(A))
            win_positions.append((worst, pi))
    cops_do_win = bool(win_positions)
    best_position = positions[min(win_positions)[1]] if cops_do_win else None

    # strategy extraction (deterministic: min level, lowest index on ties)
    cop_strategy = {}
    robber_strategy = {}
    label_dict = {}
    level_dict = {}
    for pi in range(P):
        pos = positions[pi]
        for ri, r in enumerate(averts):
            base = (pi * A + ri) * 2
            for t, turn in ((0, "cops"), (1, "robber")):
                if labels[base + t]:
                    label_dict[(pos, r, turn)] = True
                    level_dict[(pos, r, turn)] = level[base + t]
                else:
                    label_dict[(pos, r, turn)] = False
            if labels[base] and level[base] > 0:
                if teleport:
                    succs = (pj for pj in range(P) if not occ[pj] >> r & 1)
                else:
                    succs = pos_succ[pi]
                best = None
                for pj in succs:
                    s1 = (pj * A + ri) * 2 + 1
                    if labels[s1] and (best is None or level[s1] < best[0]):
                        best = (level[s1], pj)
                cop_strategy[(pos, r)] = positions[best[1]]
            if not labels[base + 1]:
                for rj in rob_moves[ri]:
                    if not labels[(pi * A + rj) * 2]:
                        robber_strategy[(pos, r)] = averts[rj]
                        break

    rob_move_verts = {
        r: tuple(averts[j] for j in rob_moves[ri]) for ri, r in enumerate(averts)
    }
    return SolveResult(
        g,
        cfg,
        tuple(positions),
        averts,
        label_dict,
        level_dict,
        cops_do_win,
        best_position,
        cop_strategy,
        robber_strategy,
        rob_move_verts,
    )


def optimal_robber_move(state, result):
    """Best robber reply in a solved instance: stay in the robber-win
    region when possible, otherwise maximize the capture level."""
    if state.turn != "robber":
        raise ValueError("optimal_robber_move needs a robber-to-move state")
    pos = tuple(sorted(state.cop_position))
    r = state.robber
    key = (pos, r, "robber")
    if key not in result._labels:
        raise KeyError("state %r not in solve table" % (key,))
    safe = result.robber_strategy.get((pos, r))
    if safe is not None:
        return safe
    best = None
    for r2 in result.robber_moves(r):
        lv = result.level_of(pos, r2, "cops")
        if best is None or lv > best[0]:
            best = (lv, r2)
    if best is None:
        raise ValueError("robber has no legal move from %r" % (key,))
    return best[1]


def optimal_robber_placement(result, pos):
    """Robber's best initial vertex against cop placement pos."""
    pos = tuple(sorted(pos))
    best = None
    for r in result.arena_vertices:
        if not result.is_cop_win(pos, r, "cops"):
            return r
        lv = result.level_of(pos, r, "cops")
        if best is None or lv > best[0]:
            best = (lv, r)
    return best[1]


def cop_number(
    g,
    budget=DEFAULT_STATE_BUDGET,
    allow_disconnected=False,
    variant="standard",
    max_k=None,
):
    """Least k for which k cops win; ascending search from k=1.

    For a disconnected graph (with allow_disconnected) the value is the
    sum over components.  The k=1 verdict is cross-checked against the
    dismantlability oracle on small standard instances.
    """
    if not is_connected(g):
        if not allow_disconnected:
            raise DisconnectedGraphError(
                "cop number of a disconnected graph needs allow_disconnected"
            )
        return sum(
            cop_number(c, budget=budget, variant=variant, max_k=max_k)
            for c in _components(g)
        )
    top = max_k if max_k is not None else g.n
    for k in range(1, top + 1):
        cfg = GameConfig(k=k, variant=variant)
        try:
            res = cops_win(g, cfg, budget=budget)
        except StateBudgetError as e:
            raise StateBudgetError(e.estimated, e.budget, lower_bound=k) from None
        if (
            k == 1
            and variant == "standard"
            and g.n <= DISMANTLABLE_CROSS_CHECK_MAX_N
        ):
            if res.cops_win != is_dismantlable(g):
                raise CopwinError(
                    "solver/dismantlability mismatch on %d-vertex graph" % g.n
                )
        if res.cops_win:
            return k
    raise CopwinError("no winning cop count found up to k=%d" % top)


def _components(g):
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        mask = 1 << v
        frontier = mask
        while frontier:
            new = 0
            for u in bits(frontier):
                new |= g.adj[u]
            frontier = new & ~mask
            mask |= new
        seen |= mask
        comps.append(induced_subgraph(g, list(bits(mask))))
    return comps


def restricted_cop_number(g, arena, budget=DEFAULT_STATE_BUDGET):
    """c_G(H): cops needed against a robber confined to the arena."""
    if not isinstance(arena, Arena):
        arena = Arena.induced(g, arena)
    arena.validate_against(g)
    for k in range(1, g.n + 1):
        cfg = GameConfig(k=k, robber_arena=arena)
        if cops_win(g, cfg, budget=budget).cops_win:
            return k
    raise CopwinError("no winning cop count found")


C_G_OF_M_MAX_N = 8


def c_G_of_m(g, m, budget=DEFAULT_STATE_BUDGET):
    """c_G(m) = max of c_G(H) over induced sub-arenas on m vertices.

    Induced arenas suffice: removing robber edges only constrains the
    robber, so the maximum is attained at the edge-maximal (induced)
    sub-arena.
    """
    if g.n > C_G_OF_M_MAX_N:
        raise ValueError(
            "c_G_of_m capped at n <= %d (C(n,m) solves)" % C_G_OF_M_MAX_N
        )
    if not 1 <= m <= g.n:
        raise ValueError("m must be in 1..n")
    best = 0
    for verts in combinations(range(g.n), m):
        best = max(best, restricted_cop_number(g, verts, budget=budget))
    return best


def teleport_cop_number(g, budget=DEFAULT_STATE_BUDGET, allow_disconnected=False):
    """c_T(G): least number of teleporting cops that win."""
    return cop_number(
        g, budget=budget, allow_disconnected=allow_disconnected, variant="teleport"
    )


def _preceq_chain(g, k, budget=DEFAULT_STATE_BUDGET):
    """Relation chain rel[0], rel[1], ... as per-position bitmasks over
    robber vertices, computed until stabilization.  The robber does not
    pass; cop moves use the reflexive closure of the strong product."""
    n = g.n
    positions = _positions(n, k)
    P = len(positions)
    if P * n > budget:
        raise StateBudgetError(P * n, budget)
    pos_index = {t: i for i, t in enumerate(positions)}
    copmoves = [[v] + g.neighbors(v) for v in range(n)]
    pos_succ = []
    for t in positions:
        succ = {
            pos_index[tuple(sorted(c))] for c in product(*(copmoves[v] for v in t))
        }
        pos_succ.append(sorted(succ))
    occ = _occupancy(positions)

    chain = [list(occ)]
    cum = list(occ)
    while True:
        cover = []
        for p in range(P):
            u = 0
            for q in pos_succ[p]:
                u |= cum[q]
            cover.append(u)
        new = []
        for p in range(P):
            m = 0
            for x in range(n):
                if g.adj[x] & ~cover[p] == 0:
                    m |= 1 << x
            new.append(m)
        if new == chain[-1]:
            return positions, chain
        chain.append(new)
        cum = [a | b for a, b in zip(cum, new)]


def preceq(g, k, i, budget=DEFAULT_STATE_BUDGET):
    """The relation between robber vertices and cop positions at level i
    (the stabilized relation if i exceeds the fixpoint index)."""
    positions, chain = _preceq_chain(g, k, budget=budget)
    rel = chain[min(i, len(chain) - 1)]
    return {
        (x, positions[p])
        for p in range(len(positions))
        for x in bits(rel[p])
    }


def preceq_fixpoint_wins(g, k, budget=DEFAULT_STATE_BUDGET):
    """True iff some position relates to every robber vertex in the
    stabilized relation; equals cops_win with a no-pass robber."""
    positions, chain = _preceq_chain(g, k, budget=budget)
    full = (1 << g.n) - 1
    return any(m == full for m in chain[-1])
