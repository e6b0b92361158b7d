"""Executable form of the constructive sqrt(2n) cop strategy.

The plan builder runs the parking induction: while the current arena of
order m has a vertex of degree above floor(sqrt(2m)), park a stationary
cop on a maximum-degree vertex and delete its closed neighbourhood;
when max degree drops to the threshold, allocate floor(sqrt(2m)) mobile
cops for the bounded-degree endgame.

The mobile-cop endgame is a concrete elaboration of the bounded-degree
chase: assign one cop per arena neighbour of the robber, walk each cop
into the closed neighbourhood of its target (one step suffices at
diameter 2), and capture as soon as any cop starts its turn adjacent to
the robber.  Its correctness is established by exhaustive simulation
against the exactly-optimal robber on all small diameter-2 arenas, not
assumed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graphs import (
    Graph,
    bfs_distances,
    bits,
    diameter,
    is_bipartite,
    is_connected,
)
from .solver import (
    Arena,
    GameConfig,
    GameState,
    cops_win,
    optimal_robber_move,
    optimal_robber_placement,
)

OPTIMAL_ROBBER_STATE_CAP = 200_000


@dataclass(frozen=True)
class StationaryGuard:
    """One parked cop: where it stands, at which stage of the induction
    it was placed, and the arena order/threshold/degree at that stage."""

    vertex: int
    stage: int
    arena_order: int
    threshold: int
    degree: int


@dataclass(frozen=True)
class CopPlan:
    stationary: tuple  # of StationaryGuard
    residual_arena: Arena
    mobile_cop_count: int
    total_cops: int
    budget: int  # floor(sqrt(2n))


@dataclass(frozen=True)
class StrategyTrace:
    """One simulated play-out.  rounds[i] = (round index, cop tuple after
    the cops' move, robber vertex after his reply); round 0 records the
    initial placement."""

    rounds: tuple
    outcome: str  # "captured" | "survived"
    capture_round: int | None
    max_rounds: int


def _check_plan_precondition(g):
    if not is_connected(g):
        raise ValueError("plan requires a connected graph")
    d = diameter(g)
    if d <= 2:
        return
    if d == 3 and is_bipartite(g):
        return
    raise ValueError(
        "plan requires diameter <= 2, or a bipartite graph of diameter 3 "
        "(got diameter %s)" % d
    )


def build_theorem1_plan(g):
    """Park stationary cops on high-degree vertices until the residual
    arena has bounded degree, then budget mobile cops for the chase."""
    _check_plan_precondition(g)
    alive = set(range(g.n))
    guards = []
    stage = 0
    while alive:
        m = len(alive)
        thresh = math.isqrt(2 * m)
        deg = {
            v: sum(1 for u in bits(g.adj[v]) if u in alive) for v in alive
        }
        top = max(alive, key=lambda v: (deg[v], -v))
        if deg[top] <= thresh:
            break
        guards.append(StationaryGuard(top, stage, m, thresh, deg[top]))
        alive -= {top} | set(bits(g.adj[top]))
        stage += 1
    mobile = math.isqrt(2 * len(alive)) if alive else 0
    residual = Arena.induced(g, alive) if alive else Arena((), (0,) * g.n)
    return CopPlan(
        stationary=tuple(guards),
        residual_arena=residual,
        mobile_cop_count=mobile,
        total_cops=len(guards) + mobile,
        budget=math.isqrt(2 * g.n),
    )


def _step_toward(g, dist_to_target, frm):
    """One move (or stay) minimizing BFS distance to the target, lowest
    label on ties."""
    options = [frm] + g.neighbors(frm)
    return min(options, key=lambda w: (dist_to_target[w], w))


def lemma2_move(g, arena, cop_list, robber):
    """Mobile-cop moves for one round of the bounded-degree chase.

    Returns the new vertex for each cop, in cop order.  If any cop starts
    inside N[robber], it steps onto the robber (capture); otherwise cops
    are greedily matched to the robber's arena neighbours and each walks
    toward its target.
    """
    targets = sorted(bits(arena.adj[robber])) if robber < g.n else []
    if len(targets) > len(cop_list):
        raise ValueError(
            "arena degree %d exceeds mobile cop count %d"
            % (len(targets), len(cop_list))
        )
    closed_r = g.closed_mask(robber)
    for i, c in enumerate(cop_list):
        if closed_r >> c & 1:
            out = list(cop_list)
            out[i] = robber
            return out

    dist = {t: bfs_distances(g, t) for t in set(targets) | {robber}}
    unassigned = list(targets)
    moves = []
    for c in cop_list:
        if unassigned:
            tgt = min(unassigned, key=lambda t: (dist[t][c], t))
            unassigned.remove(tgt)
        else:
            tgt = robber
        moves.append(_step_toward(g, dist[tgt], c))
    return moves


class _GreedyRobber:
    """Max distance-to-nearest-cop policy, lowest label on ties."""

    def __init__(self, g):
        self.g = g
        self.dist = [bfs_distances(g, v) for v in range(g.n)]

    def _score(self, v, cop_list):
        return min(self.dist[v][c] for c in cop_list)

    def place(self, cop_list):
        return max(range(self.g.n), key=lambda v: (self._score(v, cop_list), -v))

    def move(self, robber, cop_list):
        options = [robber] + self.g.neighbors(robber)
        return max(options, key=lambda v: (self._score(v, cop_list), -v))


class _TableRobber:
    """Exactly-optimal robber driven by full-game solve tables."""

    def __init__(self, g, k, budget):
        self.result = cops_win(g, GameConfig(k=k), budget=budget)

    def place(self, cop_list):
        return optimal_robber_placement(self.result, tuple(sorted(cop_list)))

    def move(self, robber, cop_list):
        state = GameState(tuple(sorted(cop_list)), robber, "robber")
        return optimal_robber_move(state, self.result)


def _robber_policy(g, plan, name):
    if name == "greedy":
        return _GreedyRobber(g)
    if name != "optimal":
        raise ValueError("robber_policy must be 'optimal' or 'greedy'")
    from .solver import _positions

    k = max(plan.total_cops, 1)
    est = len(_positions(g.n, k)) * g.n * 2
    if est > OPTIMAL_ROBBER_STATE_CAP:
        # state space too large to tabulate; fall back to the greedy
        # adversary, as for any large instance
        return _GreedyRobber(g)
    return _TableRobber(g, k, OPTIMAL_ROBBER_STATE_CAP)


def simulate(g, plan, robber_policy="optimal", max_rounds=None):
    """Play the plan against a robber policy; returns a StrategyTrace.

    Stationary cops hold their vertices and strike any robber entering
    their closed neighbourhood; mobile cops run the bounded-degree chase
    on the residual arena.  Traces are fully deterministic.
    """
    if max_rounds is None:
        max_rounds = 4 * g.n
    policy = _robber_policy(g, plan, robber_policy)

    guard_verts = [s.vertex for s in plan.stationary]
    start = guard_verts[0] if guard_verts else 0
    cop_list = guard_verts + [start] * plan.mobile_cop_count
    if not cop_list:
        cop_list = [0]
    nguards = len(guard_verts)

    robber = policy.place(cop_list)
    rounds = [(0, tuple(cop_list), robber)]
    if robber in cop_list:
        return StrategyTrace(tuple(rounds), "captured", 0, max_rounds)

    for rnd in range(1, max_rounds + 1):
        # cops' move
        new_cops = list(cop_list)
        captured = False
        for i in range(nguards):
            gv = cop_list[i]
            if g.closed_mask(gv) >> robber & 1:
                new_cops[i] = robber
                captured = True
                break
        if not captured:
            mobile = cop_list[nguards:]
            if mobile:
                moved = lemma2_move(g, plan.residual_arena, mobile, robber)
                new_cops[nguards:] = moved
                captured = robber in moved
        cop_list = new_cops
        if captured:
            rounds.append((rnd, tuple(cop_list), robber))
            return StrategyTrace(tuple(rounds), "captured", rnd, max_rounds)
        # robber's move
        robber = policy.move(robber, cop_list)
        rounds.append((rnd, tuple(cop_list), robber))
        if robber in cop_list:
            return StrategyTrace(tuple(rounds), "captured", rnd, max_rounds)
    return StrategyTrace(tuple(rounds), "survived", None, max_rounds)


def format_trace(trace):
    """Line-oriented trace text: one round per line, then the outcome."""
    lines = []
    for rnd, cop_tuple, robber in trace.rounds:
        lines.append(
            "%d %s %d" % (rnd, ",".join(str(c) for c in cop_tuple), robber)
        )
    if trace.outcome == "captured":
        lines.append("captured round=%d" % trace.capture_round)
    else:
        lines.append("survived rounds=%d" % trace.max_rounds)
    return "\n".join(lines) + "\n"


def verify_key_inequality(m_max):
    """Check 1 + floor(sqrt(2(m - floor(sqrt(2m)) - 2))) <= floor(sqrt(2m))
    for all 4 <= m <= m_max, in pure integer arithmetic; returns the list
    of violating m (expected empty)."""
    if m_max < 4:
        raise ValueError("m_max must be >= 4")
    bad = []
    isqrt = math.isqrt
    for m in range(4, m_max + 1):
        t = isqrt(2 * m)
        inner = m - t - 2
        if inner < 0:
            inner = 0
        if 1 + isqrt(2 * inner) > t:
            bad.append(m)
    return bad
