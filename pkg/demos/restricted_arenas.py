"""Restricted games: pin the robber to a sub-arena while the cops roam
the whole graph.  Shrinking the robber's world can only help the cops,
but how much it helps depends on which induced subgraph he keeps.

Run:  python3 demos/restricted_arenas.py
"""

from copwin.families import cycle, petersen
from copwin.solver import Arena, c_G_of_m, cop_number, restricted_cop_number

g = petersen()
print("Petersen graph: c(G) = %d" % cop_number(g))

# An induced 5-cycle inside the Petersen graph.  Even though one cop
# beats a robber on a bare C5's worth of territory in many graphs, here
# girth 5 means no cop vertex ever threatens two consecutive arena
# vertices at once, so a single cop cannot corner the robber.
pentagon = [0, 3, 4, 7, 9]
print("robber pinned to an induced 5-cycle: c_G(H) = %d"
      % restricted_cop_number(g, pentagon))

# Knock one edge out of the arena (robber's map, not the cops') and the
# cycle opens into a path; now a lone cop wins.
arena = Arena.from_edges(g, pentagon, [(0, 7), (7, 3), (3, 4), (4, 9)])
print("same vertices, one arena edge removed: c_G(H) = %d"
      % restricted_cop_number(g, arena))

print()
h = cycle(6)
print("6-cycle: c_G(m) = max over m-vertex arenas")
for m in range(1, 7):
    print("  m=%d: %d" % (m, c_G_of_m(h, m)))
