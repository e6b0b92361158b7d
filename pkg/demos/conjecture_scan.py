"""Scan every small connected diameter-2 graph for two open questions:
does c(G) <= floor(sqrt(n)) always hold, and does the teleporting cop
number always match the standard one?  Conjecture scans only report;
they never assert.

Run:  python3 demos/conjecture_scan.py
"""

import math

from copwin.enumeration import connected_graph_classes
from copwin.graphs import diameter
from copwin.solver import cop_number, teleport_cop_number

NMAX = 6

total = 0
margin_histogram = {}
teleport_gaps = []

for n in range(1, NMAX + 1):
    for g in connected_graph_classes(n):
        if diameter(g) > 2:
            continue
        total += 1
        c = cop_number(g)
        ct = teleport_cop_number(g)

        # margin of the sqrt(n) conjecture: negative would be a
        # counterexample candidate
        margin = math.isqrt(n) - c
        margin_histogram[margin] = margin_histogram.get(margin, 0) + 1

        if c != ct:
            teleport_gaps.append((g, c, ct))

print("scanned %d connected diameter-2 graphs, n <= %d" % (total, NMAX))
print()
print("margin floor(sqrt(n)) - c(G):")
for m in sorted(margin_histogram):
    print("  margin %+d: %5d graphs" % (m, margin_histogram[m]))
print()

if teleport_gaps:
    print("graphs where teleporting cops do strictly better (c_T < c):")
    for g, c, ct in teleport_gaps:
        print("  n=%d edges=%s c=%d c_T=%d" % (g.n, g.edges(), c, ct))
else:
    print("no graph separates c from c_T at this scale")
