"""Command-line surface: solving graph6 corpora, theorem/conjecture
scans, family generation, trap reports, the key-inequality check, and
strategy simulation.

Report format: one record per graph as "key=value" pairs in a stable
order; --json switches to one JSON object per line.  Reports are
byte-identical across runs for identical inputs and flags (timings are
only emitted under --timing).

Exit codes: 0 success or report-only findings, 1 theorem-check
violation, 2 usage error, 3 resource exhaustion.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time

from .enumeration import connected_graph_classes
from .errors import CopwinError, Graph6Error, StateBudgetError
from .families import FAMILIES, GraphFamily, generate
from .graph6 import emit_graph6, parse_graph6
from .graphs import diameter, is_bipartite
from .solver import (
    DEFAULT_STATE_BUDGET,
    GameConfig,
    cop_number,
    cops_win,
    preceq_fixpoint_wins,
    teleport_cop_number,
)
from .strategy import build_theorem1_plan, format_trace, simulate, verify_key_inequality
from .traps import check_lemma4, count_alpha_traps, trap_report

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

SOLVER_SCAN_MAX_N = 7
TRAP_SCAN_MAX_N = 8

SOLVER_CHECKS = ("theorem1", "conj_sqrt_n", "conj_teleport", "preceq_equiv")
ALL_CHECKS = SOLVER_CHECKS + ("lemma4", "lemma5")


def _emit(out, record, as_json):
    if as_json:
        out.write(json.dumps(record) + "\n")
    else:
        out.write(" ".join("%s=%s" % (k, v) for k, v in record.items()) + "\n")


def _fmt_diameter(d):
    return "inf" if d == math.inf else d


def _iter_input_graphs(path, out, as_json):
    """Yield (ok, graph-or-record) per input line; parse failures become
    error records and the stream continues."""
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                yield True, parse_graph6(line)
            except Graph6Error as e:
                yield False, {"line": lineno, "status": "parse_error", "error": str(e)}


def _graph_source(args, out, max_n):
    if args.input:
        for ok, item in _iter_input_graphs(args.input, out, args.json):
            yield ok, item
    else:
        nmax = args.nmax
        if nmax is None:
            nmax = 6
        if nmax > max_n:
            raise SystemExit2(
                "nmax %d too large for this command (max %d)" % (nmax, max_n)
            )
        for n in range(1, nmax + 1):
            for g in connected_graph_classes(n):
                yield True, g


class SystemExit2(Exception):
    """Usage error detected past argparse."""


def cmd_solve(args, out):
    status = EXIT_OK
    for ok, item in _graph_source(args, out, SOLVER_SCAN_MAX_N):
        if not ok:
            _emit(out, item, args.json)
            continue
        g = item
        rec = {"graph": emit_graph6(g), "n": g.n}
        t0 = time.perf_counter()
        try:
            rec["c"] = cop_number(g, budget=args.budget, max_k=args.max_k,
                                  allow_disconnected=args.allow_disconnected)
            if args.variant == "teleport":
                rec["c_T"] = teleport_cop_number(
                    g, budget=args.budget,
                    allow_disconnected=args.allow_disconnected)
            rec["status"] = "ok"
        except StateBudgetError as e:
            rec["status"] = "unresolved"
            if e.lower_bound is not None:
                rec["c_lower_bound"] = e.lower_bound
        except CopwinError as e:
            rec["status"] = "error"
            rec["error"] = str(e)
        if args.timing:
            rec["time"] = "%.3f" % (time.perf_counter() - t0)
        _emit(out, rec, args.json)
    return status


def _scan_filter(check, g):
    """Graph filters per check, mirroring the theorems' hypotheses."""
    if check in ("theorem1",):
        d = diameter(g)
        return d <= 2 or (d == 3 and is_bipartite(g))
    if check in ("conj_sqrt_n", "conj_teleport"):
        return diameter(g) <= 2
    return True  # lemma4, lemma5, preceq_equiv: all connected graphs


def _scan_one(check, g, budget):
    """Return (record-fields, verdict) for one graph.  verdict is one of
    pass, fail, candidate (conjecture counterexample), unresolved."""
    n = g.n
    rec = {
        "graph": emit_graph6(g),
        "n": n,
        "diameter": _fmt_diameter(diameter(g)),
        "bipartite": str(is_bipartite(g)).lower(),
    }
    if check == "theorem1":
        bound = math.isqrt(2 * n)
        c = cop_number(g, budget=budget)
        rec.update({"c": c, "bound": bound})
        return rec, "pass" if c <= bound else "fail"
    if check == "lemma4":
        bound = math.isqrt(n)
        rec["bound"] = bound
        return rec, "pass" if check_lemma4(g) else "fail"
    if check == "lemma5":
        lo = math.isqrt(n)
        if lo * lo < n:
            lo += 1
        worst = None
        okay = True
        for alpha in range(lo, n + 1):
            count = count_alpha_traps(g, alpha)
            # exact check of count > alpha - sqrt(n - alpha) - 1
            rhs = alpha - 1 - count
            holds = rhs < 0 or n - alpha > rhs * rhs
            okay = okay and holds
            margin = count - (alpha - 1)  # integer part of the slack
            if worst is None or margin < worst:
                worst = margin
        rec["min_margin"] = worst if worst is not None else ""
        return rec, "pass" if okay else "fail"
    if check == "conj_sqrt_n":
        bound = math.isqrt(n)
        c = cop_number(g, budget=budget)
        rec.update({"c": c, "bound": bound})
        return rec, "report" if c <= bound else "candidate"
    if check == "conj_teleport":
        c = cop_number(g, budget=budget)
        ct = teleport_cop_number(g, budget=budget)
        bound = math.isqrt(n)
        rec.update({"c": c, "c_T": ct, "bound": bound})
        if ct > bound or ct > c:
            return rec, "fail"  # asserted halves: c_T <= floor(sqrt n), c_T <= c
        return rec, "report" if c == ct else "candidate"
    if check == "preceq_equiv":
        for k in (1, 2):
            fix = preceq_fixpoint_wins(g, k, budget=budget)
            game = cops_win(
                g, GameConfig(k=k, robber_may_pass=False), budget=budget
            ).cops_win
            if fix != game:
                rec["k"] = k
                return rec, "fail"
        return rec, "pass"
    raise SystemExit2("unknown check %r" % check)


def cmd_scan(args, out):
    check = args.check
    max_n = TRAP_SCAN_MAX_N if check in ("lemma4", "lemma5") else SOLVER_SCAN_MAX_N
    header = {"check": check, "seed": args.seed}
    if args.nmax is not None:
        header["nmax"] = args.nmax
    if args.input:
        header["input"] = args.input
    if not args.json:
        out.write("# " + " ".join("%s=%s" % kv for kv in header.items()) + "\n")
    checked = violations = candidates = unresolved = 0
    for ok, item in _graph_source(args, out, max_n):
        if not ok:
            _emit(out, item, args.json)
            continue
        g = item
        if not _scan_filter(check, g):
            continue
        checked += 1
        try:
            rec, verdict = _scan_one(check, g, args.budget)
        except StateBudgetError as e:
            rec = {"graph": emit_graph6(g), "n": g.n}
            verdict = "unresolved"
        rec["verdict"] = verdict
        if verdict == "fail":
            violations += 1
        elif verdict == "candidate":
            candidates += 1
        elif verdict == "unresolved":
            unresolved += 1
        if args.all or verdict not in ("pass", "report"):
            _emit(out, rec, args.json)
    summary = {
        "summary": check,
        "checked": checked,
        "violations": violations,
        "candidates": candidates,
        "unresolved": unresolved,
    }
    if args.json:
        _emit(out, summary, True)
    else:
        out.write(
            "# summary check=%s checked=%d violations=%d candidates=%d unresolved=%d\n"
            % (check, checked, violations, candidates, unresolved)
        )
    if violations:
        return EXIT_VIOLATION
    if unresolved:
        return EXIT_RESOURCE  # budget-capped solves are failures, not skips
    return EXIT_OK


def cmd_gen(args, out):
    fam = GraphFamily(args.family, args.param)
    g = generate(fam)
    out.write(emit_graph6(g, max_n=max(g.n, 64)) + "\n")
    return EXIT_OK


def cmd_trap(args, out):
    for ok, item in _graph_source(args, out, TRAP_SCAN_MAX_N):
        if not ok:
            _emit(out, item, args.json)
            continue
        g = item
        alpha = args.alpha if args.alpha is not None else float(math.isqrt(g.n))
        thresholds, count = trap_report(g, alpha)
        rec = {
            "graph": emit_graph6(g),
            "n": g.n,
            "alpha": alpha,
            "thresholds": ",".join(str(t) for t in thresholds),
            "alpha_traps": count,
        }
        _emit(out, rec, args.json)
    return EXIT_OK


def cmd_ineq(args, out):
    bad = verify_key_inequality(args.mmax)
    for m in bad:
        _emit(out, {"m": m, "verdict": "fail"}, args.json)
    rec = {"summary": "ineq", "mmax": args.mmax, "violations": len(bad)}
    if args.json:
        _emit(out, rec, True)
    else:
        out.write("# summary check=ineq mmax=%d violations=%d\n" % (args.mmax, len(bad)))
    return EXIT_VIOLATION if bad else EXIT_OK


def cmd_simulate(args, out):
    status = EXIT_OK
    for ok, item in _graph_source(args, out, SOLVER_SCAN_MAX_N):
        if not ok:
            _emit(out, item, args.json)
            continue
        g = item
        plan = build_theorem1_plan(g)
        trace = simulate(g, plan, robber_policy=args.robber,
                         max_rounds=args.max_rounds)
        out.write("graph %s cops=%d\n" % (emit_graph6(g), plan.total_cops))
        out.write(format_trace(trace))
    return status


def build_parser():
    p = argparse.ArgumentParser(
        prog="copwin",
        description="Exact Cops-and-Robbers solving and scanning on small graphs",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, nmax_default=None):
        sp.add_argument("--input", help="graph6 file, one graph per line")
        sp.add_argument("--nmax", type=int, default=nmax_default,
                        help="built-in enumeration bound (connected graphs)")
        sp.add_argument("--budget", type=int, default=DEFAULT_STATE_BUDGET,
                        help="state budget per solve")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--json", action="store_true")
        sp.add_argument("--timing", action="store_true")
        sp.add_argument("--allow-disconnected", action="store_true")

    sp = sub.add_parser("solve", help="cop numbers for a graph6 stream")
    common(sp)
    sp.add_argument("--variant", choices=("standard", "teleport"),
                    default="standard",
                    help="teleport additionally reports c_T")
    sp.add_argument("--max-k", type=int, default=None)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("scan", help="theorem and conjecture scans")
    common(sp)
    sp.add_argument("--check", required=True, choices=ALL_CHECKS)
    sp.add_argument("--all", action="store_true",
                    help="emit passing records too, not just findings")
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("gen", help="emit a generated family graph")
    sp.add_argument("--family", required=True, choices=FAMILIES)
    sp.add_argument("--param", type=int, default=None)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("trap", help="per-vertex trap thresholds")
    common(sp)
    sp.add_argument("--alpha", type=float, default=None)
    sp.set_defaults(func=cmd_trap)

    sp = sub.add_parser("ineq", help="key floor-inequality check")
    sp.add_argument("--mmax", type=int, default=1_000_000)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_ineq)

    sp = sub.add_parser("simulate", help="run the constructive strategy")
    common(sp)
    sp.add_argument("--robber", choices=("optimal", "greedy"), default="optimal")
    sp.add_argument("--max-rounds", type=int, default=None)
    sp.set_defaults(func=cmd_simulate)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except SystemExit2 as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_USAGE
    except StateBudgetError as e:
        print("resource error: %s" % e, file=sys.stderr)
        return EXIT_RESOURCE
    except (CopwinError, OSError, ValueError) as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
