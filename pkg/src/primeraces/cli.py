"""Command-line front end.

Each subcommand reproduces one family of published-table computations and
emits CSV (default), JSON, or SVG.  Artifacts are deterministic: identical
invocations with identical seeds produce identical bytes.

Exit codes: 0 success, 2 usage, 3 capacity, 4 I/O or parse, 5 numeric
non-convergence.
"""

import argparse
import io
import json
import math
import os
import sys

import numpy as np

from . import lfunctions as lf
from . import pairs, presets, races, sieve, waves
from .errors import (CapacityError, ConvergenceError, DomainError,
                     ParseError)


def _emit(args, text):
    if getattr(args, "out", None):
        path = args.out
        cache = os.environ.get("PRIME_RACES_CACHE")
        if cache and not os.path.isabs(path):
            os.makedirs(cache, exist_ok=True)
            path = os.path.join(cache, path)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _parse_limit(text):
    try:
        v = int(float(text))
    except ValueError:
        raise DomainError("bad limit %r" % text)
    return v


def _parse_checkpoints(text, limit):
    if text is None:
        return [limit]
    if text.startswith("paper:") or text in presets.TABLE_COLUMNS:
        try:
            cols = presets.checkpoints(text, limit)
        except KeyError as exc:
            raise DomainError(str(exc))
        if not cols:
            raise DomainError("preset %s has no columns <= %d" % (text, limit))
        return cols
    if text.startswith("geometric:"):
        try:
            lo, hi, n = text.split(":")[1:]
            lo, hi, n = float(lo), float(hi), int(n)
        except ValueError:
            raise DomainError("geometric spec is geometric:lo:hi:n")
        xs = sorted({int(round(v)) for v in
                     np.exp(np.linspace(math.log(lo), math.log(hi), n))})
        return [x for x in xs if x <= limit]
    try:
        return [int(float(f)) for f in text.split(",")]
    except ValueError:
        raise DomainError("bad checkpoint list %r" % text)


def _parse_teams(text, q):
    if text == "squares:nonsquares":
        s, n = races.squares_mod(q)
        return [races.TeamSpec("S", s), races.TeamSpec("N", n)]
    teams = []
    for part in text.split(":"):
        residues = [int(r) for r in part.split(",")]
        teams.append(races.TeamSpec(part, residues))
    return teams


def _parse_range(text):
    try:
        lo, hi = text.split(":")
        return float(lo), float(hi)
    except ValueError:
        raise DomainError("range spec is lo:hi")


# ---------------------------------------------------------------------------

def cmd_pi(args):
    limit = _parse_limit(args.limit)
    cks = _parse_checkpoints(args.checkpoints, limit)
    if args.modulus:
        rows = sieve.count_in_progressions(limit, args.modulus, cks,
                                           allow_long=args.allow_long,
                                           workers=args.workers)
        if args.checkpoint_file:
            sieve.checkpoint_save(rows, args.checkpoint_file)
        if args.format == "json":
            _emit(args, _json({"modulus": args.modulus, "rows": [
                {"x": rc.x, "counts": {str(a): c
                                       for a, c in sorted(rc.counts.items())}}
                for rc in rows]}))
        else:
            buf = io.StringIO()
            buf.write("# modulus=%d\n" % args.modulus)
            for rc in rows:
                cols = ",".join("%d:%d" % (a, rc.counts[a])
                                for a in sorted(rc.counts))
                buf.write("%d,%s\n" % (rc.x, cols))
            _emit(args, buf.getvalue())
        return 0
    counts = sieve.count_in_progressions(limit, 1, cks,
                                         allow_long=args.allow_long,
                                         workers=args.workers)
    rows = [(rc.x, rc.counts[0]) for rc in counts]
    if args.format == "json":
        _emit(args, _json({"rows": [{"x": x, "pi": c} for x, c in rows]}))
    else:
        _emit(args, "".join("%d,%d\n" % r for r in rows))
    return 0


def cmd_race(args):
    limit = _parse_limit(args.limit)
    teams = _parse_teams(args.teams, args.modulus)
    dense = args.dense or args.events or bool(args.density)
    if dense and not (args.events or args.density):
        raise DomainError("dense mode emits --events or --density artifacts")
    if dense:
        ledger = races.run_dense_race(limit, args.modulus, teams,
                                      allow_long=args.allow_long,
                                      workers=args.workers)
    else:
        cks = _parse_checkpoints(args.checkpoints, limit)
        counts = sieve.count_in_progressions(limit, args.modulus, cks,
                                             allow_long=args.allow_long,
                                             workers=args.workers)
        ledger = races.run_race(counts, teams)

    payload = {}
    if args.events:
        payload["events"] = races.detect_lead_changes(ledger)
    if args.density:
        kind = "logarithmic" if args.density == "log" else "natural"
        est = races.leader_density(ledger, races.strictly_ahead(0),
                                   limit, kind)
        payload["density"] = est

    if args.format == "json":
        obj = {"modulus": args.modulus, "teams": ledger.labels}
        if "events" in payload:
            obj["events"] = [{"x": e.x, "prev": e.previous_leader,
                              "next": e.new_leader}
                             for e in payload["events"]]
        if "density" in payload:
            d = payload["density"]
            obj["density"] = {"X": d.X, "kind": d.kind, "value": d.value}
        if not payload:
            obj["rows"] = [
                {"x": int(x), "counts": {lab: int(ledger.counts[i, j])
                                         for i, lab in
                                         enumerate(ledger.labels)}}
                for j, x in enumerate(ledger.xs)]
        _emit(args, _json(obj))
        return 0
    if "events" in payload:
        _emit(args, "".join("%d,%s,%s\n" % (e.x, e.previous_leader,
                                            e.new_leader)
                            for e in payload["events"]))
        return 0
    if "density" in payload:
        d = payload["density"]
        _emit(args, _json({"X": d.X, "kind": d.kind, "value": d.value}))
        return 0
    buf = io.StringIO()
    for j, x in enumerate(ledger.xs):
        cols = ",".join("%s:%d" % (lab, ledger.counts[i, j])
                        for i, lab in enumerate(ledger.labels))
        buf.write("%d,%s\n" % (x, cols))
    _emit(args, buf.getvalue())
    return 0


def cmd_zeros(args):
    lid = {"zeta": lf.ZETA, "beta4": lf.BETA4}.get(args.lfunction)
    if lid is None:
        raise DomainError("--lfunction must be zeta or beta4")
    table = lf.find_zeros(lid, args.tmax)
    if args.format == "json":
        _emit(args, _json({"lfunction": str(table.id),
                           "precision": table.precision,
                           "ordinates": [round(float(g), 9)
                                         for g in table.ordinates]}))
        return 0
    buf = io.StringIO()
    buf.write("# lfunction=%s\n" % table.id)
    for g in table.ordinates:
        buf.write("%.9f\n" % g)
    _emit(args, buf.getvalue())
    return 0


def cmd_explicit(args):
    if not os.path.exists(args.zeros):
        raise OSError("zeros file %s not found" % args.zeros)
    table = lf.parse_zero_table(args.zeros)
    lo, hi = _parse_range(args.range)
    grid = waves.log_grid(lo, hi, args.points)
    truncations = [int(t) for t in args.truncations.split(",")]

    limit = int(hi)
    primes = sieve.primes_up_to(limit, allow_long=args.allow_long,
                                workers=args.workers)
    pi_at = np.searchsorted(primes, np.floor(grid), side="right")
    if args.target == "pi-li":
        li_vals = np.array([lf.li(float(x)) for x in grid])
        truth = (li_vals - pi_at) * np.log(grid) / np.sqrt(grid)
    elif args.target == "mod4":
        res = primes % 4
        c3 = np.cumsum(res == 3)
        c1 = np.cumsum(res == 1)
        truth = (c3[pi_at - 1] - c1[pi_at - 1]) * np.log(grid) / np.sqrt(grid)
    else:
        raise DomainError("--target must be pi-li or mod4")

    truth_series = waves.WaveSeries(0, grid, truth)
    columns = [("truth", truth)]
    stats = {}
    for t in truncations:
        approx = waves.wave_series(table, grid, t)
        columns.append(("approx_%d" % t, approx.values))
        st = waves.compare_series(truth_series, approx)
        stats["approx_%d" % t] = {"rms": st.rms,
                                  "correlation": st.correlation,
                                  "sign_agreement": st.sign_agreement}
    if args.format == "svg":
        _emit(args, waves.render_series_svg(
            grid, columns, title="%s, zeros from %s"
            % (args.target, os.path.basename(args.zeros))))
    elif args.format == "json":
        _emit(args, _json({
            "target": args.target,
            "x": [round(float(x), 6) for x in grid],
            "series": {name: [round(float(v), 10) for v in vals]
                       for name, vals in columns},
            "stats": stats}))
    else:
        buf = io.StringIO()
        waves.write_series_csv(buf, grid, columns)
        _emit(args, buf.getvalue())
    stats_text = _json(stats)
    if args.stats_out:
        with open(args.stats_out, "w", encoding="utf-8") as fh:
            fh.write(stats_text)
    elif args.format != "json":
        sys.stderr.write(stats_text)
    return 0


def cmd_twins(args):
    limit = _parse_limit(args.limit)
    gaps = [int(g) for g in args.gaps.split(",")]
    if args.race:
        ledger, events = pairs.pair_race(gaps, limit, dense=True,
                                         allow_long=args.allow_long,
                                         place=args.place)
        if args.format == "json":
            _emit(args, _json({"gaps": gaps, "events": [
                {"x": e.x, "prev": e.previous_leader, "next": e.new_leader}
                for e in events]}))
        else:
            _emit(args, "".join("%d,%s,%s\n"
                                % (e.x, e.previous_leader, e.new_leader)
                                for e in events))
        return 0
    cks = _parse_checkpoints(args.checkpoints, limit)
    rows = pairs.twin_table(gaps, cks, limit, allow_long=args.allow_long)
    if args.format == "json":
        _emit(args, _json({"rows": rows}))
        return 0
    buf = io.StringIO()
    buf.write("x,gap,raw,normalized,hl_prediction,difference\n")
    for r in rows:
        buf.write("%d,%d,%d,%.6f,%.6f,%.6f\n"
                  % (r["x"], r["gap"], r["raw"], r["normalized"],
                     r["hl_prediction"], r["difference"]))
    _emit(args, buf.getvalue())
    return 0


def cmd_histogram(args):
    spec = args.samples.split(":")
    if spec[0] != "arith" or len(spec) != 4:
        raise DomainError("samples spec is arith:start:step:count")
    start, step, count = (int(v) for v in spec[1:])
    xs = [start + step * i for i in range(count)]
    limit = xs[-1]
    rows = sieve.count_in_progressions(limit, args.modulus, xs,
                                       allow_long=args.allow_long,
                                       workers=args.workers)
    a, b = args.residues
    samples = [races.shanks_ratio(rc.x, rc.counts[a], rc.counts[b])
               for rc in rows]
    lo, hi = _parse_range(args.range)
    hist = races.build_histogram(samples, args.bins, lo, hi)
    if args.format == "json":
        _emit(args, _json({"edges": [round(e, 12) for e in hist.bin_edges],
                           "counts": hist.counts.tolist(),
                           "total": hist.total,
                           "underflow": hist.underflow,
                           "overflow": hist.overflow}))
        return 0
    buf = io.StringIO()
    buf.write("# total=%d underflow=%d overflow=%d\n"
              % (hist.total, hist.underflow, hist.overflow))
    for i in range(len(hist.counts)):
        buf.write("%.6f,%.6f,%d\n" % (hist.bin_edges[i],
                                      hist.bin_edges[i + 1], hist.counts[i]))
    _emit(args, buf.getvalue())
    return 0


def cmd_walk(args):
    cfg = races.WalkConfig(args.teams, args.steps, args.trials, args.seed)
    trials = races.simulate_tie_walk(cfg)
    returned = [t for t in trials if t.returned_to_origin]
    summary = {
        "teams": args.teams, "steps": args.steps, "trials": args.trials,
        "seed": args.seed,
        "returned": len(returned),
        "return_fraction": len(returned) / len(trials),
        "mean_first_return": (sum(t.first_return_step for t in returned)
                              / len(returned)) if returned else None,
    }
    _emit(args, _json(summary))
    return 0


def cmd_psi(args):
    limit = _parse_limit(args.limit)
    xs = [x for x in presets.TABLE_COLUMNS["psi"] if x <= limit] or [limit]
    primes = sieve.primes_up_to(xs[-1], allow_long=args.allow_long,
                                workers=args.workers)
    rows = []
    for x in xs:
        v = lf.chebyshev_psi(x, primes)
        rows.append((x, round(v), round(v) - x))
    if args.format == "json":
        _emit(args, _json({"rows": [{"x": x, "psi": p, "difference": d}
                                    for x, p, d in rows]}))
    else:
        _emit(args, "".join("%d,%d,%d\n" % r for r in rows))
    return 0


def cmd_sawtooth(args):
    xs = [(i + 1) / (args.points + 1) for i in range(args.points)]
    vals = [waves.sawtooth_partial_sum(x, args.waves) for x in xs]
    target = [x - 0.5 for x in xs]
    if args.format == "svg":
        _emit(args, waves.render_series_svg(
            xs, [("partial_sum", vals), ("target", target)],
            title="sawtooth, %d waves" % args.waves, log_x=False))
        return 0
    if args.format == "json":
        _emit(args, _json({"waves": args.waves,
                           "x": [round(x, 8) for x in xs],
                           "partial_sum": [round(v, 10) for v in vals],
                           "target": [round(t, 10) for t in target]}))
        return 0
    buf = io.StringIO()
    buf.write("x,partial_sum,target\n")
    for x, v, t in zip(xs, vals, target):
        buf.write("%.8f,%.10f,%.10f\n" % (x, v, t))
    _emit(args, buf.getvalue())
    return 0


# ---------------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="primeraces",
                                description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt=("csv", "json")):
        sp.add_argument("--format", choices=fmt, default="csv")
        sp.add_argument("--out", help="output path (default stdout); "
                        "relative paths resolve under $PRIME_RACES_CACHE")
        sp.add_argument("--allow-long", action="store_true",
                        help="opt in to limits above 10^9")
        sp.add_argument("--workers", type=int,
                        default=os.cpu_count() or 1,
                        help="sieve worker threads")
        sp.add_argument("-v", "--verbose", action="store_true")

    sp = sub.add_parser("pi", help="prime counts, optionally per residue")
    sp.add_argument("--limit", required=True)
    sp.add_argument("--modulus", type=int)
    sp.add_argument("--checkpoints")
    sp.add_argument("--checkpoint-file",
                    help="also save rows as a checkpoint file")
    common(sp)
    sp.set_defaults(func=cmd_pi)

    sp = sub.add_parser("race", help="team races, lead changes, densities")
    sp.add_argument("--modulus", type=int, required=True)
    sp.add_argument("--teams", required=True,
                    help="colon-separated residue teams, e.g. 3:1, "
                    "or squares:nonsquares")
    sp.add_argument("--limit", required=True)
    sp.add_argument("--checkpoints")
    sp.add_argument("--dense", action="store_true")
    sp.add_argument("--events", action="store_true")
    sp.add_argument("--density", choices=["log", "natural"])
    common(sp)
    sp.set_defaults(func=cmd_race)

    sp = sub.add_parser("zeros", help="critical-line zero ordinates")
    sp.add_argument("--lfunction", required=True)
    sp.add_argument("--tmax", type=float, required=True)
    common(sp)
    sp.set_defaults(func=cmd_zeros)

    sp = sub.add_parser("explicit", help="wave-sum approximations vs truth")
    sp.add_argument("--zeros", required=True, help="zero-table file")
    sp.add_argument("--target", required=True, choices=["pi-li", "mod4"])
    sp.add_argument("--range", required=True, help="lo:hi in x")
    sp.add_argument("--points", type=int, default=500)
    sp.add_argument("--truncations", default="10,100")
    sp.add_argument("--stats-out", help="write error stats JSON here")
    common(sp, fmt=("csv", "json", "svg"))
    sp.set_defaults(func=cmd_explicit)

    sp = sub.add_parser("twins", help="prime-pair counts and the race")
    sp.add_argument("--limit", required=True)
    sp.add_argument("--gaps", default="2,4,6,8,10")
    sp.add_argument("--checkpoints")
    sp.add_argument("--race", action="store_true",
                    help="emit dense place-change events")
    sp.add_argument("--place", choices=["first", "last"], default="first")
    common(sp)
    sp.set_defaults(func=cmd_twins)

    sp = sub.add_parser("histogram", help="normalized race-gap histogram")
    sp.add_argument("--modulus", type=int, default=4)
    sp.add_argument("--residues", type=int, nargs=2, default=(3, 1))
    sp.add_argument("--samples", default="arith:1000:1000:1000")
    sp.add_argument("--bins", type=int, default=40)
    sp.add_argument("--range", default="-1:3")
    common(sp)
    sp.set_defaults(func=cmd_histogram)

    sp = sub.add_parser("walk", help="tie-model lattice walk")
    sp.add_argument("--teams", type=int, required=True)
    sp.add_argument("--steps", type=int, required=True)
    sp.add_argument("--trials", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    common(sp, fmt=("json",))
    sp.set_defaults(func=cmd_walk)

    sp = sub.add_parser("psi", help="prime-power log sums vs x")
    sp.add_argument("--limit", required=True)
    common(sp)
    sp.set_defaults(func=cmd_psi)

    sp = sub.add_parser("sawtooth", help="Fourier wave demo for x - 1/2")
    sp.add_argument("--waves", type=int, required=True)
    sp.add_argument("--points", type=int, default=200)
    common(sp, fmt=("csv", "json", "svg"))
    sp.set_defaults(func=cmd_sawtooth)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except CapacityError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    except (ParseError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 4
    except ConvergenceError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 5


if __name__ == "__main__":
    sys.exit(main())
