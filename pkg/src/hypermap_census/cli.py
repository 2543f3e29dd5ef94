"""Command-line surface: compute tables, verify fixtures, run cross-engine checks.

Subcommands
-----------
rooted      rooted census for one genus (engines: kz = polynomial recurrence,
            seq = sequenced-hypermap recurrence, slow, dart-capped)
unrooted    sensed census for one genus
series      dart-count totals from the closed-form series (both parameter
            routes, cross-checked)
verify      recompute every row of fixture files and report mismatches
crosscheck  run the cross-engine consistency battery
cache-info  show the table cache location and contents

Exit codes: 0 success, 1 verification/consistency failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import cache
from .core import CensusError, CountTable, faces_from_key, validate_hypermap_key
from .fixtures import (FixtureFormatError, discover_fixtures, parse_table,
                       render_json, render_table)
from .orbifold import sensed_table
from .rooted import RootedCensus
from .sequenced import SequencedCensus
from .series import hg_trivariate, hg_univariate, hg_via_t

DEFAULT_MAX_GENUS = 10
DEFAULT_MAX_DARTS = 30
DEEP_MAX_GENUS = 24
DEEP_MAX_DARTS = 50
SEQ_DART_CAP = 10


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except CensusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypermap-census",
        description="Exact counts of rooted and sensed orientable hypermaps.")
    sub = parser.add_subparsers(dest="command", required=True)

    def bounds(p, darts_required=True):
        p.add_argument("--genus", type=int, required=True)
        p.add_argument("--max-darts", type=int, required=darts_required)
        p.add_argument("--deep", action="store_true",
                       help="raise the bound caps to genus %d / %d darts"
                            % (DEEP_MAX_GENUS, DEEP_MAX_DARTS))

    p = sub.add_parser("rooted", help="rooted hypermap census for one genus")
    bounds(p)
    p.add_argument("--engine", choices=("kz", "seq"), default="kz")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--seq-cap", type=int, default=SEQ_DART_CAP,
                   help="dart cap for the seq engine (default %d)" % SEQ_DART_CAP)
    p.set_defaults(func=_cmd_rooted)

    p = sub.add_parser("unrooted", help="sensed hypermap census for one genus")
    bounds(p)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--no-cache", action="store_true")
    p.set_defaults(func=_cmd_unrooted)

    p = sub.add_parser("series", help="dart-count totals from the closed-form series")
    bounds(p)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("verify", help="recompute fixture tables and compare")
    p.add_argument("--fixtures", required=True, metavar="DIR")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("crosscheck", help="cross-engine consistency battery")
    p.add_argument("--max-genus", type=int, default=2)
    p.add_argument("--max-darts", type=int, default=10)
    p.add_argument("--seq-cap", type=int, default=SEQ_DART_CAP)
    p.add_argument("--only", action="append", metavar="CHECK",
                   choices=("seq", "multiroot", "series", "orbifold"),
                   help="restrict to one or more named checks")
    p.set_defaults(func=_cmd_crosscheck)

    p = sub.add_parser("cache-info", help="show cache location and contents")
    p.set_defaults(func=_cmd_cache_info)
    return parser


def _check_bounds(args, parser) -> None:
    max_g = DEEP_MAX_GENUS if args.deep else DEFAULT_MAX_GENUS
    max_d = DEEP_MAX_DARTS if args.deep else DEFAULT_MAX_DARTS
    if args.genus < 0 or args.max_darts < 1:
        parser.error("need --genus >= 0 and --max-darts >= 1")
    if args.genus > max_g or args.max_darts > max_d:
        parser.error(
            f"bounds exceed genus {max_g} / {max_d} darts"
            + ("" if args.deep else " (use --deep to raise the caps)"))


def _rooted_table(genus: int, max_darts: int, use_cache: bool):
    if use_cache:
        cached = cache.load_cached("kz", genus, max_darts)
        if cached is not None:
            return cached
    table = RootedCensus(genus, max_darts).table(genus)
    if use_cache:
        cache.save_table(table, genus)
    return table


def _cmd_rooted(args, parser) -> int:
    _check_bounds(args, parser)
    if args.engine == "seq":
        if args.max_darts > args.seq_cap:
            parser.error(f"the seq engine is capped at {args.seq_cap} darts "
                         f"(raise with --seq-cap)")
        table = _seq_table(args.genus, args.max_darts)
    else:
        table = _rooted_table(args.genus, args.max_darts, not args.no_cache)
    _emit(table, args)
    return 0


def _seq_table(genus: int, max_darts: int):
    seq = SequencedCensus()
    table = CountTable(engine="seq", max_genus=genus, max_darts=max_darts)
    for t in range(1, max_darts + 1):
        for f in range(1, t + 2):
            for e in range(1, t + 2):
                v = faces_from_key(genus, t, f, e)  # symmetric role: v from (f, e)
                if v < 1:
                    continue
                table.add(genus, t, v, e, seq.rooted(genus, t, f, e))
    return table.freeze()


def _cmd_unrooted(args, parser) -> int:
    _check_bounds(args, parser)
    use_cache = not args.no_cache
    if use_cache:
        cached = cache.load_cached("sensed", args.genus, args.max_darts)
        if cached is not None:
            _emit(cached, args, header="H")
            return 0
    rooted = RootedCensus(args.genus, args.max_darts)
    table = sensed_table(args.genus, args.max_darts, rooted)
    if use_cache:
        cache.save_table(table, args.genus)
    _emit(table, args, header="H")
    return 0


def _emit(table, args, header: str = "h") -> None:
    if args.format == "json":
        print(render_json(table, args.genus))
    else:
        print(render_table(table, args.genus, count_header=header), end="")


def _cmd_series(args, parser) -> int:
    if args.genus < 0 or args.genus > 6:
        parser.error("closed-form series exist for genus 0..6")
    if args.max_darts < 1:
        parser.error("need --max-darts >= 1")
    h = hg_univariate(args.genus, args.max_darts)
    alt = hg_via_t(args.genus, args.max_darts)
    if h != alt:
        print("error: the two parameterizations disagree", file=sys.stderr)
        return 1
    coeffs = h.integer_coefficients()
    if args.format == "json":
        import json
        print(json.dumps([{"genus": args.genus, "darts": d, "count": str(coeffs[d])}
                          for d in range(1, args.max_darts + 1)], indent=2))
    else:
        for d in range(1, args.max_darts + 1):
            print(f"{d:4d}   {coeffs[d]}")
    return 0


def _cmd_verify(args, parser) -> int:
    try:
        fixture_list = discover_fixtures(args.fixtures)
    except OSError as exc:
        parser.error(f"cannot read fixtures directory: {exc}")
    if not fixture_list:
        parser.error(f"no fixture files (rooted-gN.txt / unrooted-gN.txt) in "
                     f"{args.fixtures}")
    failures = 0
    checked = 0
    for kind, genus, path in fixture_list:
        try:
            rows, sums = parse_table(path.read_text(), source=str(path))
        except FixtureFormatError as exc:
            print(f"parse error: {exc}", file=sys.stderr)
            return 2
        max_darts = max([r.darts for r in rows] + [s.darts for s in sums], default=0)
        if max_darts == 0:
            print(f"{path.name}: empty fixture")
            continue
        rooted = RootedCensus(genus, max_darts)
        table = rooted.table(genus) if kind == "rooted" else \
            sensed_table(genus, max_darts, rooted)
        file_failures = 0
        for r in rows:
            checked += 1
            ok = validate_hypermap_key(genus, r.darts, r.vertices, r.hyperedges, r.faces)
            got = table.count(genus, r.darts, r.vertices, r.hyperedges) if ok else None
            if not ok or got != r.count:
                file_failures += 1
                print(f"FAIL {path.name}: d={r.darts} v={r.vertices} "
                      f"e={r.hyperedges} f={r.faces}: fixture {r.count}, "
                      f"computed {got if ok else 'invalid key'}")
        for s in sums:
            checked += 1
            got = table.total(genus, s.darts)
            if got != s.total:
                file_failures += 1
                print(f"FAIL {path.name}: d={s.darts} sum: fixture {s.total}, "
                      f"computed {got}")
        failures += file_failures
        status = "OK" if file_failures == 0 else f"{file_failures} FAILED"
        print(f"{path.name}: {len(rows)} rows + {len(sums)} sums {status}")
    print(f"verify: {checked} checks, {failures} failures")
    return 1 if failures else 0


def _cmd_crosscheck(args, parser) -> int:
    if args.max_genus < 0 or args.max_darts < 1:
        parser.error("need --max-genus >= 0 and --max-darts >= 1")
    only = set(args.only or ())
    run_all = not only
    max_g, max_d = args.max_genus, args.max_darts

    seq_g, seq_d = max_g, min(max_d, args.seq_cap)
    if seq_d < max_d:
        print(f"note: seq engine capped at {seq_d} darts (requested {max_d})")
    if seq_g > 3:
        print(f"note: seq engine capped at genus 3 (requested {seq_g})")
        seq_g = 3

    rooted = RootedCensus(max(max_g, 6), max(max_d, 2))
    seq = SequencedCensus()
    failed: list[str] = []

    def report(name: str, first_bad, n: int) -> None:
        if first_bad is None:
            print(f"{name}: PASS ({n} comparisons)")
        else:
            print(f"{name}: FAIL at {first_bad}")
            failed.append(name)

    if run_all or "seq" in only:
        bad = None
        n = 0
        for g in range(seq_g + 1):
            for t in range(1, seq_d + 1):
                for f in range(1, t + 2):
                    for e in range(1, t + 2):
                        v = t + 2 * (1 - g) - e - f
                        if v < 1:
                            continue
                        n += 1
                        if seq.rooted(g, t, f, e) != rooted.count(g, t, v, e, f):
                            bad = bad or ("seq vs kz", (g, t, f, e))
        report("rooted engines agree (kz vs seq)", bad, n)

    if run_all or "multiroot" in only:
        bad = None
        n = 0
        for g in range(seq_g + 1):
            for t in range(1, min(8, seq_d) + 1):
                for f in range(1, t + 2):
                    for e in range(1, t + 2):
                        for nn in range(1, t + 1):
                            for D in ((), (1,), (2,), (3,), (1, 1), (1, 2), (2, 2)):
                                if nn + sum(D) > t:
                                    continue
                                n += 1
                                if seq.multirooted_direct(g, t, f, e, nn, D) != \
                                        seq.multirooted(g, t, f, e, nn, D):
                                    bad = bad or ("multiroot", (g, t, f, e, nn, D))
        report("multirooted relation (direct vs product)", bad, n)

    if run_all or "series" in only:
        bad = None
        n = 0
        for g in range(0, 7):
            h = hg_univariate(g, max_d)
            for d in range(1, max_d + 1):
                n += 1
                if h.coefficient(d) != rooted.total(g, d):
                    bad = bad or ("series univariate", (g, d))
        report("dart series vs rooted totals (genus 0..6)", bad, n)

        bad = None
        n = 0
        deg = min(max_d, 12)
        for g in range(0, min(max_g, 2) + 1):
            tri = hg_trivariate(g, deg)
            for v in range(1, deg + 1):
                for e in range(1, deg + 1 - v):
                    for f in range(1, deg + 1 - v - e):
                        t = v + e + f - 2 + 2 * g
                        if t > rooted.max_darts:
                            continue
                        n += 1
                        if tri.coefficient(v, e, f) != rooted.count(g, t, v, e, f):
                            bad = bad or ("series trivariate", (g, v, e, f))
        report("trivariate series vs rooted counts", bad, n)

        bad = None
        for g in range(0, 7):
            if hg_univariate(g, max_d + 2) != hg_via_t(g, max_d + 2):
                bad = bad or ("parameterization", (g,))
        report("parameterization equivalence (tau vs t)", bad, 7)

    if run_all or "orbifold" in only:
        bad = None
        n = 0
        for G in range(0, min(max_g, 6) + 1):
            sensed = sensed_table(G, max_d, rooted)  # divisibility asserted inside
            for E in range(1, max_d + 1):
                for (f, b, w), r in rooted.poly(G, E).terms():
                    n += 1
                    c = sensed.count(G, E, w, b)
                    if not (r <= E * c and c <= r):
                        bad = bad or ("burnside sandwich", (G, E, w, b, f))
            for (g, E, v, e), c in sensed.items():
                if rooted.count(g, E, v, e, faces_from_key(g, E, v, e)) < c:
                    bad = bad or ("sensed exceeds rooted", (G, E, v, e))
        report("burnside sandwich and exact divisibility", bad, n)

    if failed:
        print(f"crosscheck: {len(failed)} check(s) failed")
        return 1
    print("crosscheck: all checks passed")
    return 0


def _cmd_cache_info(args, parser) -> int:
    root = cache.cache_dir()
    override = os.environ.get("HYPERMAP_CACHE_DIR")
    print(f"cache directory: {root}" + (" (from HYPERMAP_CACHE_DIR)" if override else ""))
    entries = list(cache.cache_entries())
    if not entries:
        print("no cached tables")
        return 0
    for path, header in entries:
        print(f"  {path.name}: engine={header['engine']} genus={header['genus']} "
              f"max-darts={header['max-darts']} ({path.stat().st_size} bytes)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
