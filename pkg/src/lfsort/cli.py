"""``lfsort`` command line: sort, bench, verify, model, fit.

Exit status is 0 on success, 1 when ``verify`` finds a violation and 2 for
usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import statistics
import sys
import time
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor

from lfsort.baselines import platform_sort, quicksort_ref
from lfsort.core import SortConfig
from lfsort.cost_model import AverageCase, WorstCase, a_small_table, stage_points
from lfsort.generators import Distribution, generate
from lfsort.instrument import INT64_MAX, INT64_MIN, CountingComparator, run_instrumented
from lfsort.verify import run_verify

SCHEMA_VERSION = 1
ROW_FIELDS = ("algo", "k", "n", "dist", "seed", "trial", "comparisons", "moves", "max_depth", "wall_ns")
ALGOS = ("lfsort", "quicksort_ref", "platform_sort")
MASK64 = (1 << 64) - 1

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _str_list(text: str) -> list[str]:
    return [x.strip() for x in text.split(",") if x.strip()]


def _seed(text: str) -> int:
    try:
        value = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad seed {text!r}") from None
    if not 0 <= value <= MASK64:
        raise argparse.ArgumentTypeError(f"seed must fit in 64 unsigned bits, got {text}")
    return value


def _config(k: int) -> SortConfig:
    try:
        return SortConfig(k)
    except (TypeError, ValueError) as e:
        raise UsageError(str(e)) from None


# -- sort ---------------------------------------------------------------------

def read_values(path: str) -> list[int]:
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().split("\n")
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    if lines and lines[-1] == "":
        lines.pop()
    values = []
    for lineno, line in enumerate(lines, 1):
        try:
            v = int(line.strip(), 10)
        except ValueError:
            raise UsageError(f"{path}:{lineno}: not an integer: {line!r}") from None
        if not INT64_MIN <= v <= INT64_MAX:
            raise UsageError(f"{path}:{lineno}: value outside signed 64-bit range")
        values.append(v)
    return values


def cmd_sort(args) -> int:
    config = _config(args.k)
    values = read_values(args.input)
    out, _ = run_instrumented(values, config)
    text = "".join(f"{v}\n" for v in out)
    try:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as e:
        raise UsageError(f"cannot write {args.output}: {e.strerror}") from None
    return EXIT_OK


# -- bench --------------------------------------------------------------------

def bench_row(algo: str, k, n: int, dist: str, seed: int, trial: int) -> dict:
    trial_seed = (seed + trial) & MASK64
    values = generate(Distribution.parse(dist, n, trial_seed))
    row = {"algo": algo, "k": k, "n": n, "dist": dist, "seed": trial_seed, "trial": trial}
    if algo == "lfsort":
        out, metrics = run_instrumented(values, SortConfig(k))
        row.update(comparisons=metrics.comparisons, moves=metrics.moves,
                   max_depth=metrics.max_depth, wall_ns=metrics.wall_ns)
    else:
        counter = CountingComparator()
        out = list(values)
        sorter = quicksort_ref if algo == "quicksort_ref" else platform_sort
        t0 = time.perf_counter_ns()
        sorter(out, counter)
        row.update(comparisons=counter.count, moves=None, max_depth=None,
                   wall_ns=time.perf_counter_ns() - t0)
    if out != sorted(values):
        raise RuntimeError(f"{algo} produced unsorted output for n={n} dist={dist} seed={trial_seed}")
    return row


def _row_key(row):
    return (row["algo"], -1 if row["k"] is None else row["k"], row["n"], row["dist"], row["trial"])


def run_bench(ks, sizes, dists, trials, seed, algos=("lfsort",)) -> list[dict]:
    for k in ks:
        _config(k)
    if any(n < 0 for n in sizes):
        raise UsageError("sizes must be non-negative")
    if trials < 1:
        raise UsageError("trials must be at least 1")
    for d in dists:
        try:
            Distribution.parse(d, 0)
        except ValueError as e:
            raise UsageError(str(e)) from None
    for a in algos:
        if a not in ALGOS:
            raise UsageError(f"unknown algorithm {a!r}; choose from {', '.join(ALGOS)}")

    jobs = []
    for algo in algos:
        for k in (ks if algo == "lfsort" else [None]):
            for n in sizes:
                for d in dists:
                    for t in range(trials):
                        jobs.append((algo, k, n, d, seed, t))
    threads = int(os.environ.get("LFSORT_THREADS", "0") or 0) or (os.cpu_count() or 1)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(lambda job: bench_row(*job), jobs))
    else:
        rows = [bench_row(*job) for job in jobs]
    return sorted(rows, key=_row_key)


def format_report(rows, config: dict, fmt: str) -> str:
    if fmt == "json":
        doc = {"schema_version": SCHEMA_VERSION, "config": config, "rows": rows}
        return json.dumps(doc, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=ROW_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({f: "" if row[f] is None else row[f] for f in ROW_FIELDS})
    return buf.getvalue()


def _emit(text: str, path) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as e:
        raise UsageError(f"cannot write {path}: {e.strerror}") from None


def cmd_bench(args) -> int:
    rows = run_bench(args.k, args.sizes, args.dist, args.trials, args.seed, args.algo)
    config = {"k": args.k, "sizes": args.sizes, "dist": args.dist, "trials": args.trials,
              "seed": args.seed, "algo": args.algo}
    _emit(format_report(rows, config, args.format), args.out)
    return EXIT_OK


# -- verify -------------------------------------------------------------------

def cmd_verify(args) -> int:
    for k in args.k:
        _config(k)
    failures = run_verify(args.max_n, args.seed, args.k,
                          report=lambda line: print(line, file=sys.stderr))
    if failures:
        print(f"verify: {len(failures)} failure(s)", file=sys.stderr)
        return EXIT_VERIFY
    print(f"verify: ok (max-n={args.max_n}, seed={args.seed}, k={','.join(map(str, args.k))})")
    return EXIT_OK


# -- model --------------------------------------------------------------------

def _num(x) -> str:
    return "" if x is None else f"{x:.12g}"


def model_rows(k: int, max_n: int) -> list[tuple]:
    _config(k)
    w = WorstCase(k)
    try:
        a = AverageCase(k, a_small_table(k))
    except ValueError:
        a = None
    points = {n: "stage" for n in stage_points(k, max_n)}
    p = 2
    while p <= max_n:
        points.setdefault(p, "grid")
        p *= 2
    return [(n, k, w(n), a(n) if a else None, kind) for n, kind in sorted(points.items())]


def cmd_model(args) -> int:
    if args.max_n < 0:
        raise UsageError("max-n must be non-negative")
    rows = model_rows(args.k, args.max_n)
    if any(r[3] is None for r in rows):
        print(f"warning: no exact expectation table for k={args.k}; A column left empty", file=sys.stderr)
    lines = ["n,k,W,A,point\n"]
    lines += [f"{n},{k},{_num(w)},{_num(a)},{kind}\n" for n, k, w, a, kind in rows]
    _emit("".join(lines), args.out)
    return EXIT_OK


# -- fit ----------------------------------------------------------------------

def load_report(path: str) -> list[dict]:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    try:
        if text.lstrip().startswith("{"):
            rows = json.loads(text)["rows"]
        else:
            rows = list(csv.DictReader(io.StringIO(text)))
            if not rows and not text.startswith(",".join(ROW_FIELDS)):
                raise ValueError("missing header")
        parsed = []
        for row in rows:
            k = row["k"]
            parsed.append({"algo": str(row["algo"]), "k": None if k in (None, "") else int(k),
                           "n": int(row["n"]), "dist": str(row["dist"]),
                           "comparisons": int(row["comparisons"])})
    except (ValueError, KeyError, TypeError) as e:
        raise UsageError(f"{path}: malformed report ({e})") from None
    return parsed


def fit_series(rows: list[dict]) -> dict:
    """Group rows by (algo, k, dist); per-n mean comparisons, normalised ratios and slopes."""
    series = defaultdict(lambda: defaultdict(list))
    for row in rows:
        series[(row["algo"], row["k"], row["dist"])][row["n"]].append(row["comparisons"])
    result = {}
    for key, by_n in sorted(series.items(), key=lambda kv: (kv[0][0], kv[0][1] or -1, kv[0][2])):
        points = []
        for n in sorted(by_n):
            c = statistics.fmean(by_n[n])
            lg = math.log2(n) if n > 1 else 0.0
            points.append({
                "n": n,
                "comparisons": c,
                "per_nlogn": c / (n * lg) if lg else None,
                "per_nlog2n": c / (n * lg * lg) if lg else None,
            })
        usable = [p for p in points if p["n"] > 1]
        slopes = {"log": None, "log2": None}
        if len(usable) >= 2:
            ys = [p["comparisons"] / p["n"] for p in usable]
            lg = [math.log2(p["n"]) for p in usable]
            slopes["log"] = statistics.linear_regression(lg, ys).slope
            slopes["log2"] = statistics.linear_regression([x * x for x in lg], ys).slope
        result[key] = {"points": points, "slopes": slopes}
    return result


def cmd_fit(args) -> int:
    fits = fit_series(load_report(args.report))
    for (algo, k, dist), fit in fits.items():
        label = f"{algo}" + (f" k={k}" if k is not None else "") + f" dist={dist}"
        print(label)
        print(f"  {'n':>10} {'comparisons':>14} {'c/(n lg n)':>12} {'c/(n lg^2 n)':>13}")
        for p in fit["points"]:
            print(f"  {p['n']:>10} {p['comparisons']:>14.1f} {_ratio(p['per_nlogn']):>12} {_ratio(p['per_nlog2n']):>13}")
        s = fit["slopes"]
        print(f"  slope of c/n vs lg n: {_ratio(s['log'])}; vs lg^2 n: {_ratio(s['log2'])}")
    return EXIT_OK


def _ratio(x) -> str:
    return "undefined" if x is None else f"{x:.6f}"


# -- entry point --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lfsort", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sort", help="sort a file of integers, one per line")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--k", type=int, default=1)
    p.set_defaults(func=cmd_sort)

    p = sub.add_parser("bench", help="run a benchmark grid and write a report")
    p.add_argument("--k", type=_int_list, default=[1])
    p.add_argument("--sizes", type=_int_list, default=[1024])
    p.add_argument("--dist", type=_str_list, default=["random"])
    p.add_argument("--algo", type=_str_list, default=["lfsort"],
                   help=f"comma-separated subset of {', '.join(ALGOS)}")
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("verify", help="check sort invariants against oracles")
    p.add_argument("--max-n", type=int, default=64)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--k", type=_int_list, default=[1, 2, 3, 4])
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("model", help="tabulate the worst-case bound and average-case model")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--max-n", type=int, default=1 << 20)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_model)

    p = sub.add_parser("fit", help="normalised growth ratios for a bench report")
    p.add_argument("report")
    p.set_defaults(func=cmd_fit)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"lfsort {args.command}: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
