"""Command-line surface: gen, degrees, solve, closeness, verify, sweep.

Exit codes: 0 success, 1 assertion failure, 2 usage error, 3 budget
exhaustion.  Reports are JSON (sorted keys, no timestamps) or CSV with
fixed columns, so reruns with equal inputs are byte-identical.  The
environment variable HYPERMATCH_THREADS caps worker processes for the
exhaustive small-n sweep; the default is 1 (serial).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from itertools import combinations

from . import absorbing, augment, constructions, exact, extremal
from .core import (
    Hypergraph3,
    Matching,
    Partition,
    degree_profile,
    read_h3,
    threshold,
    write_h3,
)
from .links import verify_fact1

EXIT_OK = 0
EXIT_ASSERT = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _emit(payload, out: str | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("HYPERMATCH_THREADS", "1")))
    except ValueError:
        return 1


# --- gen ---------------------------------------------------------------------


def _cmd_gen(args) -> int:
    kind = args.kind
    partition = None
    if kind == "star":
        H, partition = constructions.extremal_star(args.n)
        params = {"n": args.n}
    elif kind == "hnd":
        if args.d is None:
            print("gen hnd requires --d", file=sys.stderr)
            return EXIT_USAGE
        H, partition = constructions.cut_family(args.n, args.d)
        params = {"n": args.n, "d": args.d}
    elif kind == "bde":
        if args.d is None:
            print("gen bde requires --d", file=sys.stderr)
            return EXIT_USAGE
        H, partition = constructions.blocker_family(args.n, args.d)
        params = {"n": args.n, "d": args.d}
    elif kind == "random":
        if args.p is None:
            print("gen random requires --p", file=sys.stderr)
            return EXIT_USAGE
        H = constructions.random_triples(args.n, args.p, args.seed)
        params = {"n": args.n, "p": args.p, "seed": args.seed}
    else:  # pragma: no cover - argparse restricts choices
        return EXIT_USAGE

    out = args.out or f"{kind}{args.n}.h3"
    write_h3(H, out)
    meta = {
        "schema": "hypermatch.instance/1",
        "kind": kind,
        "generator_version": 1,
        "params": params,
        "n": H.n,
        "m": H.m,
        "partition": None
        if partition is None
        else {"W": sorted(partition.W), "d": partition.d},
    }
    side = os.path.splitext(out)[0] + ".json"
    with open(side, "w") as fh:
        json.dump(meta, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(f"wrote {out} ({H.n} vertices, {H.m} edges) and {side}")
    return EXIT_OK


# --- degrees -----------------------------------------------------------------


def _cmd_degrees(args) -> int:
    H = read_h3(args.input)
    prof = degree_profile(H)
    _emit(
        {
            "schema": "hypermatch.degrees/1",
            "n": H.n,
            "m": H.m,
            "delta1": prof.delta1,
            "delta2": prof.delta2,
            "degrees": list(prof.degrees),
        },
        args.out,
    )
    return EXIT_OK


# --- solve -------------------------------------------------------------------


def _load_partition(args, H) -> Partition | None:
    side = os.path.splitext(args.input)[0] + ".json"
    if os.path.exists(side):
        with open(side) as fh:
            meta = json.load(fh)
        part = meta.get("partition")
        if part:
            return Partition(H.n, part["W"], part["d"])
    return None


def _cmd_solve(args) -> int:
    H = read_h3(args.input)
    budget = exact.SolveBudget(
        node_limit=args.budget_nodes,
        time_limit_ms=args.budget_ms,
        target=args.d,
    )
    if args.method == "exact":
        rep = exact.max_matching(H, budget)
        _emit(rep.to_json_dict(), args.out)
        return EXIT_OK if rep.optimal else EXIT_BUDGET
    if args.method == "augment":
        d = args.d if args.d is not None else H.n // 3
        cfg = augment.AugmentConfig(k_max=args.k_max, seed=args.seed)
        rep, trace = augment.solve(H, d, cfg)
        payload = rep.to_json_dict()
        payload["trace"] = trace.to_json_dict()
        if args.explain and rep.size < d:
            close = extremal.find_partition(H, min(d, H.n // 3), mode="local", alpha=args.alpha)
            payload["closeness_on_stall"] = close.to_json_dict()
        _emit(payload, args.out)
        return EXIT_OK
    if args.method == "extremal":
        if args.d is None:
            print("solve --extremal requires --d", file=sys.stderr)
            return EXIT_USAGE
        P = _load_partition(args, H)
        if P is None:
            P = Partition(
                H.n,
                extremal.find_partition(H, args.d, mode="local", alpha=args.alpha).W,
                args.d,
            )
        m, log = extremal.staged_matching(H, P, args.d, alpha=args.alpha)
        payload = {
            "schema": "hypermatch.solve/1",
            "size": 0 if m is None else m.size,
            "matching": [] if m is None else [list(e) for e in m.edges],
            "optimal": m is not None,
            "stage_log": log.to_json_dict(),
        }
        _emit(payload, args.out)
        return EXIT_OK
    if args.method == "absorbing":
        cfg = augment.AugmentConfig(k_max=args.k_max, seed=args.seed)
        rep = absorbing.perfect_via_absorbing(H, gamma=args.gamma, cfg=cfg, seed=args.seed)
        _emit(rep.to_json_dict(), args.out)
        return EXIT_OK
    return EXIT_USAGE  # pragma: no cover


# --- closeness ---------------------------------------------------------------


def _cmd_closeness(args) -> int:
    H = read_h3(args.input)
    rep = extremal.find_partition(H, args.d, mode=args.mode, alpha=args.alpha)
    _emit(rep.to_json_dict(), args.out)
    return EXIT_OK


# --- verify ------------------------------------------------------------------


def _cmd_verify(args) -> int:
    if args.suite == "fact1":
        try:
            rep = verify_fact1()
        except AssertionError as exc:
            print(f"classification violated: {exc}", file=sys.stderr)
            return EXIT_ASSERT
        _emit(rep, args.out)
        return EXIT_OK
    if args.suite == "tightness":
        return _verify_tightness(args)
    if args.suite == "thresholds":
        return _verify_thresholds(args)
    return EXIT_USAGE  # pragma: no cover


def _verify_tightness(args) -> int:
    rows = []
    ok = True
    for n in range(6, args.n_max + 1, 3):
        H, P = constructions.extremal_star(n)
        want_delta = math.comb(n - 1, 2) - math.comb(2 * n // 3, 2)
        delta = H.min_degree(1)
        rep = exact.max_matching(H)
        row = {
            "n": n,
            "delta1": delta,
            "delta1_expected": want_delta,
            "max_matching": rep.size,
            "max_matching_expected": n // 3 - 1,
            "optimal": rep.optimal,
        }
        row["ok"] = (
            delta == want_delta and rep.optimal and rep.size == n // 3 - 1
        )
        ok = ok and row["ok"]
        rows.append(row)
    _emit({"schema": "hypermatch.tightness/1", "rows": rows, "ok": ok}, args.out)
    return EXIT_OK if ok else EXIT_ASSERT


def _threshold_chunk(payload) -> tuple[int, int, int]:
    """Scan a contiguous mask range; returns (no-matching count, max delta1 without, min delta1 with)."""
    n, d, start, end = payload
    triples = list(combinations(range(n), 3))
    incident = [0] * n
    for i, tr in enumerate(triples):
        for v in tr:
            incident[v] |= 1 << i
    dsets = []
    for idxs in combinations(range(len(triples)), d):
        used: set[int] = set()
        good = True
        for i in idxs:
            if used & set(triples[i]):
                good = False
                break
            used.update(triples[i])
        if good:
            dsets.append(sum(1 << i for i in idxs))
    none_count = 0
    max_without = -1
    min_with = None
    for mask in range(start, end):
        has = any(mask & ds == ds for ds in dsets)
        if has:
            if min_with is None:
                delta = min((mask & incident[v]).bit_count() for v in range(n))
                min_with = delta
            continue
        none_count += 1
        delta = min((mask & incident[v]).bit_count() for v in range(n))
        if delta > max_without:
            max_without = delta
    return none_count, max_without, min_with if min_with is not None else -1


def _verify_thresholds(args) -> int:
    n, d = args.n, args.d
    if n > 6:
        print("the exhaustive sweep is limited to n <= 6", file=sys.stderr)
        return EXIT_USAGE
    if not 1 <= d <= n // 3:
        print("need 1 <= d <= n/3", file=sys.stderr)
        return EXIT_USAGE
    total = 1 << math.comb(n, 3)
    threads = _threads()
    chunks = []
    step = max(1, total // max(threads * 8, 1))
    at = 0
    while at < total:
        chunks.append((n, d, at, min(at + step, total)))
        at += step
    if threads > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_threshold_chunk, chunks))
    else:
        results = [_threshold_chunk(c) for c in chunks]
    none_count = sum(r[0] for r in results)
    max_without = max(r[1] for r in results)
    report = {
        "schema": "hypermatch.thresholds/1",
        "n": n,
        "d": d,
        "total_hypergraphs": total,
        "without_d_matching": none_count,
        "max_delta1_without_d_matching": max_without,
        "empirical_forcing_min_degree": max_without + 1,
        "threshold_formula": threshold(n, d),
    }
    _emit(report, args.out)
    return EXIT_OK


# --- sweep -------------------------------------------------------------------


def _cmd_sweep(args) -> int:
    try:
        pgrid = [float(x) for x in args.p_grid.split(",") if x.strip()]
    except ValueError:
        print("bad --p-grid; expected comma-separated floats", file=sys.stderr)
        return EXIT_USAGE
    lines = ["n,d,p,seed,delta1,threshold,oracle_size,augment_size,agree"]
    mix = constructions.splitmix64_stream(args.seed)
    for p in pgrid:
        for trial in range(args.trials):
            inst_seed = next(mix)
            H = constructions.random_triples(args.n, p, inst_seed)
            delta1 = H.min_degree(1) if H.n else 0
            rep = exact.max_matching(H)
            arep, _ = augment.solve(H, args.d, augment.AugmentConfig(seed=args.seed))
            # agreement = local search reached the oracle optimum (or the target capped it)
            agree = int(arep.size >= min(rep.size, args.d))
            lines.append(
                f"{args.n},{args.d},{p:g},{inst_seed},{delta1},"
                f"{threshold(args.n, args.d)},{rep.size},{arep.size},{agree}"
            )
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# --- parser ------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hypermatch",
        description="3-uniform hypergraph matching toolkit",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate an instance (.h3 plus .json sidecar)")
    gen.add_argument("kind", choices=["star", "hnd", "bde", "random"])
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--d", type=int)
    gen.add_argument("--p", type=float)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out")
    gen.set_defaults(func=_cmd_gen)

    deg = sub.add_parser("degrees", help="degree profile of an .h3 instance")
    deg.add_argument("input")
    deg.add_argument("--out")
    deg.set_defaults(func=_cmd_degrees)

    solve = sub.add_parser("solve", help="run a solver on an .h3 instance")
    meth = solve.add_mutually_exclusive_group(required=True)
    meth.add_argument("--exact", dest="method", action="store_const", const="exact")
    meth.add_argument("--augment", dest="method", action="store_const", const="augment")
    meth.add_argument("--extremal", dest="method", action="store_const", const="extremal")
    meth.add_argument("--absorbing", dest="method", action="store_const", const="absorbing")
    solve.add_argument("input")
    solve.add_argument("--d", type=int)
    solve.add_argument("--budget-nodes", type=int, default=10_000_000)
    solve.add_argument("--budget-ms", type=float)
    solve.add_argument("--k-max", type=int, default=5)
    solve.add_argument("--alpha", type=float, default=0.05)
    solve.add_argument("--gamma", type=float, default=0.8)
    solve.add_argument("--seed", type=int, default=0)
    solve.add_argument("--explain", action="store_true")
    solve.add_argument("--out")
    solve.set_defaults(func=_cmd_solve)

    close = sub.add_parser("closeness", help="deficiency-minimizing partition search")
    close.add_argument("input")
    close.add_argument("--d", type=int, required=True)
    close.add_argument("--mode", choices=["exhaustive", "local"], default="local")
    close.add_argument("--alpha", type=float, default=0.05)
    close.add_argument("--out")
    close.set_defaults(func=_cmd_closeness)

    ver = sub.add_parser("verify", help="verification suites")
    ver.add_argument("suite", choices=["fact1", "tightness", "thresholds"])
    ver.add_argument("--n", type=int, default=6)
    ver.add_argument("--d", type=int, default=2)
    ver.add_argument("--n-max", type=int, default=15)
    ver.add_argument("--out")
    ver.set_defaults(func=_cmd_verify)

    sweep = sub.add_parser("sweep", help="random-instance sweep to CSV")
    sweep.add_argument("--n", type=int, required=True)
    sweep.add_argument("--d", type=int, required=True)
    sweep.add_argument("--trials", type=int, default=10)
    sweep.add_argument("--p-grid", default="0.1,0.3,0.5,0.7,0.9")
    sweep.add_argument("--seed", type=int, default=0)
    sweep.add_argument("--out")
    sweep.set_defaults(func=_cmd_sweep)

    return ap


def main(argv=None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
