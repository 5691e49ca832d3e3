"""Command-line front end: ``keytab <command> ...``.

Tableaux are read from ``--file``, from an inline argument (rows separated by
newlines or ``/``), or from standard input; a JSON object ``{"n": .., "rows":
[[..], ..]}`` is accepted in any of these places.  Exit status is 0 on
success, 1 when a verification finds a mismatch (details go to standard
error as JSON lines) and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Sequence

from .demazure import demazure_character, evaluate, format_character, opposite_demazure_character
from .errors import KeyTabError
from .keys import (
    configurations,
    left_key_permutation,
    minimal_chain,
    right_key_permutation,
    verify_via_lifts,
)
from .lifts import brute_force_lift, max_lift, min_lift
from .oracles.aval import aval_left_key, aval_right_key
from .oracles.jdt import ls_left_key, ls_right_key
from .oracles.mason import mason_right_key
from .oracles.willis import willis_left_key, willis_right_key
from .order import bruhat_leq
from .tableau import (
    Permutation,
    Tableau,
    coset_to_key_tableau,
    enumerate_ssyt,
    format_tableau,
    parse_tableau,
    partitions,
    random_ssyt,
    tableau_from_dict,
    tableau_to_dict,
)

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2

# sweep guards
MAX_SWEEP_CELLS = 10
MAX_SWEEP_N = 9
MAX_RANDOM_COUNT = 1_000_000
MAX_RANDOM_CELLS = 40

VERIFY_METHODS = ("ls", "aval", "mason", "willis", "lifts")


@dataclass(frozen=True)
class RunConfig:
    command: str
    json: bool = False
    n: int | None = None
    seed: int = 0
    methods: tuple[str, ...] = VERIFY_METHODS
    workers: int = 1


# ---------------------------------------------------------------- input / output


def _ints(text: str) -> list[int]:
    return [int(tok) for tok in text.replace(",", " ").split()]


def read_tableau(inline: str | None, path: str | None, n: int | None) -> Tableau:
    if path is not None:
        text = Path(path).read_text(encoding="utf-8")
    elif inline is not None and inline != "-":
        text = inline
    else:
        text = sys.stdin.read()
    text = text.strip()
    if text.startswith("{"):
        t = tableau_from_dict(json.loads(text))
        return t if n is None else t.with_n(n)
    return parse_tableau(text.replace("/", "\n"), n)


def inline_form(t: Tableau) -> str:
    return " / ".join(" ".join(map(str, r)) for r in t.rows)


def perm_json(w: Sequence[int]) -> list[int]:
    return list(w)


def emit(cfg: RunConfig, payload: dict, lines: Iterable[str]) -> None:
    if cfg.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in lines:
            print(line)


# ---------------------------------------------------------------- key commands


def cmd_left_key(cfg: RunConfig, s: Tableau, trace: bool) -> int:
    tau, tr = left_key_permutation(s)
    key = coset_to_key_tableau(tau, s.shape)
    payload = {"command": "left-key", "tableau": tableau_to_dict(s), "permutation": perm_json(tau),
               "key": tableau_to_dict(key)}
    lines = [f"tau {tau}", format_tableau(key)]
    if trace:
        payload["trace"] = tr.to_dict()
        lines += [f"line {k}: " + " ".join(str(c.value) for c in line) for k, line in enumerate(tr.lines, 1)]
    emit(cfg, payload, lines)
    return EXIT_OK


def _conf_lines(conf) -> list[str]:
    out = [f"stage {conf.stage} exposed {conf.exposed_value}"]
    for r in conf.rows:
        out.append("  " + " ".join(f"{e.value}{'*' if e.filled else ''}:{e.color}" for e in r))
    return out


def cmd_right_key(cfg: RunConfig, s: Tableau, trace: bool) -> int:
    phi, _ = right_key_permutation(s)
    key = coset_to_key_tableau(phi, s.shape)
    payload = {"command": "right-key", "tableau": tableau_to_dict(s), "permutation": perm_json(phi),
               "key": tableau_to_dict(key)}
    lines = [f"phi {phi}", format_tableau(key)]
    if trace:
        confs = configurations(s) if s.size else []
        payload["trace"] = {"stages": [c.to_dict() for c in confs]}
        for c in confs:
            lines += _conf_lines(c)
    emit(cfg, payload, lines)
    return EXIT_OK


def cmd_min_chain(cfg: RunConfig, s: Tableau) -> int:
    chain = minimal_chain(s)
    payload = {"command": "min-chain", "tableau": tableau_to_dict(s), "chain": [perm_json(w) for w in chain]}
    emit(cfg, payload, [str(w) for w in chain])
    return EXIT_OK


def cmd_lift(cfg: RunConfig, direction: str, p: int, y: list[int], w: Permutation, brute: bool) -> int:
    if brute:
        out = brute_force_lift(p, y, w, direction)
    else:
        out = (max_lift if direction == "max" else min_lift)(p, y, w)
    payload = {"command": "lift", "dir": direction, "p": p, "y": sorted(y), "w": perm_json(w),
               "lift": perm_json(out)}
    emit(cfg, payload, [str(out)])
    return EXIT_OK


def cmd_bruhat(cfg: RunConfig, v: Permutation, w: Permutation) -> int:
    ans = bruhat_leq(v, w)
    emit(cfg, {"command": "bruhat-leq", "v": perm_json(v), "w": perm_json(w), "leq": ans}, [str(ans).lower()])
    return EXIT_OK


def cmd_demazure(cfg: RunConfig, shape: list[int], n: int, tau: Permutation, opposite: bool,
                 point: list[int] | None) -> int:
    fn = opposite_demazure_character if opposite else demazure_character
    char = fn(shape, tau, n)
    terms = [{"exponents": list(e), "coeff": char[e]} for e in sorted(char, reverse=True)]
    payload = {"command": "demazure", "shape": shape, "n": n, "tau": perm_json(tau),
               "opposite": opposite, "terms": terms}
    if point is not None:
        if len(point) != n:
            raise KeyTabError(f"--eval needs {n} values, got {len(point)}")
        value = evaluate(char, point)
        payload["value"] = value
        lines = [str(value)]
    else:
        lines = format_character(char)
    emit(cfg, payload, lines)
    return EXIT_OK


def cmd_enumerate(cfg: RunConfig, shape: list[int], n: int, count_only: bool) -> int:
    tabs = list(enumerate_ssyt(shape, n))
    payload = {"command": "enumerate", "shape": shape, "n": n, "count": len(tabs)}
    if count_only:
        lines = [str(len(tabs))]
    else:
        payload["tableaux"] = [t.rows for t in tabs]
        lines = [inline_form(t) for t in tabs]
    emit(cfg, payload, lines)
    return EXIT_OK


# ---------------------------------------------------------------- verification


LEFT_ORACLES: dict[str, Callable] = {"ls": ls_left_key, "aval": aval_left_key, "willis": willis_left_key}
RIGHT_ORACLES: dict[str, Callable] = {
    "ls": ls_right_key,
    "aval": aval_right_key,
    "mason": mason_right_key,
    "willis": willis_right_key,
}


def check_tableau(s: Tableau, methods: Sequence[str]) -> list[dict]:
    """Compare the direct keys with the selected methods; return mismatches."""
    bad = []
    tau, _ = left_key_permutation(s)
    phi, _ = right_key_permutation(s)
    left = coset_to_key_tableau(tau, s.shape)
    right = coset_to_key_tableau(phi, s.shape)
    for m in methods:
        if m == "lifts":
            rep = verify_via_lifts(s)
            if not rep.ok:
                bad.append({"tableau": tableau_to_dict(s), "method": m, "report": rep.to_dict()})
            continue
        for side, ref, table in (("left", left, LEFT_ORACLES), ("right", right, RIGHT_ORACLES)):
            if m not in table:
                continue
            try:
                got = table[m](s)
            except Exception as exc:  # an oracle crash counts as a mismatch
                bad.append({"tableau": tableau_to_dict(s), "method": m, "side": side, "error": repr(exc)})
                continue
            if got != ref:
                bad.append({"tableau": tableau_to_dict(s), "method": m, "side": side,
                            "expected": [list(r) for r in ref.rows], "got": [list(r) for r in got.rows]})
    return bad


def _check_shape(task: tuple[tuple[int, ...], int, tuple[str, ...]]) -> tuple[int, list[dict]]:
    shape, n, methods = task
    count, bad = 0, []
    for s in enumerate_ssyt(shape, n):
        count += 1
        bad.extend(check_tableau(s, methods))
    return count, bad


def _check_batch(task: tuple[list[Tableau], tuple[str, ...]]) -> tuple[int, list[dict]]:
    tabs, methods = task
    bad = []
    for s in tabs:
        bad.extend(check_tableau(s, methods))
    return len(tabs), bad


def _run_pool(fn: Callable, tasks: list, workers: int) -> tuple[int, list[dict]]:
    if workers <= 1:
        results = map(fn, tasks)
        total, bad = 0, []
        for c, b in results:
            total += c
            bad.extend(b)
        return total, bad
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(fn, tasks, chunksize=1))
    total = sum(c for c, _ in results)
    bad = [b for _, bs in results for b in bs]
    return total, bad


def random_corpus(seed: int, count: int, max_cells: int, n: int) -> list[Tableau]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        m = rng.randint(1, n)
        out.append(random_ssyt(rng, rng.randint(1, max_cells), m))
    return out


def cmd_verify(cfg: RunConfig, args: argparse.Namespace) -> int:
    methods = cfg.methods
    if args.exhaustive:
        if not (1 <= args.max_cells <= MAX_SWEEP_CELLS and 1 <= args.n <= MAX_SWEEP_N):
            raise KeyTabError(f"exhaustive sweep needs max-cells <= {MAX_SWEEP_CELLS} and n <= {MAX_SWEEP_N}")
        tasks = [(lam, args.n, methods) for size in range(1, args.max_cells + 1)
                 for lam in partitions(size, max_len=args.n)]
        total, bad = _run_pool(_check_shape, tasks, cfg.workers)
        mode = "exhaustive"
    elif args.random is not None:
        if not (1 <= args.random <= MAX_RANDOM_COUNT and 1 <= args.max_cells <= MAX_RANDOM_CELLS
                and 1 <= args.n <= MAX_SWEEP_N):
            raise KeyTabError("random sweep bounds out of range")
        corpus = random_corpus(cfg.seed, args.random, args.max_cells, args.n)
        size = max(1, len(corpus) // (4 * max(cfg.workers, 1)))
        tasks = [(corpus[i:i + size], methods) for i in range(0, len(corpus), size)]
        total, bad = _run_pool(_check_batch, tasks, cfg.workers)
        mode = "random"
    else:
        s = read_tableau(args.tableau, args.file, cfg.n)
        total, bad = 1, check_tableau(s, methods)
        mode = "single"
    bad.sort(key=lambda d: json.dumps(d, sort_keys=True))
    for b in bad:
        print(json.dumps(b, sort_keys=True), file=sys.stderr)
    payload = {"command": "verify", "mode": mode, "methods": list(methods), "checked": total,
               "mismatches": len(bad)}
    emit(cfg, payload, [f"{mode}: checked {total} tableaux with {','.join(methods)}: {len(bad)} mismatches"])
    return EXIT_MISMATCH if bad else EXIT_OK


# ---------------------------------------------------------------- benchmark


BENCH_METHODS: dict[str, Callable[[Tableau, Counter], object]] = {
    "left/crossout": lambda s, ops: left_key_permutation(s, ops=ops),
    "left/ls": lambda s, ops: ls_left_key(s, ops=ops),
    "left/aval": lambda s, ops: aval_left_key(s, ops=ops),
    "left/willis": lambda s, ops: willis_left_key(s, ops=ops),
    "right/pushdown": lambda s, ops: right_key_permutation(s, ops=ops),
    "right/ls": lambda s, ops: ls_right_key(s, ops=ops),
    "right/aval": lambda s, ops: aval_right_key(s, ops=ops),
    "right/mason": lambda s, ops: mason_right_key(s, ops=ops),
    "right/willis": lambda s, ops: willis_right_key(s, ops=ops),
}


def run_bench(corpus: Sequence[Tableau]) -> dict[str, dict]:
    out = {}
    for name, fn in BENCH_METHODS.items():
        ops: Counter = Counter()
        start = time.perf_counter()
        for s in corpus:
            fn(s, ops)
        elapsed = time.perf_counter() - start
        out[name] = {"comparisons": ops["comparisons"], "cell_moves": ops["cell_moves"], "seconds": elapsed}
    return out


def cmd_bench(cfg: RunConfig, args: argparse.Namespace) -> int:
    if not (1 <= args.count <= MAX_RANDOM_COUNT and 1 <= args.max_cells <= MAX_RANDOM_CELLS
            and 1 <= args.n <= MAX_SWEEP_N):
        raise KeyTabError("bench bounds out of range")
    corpus = random_corpus(cfg.seed, args.count, args.max_cells, args.n)
    results = run_bench(corpus)
    if args.no_timing:
        for r in results.values():
            del r["seconds"]
    payload = {"command": "bench", "seed": cfg.seed, "count": args.count, "max_cells": args.max_cells,
               "n": args.n, "methods": results}
    lines = [f"{'method':<16}{'comparisons':>14}{'cell_moves':>14}" + ("" if args.no_timing else f"{'seconds':>12}")]
    for name, r in results.items():
        line = f"{name:<16}{r['comparisons']:>14}{r['cell_moves']:>14}"
        if not args.no_timing:
            line += f"{r['seconds']:>12.4f}"
        lines.append(line)
    emit(cfg, payload, lines)
    return EXIT_OK


# ---------------------------------------------------------------- argument parsing


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("tableau", nargs="?", help="inline tableau, rows separated by '/' or newlines; '-' for stdin")
    p.add_argument("-f", "--file", help="read the tableau from this file")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("-n", "--n", dest="n", type=int, default=None, help="ambient n (default: largest entry)")

    parser = argparse.ArgumentParser(prog="keytab", description="Left and right keys of semistandard tableaux.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_ in (("left-key", "left key via crossing-out lines"),
                        ("right-key", "right key via push-down configurations")):
        p = sub.add_parser(name, parents=[common], help=help_)
        _add_input(p)
        p.add_argument("--trace", action="store_true", help="include the lines / stage configurations")

    p = sub.add_parser("min-chain", parents=[common], help="minimal chain of a tableau")
    _add_input(p)

    p = sub.add_parser("lift", parents=[common], help="Deodhar minimal or maximal lift")
    p.add_argument("--dir", choices=("min", "max"), required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--y", required=True, help="the subset, e.g. 1,2,4")
    p.add_argument("--w", required=True, help="permutation in one-line notation")
    p.add_argument("--brute", action="store_true", help="use the enumeration oracle (n <= 7)")

    p = sub.add_parser("bruhat-leq", parents=[common], help="is v <= w in the Bruhat order")
    p.add_argument("v")
    p.add_argument("w")

    p = sub.add_parser("demazure", parents=[common], help="Demazure character")
    p.add_argument("--shape", required=True)
    p.add_argument("--tau", required=True)
    p.add_argument("--opposite", action="store_true", help="use left keys and the reversed inequality")
    p.add_argument("--eval", dest="point", default=None, help="evaluate at these integers")

    p = sub.add_parser("enumerate", parents=[common], help="list the SSYT of a shape")
    p.add_argument("--shape", required=True)
    p.add_argument("--count", action="store_true", help="print only the number of tableaux")

    p = sub.add_parser("verify", parents=[common], help="cross-check the keys against the reference methods")
    _add_input(p)
    p.add_argument("--methods", default="all", help="all, or a comma list of " + ",".join(VERIFY_METHODS))
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--random", type=int, default=None, metavar="COUNT")
    p.add_argument("--max-cells", type=int, default=7)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("bench", parents=[common], help="operation counts and wall time per method")
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--max-cells", type=int, default=12)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-timing", action="store_true", help="omit wall time (output is then reproducible)")
    return parser


def _methods(text: str) -> tuple[str, ...]:
    if text == "all":
        return VERIFY_METHODS
    ms = tuple(m.strip() for m in text.split(",") if m.strip())
    unknown = [m for m in ms if m not in VERIFY_METHODS]
    if unknown or not ms:
        raise KeyTabError(f"unknown methods {unknown}; choose from {','.join(VERIFY_METHODS)}")
    return ms


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(
            command=args.command,
            json=args.json,
            n=args.n,
            seed=getattr(args, "seed", 0),
            methods=_methods(args.methods) if args.command == "verify" else VERIFY_METHODS,
            workers=max(1, getattr(args, "workers", 1)),
        )
        c = args.command
        if c == "left-key":
            return cmd_left_key(cfg, read_tableau(args.tableau, args.file, cfg.n), args.trace)
        if c == "right-key":
            return cmd_right_key(cfg, read_tableau(args.tableau, args.file, cfg.n), args.trace)
        if c == "min-chain":
            return cmd_min_chain(cfg, read_tableau(args.tableau, args.file, cfg.n))
        if c == "lift":
            return cmd_lift(cfg, args.dir, args.p, _ints(args.y), Permutation.from_string(args.w), args.brute)
        if c == "bruhat-leq":
            return cmd_bruhat(cfg, Permutation.from_string(args.v), Permutation.from_string(args.w))
        if c == "demazure":
            tau = Permutation.from_string(args.tau)
            n = cfg.n if cfg.n is not None else len(tau)
            point = _ints(args.point) if args.point is not None else None
            return cmd_demazure(cfg, _ints(args.shape), n, tau, args.opposite, point)
        if c == "enumerate":
            if cfg.n is None:
                raise KeyTabError("enumerate needs -n")
            return cmd_enumerate(cfg, _ints(args.shape), cfg.n, args.count)
        if c == "verify":
            if (args.exhaustive or args.random is not None) and cfg.n is None:
                raise KeyTabError("sweeps need -n")
            return cmd_verify(cfg, args)
        if c == "bench":
            args.n = cfg.n if cfg.n is not None else 6
            return cmd_bench(cfg, args)
    except (KeyTabError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    parser.error(f"unknown command {args.command}")
    return EXIT_INPUT  # pragma: no cover


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
