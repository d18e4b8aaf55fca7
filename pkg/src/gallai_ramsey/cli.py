"""``gr`` command line.  JSON goes to stdout, logs to stderr.

Exit codes: 0 success, 2 usage or input error, 3 failed ``--expect``.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass

from . import graph as gmod
from .constructions import gallai_lower_bound, odd_cycle_two_color_extremal, random_gallai
from .detect import is_bad
from .gallai import PartitionNotFound, RainbowTriangleError, find_gallai_partition
from .search import DEFAULT_TIME_LIMIT, search_bad_gallai, search_bad_two_coloring, threshold_scan

log = logging.getLogger("gr")

EXIT_OK, EXIT_USAGE, EXIT_EXPECT = 0, 2, 3


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    input: str | None = None
    output: str | None = None
    cycle: int | None = None
    colors: int | None = None
    n: int | None = None
    seed: int | None = None
    time_limit: float = DEFAULT_TIME_LIMIT
    workers: int = 1
    expect: str | None = None

    def __post_init__(self):
        for name in ("cycle", "colors", "n", "time_limit", "workers"):
            val = getattr(self, name)
            if val is not None and val <= 0:
                raise UsageError(f"--{name.replace('_', '-')} must be positive")
        if self.expect not in (None, "bad", "not-bad"):
            raise UsageError("--expect must be 'bad' or 'not-bad'")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(text):
    val = int(text)
    if val <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return val


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gr", description="Gallai colorings, monochromatic odd cycles, small Ramsey searches.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="generate a coloring in gcol format")
    gsub = gen.add_subparsers(dest="generator", required=True, parser_class=_Parser)
    c = gsub.add_parser("construct", help="iterated doubling on m*2^k vertices")
    c.add_argument("--m", type=_positive, required=True)
    c.add_argument("--colors", type=_positive, required=True)
    c.add_argument("-o", "--output")
    t = gsub.add_parser("two-color", help="two-color extremal coloring of K_{4m}")
    t.add_argument("--m", type=_positive, required=True)
    t.add_argument("-o", "--output")
    r = gsub.add_parser("random", help="random Gallai coloring")
    r.add_argument("--n", type=_positive, required=True)
    r.add_argument("--colors", type=_positive, required=True)
    r.add_argument("--seed", type=int, required=True)
    r.add_argument("-o", "--output")

    ck = sub.add_parser("check", help="bad-coloring verdict for a gcol file")
    ck.add_argument("file")
    ck.add_argument("--cycle", type=_positive, required=True)
    ck.add_argument("--expect", choices=["bad", "not-bad"])
    ck.add_argument("--no-fast-paths", action="store_true",
                    help="run the general cycle search even where a shortcut applies")
    ck.add_argument("--all-colors", action="store_true",
                    help="keep searching after the first witness")

    pt = sub.add_parser("partition", help="Gallai partition of a gcol file")
    pt.add_argument("file")

    for name in ("search", "scan"):
        s = sub.add_parser(name, help="exact search for bad colorings" if name == "search"
                           else "least n in a range with no bad coloring")
        s.add_argument("--mode", choices=["two-color", "gallai"], required=True)
        s.add_argument("--cycle", type=_positive, required=True)
        s.add_argument("--colors", type=_positive, default=2)
        s.add_argument("--time-limit", type=float, default=DEFAULT_TIME_LIMIT)
        s.add_argument("--workers", type=_positive, default=1)
        if name == "search":
            s.add_argument("--n", type=_positive, required=True)
            s.add_argument("-o", "--output")
        else:
            s.add_argument("--from", dest="n_lo", type=_positive, required=True)
            s.add_argument("--to", dest="n_hi", type=_positive, required=True)
    return p


def _emit(obj) -> None:
    json.dump(obj, sys.stdout)
    sys.stdout.write("\n")


def _load(path):
    try:
        return gmod.load(path)
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror or e}") from None
    except gmod.GcolError as e:
        raise UsageError(f"{path}: {e}") from None


def _write_graph(g, path):
    if path:
        try:
            gmod.save(g, path)
        except OSError as e:
            raise UsageError(f"cannot write {path}: {e.strerror or e}") from None


def _cmd_gen(args) -> int:
    try:
        if args.generator == "construct":
            g = gallai_lower_bound(args.m, args.colors)
        elif args.generator == "two-color":
            g = odd_cycle_two_color_extremal(args.m)
        else:
            g = random_gallai(args.n, args.colors, args.seed)
    except ValueError as e:
        raise UsageError(str(e)) from None
    _write_graph(g, args.output)
    out = {"n": g.n, "colors": g.k}
    if args.output:
        out["path"] = args.output
    else:
        out["gcol"] = gmod.dumps(g)
    _emit(out)
    return EXIT_OK


def _cmd_check(args) -> int:
    cfg = RunConfig("check", input=args.file, cycle=args.cycle, expect=args.expect)
    if cfg.cycle < 3:
        raise UsageError("--cycle must be at least 3")
    g = _load(cfg.input)
    v = is_bad(g, cfg.cycle, fast_paths=not args.no_fast_paths, stop_at_first=not args.all_colors)
    out = v.to_dict()
    out.update(n=g.n, colors=g.k, cycle=cfg.cycle)
    _emit(out)
    if cfg.expect is not None and v.verdict != cfg.expect:
        print(f"gr: expected {cfg.expect}, got {v.verdict}", file=sys.stderr)
        return EXIT_EXPECT
    return EXIT_OK


def _cmd_partition(args) -> int:
    g = _load(args.file)
    try:
        P = find_gallai_partition(g)
    except RainbowTriangleError as e:
        raise UsageError(f"{e} (rainbow witness {list(e.witness.vertices)})") from None
    except (ValueError, PartitionNotFound) as e:
        raise UsageError(str(e)) from None
    _emit(P.to_dict())
    return EXIT_OK


def _cmd_search(args) -> int:
    cfg = RunConfig("search", output=args.output, cycle=args.cycle, colors=args.colors, n=args.n,
                    time_limit=args.time_limit, workers=args.workers)
    try:
        if args.mode == "two-color":
            out = search_bad_two_coloring(cfg.n, cfg.cycle, time_limit=cfg.time_limit, workers=cfg.workers)
        else:
            out = search_bad_gallai(cfg.n, cfg.colors, cfg.cycle, time_limit=cfg.time_limit,
                                    workers=cfg.workers)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if out.witness is not None:
        _write_graph(out.witness, cfg.output)
    _emit(out.to_dict())
    return EXIT_OK


def _cmd_scan(args) -> int:
    RunConfig("scan", cycle=args.cycle, colors=args.colors, time_limit=args.time_limit,
              workers=args.workers)
    try:
        rep = threshold_scan(args.colors, args.cycle, args.n_lo, args.n_hi, args.mode,
                             time_limit=args.time_limit, workers=args.workers)
    except ValueError as e:
        raise UsageError(str(e)) from None
    _emit(rep.to_dict())
    return EXIT_OK


COMMANDS = {"gen": _cmd_gen, "check": _cmd_check, "partition": _cmd_partition,
            "search": _cmd_search, "scan": _cmd_scan}


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                            stream=sys.stderr, format="%(name)s: %(message)s")
        return COMMANDS[args.command](args)
    except UsageError as e:
        print(f"gr: error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
