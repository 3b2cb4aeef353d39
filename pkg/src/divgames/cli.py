"""Command-line front end.

Exit codes: 0 success, 1 negative answer (unstable partition, empty
solution set, failed equivalence), 2 usage or validation error, 3 an
enumeration cap was exceeded.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from . import model
from .core import core_common_preference, core_single_red
from .dynamics import run_dynamics
from .enumeration import BRUTE_FORCE_CAP, core_brute_force, is_brute_force, nash_brute_force
from .errors import DiversityGameError, ResourceLimitError
from .individual import solve_individually_stable
from .preferences import (
    make_bakers_millers,
    make_example3,
    make_homophilic,
    random_single_peaked,
)
from .reduction import check_reduction_equivalence, reduce_to_diversity
from .serialization import (
    dumps,
    instance_to_doc,
    parse_anonymous,
    parse_instance,
    parse_partition,
    partition_to_list,
    trace_to_doc,
    verdict_to_doc,
)
from .stability import (
    IS,
    NS,
    enumerate_is_deviations,
    enumerate_ns_deviations,
    find_blocking_coalition,
)

OK, NEGATIVE, USAGE, RESOURCE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_generate(args) -> int:
    if args.kind == "example3":
        game = make_example3()
    else:
        if args.red is None or args.blue is None:
            raise _UsageError(f"--red and --blue are required for --kind {args.kind}")
        if args.kind == "homophilic":
            game = make_homophilic(args.red, args.blue)
        elif args.kind == "bakers-millers":
            game = make_bakers_millers(args.red, args.blue)
        else:
            game = random_single_peaked(args.red, args.blue, args.seed)
    _write(dumps(instance_to_doc(game)), args.out)
    return OK


def cmd_check(args) -> int:
    game = parse_instance(_read(args.instance))
    partition = parse_partition(_read(args.partition), game.n)
    start = time.perf_counter()
    if args.concept == "core":
        witness = find_blocking_coalition(game, partition)
    else:
        devs = (enumerate_ns_deviations if args.concept == "nash" else enumerate_is_deviations)(game, partition)
        witness = devs[0] if devs else None
    elapsed = (time.perf_counter() - start) * 1000 if args.timing else None
    stable = witness is None
    _write(dumps(verdict_to_doc(args.concept, stable, witness, elapsed)), args.out)
    return OK if stable else NEGATIVE


def cmd_solve(args) -> int:
    game = parse_instance(_read(args.instance))
    method = args.method
    if method == "is":
        parts = [solve_individually_stable(game)]
    elif method == "prop3":
        parts = [core_single_red(game)]
    elif method == "prop4":
        parts = [core_common_preference(game)]
    elif method == "core-brute":
        parts = core_brute_force(game, find_all=args.all, cap=args.cap, jobs=args.jobs)
    elif method == "nash-brute":
        parts = nash_brute_force(game, find_all=args.all, cap=args.cap)
    else:
        parts = is_brute_force(game, find_all=args.all, cap=args.cap)
    doc = {"method": method, "count": len(parts), "partitions": [partition_to_list(p) for p in parts]}
    _write(dumps(doc), args.out)
    return OK if parts else NEGATIVE


def cmd_reduce(args) -> int:
    anon = parse_anonymous(_read(args.anon))
    red = reduce_to_diversity(anon)
    instance = instance_to_doc(red.game)
    if not args.verify:
        _write(dumps(instance), args.out)
        return OK
    report = check_reduction_equivalence(anon, cap=args.cap, jobs=args.jobs)
    doc = {
        "instance": instance,
        "equivalence": {
            "sourceCoreNonEmpty": report.source_core_nonempty,
            "targetCoreNonEmpty": report.target_core_nonempty,
            "agree": report.agree,
            "reducedAgents": report.reduced_agents,
        },
    }
    _write(dumps(doc), args.out)
    return OK if report.agree else NEGATIVE


def cmd_dynamics(args) -> int:
    game = parse_instance(_read(args.instance))
    start = None if args.start == "random" else parse_partition(_read(args.start), game.n)
    kind = NS if args.kind == "ns" else IS
    trace = run_dynamics(game, start, kind, args.limit, args.seed)
    _write(dumps(trace_to_doc(trace, kind)), args.out)
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="divgames", description="Hedonic diversity games: generate, check, solve.")
    p.add_argument("--max-agents", type=int, default=model.MAX_AGENTS,
                   help="model-wide agent cap (default %(default)s)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, cap=False):
        sp.add_argument("--out", help="write the result here instead of stdout")
        if cap:
            sp.add_argument("--cap", type=int, default=BRUTE_FORCE_CAP,
                            help="largest game enumerated exhaustively (default %(default)s); "
                                 "each extra agent multiplies the work several times over")
            sp.add_argument("--jobs", type=int, default=1, help="worker processes for core enumeration")

    g = sub.add_parser("generate", help="write an instance document")
    g.add_argument("--kind", required=True, choices=["homophilic", "bakers-millers", "example3", "random"])
    g.add_argument("--red", type=int)
    g.add_argument("--blue", type=int)
    g.add_argument("--seed", type=int, default=0)
    common(g)
    g.set_defaults(func=cmd_generate)

    c = sub.add_parser("check", help="test a partition for core, Nash or individual stability")
    c.add_argument("--concept", required=True, choices=["core", "nash", "is"])
    c.add_argument("--instance", required=True)
    c.add_argument("--partition", required=True, help="partition file, or - for stdin")
    c.add_argument("--timing", action="store_true", help="include the check time in the report")
    common(c)
    c.set_defaults(func=cmd_check)

    s = sub.add_parser("solve", help="construct or enumerate stable partitions")
    s.add_argument("--method", required=True,
                   choices=["is", "core-brute", "nash-brute", "is-brute", "prop3", "prop4"])
    s.add_argument("--instance", required=True)
    s.add_argument("--all", action="store_true", help="enumerate all solutions, not just the first")
    common(s, cap=True)
    s.set_defaults(func=cmd_solve)

    r = sub.add_parser("reduce", help="encode an anonymous game as a diversity game")
    r.add_argument("--anon", required=True)
    r.add_argument("--verify", action="store_true", help="also compare core non-emptiness on both sides")
    common(r, cap=True)
    r.set_defaults(func=cmd_reduce)

    d = sub.add_parser("dynamics", help="run deterministic deviation dynamics")
    d.add_argument("--instance", required=True)
    d.add_argument("--kind", required=True, choices=["ns", "is"])
    d.add_argument("--start", required=True, help="partition file or 'random'")
    d.add_argument("--limit", type=int, required=True)
    d.add_argument("--seed", type=int, default=0)
    common(d)
    d.set_defaults(func=cmd_dynamics)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    saved_cap = model.MAX_AGENTS
    try:
        args = parser.parse_args(argv)
        model.MAX_AGENTS = args.max_agents
        return args.func(args)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except _UsageError as exc:
        print(f"divgames: error: {exc}", file=sys.stderr)
        return USAGE
    except ResourceLimitError as exc:
        print(f"divgames: resource cap exceeded: {exc}", file=sys.stderr)
        return RESOURCE
    except DiversityGameError as exc:
        print(f"divgames: invalid input: {exc}", file=sys.stderr)
        return USAGE
    finally:
        model.MAX_AGENTS = saved_cap


if __name__ == "__main__":
    sys.exit(main())
