"""Command line: ``solve``, ``gen`` and ``check``.

Exit codes: 0 ok, 1 usage or parse error, 2 infeasible, 3 check mismatch.
"""
import argparse
import sys

from . import instances
from .kcenter2d import UnsupportedError

EXIT_OK, EXIT_USAGE, EXIT_INFEASIBLE, EXIT_MISMATCH = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _caps(text):
    caps = {}
    for part in filter(None, text.split(",")):
        key, _, value = part.partition("=")
        try:
            caps[key.strip()] = int(value)
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad cap {part!r}; use key=value") from None
    return caps


def _seed(text):
    v = int(text, 0)
    if not 0 <= v < 1 << 64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return v


def build_parser():
    ap = _Parser(prog="geocover", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", help="solve an instance file")
    s.add_argument("file")
    s.add_argument("--mode", choices=("exact", "float"), default="exact")
    s.add_argument("--objective", help="override the instance objective")
    s.add_argument("--oracle", action="store_true", help="use the brute-force oracle")

    g = sub.add_parser("gen", help="print a random instance")
    g.add_argument("problem", choices=instances.PROBLEMS)
    g.add_argument("--n", type=int, default=6)
    g.add_argument("--m", type=int, default=6)
    g.add_argument("--k", type=int, default=2)
    g.add_argument("--span", type=int, default=30, help="coordinate range [0, span]")
    g.add_argument("--wmax", type=int, default=9, help="weights drawn from [1, wmax]")
    g.add_argument("--seed", type=_seed, default=0)

    c = sub.add_parser("check", help="compare solver and oracle on random instances")
    c.add_argument("problem", choices=instances.PROBLEMS)
    c.add_argument("--count", type=int, default=100)
    c.add_argument("--seed", type=_seed, default=0)
    c.add_argument("--caps", type=_caps, default={}, help="size caps, e.g. n=6,k=3")
    return ap


def _solve(args):
    try:
        inst = instances.load(args.file)
        if args.objective is not None:
            if "objective" not in inst:
                raise instances.InstanceError(f"{inst['problem']} has no objective")
            inst["objective"] = args.objective
            instances.validate(inst)
        result = instances.solve(inst, args.mode, args.oracle)
    except UnsupportedError as e:
        print(instances.dumps({"status": "unsupported", "message": str(e)}))
        return EXIT_USAGE
    except (instances.InstanceError, ValueError) as e:
        print(instances.dumps({"status": "error", "message": str(e)}))
        return EXIT_USAGE
    except AssertionError as e:
        # a witness failed re-validation: never print it as a result
        print(instances.dumps({"status": "error", "message": f"witness check failed: {e}"}))
        return EXIT_USAGE
    print(instances.dumps(result))
    return EXIT_OK if result["status"] == "ok" else EXIT_INFEASIBLE


def _gen(args):
    try:
        inst = instances.generate(args.problem, instances.SplitMix64(args.seed), n=args.n,
                                  m=args.m, k=args.k, span=args.span, wmax=args.wmax)
    except instances.InstanceError as e:
        print(f"geocover gen: {e}", file=sys.stderr)
        return EXIT_USAGE
    print(instances.dumps(inst))
    return EXIT_OK


def _check(args, solver=None):
    kwargs = {"solver": solver} if solver else {}
    try:
        instances.check_caps(args.problem, args.caps)
        failures = 0
        for idx, inst, got, want in instances.check(args.problem, args.count, args.seed,
                                                    args.caps, **kwargs):
            failures += 1
            print(f"MISMATCH #{idx}: solver={got!r} oracle={want!r}")
            print(instances.dumps(inst))
    except instances.InstanceError as e:
        print(f"geocover check: {e}", file=sys.stderr)
        return EXIT_USAGE
    print(f"{args.problem}: {args.count - failures}/{args.count} agree")
    return EXIT_MISMATCH if failures else EXIT_OK


def main(argv=None, solver=None):
    args = build_parser().parse_args(argv)
    if args.command == "solve":
        return _solve(args)
    if args.command == "gen":
        return _gen(args)
    return _check(args, solver)


if __name__ == "__main__":
    sys.exit(main())
