"""Command line front end: retset scan | verify-example36 | verify-counterexample | set | fset.

Exit codes: 0 pass, 1 fail with counterexample, 2 undecided or resource
limit, 3 usage or configuration error.
"""

import argparse
import json
import sys
import time

from . import checks, configs
from .cosets import format_canonical, intersect, parse_coset
from .fsets import NotCosetShaped, ResourceError as FsetResourceError
from .fsets import decompose_index_set, parse_fset_file
from .groups import ConfigError, parse_group_file
from .psets import (DecompositionError, InvalidTerm, UndecidedElement, classify, equal_up_to_finite,
                    parse_setexpr, two_exponential_decompose, window)
from .scan import ResourceError, orbit_scan
from .subvariety import parse_equation_file

EXIT_PASS, EXIT_FAIL, EXIT_UNDECIDED, EXIT_USAGE = 0, 1, 2, 3

BUILTIN = {
    "example36": lambda p: (configs.example36_group(p), configs.EXAMPLE36_EQUATIONS),
    "torus": lambda p: (configs.torus_group(p), configs.TORUS_EQUATIONS),
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, "%s: error: %s\n" % (self.prog, message))


def _read(path):
    with open(path) as fh:
        return fh.read()


def _write(path, text):
    with open(path, "w") as fh:
        fh.write(text)


def _emit(args, csv_text, json_text):
    if args.out:
        _write(args.out + ".csv", csv_text)
        _write(args.out + ".json", json_text)
    else:
        sys.stdout.write(csv_text)


def _mc_args(p):
    p.add_argument("--prime", type=int, default=5, help="characteristic p (default 5)")
    p.add_argument("--specializations", "-s", type=int, default=5, help="Monte Carlo specializations")
    p.add_argument("--field-degree", type=int, default=None, help="degree k of the test field GF(p^k)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="write OUT.csv / OUT.json instead of printing")
    p.add_argument("--allow-weak", action="store_true",
                   help="accept small test fields and error bounds above 1e-6")


def cmd_scan(args):
    if args.builtin:
        gtext, vtext = BUILTIN[args.builtin](args.prime)
    elif args.group and args.equations:
        gtext, vtext = _read(args.group), _read(args.equations)
    else:
        raise UsageError("scan needs --group and --equations, or --builtin")
    group, g = parse_group_file(gtext)
    if g is None:
        raise ConfigError("group file has no [point] section")
    V = parse_equation_file(vtext)
    mode = "exact" if args.exact else "monte_carlo"
    t0 = time.time()
    rep = orbit_scan(group, g, V, args.window, mode, args.specializations, args.field_degree,
                     args.seed, allow_weak=args.allow_weak)
    _emit(args, rep.to_csv(), rep.to_json())
    bound = rep.max_member_bound()
    print("members: %s" % ",".join(map(str, rep.members)), file=sys.stderr)
    if mode == "monte_carlo":
        print("max false-accept bound per member: %.3e" % bound, file=sys.stderr)
    print("elapsed: %.2f s" % (time.time() - t0), file=sys.stderr)
    return EXIT_UNDECIDED if rep.undecided else EXIT_PASS


def _check_out(args, rep):
    for line in rep.lines():
        print(line)
    if args.out:
        _write(args.out + ".json", rep.to_json())
    return checks.EXIT[rep.status]


def cmd_example36(args):
    curve = configs.ORDINARY_CURVE if args.corrupt else (0, 1)
    t0 = time.time()
    rep, scan = checks.verify_example36(args.window, args.j_max, args.specializations,
                                        args.field_degree, args.seed, args.prime, curve,
                                        args.allow_weak)
    if scan is not None and args.out:
        _write(args.out + ".csv", scan.to_csv())
    code = _check_out(args, rep)
    print("elapsed: %.2f s" % (time.time() - t0), file=sys.stderr)
    return code


def cmd_counterexample(args):
    t0 = time.time()
    rep = checks.verify_counterexample(args.window, args.n_max, args.specializations,
                                       args.field_degree, args.seed, args.prime,
                                       "C3" if args.corrupt else None)
    code = _check_out(args, rep)
    print("elapsed: %.2f s" % (time.time() - t0), file=sys.stderr)
    return code


def cmd_set(args):
    op = args.op
    a = args.args
    if op == "window":
        if len(a) != 2:
            raise UsageError("set window EXPR N")
        print(",".join(map(str, window(parse_setexpr(a[0], args.prime), int(a[1])))))
    elif op == "classify":
        if len(a) != 1:
            raise UsageError("set classify EXPR")
        print(classify(parse_setexpr(a[0], args.prime)))
    elif op == "diff":
        if len(a) not in (4, 5):
            raise UsageError("set diff EXPR1 EXPR2 W0 W1 [THRESHOLD]")
        rep = equal_up_to_finite(parse_setexpr(a[0], args.prime), parse_setexpr(a[1], args.prime),
                                 int(a[2]), int(a[3]), int(a[4]) if len(a) == 5 else None)
        print(rep)
        return EXIT_PASS if rep.consistent else EXIT_FAIL
    elif op == "canonical":
        if len(a) != 1:
            raise UsageError("set canonical COSET")
        print(format_canonical(parse_coset(a[0]).subgroup.canonical()))
    elif op == "intersect":
        if len(a) != 2:
            raise UsageError("set intersect COSET COSET")
        C = intersect(parse_coset(a[0]), parse_coset(a[1]))
        print("empty" if C is None else C)
    elif op == "lemma56":
        if len(a) < 3:
            raise UsageError("set lemma56 C1 C2 E0 [E1 ...] (use --q, --fit-window)")
        nums = [int(x) for x in a]
        D = two_exponential_decompose(nums[0], nums[1], nums[2], nums[3:], args.q, args.fit_window)
        print(json.dumps(D.to_dict(), sort_keys=True))
    else:
        raise UsageError("unknown set operation %r" % op)
    return EXIT_PASS


def cmd_fset(args):
    spec, F, g0 = parse_fset_file(_read(args.file))
    D = decompose_index_set(spec, F, g0, args.fit_window)
    sys.stdout.write(D.to_text())
    for note in D.notes:
        print("note: " + note, file=sys.stderr)
    return EXIT_PASS


def build_parser():
    ap = _Parser(prog="retset", description="Return sets of translations on tori and "
                 "supersingular elliptic curves over F_p(t).")
    sub = ap.add_subparsers(dest="cmd", parser_class=_Parser)

    p = sub.add_parser("scan", help="orbit scan of {n in [0, N] : n g in V}")
    p.add_argument("--group", help="group file with a [point] section")
    p.add_argument("--equations", help="equation file")
    p.add_argument("--builtin", choices=sorted(BUILTIN), help="use a built-in configuration")
    p.add_argument("--window", "-N", type=int, default=100)
    p.add_argument("--exact", action="store_true", help="exact symbolic scan")
    _mc_args(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify-example36", help="checks (a) and (b) for E x E, y^2 = x^3 + 1")
    p.add_argument("--window", "-N", type=int, default=10 ** 5)
    p.add_argument("--j-max", type=int, default=6)
    p.add_argument("--corrupt", action="store_true",
                   help="negative control: use the ordinary curve y^2 = x^3 + x + 1")
    _mc_args(p)
    p.set_defaults(func=cmd_example36)

    p = sub.add_parser("verify-counterexample", help="computable ingredients of the pDML disproof")
    p.add_argument("--window", "-N", type=int, default=20000)
    p.add_argument("--n-max", type=int, default=3)
    p.add_argument("--corrupt", action="store_true",
                   help="negative control: wrong torus sign in the C3 witness")
    _mc_args(p)
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("set", help="set expressions and good cosets")
    p.add_argument("op", help="window | classify | diff | canonical | intersect | lemma56")
    p.add_argument("args", nargs="*")
    p.add_argument("--prime", type=int, default=None)
    p.add_argument("--q", type=int, default=5, help="base q for lemma56")
    p.add_argument("--fit-window", type=int, default=8, help="fit window N for lemma56")
    p.set_defaults(func=cmd_set)

    p = sub.add_parser("fset", help="decompose an F-set index set from a description file")
    p.add_argument("file")
    p.add_argument("--fit-window", type=int, default=8)
    p.set_defaults(func=cmd_fset)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    if not getattr(args, "func", None):
        ap.print_help(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, ConfigError, InvalidTerm, ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except UndecidedElement as exc:
        print("undecided: %s" % exc, file=sys.stderr)
        return EXIT_UNDECIDED
    except (ResourceError, FsetResourceError) as exc:
        print("resource limit: %s" % exc, file=sys.stderr)
        return EXIT_UNDECIDED
    except (DecompositionError, NotCosetShaped) as exc:
        print("fit failed: %s" % exc, file=sys.stderr)
        return EXIT_UNDECIDED


if __name__ == "__main__":
    sys.exit(main())
