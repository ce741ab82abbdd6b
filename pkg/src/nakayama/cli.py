"""Command line: ``nakayama {gen,analyze,verify-independence,lemma-suite,check}``.

Exit codes: 0 success, 2 validation failure, 3 inconclusive verdict,
4 theorem violation.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .errors import AlgebraError, TheoremViolation
from .fileio import algebra_to_dict, dumps, load_algebra
from .generators import FAMILIES, generate
from .lemmas import lemma5_suite, lemma5_two_element_instance, lemma6_suite
from .report import analyze, recheck

EXIT_OK, EXIT_INVALID, EXIT_INCONCLUSIVE, EXIT_VIOLATION = 0, 2, 3, 4

__all__ = ["main", "build_parser"]


def _oracle_kw(args):
    return {"sym_threshold": args.sym_threshold, "confidence": args.confidence}


def _emit(obj, args):
    text = dumps(obj)
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _params(items):
    out = {}
    for item in items:
        if "=" not in item:
            raise AlgebraError(f"parameter {item!r} must look like key=value")
        k, v = item.split("=", 1)
        out[k] = v
    return out


def cmd_gen(args):
    from .errors import BadParams

    params = _params(args.params)
    if args.family not in FAMILIES:
        raise BadParams(f"unknown family {args.family!r}; choose from {', '.join(FAMILIES)}")
    A = generate(args.family, params).validate()
    _emit(algebra_to_dict(A), args)
    return EXIT_OK


def cmd_check(args):
    A, modules = load_algebra(args.file)
    _emit({"file": args.file, "valid": True, "dimension": A.dim, "modules": len(modules)}, args)
    return EXIT_OK


def cmd_analyze(args):
    A, _ = load_algebra(args.file)
    if args.recheck:
        # verify an existing report; no searches are run
        with open(args.recheck) as fh:
            checks = recheck(A, json.load(fh))
        _emit({"recheck": [{"check": name, "passed": ok} for name, ok in checks]}, args)
        return EXIT_OK if all(ok for _, ok in checks) else EXIT_INVALID
    rep = analyze(A, seed=args.seed, timing=args.timing, **_oracle_kw(args))
    code = EXIT_INCONCLUSIVE if rep["inconclusive"] else EXIT_OK
    if args.recheck is not None:
        checks = recheck(A, rep)
        rep["recheck"] = [{"check": name, "passed": ok} for name, ok in checks]
        if not all(ok for _, ok in checks):
            code = EXIT_INVALID
    if not rep["symmetry"]["consistent"]:
        code = EXIT_VIOLATION
    _emit(rep, args)
    return code


def cmd_verify_independence(args):
    from .scalars import independence_experiment, restrict_scalars

    A, _ = load_algebra(args.file)
    t0 = time.perf_counter()
    R = restrict_scalars(A)
    rep = independence_experiment(R, seed=args.seed, replay=None if not args.no_replay else False, **_oracle_kw(args))
    out = rep.summary()
    out["seed"] = args.seed
    if args.timing:
        out["timing_seconds"] = round(time.perf_counter() - t0, 6)
    _emit(out, args)
    if rep.violations:
        return EXIT_VIOLATION
    return EXIT_INCONCLUSIVE if rep.inconclusive else EXIT_OK


def cmd_lemma_suite(args):
    if args.which == "lemma6":
        res = lemma6_suite(args.n, args.q, trials=args.trials, seed=args.seed)
        out = res.summary()
        code = EXIT_OK if res.failed == 0 else EXIT_VIOLATION
    elif args.two_element_instance:
        raised, valid = lemma5_two_element_instance()
        out = {"suite": "lemma5 GF(2)^3 instance", "field_too_small": raised, "valid_hyperplanes": valid}
        code = EXIT_OK if raised and valid == 0 else EXIT_VIOLATION
    else:
        res = lemma5_suite(args.field, args.dim, args.subspaces, trials=args.trials, seed=args.seed)
        out = res.summary()
        code = EXIT_OK if res.failed == 0 else EXIT_VIOLATION
    _emit(out, args)
    return code


def build_parser():
    p = argparse.ArgumentParser(prog="nakayama", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, oracle=True):
        sp.add_argument("--seed", type=int, default=0, help="64-bit seed (default 0)")
        sp.add_argument("-o", "--output", help="write to this file instead of stdout")
        if oracle:
            sp.add_argument("--confidence", type=float, default=2.0**-40,
                            help="target failure bound for probabilistic negatives")
            sp.add_argument("--sym-threshold", type=int, default=6,
                            help="max free coefficients for certified negatives")
            sp.add_argument("--timing", action="store_true", help="include wall-clock timing in the report")

    g = sub.add_parser("gen", help="generate an algebra file")
    g.add_argument("family", help=f"one of {', '.join(FAMILIES)}")
    g.add_argument("params", nargs="*", help="key=value parameters, e.g. n=2 field=GF(3)")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", help="validate an algebra file")
    c.add_argument("file")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_check)

    a = sub.add_parser("analyze", help="Frobenius / symmetric / Nakayama report")
    a.add_argument("file")
    a.add_argument("--recheck", nargs="?", const="", default=None, metavar="REPORT",
                   help="re-verify certificates (of REPORT if given, else of the new report)")
    common(a)
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify-independence", help="compare the algebra over an extension and its base")
    v.add_argument("file")
    v.add_argument("--no-replay", action="store_true", help="skip the socle/hyperplane replay")
    common(v)
    v.set_defaults(func=cmd_verify_independence)

    s = sub.add_parser("lemma-suite", help="randomised lemma checks")
    s.add_argument("which", choices=["lemma5", "lemma6"])
    s.add_argument("--n", type=int, default=2)
    s.add_argument("--q", type=int, default=3)
    s.add_argument("--field", default="QQ")
    s.add_argument("--dim", type=int, default=6)
    s.add_argument("--subspaces", type=int, default=4)
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--two-element-instance", action="store_true",
                   help="run the three-axes instance over GF(2)")
    common(s, oracle=False)
    s.set_defaults(func=cmd_lemma_suite)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TheoremViolation as exc:
        print(f"THEOREM-VIOLATION: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except AlgebraError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
