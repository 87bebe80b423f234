"""
Command-line front end.

    eqrimhook mult --k 2 --n 4 2 2 --diagnostics
    eqrimhook classical --k 2 --N 4 2 2
    eqrimhook core --n 4 --k 2 3,1
    eqrimhook schur --k 2 --jt 2,1
    eqrimhook pieri --k 2 --n 4 1
    eqrimhook verify all --k 2 --n 4

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 internal invariant failure.  Setting EQRH_SERIAL=1 ignores ``--jobs``.
"""

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import identities
from .abacus import abacus_from_partition, abacus_to_partition, make_flush
from .eqlr import ExpansionCache, classical_eqlr
from .facschur import WeightSeq, factorial_schur_ssyt, jacobi_trudi
from .partitions import in_box, parse_partition, rim_hook_reduce, strip_rim_hooks
from .qh import QClass, phi_contributions, quantum_mult, quantum_pieri

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

SERIAL_ENV = "EQRH_SERIAL"


class UsageError(Exception):
    pass


def _partition(text, what="partition"):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise UsageError("%s %r: %s" % (what, text, exc)) from None


def _boxed(lam, k, n):
    if not in_box(lam, k, n):
        raise UsageError("partition %s does not fit in P_%d,%d (at most %d rows, parts at most %d)"
                         % (lam, k, n, k, n - k))
    return lam


def _need(args, *names):
    missing = ["--" + name for name in names if getattr(args, name) is None]
    if missing:
        raise UsageError("missing required option %s" % ", ".join(missing))


def _two_partitions(args):
    texts = list(args.partitions)
    if args.lhs is not None:
        texts.insert(0, args.lhs)
    if args.rhs is not None:
        texts.append(args.rhs)
    if len(texts) != 2:
        raise UsageError("expected two partitions, got %d" % len(texts))
    return [_partition(t) for t in texts]


def _one_partition(args):
    if len(args.partitions) != 1:
        raise UsageError("expected one partition, got %d" % len(args.partitions))
    return _partition(args.partitions[0])


def _cache(args, writable=True):
    if args.cache is None:
        return None
    return ExpansionCache(args.cache, writable=writable)


def _render(obj, fmt):
    if fmt == "json":
        return json.dumps(obj.to_json(), sort_keys=True)
    if fmt == "latex":
        return obj.latex()
    return str(obj)


# -- subcommands ----------------------------------------------------------------


def cmd_mult(args, out):
    _need(args, "k", "n")
    k, n = args.k, args.n
    lam, mu = (_boxed(p, k, n) for p in _two_partitions(args))
    cache = _cache(args)
    product = quantum_mult(lam, mu, k, n, cache=cache)
    if not args.diagnostics:
        print(_render(product, args.format), file=out)
        return EXIT_OK

    expansion = classical_eqlr(lam, mu, k, 2 * n - 1, cache=cache, strict=True)
    contributions = phi_contributions(expansion, n)
    if args.format == "json":
        payload = {
            "product": product.to_json(),
            "expansion": expansion.to_json(),
            "contributions": [
                {
                    "gamma": list(c.gamma),
                    "coefficient": c.coefficient.to_json(),
                    "core": None if c.reduction is None else list(c.reduction.core),
                    "d": None if c.reduction is None else c.reduction.d,
                    "heights": None if c.reduction is None else list(c.reduction.heights),
                    "sign": None if c.reduction is None else c.reduction.sign,
                    "value": c.value.to_json(),
                }
                for c in contributions
            ],
        }
        print(json.dumps(payload, sort_keys=True), file=out)
        return EXIT_OK
    print("product in Gr(%d,%d):" % (k, 2 * n - 1), file=out)
    print("  " + _render(expansion, args.format), file=out)
    print("contributions under phi:", file=out)
    for c in contributions:
        if c.reduction is None:
            core = strip_rim_hooks(c.gamma, n, k).core
            print("  s[%s]: n-core %s is outside P_%d,%d -> 0" % (c.gamma, core, k, n), file=out)
            continue
        r = c.reduction
        image = QClass(k, n, {c.target: c.value})
        print(
            "  s[%s]: coefficient %s, %d hook(s) of heights %s, sign %+d -> %s"
            % (c.gamma, c.coefficient, r.d, list(r.heights), r.sign, image),
            file=out,
        )
    print("result:", file=out)
    print("  " + _render(product, args.format), file=out)
    return EXIT_OK


def cmd_classical(args, out):
    _need(args, "k", "N")
    lam, mu = (_boxed(p, args.k, args.N) for p in _two_partitions(args))
    print(_render(classical_eqlr(lam, mu, args.k, args.N, cache=_cache(args)), args.format), file=out)
    return EXIT_OK


def cmd_core(args, out):
    _need(args, "k", "n")
    k, n = args.k, args.n
    lam = _one_partition(args)
    if len(lam) > k:
        raise UsageError("partition %s has more than %d rows" % (lam, k))
    red = strip_rim_hooks(lam, n, k)
    flush, moves = make_flush(abacus_from_partition(lam, k, n))
    abacus_core = abacus_to_partition(flush)
    agree = abacus_core == red.core and moves == red.d
    boxed = rim_hook_reduce(lam, n, k) is not None
    if args.format == "json":
        payload = {
            "partition": list(lam),
            "core": list(red.core),
            "d": red.d,
            "heights": list(red.heights),
            "sign": red.sign,
            "core_in_box": boxed,
            "abacus": {"core": list(abacus_core), "moves": moves, "agrees": agree},
        }
        print(json.dumps(payload, sort_keys=True), file=out)
    else:
        print("partition: %s" % (lam,), file=out)
        print("%d-core:   %s%s" % (n, red.core, "" if boxed else "  (outside P_%d,%d, phi = 0)" % (k, n)), file=out)
        print("d:         %d" % red.d, file=out)
        print("heights:   %s" % list(red.heights), file=out)
        print("sign:      %+d" % red.sign, file=out)
        print("abacus:    core %s after %d moves, %s" % (abacus_core, moves, "agrees" if agree else "DISAGREES"), file=out)
    if not agree:
        raise ArithmeticError("abacus and beta-number reductions disagree on %s" % (lam,))
    return EXIT_OK


def cmd_schur(args, out):
    _need(args, "k")
    lam = _one_partition(args)
    if len(lam) > args.k:
        raise UsageError("partition %s has more than %d rows" % (lam, args.k))
    w = WeightSeq(args.shift)
    poly = jacobi_trudi(lam, args.k, w) if args.jt else factorial_schur_ssyt(lam, args.k, w)
    print(_render(poly, args.format), file=out)
    return EXIT_OK


def cmd_pieri(args, out):
    _need(args, "k", "n")
    lam = _boxed(_one_partition(args), args.k, args.n)
    print(_render(quantum_pieri(lam, args.k, args.n), args.format), file=out)
    return EXIT_OK


def _run_one(job):
    suite, k, n, max_d, sample, seed, cache_path = job
    cache = ExpansionCache(cache_path, writable=False) if cache_path else None
    return identities.run_suite(suite, k, n, max_d=max_d, sample=sample, seed=seed, cache=cache)


def cmd_verify(args, out):
    _need(args, "k", "n")
    if args.suite != "all" and args.suite not in identities.SUITES:
        raise UsageError("unknown suite %r; choose from %s or all" % (args.suite, ", ".join(identities.SUITES)))
    suites = identities.SUITES if args.suite == "all" else (args.suite,)
    jobs = 1 if os.environ.get(SERIAL_ENV) else max(1, args.jobs)
    reports = []
    if jobs > 1 and len(suites) > 1:
        work = [(s, args.k, args.n, args.max_d, args.sample, args.seed, args.cache) for s in suites]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for batch in pool.map(_run_one, work):
                reports.extend(batch)
    else:
        cache = _cache(args)
        for s in suites:
            reports.extend(
                identities.run_suite(s, args.k, args.n, max_d=args.max_d, sample=args.sample, seed=args.seed, cache=cache)
            )

    if args.format == "json":
        print(identities.reports_to_json(reports), file=out)
    else:
        print(identities.format_table(reports, show=args.show), file=out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY


# -- argument parsing -------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="eqrimhook",
        description="Equivariant quantum Littlewood-Richardson coefficients of Grassmannians.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log cache activity")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, n=False, N=False):
        p.add_argument("--k", type=int, help="dimension of the subspaces")
        if n:
            p.add_argument("--n", type=int, help="dimension of the ambient space")
        if N:
            p.add_argument("--N", type=int, help="ambient dimension of the classical Grassmannian")
        p.add_argument("--format", choices=("text", "json", "latex"), default="text")
        p.add_argument("--cache", metavar="PATH", help="append-only file cache of classical products")
        p.add_argument("partitions", nargs="*", metavar="PARTITION", help="comma-separated parts, 0 for the empty partition")

    p = sub.add_parser("mult", help="quantum product sigma_lam * sigma_mu in QH_T(Gr(k,n))")
    common(p, n=True)
    p.add_argument("--lhs", help="first factor")
    p.add_argument("--rhs", help="second factor")
    p.add_argument("--diagnostics", action="store_true", help="show the Gr(k,2n-1) expansion and each label's image")
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("classical", help="equivariant product in H_T(Gr(k,N)), no reduction")
    common(p, N=True)
    p.add_argument("--lhs")
    p.add_argument("--rhs")
    p.set_defaults(func=cmd_classical)

    p = sub.add_parser("core", help="n-core, hook count, heights and sign of a partition")
    common(p, n=True)
    p.set_defaults(func=cmd_core)

    p = sub.add_parser("schur", help="factorial Schur polynomial s_lam(x|t)")
    common(p)
    p.add_argument("--jt", action="store_true", help="use the Jacobi-Trudi determinant instead of tableaux")
    p.add_argument("--shift", type=int, default=0, help="use the shifted weights t_{i+shift}")
    p.set_defaults(func=cmd_schur)

    p = sub.add_parser("pieri", help="sigma_1 * sigma_lam by the quantum Pieri rule")
    common(p, n=True)
    p.set_defaults(func=cmd_pieri)

    p = sub.add_parser("verify", help="run identity checks")
    p.add_argument("suite", help="one of %s, or all" % ", ".join(identities.SUITES))
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--cache", metavar="PATH")
    p.add_argument("--jobs", type=int, default=1, metavar="M", help="run suites in M worker processes")
    p.add_argument("--max-d", type=int, default=2, help="largest q-degree in coefficient identities")
    p.add_argument("--sample", type=int, help="check a random sample of this many cases per identity")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--show", type=int, default=5, help="counterexamples printed per report")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args, out)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as exc:
        print("internal error: %s" % exc, file=sys.stderr)
        return EXIT_INTERNAL


def run():
    sys.exit(main())
