"""Command line front end.

Subcommands: ``gen`` (print a family polynomial in the text format),
``certify`` (read a polynomial, print a certificate), ``sweep`` (run a
family sweep), ``paper-suite`` (the bundled end-to-end suite of worked
identities and certificates), and ``corpus verify``.

Exit codes: 0 success, 1 mathematical failure or refutation, 2 usage or
parse errors.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import __version__, corpus
from .certify import (
    bivariate_ulc,
    characteristic_polynomial,
    inertia,
    lorentzian_certify,
    quadratic_form_matrix,
)
from .polynomials import (
    Polynomial,
    PolynomialSyntaxError,
    format_polynomial,
    format_terms,
    normalize,
    parse_polynomial,
)
from .schubert import (
    Permutation,
    degree_polynomial,
    grassmannian_for,
    grothendieck,
    homogeneous_grothendieck,
    key_polynomial,
    schubert,
    schubert_dual,
)
from .symmetric import (
    Partition,
    SkewShape,
    StrictPartition,
    complement_partition,
    complete_homogeneous,
    kostka,
    schur,
    schur_p,
    skew_schur,
    verma_truncated_normalized,
)
from .sweeps import SweepBounds, SweepCapError, SweepSpec, run_sweep
from . import univariate

USAGE_ERROR = 2
MATH_FAILURE = 1


def _parse_int_list(text: str):
    text = text.strip()
    if not text:
        return ()
    return tuple(int(x) for x in text.split(","))


class UsageError(ValueError):
    """Bad command line arguments."""


def _generate(args) -> Polynomial:
    family = args.family
    if args.component is not None and family != "grothendieck":
        raise UsageError("--component only applies to the grothendieck family")
    if family == "schur":
        if args.lam is None or args.vars is None:
            raise UsageError("--lambda and --vars are required for schur")
        poly = schur(Partition(_parse_int_list(args.lam)), args.vars)
    elif family == "skew":
        if args.lam is None or args.vars is None:
            raise UsageError("--lambda and --vars are required for skew")
        shape = SkewShape(
            Partition(_parse_int_list(args.lam)),
            Partition(_parse_int_list(args.inner or "")),
        )
        poly = skew_schur(shape, args.vars)
    elif family == "schur_p":
        if args.lam is None or args.vars is None:
            raise UsageError("--lambda and --vars are required for schur_p")
        poly = schur_p(StrictPartition(_parse_int_list(args.lam)), args.vars)
    elif family == "key":
        if args.mu is None:
            raise UsageError("--mu is required for key")
        poly = key_polynomial(_parse_int_list(args.mu))
    elif family == "verma":
        if args.delta is None:
            raise UsageError("--delta is required for verma")
        poly = verma_truncated_normalized(_parse_int_list(args.delta))
    elif family in ("schubert", "schubert_dual", "grothendieck",
                    "grothendieck_homog", "degree"):
        if args.w is None:
            raise UsageError(f"--w is required for {family}")
        w = Permutation.from_string(args.w)
        if family == "schubert":
            poly = schubert(w)
        elif family == "schubert_dual":
            poly = schubert_dual(w)
        elif family == "grothendieck":
            poly = grothendieck(w)
            if args.component is not None:
                poly = poly.homogeneous_component(w.length() + args.component)
        elif family == "grothendieck_homog":
            poly = homogeneous_grothendieck(w)
        else:
            poly = degree_polynomial(w)
    else:
        raise UsageError(f"unknown family {family!r}")
    if args.component is not None and family != "grothendieck":
        raise UsageError("--component only applies to the grothendieck family")
    if args.normalize:
        poly = normalize(poly)
    if args.scale is not None:
        poly = poly * Fraction(args.scale)
    return poly


def _cmd_gen(args) -> int:
    poly = _generate(args)
    sys.stdout.write(format_polynomial(poly))
    return 0


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _cmd_certify(args) -> int:
    try:
        text = _read_input(args.input)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    try:
        poly = parse_polynomial(text)
    except PolynomialSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    certificate = lorentzian_certify(poly)
    if args.out == "json":
        print(json.dumps(certificate.to_dict(), indent=2, sort_keys=True))
    else:
        if certificate.is_lorentzian:
            print(f"Lorentzian (arity {certificate.arity}, degree {certificate.degree})")
        else:
            failure = certificate.failure
            print(f"NotLorentzian: {failure.kind} {failure.to_dict()}")
    return 0 if certificate.is_lorentzian else MATH_FAILURE


def _cmd_sweep(args) -> int:
    bounds = SweepBounds(
        boxes=args.boxes,
        parts=args.parts,
        vars=args.vars,
        n=args.n,
        delta=args.delta,
        max_part=args.max_part,
    )
    try:
        spec = SweepSpec(args.family, args.mode, bounds)
        report = run_sweep(spec, jobs=args.jobs, only=args.only)
    except (SweepCapError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if args.out == "json":
        print(report.to_json())
    else:
        print(report.to_text())
    return 0 if report.ok else MATH_FAILURE


def _suite_checks():
    """The fixed list of worked checks behind ``paper-suite``."""
    from .certify import InertiaSignature

    def quadratic_not_lorentzian():
        poly = corpus.load("schur-2.poly")
        if schur((2,), 2) != poly:
            return False, "generator disagrees with corpus display"
        certificate = lorentzian_certify(poly)
        if certificate.is_lorentzian:
            return False, "expected NotLorentzian"
        coeffs = characteristic_polynomial(quadratic_form_matrix(poly))
        expected = [Fraction(3, 4), Fraction(-2), Fraction(1)]  # (t - 3/2)(t - 1/2)
        if coeffs != expected:
            return False, f"characteristic polynomial {coeffs}"
        if not lorentzian_certify(normalize(poly)).is_lorentzian:
            return False, "normalization should certify"
        return True, "quadratic form eigenvalues 3/2, 1/2; normalized form certifies"

    def showcase_normalized_schur():
        display = corpus.load("normalized-schur-31111.poly")
        generated = normalize(schur((3, 1, 1, 1, 1), 5))
        if generated != display:
            return False, "generator disagrees with corpus display"
        if not lorentzian_certify(generated).is_lorentzian:
            return False, "expected Lorentzian"
        specialized = generated.specialize({2: 1, 3: 1, 4: 1, 5: 1}) * 6
        target = Polynomial(5, {(3, 0, 0, 0, 0): 1, (2, 0, 0, 0, 0): 6, (1, 0, 0, 0, 0): 13})
        if specialized != target:
            return False, f"specialization {format_terms(specialized)}"
        # 6 N(s)|_(x,1,1,1,1) = x (x^2 + 6x + 13); the quadratic has no real roots
        roots = univariate.count_real_roots([Fraction(13), Fraction(6), Fraction(1)])
        if roots != 0:
            return False, f"{roots} real roots"
        return True, "display matches, certifies, cubic factor has no real roots"

    def dual_complement_identity():
        lam = Partition((2, 1))
        lhs = schur(lam, 2).dualize((3, 3))
        rhs = schur(complement_partition(lam, 2, 3), 2)
        return lhs == rhs, "x^(3,3) s_(2,1)(1/x) equals the complementary Schur polynomial"

    def grassmannian_identity():
        kappa = Partition((2, 1))
        w = grassmannian_for(kappa, 2, 4)
        ok = schubert(w) == schur(kappa, 2).with_arity(4)
        return ok, f"Schubert polynomial of {w!r} equals the Schur polynomial of (2,1)"

    def staircase_and_small_displays():
        checks = [
            schubert(Permutation((3, 2, 1))) == corpus.load("schubert-321.poly"),
            schubert(Permutation((1, 3, 2))) == corpus.load("schubert-132.poly"),
            grothendieck(Permutation((1, 3, 2))) == corpus.load("grothendieck-132.poly"),
            key_polynomial((2, 1)) == Polynomial.monomial(2, (2, 1)),
            grothendieck(Permutation((1, 3, 2))).homogeneous_component(1)
            == schubert(Permutation((1, 3, 2))),
        ]
        return all(checks), "staircase, key monomial, lowest Grothendieck component"

    def character_display_certifies():
        poly = corpus.load("normalized-character-sl4.poly")
        return lorentzian_certify(poly).is_lorentzian, "bundled sl4 character certifies"

    def pieri_expansion():
        mu = (2, 1)
        product = complete_homogeneous(2, 2) * complete_homogeneous(1, 2)
        total = Polynomial.zero(2)
        for lam in (Partition((3,)), Partition((2, 1)), Partition((1, 1, 1))):
            total = total + kostka(lam, mu) * schur(lam, 2)
        return product == total, "h_2 h_1 equals the Kostka-weighted Schur sum"

    def non_lorentzian_quartic_pair():
        bad = []
        for line in ((1, 4, 2, 3), (1, 4, 3, 2)):
            if lorentzian_certify(schubert(Permutation(line))).is_lorentzian:
                bad.append(line)
        return not bad, "Schubert polynomials of 1423 and 1432 both refuse to certify"

    return [
        ("quadratic-counterexample", quadratic_not_lorentzian),
        ("normalized-schur-showcase", showcase_normalized_schur),
        ("dual-complement-identity", dual_complement_identity),
        ("grassmannian-identity", grassmannian_identity),
        ("small-displays", staircase_and_small_displays),
        ("character-display", character_display_certifies),
        ("pieri-expansion", pieri_expansion),
        ("non-lorentzian-pair", non_lorentzian_quartic_pair),
    ]


def _cmd_paper_suite(args) -> int:
    results = []
    for name, check in _suite_checks():
        try:
            ok, detail = check()
        except Exception as exc:  # noqa: BLE001 - a crash is a failed check
            ok, detail = False, f"exception: {exc}"
        results.append({"check": name, "ok": ok, "detail": detail})
    if args.out == "json":
        print(json.dumps({"results": results, "version": __version__},
                         indent=2, sort_keys=True))
    else:
        for entry in results:
            status = "PASS" if entry["ok"] else "FAIL"
            print(f"{status} {entry['check']}: {entry['detail']}")
    return 0 if all(entry["ok"] for entry in results) else MATH_FAILURE


def _cmd_corpus(args) -> int:
    if args.corpus_command == "verify":
        results = corpus.verify()
        failed = [r for r in results if not r[1]]
        for name, ok, detail in results:
            print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
        return 0 if not failed else MATH_FAILURE
    print("error: unknown corpus command", file=sys.stderr)
    return USAGE_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lorentz",
        description="Generate symmetric-group polynomial families and certify "
        "the Lorentzian property with exact arithmetic.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="print a family polynomial in the text format")
    gen.add_argument("--family", required=True)
    gen.add_argument("--lambda", dest="lam", help="partition, e.g. 3,1,1")
    gen.add_argument("--inner", help="inner partition for skew shapes")
    gen.add_argument("--mu", help="composition for key polynomials")
    gen.add_argument("--w", help="permutation in one-line notation, e.g. 1432")
    gen.add_argument("--delta", help="shift vector for verma, e.g. 1,1")
    gen.add_argument("--vars", type=int, help="number of variables")
    gen.add_argument("--component", type=int, help="grothendieck component index k")
    gen.add_argument("--normalize", action="store_true",
                     help="apply the x^mu -> x^mu/mu! operator to the output")
    gen.add_argument("--scale", help="multiply the output by a rational, e.g. -1")
    gen.set_defaults(func=_cmd_gen)

    certify = sub.add_parser("certify", help="certify or refute a polynomial file")
    certify.add_argument("input", help="path to a polynomial file, or - for stdin")
    certify.add_argument("--out", choices=("text", "json"), default="text")
    certify.set_defaults(func=_cmd_certify)

    sweep = sub.add_parser("sweep", help="run a family sweep")
    sweep.add_argument("--family", required=True)
    sweep.add_argument("--mode", choices=("certify", "support_only", "inequality"),
                       default="certify")
    sweep.add_argument("--boxes", type=int)
    sweep.add_argument("--parts", type=int)
    sweep.add_argument("--vars", type=int)
    sweep.add_argument("--n", type=int)
    sweep.add_argument("--delta", type=int)
    sweep.add_argument("--max-part", dest="max_part", type=int)
    sweep.add_argument("--jobs", type=int, default=0,
                       help="parallel workers (default: all available cores)")
    sweep.add_argument("--only", help="restrict to instance ids containing this string")
    sweep.add_argument("--out", choices=("text", "json"), default="text")
    sweep.set_defaults(func=_cmd_sweep)

    suite = sub.add_parser("paper-suite",
                           help="run the bundled suite of worked identities")
    suite.add_argument("--out", choices=("text", "json"), default="text")
    suite.set_defaults(func=_cmd_paper_suite)

    corpus_cmd = sub.add_parser("corpus", help="bundled polynomial data")
    corpus_sub = corpus_cmd.add_subparsers(dest="corpus_command", required=True)
    corpus_sub.add_parser("verify", help="re-parse corpus files and check hashes")
    corpus_cmd.set_defaults(func=_cmd_corpus)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", None) == 0:
        import os

        args.jobs = os.cpu_count() or 1
    try:
        return args.func(args)
    except SystemExit:
        raise
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
