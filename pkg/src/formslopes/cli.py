"""Command-line front end.

Every subcommand produces a :class:`CommandResult`.  With ``--json`` it is
printed as ``{"status", "payload", "diagnostics"}``; otherwise a plain-text
rendering is printed.  Exit codes: 0 ok, 1 invalid-input,
2 precondition-violated, 3 certificate-failure.

All unbounded integers appear in JSON as decimal strings.  Counts, indices
(k, tau, exponents) and booleans are plain JSON values.
"""
import argparse
import json
import sys
from dataclasses import dataclass, field

from . import arith, family, forms, reps, slopes
from .errors import (
    CertificateFailure,
    FormSlopesError,
    InvalidInput,
    PreconditionViolated,
)

EXIT_CODES = {
    "ok": 0,
    "invalid-input": 1,
    "precondition-violated": 2,
    "certificate-failure": 3,
}


@dataclass
class CommandResult:
    status: str = "ok"
    payload: object = None
    diagnostics: list = field(default_factory=list)
    lines: list = field(default_factory=list)  # text rendering, not serialized

    @property
    def exit_code(self):
        return EXIT_CODES[self.status]

    def to_dict(self):
        return {
            "status": self.status,
            "payload": self.payload,
            "diagnostics": list(self.diagnostics),
        }


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InvalidInput(f"{self.prog}: {message}")


def _form_arg(text):
    return forms.BQF.parse(text)


def _slope_arg(text):
    return slopes.Slope.parse(text)


def _primes_arg(text):
    menu = []
    for token in text.replace(" ", "").split(","):
        base, _, exp = token.partition("^")
        try:
            menu.append((int(base), int(exp) if exp else 1))
        except ValueError:
            raise InvalidInput(f"bad prime list entry {token!r}") from None
    return menu


# -- handlers ---------------------------------------------------------------


def _signed(value):
    return f"{value:+d}" if value else "0"


def cmd_legendre(args):
    symbol = arith.legendre(args.a, args.p)
    payload = {"a": str(args.a), "p": str(args.p), "symbol": symbol}
    lines = [f"({args.a}/{args.p}) = {_signed(symbol)}"]
    result = CommandResult(payload=payload, lines=lines)
    if args.verify:
        squares = {x * x % args.p for x in range(1, args.p)}
        a = args.a % args.p
        brute = 0 if a == 0 else (1 if a in squares else -1)
        payload["brute_force"] = brute
        payload["agree"] = brute == symbol
        lines.append(f"brute force over squares mod {args.p}: {_signed(brute)}")
        if brute != symbol:
            result.status = "certificate-failure"
            result.diagnostics.append("reciprocity descent disagrees with brute force")
    return result


def cmd_factor(args):
    fac = arith.factorize(args.n, seed=args.seed)
    return CommandResult(
        payload=fac.to_dict(),
        lines=[f"{args.n} = {fac}", f"tau = {fac.tau}"],
    )


def cmd_forms(args):
    found = forms.enumerate_reduced(args.disc)
    payload = {
        "discriminant": str(args.disc),
        "class_number": len(found),
        "forms": [f.to_dict() for f in found],
    }
    lines = [f"class number h({args.disc}) = {len(found)}"]
    lines += [f"  ({f})" for f in found]
    return CommandResult(payload=payload, lines=lines)


def cmd_reduce(args):
    g, u = forms.reduce(args.form)
    payload = {"input": args.form.to_dict(), "reduced": g.to_dict(), "change": u.to_dict()}
    lines = [
        f"({args.form}) ~ ({g})",
        f"via (x, y) -> (p*x + q*y, r*x + s*y) with (p, q, r, s) = ({u.p}, {u.q}, {u.r}, {u.s})",
    ]
    return CommandResult(payload=payload, lines=lines)


def cmd_represent(args):
    if args.form is not None:
        targets = [args.form]
        disc = args.form.discriminant
    else:
        disc = args.disc
        targets = forms.enumerate_reduced(disc)
    sets = [reps.enumerate_representations(f, args.m, proper_only=args.proper) for f in targets]
    total = sum(s.count for s in sets)
    kind = "proper" if args.proper else "all"
    payload = {
        "m": str(args.m),
        "proper": args.proper,
        "count": total,
        "results": [s.to_dict(include_reps=not args.count_only) for s in sets],
    }
    lines = [str(total)] if args.count_only else [f"{total} {kind} representations of {args.m}"]
    if not args.count_only:
        for s in sets:
            lines.append(f"  ({s.form}): {s.count}")
            lines += [f"    ({x}, {y})" for x, y in s.reps]
    result = CommandResult(payload=payload, lines=lines)
    if args.check_formula:
        if disc % 4:
            raise PreconditionViolated(f"--check-formula needs a discriminant -4k, got {disc}")
        k = -disc // 4
        aggregate = sum(
            reps.enumerate_representations(f, args.m, proper_only=True).count
            for f in forms.enumerate_reduced(disc)
        )
        formula = reps.gauss_count(args.m, k)
        agree = formula == aggregate
        payload["formula"] = {"k": str(k), "count": formula, "aggregate": aggregate, "agree": agree}
        lines.append(
            f"formula 2*prod(1 + (-{k}/p)) = {formula}; brute force over all reduced "
            f"forms = {aggregate}; {'agree' if agree else 'DISAGREE'}"
        )
        if not agree:
            result.status = "certificate-failure"
            result.diagnostics.append("closed-form count disagrees with enumeration")
    return result


def _invariant_lines(invariants):
    width = max(len(str(inv.D_k)) for inv in invariants)
    out = [f"  {'k':>4}  {'n_k':>24}  {'D_k':>{width}}"]
    out += [f"  {inv.k:>4}  {inv.n_k:>24}  {inv.D_k:>{width}}" for inv in invariants]
    return out


def cmd_family(args):
    if args.N is not None:
        if args.primes is not None:
            raise InvalidInput("--primes cannot be combined with --N")
        N = args.N
    elif args.n is None and args.primes is None:
        raise InvalidInput("one of --n, --N or --primes is required")
    else:
        N = family.construct_N(args.n, primes=args.primes)
    fam = family.find_family(N)
    cert = family.certify_family(fam, args.kmax)
    payload = {"family": fam.to_dict(), "certificate": cert.to_dict()}
    if args.n is not None:
        payload["requested_n"] = args.n
    lines = [
        f"N = {N} = {fam.provenance}: {fam.positive_count} "
        f"slope{'s' if fam.positive_count != 1 else ''}, certificate ok to k = {args.kmax}",
        f"signed representations: {fam.signed_count}; slopes counting -p/q: "
        f"{fam.slope_count_with_signs}",
        "slopes:",
    ]
    lines += [f"  {s}" for s in fam.slopes]
    lines.append("surface invariants:")
    lines += _invariant_lines(cert.invariants)
    return CommandResult(payload=payload, lines=lines)


def cmd_surfaces(args):
    if args.slope is not None:
        A = args.slope.p ** 2 + 12 * args.slope.q ** 2
    else:
        A = args.A
    invariants = family.surface_invariants(A, args.kmax)
    payload = {"A": str(A), "invariants": [inv.to_dict() for inv in invariants]}
    lines = [f"A = {A}"] + _invariant_lines(invariants)
    return CommandResult(payload=payload, lines=lines)


def cmd_distance(args):
    d = slopes.distance(args.alpha, args.sigma)
    payload = {"alpha": args.alpha.to_dict(), "sigma": args.sigma.to_dict(), "distance": str(d)}
    return CommandResult(payload=payload, lines=[f"Delta({args.alpha}, {args.sigma}) = {d}"])


def cmd_verify_example(args):
    N = family.construct_N(primes=family.WORKED_EXAMPLE_PRIMES)
    if N != family.WORKED_EXAMPLE_N:
        raise CertificateFailure("example", f"reconstructed N = {N}, expected {family.WORKED_EXAMPLE_N}")
    fam = family.find_family(N)
    if args.corrupt:
        bad = slopes.Slope(fam.slopes[0].p, fam.slopes[0].q + 1)
        fam = family.SlopeFamily(fam.N, (bad,) + fam.slopes[1:], fam.provenance)
    found = [(s.p, s.q) for s in fam.slopes]
    expected = list(family.WORKED_EXAMPLE_PAIRS)
    matched = sum(1 for pair in expected if pair in found)
    payload = {
        "N": str(N),
        "expected_pairs": len(expected),
        "found_pairs": len(found),
        "matched": matched,
        "pass": False,
    }
    if found != expected:
        missing = [f"{p}/{q}" for p, q in expected if (p, q) not in found]
        raise CertificateFailure(
            "example",
            f"{matched}/{len(expected)} pairs matched; missing {', '.join(missing) or 'none'}",
            {"matched": matched},
        )
    cert = family.certify_family(fam, args.kmax)
    payload["certificate"] = {"k_max": cert.k_max, "checks": cert.checks, "ok": cert.ok}
    payload["pass"] = True
    lines = [
        f"pass: {matched}/{len(expected)} pairs matched for N = {N}",
        f"certificate clauses {', '.join(cert.checks)} hold for k = 1..{cert.k_max}",
    ]
    return CommandResult(payload=payload, lines=lines)


# -- parser -----------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="print the result as JSON")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS,
                        help="print only the headline result, no diagnostics")

    parser = _Parser(
        prog="formslopes",
        description="Quadratic forms, representation counts and slope families "
        "with equal p^2 + 12q^2.",
        epilog="exit codes: 0 ok, 1 invalid input, 2 precondition violated, "
        "3 certificate failure",
    )
    parser.add_argument("--json", action="store_true", help="print the result as JSON")
    parser.add_argument("--quiet", action="store_true",
                        help="print only the headline result, no diagnostics")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, handler, help, payload):
        p = sub.add_parser(name, parents=[common], help=help, description=help,
                           epilog=f"JSON payload: {payload}")
        p.set_defaults(handler=handler)
        return p

    p = add("legendre", cmd_legendre, "Legendre symbol (a/p) for an odd prime p",
            '{"a", "p", "symbol", ["brute_force", "agree"]}')
    p.add_argument("a", type=int)
    p.add_argument("p", type=int)
    p.add_argument("--verify", action="store_true", help="recompute by brute-force squares")

    p = add("factor", cmd_factor, "prime factorization and tau",
            '{"n", "factors": [{"prime", "exponent"}], "tau"}')
    p.add_argument("n", type=int)
    p.add_argument("--seed", type=int, default=None,
                   help="seed for the rho fallback (affects speed only)")

    p = add("forms", cmd_forms, "reduced forms of a negative discriminant",
            '{"discriminant", "class_number", "forms": [{"a", "b", "c"}]}')
    p.add_argument("--disc", type=int, required=True, help="discriminant, e.g. -48")

    p = add("reduce", cmd_reduce, "reduce a positive-definite form given as a,b,c",
            '{"input", "reduced", "change": {"p", "q", "r", "s"}}')
    p.add_argument("form", type=_form_arg)

    p = add("represent", cmd_represent, "enumerate representations of m",
            '{"m", "proper", "count", "results": [{"m", "form", "count", "reps"}], '
            '["formula": {"k", "count", "aggregate", "agree"}]}')
    p.add_argument("m", type=int)
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--form", type=_form_arg, help="a single form a,b,c")
    which.add_argument("--disc", type=int, help="all reduced forms of this discriminant")
    p.add_argument("--proper", action="store_true", help="only gcd(x, y) = 1")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--check-formula", action="store_true",
                   help="compare with the closed-form count for discriminant -4k")

    p = add("family", cmd_family, "slope family with equal p^2 + 12q^2 and its certificate",
            '{"family": {"N", "factorization", "slopes", "positive_count", "signed_count", '
            '"slope_count_with_signs"}, "certificate": {"N", "k_max", "slope_count", '
            '"checks", "ok", "invariants": [{"k", "n_k", "D_k"}]}, ["requested_n"]}')
    target = p.add_mutually_exclusive_group()
    target.add_argument("--n", type=int, help="construct N with at least n slopes")
    target.add_argument("--N", type=int, help="use this N directly")
    p.add_argument("--kmax", type=int, default=family.DEFAULT_KMAX)
    p.add_argument("--primes", type=_primes_arg, default=None,
                   help="explicit prime menu for m, e.g. 7,13,19,31,37 or 7^3,19")
    p.add_argument("--seed", type=int, default=None, help=argparse.SUPPRESS)

    p = add("surfaces", cmd_surfaces, "n_k and D_k for k = 1..kmax",
            '{"A", "invariants": [{"k", "n_k", "D_k"}]}')
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--A", type=int, help="the value p^2 + 12q^2")
    src.add_argument("--slope", type=_slope_arg, help="a slope p/q")
    p.add_argument("--kmax", type=int, default=10)

    p = add("distance", cmd_distance, "distance |ps - qr| between slopes p/q and r/s",
            '{"alpha": {"p", "q"}, "sigma": {"p", "q"}, "distance"}')
    p.add_argument("alpha", type=_slope_arg)
    p.add_argument("sigma", type=_slope_arg)

    p = add("verify-example", cmd_verify_example,
            "rebuild the 16-slope family for N = 7932652 and certify it",
            '{"N", "expected_pairs", "found_pairs", "matched", "pass", '
            '"certificate": {"k_max", "checks", "ok"}}')
    p.add_argument("--kmax", type=int, default=family.DEFAULT_KMAX)
    p.add_argument("--corrupt", action="store_true", help=argparse.SUPPRESS)

    return parser


def _status_for(exc):
    if isinstance(exc, CertificateFailure):
        return "certificate-failure"
    if isinstance(exc, PreconditionViolated):
        return "precondition-violated"
    return "invalid-input"


def run(argv=None):
    """Parse ``argv`` and execute; returns ``(CommandResult, as_json, quiet)``."""
    as_json = quiet = False
    try:
        args = build_parser().parse_args(argv)
        as_json, quiet = args.json, args.quiet
        result = args.handler(args)
    except FormSlopesError as exc:
        argv = sys.argv[1:] if argv is None else argv
        as_json = as_json or "--json" in argv
        quiet = quiet or "--quiet" in argv
        payload = getattr(exc, "witnesses", None) or None
        result = CommandResult(_status_for(exc), payload, [str(exc)])
    return result, as_json, quiet


def main(argv=None):
    result, as_json, quiet = run(argv)
    if as_json:
        print(json.dumps(result.to_dict(), indent=2))
    else:
        out = sys.stdout if result.status == "ok" else sys.stderr
        for line in result.lines[:1] if quiet else result.lines:
            print(line, file=out)
        if not quiet or not result.lines:
            prefix = "" if result.status == "ok" else f"{result.status}: "
            for diag in result.diagnostics:
                print(prefix + diag, file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
