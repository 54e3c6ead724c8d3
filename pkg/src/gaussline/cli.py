"""Command-line interface: ``gaussline <subcommand> ...``.

Exit codes: 0 for success or a positive answer, 1 for a negative answer
(non-member, not prime, counterexample, nothing found), 2 for usage errors
and exhausted budgets.
"""
from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from fractions import Fraction

from . import bertrand, kernels
from .crt import construct_line, crt_gaussian, crt_line
from .divisibility import (
    InertProfile,
    SplitProfile,
    TwoAdicProfile,
    exact_power_profile,
    gp_set_contains,
    query,
    rational_set,
)
from .gaussint import BudgetExceeded, GaussianInt, GaussLineError, ggcd, nu
from .line import GaussianLine
from .primality import (
    classify_prime,
    factor_gaussian,
    is_gaussian_prime,
    is_rational_prime,
    primality_regime,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    """Treats ``-1+2i``, ``-3;i`` and similar as values rather than options."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-[0-9i+\-;@:,]*$")

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


class _UsageError(GaussLineError):
    pass


# --- argument types ---------------------------------------------------------


def _gauss(text: str) -> GaussianInt:
    try:
        return GaussianInt.parse(text)
    except GaussLineError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _line(text: str) -> GaussianLine:
    try:
        return GaussianLine.parse(text)
    except GaussLineError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None


def _split_list(text: str, sep: str) -> list[tuple[str, str]]:
    out = []
    for item in filter(None, (s.strip() for s in text.split(","))):
        if item.count(sep) != 1:
            raise argparse.ArgumentTypeError(f"expected value{sep}value, got {item!r}")
        left, right = item.split(sep)
        out.append((left.strip(), right.strip()))
    if not out:
        raise argparse.ArgumentTypeError("empty list")
    return out


def _congruences(text: str) -> list[tuple[GaussianInt, GaussianInt]]:
    """``r:m,r:m,...`` meaning ``x = r (mod m)``."""
    return [(_gauss(r), _gauss(m)) for r, m in _split_list(text, ":")]


def _constraints(text: str) -> list[tuple[GaussianInt, int]]:
    """``mu@b,mu@b,...`` meaning ``mu`` divides the point at index ``b``."""
    return [(_gauss(mu), _int(b)) for mu, b in _split_list(text, "@")]


# --- output -----------------------------------------------------------------


def _emit_json(obj) -> None:
    print(json.dumps(obj, sort_keys=False))


def _fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _profile_dict(prof) -> dict:
    if isinstance(prof, TwoAdicProfile):
        return {"kind": "two_adic", "s": prof.s, "max_t": prof.max_t, "exact_ts": list(prof.exact_ts)}
    if isinstance(prof, SplitProfile):
        return {"kind": "split", "p": prof.p, "primes": [{"pi": str(pi), "member": ok} for pi, ok in prof.primes]}
    return {"kind": "inert", "p": prof.p, "s": prof.s}


def _profile_text(prof) -> list[str]:
    if isinstance(prof, TwoAdicProfile):
        return [f"s: {prof.s}", f"max_t: {prof.max_t}", "exact_ts: " + " ".join(map(str, prof.exact_ts))]
    if isinstance(prof, SplitProfile):
        return [f"{pi}: {'every power' if ok else 'none'}" for pi, ok in prof.primes]
    assert isinstance(prof, InertProfile)
    return [f"s: {prof.s}", f"exact_ks: 0..{prof.s}"]


# --- subcommands ------------------------------------------------------------


def _line_info(line: GaussianLine) -> dict:
    return {
        "line": str(line),
        "alpha0": str(line.alpha0),
        "delta": str(line.delta),
        "Delta": line.Delta,
        "primitive": line.primitive,
    }


def _show_line(args, line: GaussianLine) -> int:
    info = _line_info(line)
    if args.format == "json":
        _emit_json(info)
    else:
        for key in ("line", "Delta", "primitive"):
            print(f"{key}: {str(info[key]).lower() if key == 'primitive' else info[key]}")
    return EXIT_OK


def cmd_canon(args) -> int:
    if not args.direction:
        raise _UsageError("direction must be non-zero")
    return _show_line(args, GaussianLine.from_point_direction(args.point, args.direction))


def cmd_canon2(args) -> int:
    if args.p == args.q:
        raise _UsageError("the two points must differ")
    return _show_line(args, GaussianLine.from_two_points(args.p, args.q))


def cmd_point(args) -> int:
    value = args.line.point_at(args.n)
    if args.format == "json":
        _emit_json({"line": str(args.line), "n": args.n, "point": str(value)})
    else:
        print(value)
    return EXIT_OK


def cmd_norm(args) -> int:
    value = args.line.norm_at(args.n)
    if args.format == "json":
        _emit_json({"line": str(args.line), "n": args.n, "norm": value})
    else:
        print(value)
    return EXIT_OK


def cmd_nu(args) -> int:
    value = nu(args.beta)
    if args.format == "json":
        _emit_json({"beta": str(args.beta), "nu": value})
    else:
        print(value)
    return EXIT_OK


def cmd_gcd(args) -> int:
    value = ggcd(args.a, args.b)
    if args.format == "json":
        _emit_json({"a": str(args.a), "b": str(args.b), "gcd": str(value)})
    else:
        print(value)
    return EXIT_OK


def cmd_factor(args) -> int:
    fac = factor_gaussian(args.beta, args.budget)
    if args.format == "json":
        _emit_json({"beta": str(args.beta), "unit": str(fac.unit), "factors": [[str(pi), e] for pi, e in fac.factors]})
    else:
        print(fac)
    return EXIT_OK


def cmd_isprime(args) -> int:
    if args.rational:
        if args.beta.im:
            raise _UsageError(f"{args.beta} is not a rational integer")
        answer = is_rational_prime(args.beta.re)
        regime = primality_regime(args.beta.re)
    else:
        answer = is_gaussian_prime(args.beta)
        regime = primality_regime(args.beta.norm())
    if args.format == "json":
        _emit_json({"value": str(args.beta), "prime": answer})
    else:
        print(f"{'prime' if answer else 'not prime'} ({regime})")
    return EXIT_OK if answer else EXIT_NEGATIVE


def cmd_split(args) -> int:
    cls = classify_prime(args.p)
    if args.format == "json":
        _emit_json({"p": args.p, "tag": cls.tag.value, "witness": None if cls.witness is None else str(cls.witness)})
    else:
        print(cls)
    return EXIT_OK


def cmd_divides(args) -> int:
    wit = query(args.line, args.beta, args.budget)
    _emit_json(wit.to_dict())
    return EXIT_OK if wit.member else EXIT_NEGATIVE


def cmd_rset(args) -> int:
    args.line.require_primitive()
    members = None if args.line.Delta == 0 else rational_set(args.line)
    if args.format == "json":
        _emit_json({"line": str(args.line), "infinite": members is None, "members": members})
    else:
        print("all" if members is None else " ".join(map(str, members)))
    return EXIT_OK


def cmd_gpset(args) -> int:
    member = gp_set_contains(args.line, args.pi)
    if args.format == "json":
        _emit_json({"line": str(args.line), "pi": str(args.pi), "member": member})
    else:
        print("member" if member else "non-member")
    return EXIT_OK if member else EXIT_NEGATIVE


def cmd_profile(args) -> int:
    prof = exact_power_profile(args.line, args.p)
    if args.format == "json":
        _emit_json({"line": str(args.line), **_profile_dict(prof)})
    else:
        for row in _profile_text(prof):
            print(row)
    return EXIT_OK


def cmd_crt(args) -> int:
    sol = crt_gaussian(args.congruences)
    if args.format == "json":
        _emit_json({"value": str(sol.value), "modulus": str(sol.modulus)})
    else:
        print(sol)
    return EXIT_OK


def cmd_crtline(args) -> int:
    sol = crt_line(args.line, args.constraints, args.budget)
    if args.format == "json":
        _emit_json({"line": str(args.line), "t": sol.value, "modulus": sol.modulus})
    else:
        print(sol)
    return EXIT_OK


def cmd_mkline(args) -> int:
    line, plan = construct_line(
        args.constraints,
        args.lam,
        seed=args.seed,
        candidate_budget=args.budget,
        factor_budget=args.budget,
    )
    if args.format == "json":
        _emit_json({**_line_info(line), "plan": plan.to_dict()})
    else:
        print(line)
    return EXIT_OK


def _positive_int(text: str) -> int:
    value = _int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def cmd_bertrand(args) -> int:
    if args.resume and not args.checkpoint:
        raise _UsageError("--resume needs --checkpoint")
    if args.mirror and args.checkpoint:
        raise _UsageError("--checkpoint cannot be combined with --mirror")
    for line in args.lines:
        line.require_primitive()
    if args.nmax <= 1:
        raise _UsageError("--nmax must exceed 1")
    opts = dict(
        prime_bound=args.prime_bound,
        threads=args.threads,
        max_scan=args.max_scan,
        checkpoint=args.checkpoint,
        resume=args.resume,
    )
    reports, mirrored = [], []
    for line in args.lines:
        for flip in (False, True) if args.mirror else (False,):
            reports.append(bertrand.verify(line, args.nmax, args.mode, mirror=flip, **opts))
            mirrored.append(flip)
    if not args.timing:
        for rep in reports:
            rep.wall_time = None

    if args.format == "json":
        for rep in reports:
            _emit_json(rep.to_dict())
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(bertrand.CSV_HEADER)
        for rep in reports:
            writer.writerow(rep.csv_row())
    else:
        for rep, flip in zip(reports, mirrored):
            text = f"{rep.line} {rep.mode}{' (mirrored)' if flip else ''} n_max={rep.n_max}: {rep.verdict}"
            if rep.counterexample_n is not None:
                text += f" at n={rep.counterexample_n}"
            text += f" primes_found={rep.primes_found} max_window_fill={_fraction(rep.max_window_fill)}"
            if rep.wall_time is not None:
                text += f" wall_time={rep.wall_time:.3f}s"
            print(text)

    verdicts = {rep.verdict for rep in reports}
    if bertrand.BUDGET_EXHAUSTED in verdicts:
        return EXIT_ERROR
    return EXIT_NEGATIVE if bertrand.COUNTEREXAMPLE in verdicts else EXIT_OK


def cmd_apsearch(args) -> int:
    found = bertrand.prime_ap_search(args.line, args.k, args.bound, args.prime_bound)
    if args.format == "json":
        _emit_json({"line": str(args.line), "k": args.k, "bound": args.bound, "indices": found})
    else:
        print("none" if found is None else " ".join(map(str, found)))
    return EXIT_OK if found is not None else EXIT_NEGATIVE


def cmd_backend(args) -> int:
    if args.format == "json":
        _emit_json({"backend": kernels.BACKEND})
    else:
        print(kernels.BACKEND)
    return EXIT_OK


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("human", "json"), default="human")
    common.add_argument("--seed", type=_int, default=None, help="seed for randomized choices")
    common.add_argument("--budget", type=_positive_int, default=None,
                        help="factorization and prime-search budget (default: $GAUSSLINE_BUDGET or built-in)")

    parser = _Parser(prog="gaussline", description="Exact arithmetic on primitive Gaussian lines.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    def add(name, func, help_text, parents=(common,)):
        p = sub.add_parser(name, help=help_text, description=help_text, parents=list(parents))
        p.set_defaults(func=func)
        return p

    p = add("canon", cmd_canon, "canonical form of the line through a point with a direction")
    p.add_argument("point", type=_gauss)
    p.add_argument("direction", type=_gauss)

    p = add("canon2", cmd_canon2, "canonical form of the line through two points")
    p.add_argument("p", type=_gauss)
    p.add_argument("q", type=_gauss)

    for name, func, text in (("point", cmd_point, "the point at index n"), ("norm", cmd_norm, "the norm of the point at index n")):
        p = add(name, func, text)
        p.add_argument("line", type=_line)
        p.add_argument("n", type=_int)

    p = add("nu", cmd_nu, "least positive rational integer divisible by beta")
    p.add_argument("beta", type=_gauss)

    p = add("gcd", cmd_gcd, "canonical gcd of two Gaussian integers")
    p.add_argument("a", type=_gauss)
    p.add_argument("b", type=_gauss)

    p = add("factor", cmd_factor, "factor a Gaussian integer into canonical primes")
    p.add_argument("beta", type=_gauss)

    p = add("isprime", cmd_isprime, "Gaussian (or with --rational, rational) primality")
    p.add_argument("beta", type=_gauss)
    p.add_argument("--rational", action="store_true", help="test the rational integer for rational primality")

    p = add("split", cmd_split, "how a rational prime factors in Z[i]")
    p.add_argument("p", type=_int)

    p = add("divides", cmd_divides, "whether beta divides some point of the line, and where (JSON)")
    p.add_argument("line", type=_line)
    p.add_argument("beta", type=_gauss)

    p = add("rset", cmd_rset, "positive rational integers dividing some point")
    p.add_argument("line", type=_line)

    p = add("gpset", cmd_gpset, "whether a non-rational Gaussian prime divides some point")
    p.add_argument("line", type=_line)
    p.add_argument("pi", type=_gauss)

    p = add("profile", cmd_profile, "which powers of primes over p divide points exactly")
    p.add_argument("line", type=_line)
    p.add_argument("p", type=_int)

    p = add("crt", cmd_crt, "solve x = r (mod m) over Z[i]; congruences as r:m,r:m")
    p.add_argument("congruences", type=_congruences)

    p = add("crtline", cmd_crtline, "least t >= 0 with mu dividing the point at t+b; constraints as mu@b,mu@b")
    p.add_argument("line", type=_line)
    p.add_argument("constraints", type=_constraints)

    p = add("mkline", cmd_mkline, "construct a primitive line with mu dividing the point at b; constraints as mu@b,mu@b")
    p.add_argument("constraints", type=_constraints)
    p.add_argument("--lam", type=_gauss, default=None, help="scaling factor for the base point (default 1, or random with --seed)")

    bert_common = _Parser(add_help=False)
    bert_common.add_argument("--format", choices=("human", "json", "csv"), default="human")
    bert_common.add_argument("--seed", type=_int, default=None, help="accepted for uniformity; the verifier is deterministic")
    bert_common.add_argument("--budget", type=_positive_int, default=None, help="unused by the verifier; see --max-scan")
    p = add("bertrand", cmd_bertrand, "verify the weak or strong prime-gap statement on lines", parents=(bert_common,))
    p.add_argument("lines", type=_line, nargs="+", metavar="line")
    p.add_argument("--mode", choices=("weak", "strong"), default="weak")
    p.add_argument("--nmax", type=_int, required=True)
    p.add_argument("--checkpoint", default=None, metavar="PATH", help="append-only JSONL checkpoint file")
    p.add_argument("--resume", action="store_true", help="continue from the last checkpoint record")
    p.add_argument("--threads", type=_positive_int, default=None, help="worker threads (default: available CPUs)")
    p.add_argument("--prime-bound", type=_positive_int, default=bertrand.DEFAULT_PRIME_BOUND)
    p.add_argument("--mirror", action="store_true", help="also check the negative direction, reported separately")
    p.add_argument("--max-scan", type=_positive_int, default=None, help="stop after scanning this many indices per line")
    p.add_argument("--timing", action="store_true", help="report wall time (makes output run-dependent)")

    p = add("apsearch", cmd_apsearch, "least arithmetic progression of k prime indices up to a bound")
    p.add_argument("line", type=_line)
    p.add_argument("-k", type=_positive_int, required=True)
    p.add_argument("--bound", type=_int, required=True)
    p.add_argument("--prime-bound", type=_positive_int, default=bertrand.DEFAULT_PRIME_BOUND)

    add("backend", cmd_backend, "name the active scanning kernel")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"gaussline: budget exhausted: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except GaussLineError as exc:
        print(f"gaussline: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
