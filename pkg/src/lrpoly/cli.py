"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 verification failure, 3 internal
invariant violation (for example an inexact division in the oracle).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence, TextIO

from .double_schur import double_schur, double_schur_supertableau
from .lr_rule import candidate_nus, classical_lr, expand_product, lr_ab, lr_polynomial
from .oracle import OracleError, expand_in_basis, natural_n, recurrence_check, verify_expansion
from .partitions import Partition, format_partition, parse_partition, partitions_up_to
from .polyring import NotDivisibleError, Polynomial, format_factored, is_positive_in_differences
from .specializations import GrassmannianContext, schubert_coeff, schubert_to_a, immanant_coeff

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _partition(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _render(p: Polynomial, fmt: str) -> str:
    if fmt == "json":
        return p.to_json()
    if fmt == "latex":
        return p.to_latex()
    return p.to_text()


def _render_lr(lam, mu, nu, args) -> str:
    result = lr_polynomial(lam, mu, nu)
    if args.factored and args.format != "json":
        return format_factored(list(result.terms), latex=args.format == "latex")
    return _render(result.polynomial, args.format)


def _render_table(rows: list[tuple[Partition, str]], fmt: str, lam, mu, raw: dict | None = None) -> str:
    if fmt == "json":
        return json.dumps(
            {"left": list(lam), "right": list(mu), "coefficients": [{"nu": list(nu), "value": raw[nu]} for nu, _ in rows]}
        )
    return "\n".join(f"{format_partition(nu)}: {value}" for nu, value in rows)


# -- subcommands -----------------------------------------------------------------


def cmd_lr(args, out: TextIO) -> int:
    print(_render_lr(args.lam, args.mu, args.nu, args), file=out)
    return EXIT_OK


def cmd_expand(args, out: TextIO) -> int:
    result = expand_product(args.lam, args.mu)
    if args.format == "json":
        print(json.dumps(result.to_json_obj()), file=out)
        return EXIT_OK
    rows = [(nu, _render_lr(args.lam, args.mu, nu, args)) for nu in result]
    print(_render_table(rows, args.format, args.lam, args.mu), file=out)
    return EXIT_OK


def cmd_schubert(args, out: TextIO) -> int:
    ctx = GrassmannianContext(args.n, args.m)
    ctx.check(lam=args.lam, mu=args.mu)
    if args.nu is not None:
        print(_render(schubert_coeff(args.lam, args.mu, args.nu, ctx, direct=args.direct), args.format), file=out)
        return EXIT_OK
    nus = [nu for nu in expand_product(args.lam, args.mu) if ctx.fits(nu)]
    values = {nu: schubert_coeff(args.lam, args.mu, nu, ctx, direct=args.direct) for nu in nus}
    rows = [(nu, _render(p, args.format)) for nu, p in values.items() if p]
    raw = {nu: p.to_json_obj() for nu, p in values.items()}
    print(_render_table(rows, args.format, args.lam, args.mu, raw), file=out)
    return EXIT_OK


def cmd_immanant(args, out: TextIO) -> int:
    if args.nu is not None:
        value = immanant_coeff(args.lam, args.mu, args.nu)
        print(json.dumps(value) if args.format == "json" else value, file=out)
        return EXIT_OK
    values = {nu: immanant_coeff(args.lam, args.mu, nu) for nu in candidate_nus(args.lam, args.mu)}
    rows = [(nu, str(v)) for nu, v in values.items() if v]
    print(_render_table(rows, args.format, args.lam, args.mu, values), file=out)
    return EXIT_OK


def cmd_classical(args, out: TextIO) -> int:
    value = classical_lr(args.lam, args.mu, args.nu)
    print(json.dumps(value) if args.format == "json" else value, file=out)
    return EXIT_OK


def cmd_double_schur(args, out: TextIO) -> int:
    p = double_schur_supertableau(args.lam, args.n) if args.supertableau else double_schur(args.lam, args.n)
    print(_render(p, args.format), file=out)
    return EXIT_OK


# -- verification suites -----------------------------------------------------------


def _pairs(w: int):
    ps = partitions_up_to(w)
    return [(lam, mu) for lam in ps for mu in ps]


def suite_symmetry(w: int) -> list[str]:
    bad = []
    for lam, mu in _pairs(w):
        left, right = expand_product(lam, mu), expand_product(mu, lam)
        if left != right:
            bad.append(f"{tuple(lam)} {tuple(mu)}")
    return bad


def suite_oracle(w: int) -> list[str]:
    bad = []
    for lam, mu in _pairs(w):
        n = natural_n(lam, mu)
        solved = expand_in_basis(double_schur(lam, n) * double_schur(mu, n), n)
        if solved != expand_product(lam, mu) or not verify_expansion(lam, mu):
            bad.append(f"{tuple(lam)} {tuple(mu)}")
    return bad


def suite_recurrence(w: int) -> list[str]:
    n = max(w, 1)
    ps = partitions_up_to(w)
    return [
        f"{tuple(lam)} {tuple(mu)} {tuple(nu)}"
        for lam in ps
        for mu in ps
        for nu in ps
        if not recurrence_check(lam, mu, nu, n)
    ]


def suite_positivity(w: int) -> list[str]:
    bad = []
    for lam, mu in _pairs(w):
        for nu in candidate_nus(lam, mu):
            if not all(is_positive_in_differences(t) for t in lr_polynomial(lam, mu, nu).terms):
                bad.append(f"{tuple(lam)} {tuple(mu)} {tuple(nu)}")
    return bad


def suite_stability(w: int) -> list[str]:
    bad = []
    for lam, mu in _pairs(w):
        n0 = max(1, len(lam) + len(mu))
        m0 = max(1, lam.part(1) + mu.part(1))
        for nu, c in expand_product(lam, mu).items():
            for n, m in ((n0, m0), (n0 + 1, m0 + 2)):
                ctx = GrassmannianContext(n, m)
                if schubert_to_a(schubert_coeff(lam, mu, nu, ctx), ctx) != c:
                    bad.append(f"{tuple(lam)} {tuple(mu)} {tuple(nu)} at n={n} m={m}")
    return bad


def suite_base_case(w: int) -> list[str]:
    from .double_schur import eval_at_point

    n = max(w, 1)
    bad = []
    for lam, mu in _pairs(w):
        if lr_ab(lam, mu, mu, n) != eval_at_point(lam, mu, n, "b"):
            bad.append(f"{tuple(lam)} {tuple(mu)}")
    return bad


SUITES: dict[str, Callable[[int], list[str]]] = {
    "symmetry": suite_symmetry,
    "oracle-agreement": suite_oracle,
    "recurrence": suite_recurrence,
    "positivity": suite_positivity,
    "stability": suite_stability,
    "base-case": suite_base_case,
}


def cmd_verify(args, out: TextIO) -> int:
    failed = False
    report = {}
    for name, suite in SUITES.items():
        bad = suite(args.max_weight)
        failed |= bool(bad)
        report[name] = bad
        if args.format != "json":
            status = "ok" if not bad else f"FAIL ({len(bad)}): {bad[0]}"
            print(f"{name}: {status}", file=out)
    if args.format == "json":
        print(json.dumps({"max_weight": args.max_weight, "failures": report}), file=out)
    return EXIT_VERIFY if failed else EXIT_OK


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lrpoly", description="Littlewood-Richardson polynomials and their specializations.")
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "latex"), default="text")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text, lam=True, mu=True, nu: str | None = None):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if lam:
            p.add_argument("--lambda", dest="lam", type=_partition, required=True)
        if mu:
            p.add_argument("--mu", type=_partition, required=True)
        if nu == "required":
            p.add_argument("--nu", type=_partition, required=True)
        elif nu == "optional":
            p.add_argument("--nu", type=_partition, default=None)
        p.set_defaults(func=func)
        return p

    p = add("lr", cmd_lr, "coefficient c^nu_{lambda mu}(a)", nu="required")
    p.add_argument("--factored", action="store_true")
    p = add("expand", cmd_expand, "all coefficients of s_lambda * s_mu")
    p.add_argument("--factored", action="store_true")
    p = add("schubert", cmd_schubert, "equivariant Schubert structure constants", nu="optional")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--direct", action="store_true", help="enumerate tableaux instead of specializing")
    add("immanant", cmd_immanant, "quantum immanant structure constants", nu="optional")
    add("classical", cmd_classical, "classical Littlewood-Richardson coefficient", nu="required")
    p = add("double-schur", cmd_double_schur, "expand s_lambda(x || a)", mu=False)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--supertableau", action="store_true")
    p = add("verify", cmd_verify, "run the verification suites", lam=False, mu=False)
    p.add_argument("--max-weight", type=int, default=3)
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"lrpoly: error: {exc}", file=err)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except (OracleError, NotDivisibleError) as exc:
        print(f"lrpoly: internal error: {exc}", file=err)
        return EXIT_INTERNAL
    except ValueError as exc:
        print(f"lrpoly: error: {exc}", file=err)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
