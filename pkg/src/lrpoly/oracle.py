"""Independent checks of the rule.

The main tool is a triangular solve: ``s_sigma(a_rho || a)`` vanishes unless
``sigma`` is contained in ``rho`` and equals a known product of differences
when ``sigma == rho``. Processing ``rho`` by weight therefore peels off the
coefficients of any symmetric polynomial in the double Schur basis one at a
time, with one exact division per box of ``rho``.
"""

from __future__ import annotations

from typing import Callable

from .double_schur import ASequencePoint, double_schur, eval_at_point, vanishing_factors
from .lr_rule import ExpansionResult, expand_product, expansion_order, lr_ab
from .partitions import EMPTY, Partition, contains, partitions_up_to
from .polyring import ZERO, NotDivisibleError, Polynomial, difference, gen


class OracleError(RuntimeError):
    """Exact division failed or a residual did not vanish."""


def _solve(
    evaluate: Callable[[Partition], Polynomial], max_weight: int, max_part: int, n: int, alphabet: str
) -> dict[Partition, Polynomial]:
    coeffs: dict[Partition, Polynomial] = {}
    for rho in partitions_up_to(max_weight, max_len=n, max_part=max_part):
        value = evaluate(rho)
        for sigma, c in coeffs.items():
            if contains(sigma, rho):
                value = value - c * eval_at_point(sigma, rho, n, alphabet, alphabet)
        if not value:
            continue
        for u, v in vanishing_factors(rho, alphabet):
            try:
                value = value.divide_exact_linear(difference(u, v))
            except NotDivisibleError as exc:
                raise OracleError(f"division by {u}-{v} failed while solving for {tuple(rho)}: {exc}") from exc
        coeffs[rho] = value
    return coeffs


def _ordered(coeffs: dict[Partition, Polynomial]) -> dict[Partition, Polynomial]:
    return {nu: coeffs[nu] for nu in sorted(coeffs, key=expansion_order)}


def expand_in_basis(P: Polynomial, n: int, alphabet: str = "a", check_residual: bool = True) -> ExpansionResult:
    """Coefficients ``c_rho`` with ``P = sum c_rho s_rho(x_1..x_n || alphabet)``.

    ``P`` is a polynomial in ``x_1..x_n`` (and parameters). Raises
    :class:`OracleError` if a division is inexact or the residual is nonzero,
    which means ``P`` is not in the span.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not P:
        return ExpansionResult(EMPTY, EMPTY, {})
    max_weight = max(P.degree("x"), 0)
    # deg_{x_1} s_rho = rho_1 and the leading coefficients are independent
    max_part = max(P.degree_in(gen("x", 1)), 0)

    def evaluate(rho: Partition) -> Polynomial:
        return P.substitute(ASequencePoint(rho, n, alphabet).substitution())

    coeffs = _solve(evaluate, max_weight, max_part, n, alphabet)
    if check_residual:
        residual = P
        for rho, c in coeffs.items():
            residual = residual - c * double_schur(rho, n, "x", alphabet)
        if residual:
            raise OracleError(f"nonzero residual after the triangular solve: {residual}")
    return ExpansionResult(EMPTY, EMPTY, _ordered(coeffs))


def expand_product_in_basis(lam, mu, n: int, left_alphabet: str = "a") -> ExpansionResult:
    """Triangular solve for ``s_lam(x || left_alphabet) * s_mu(x || a)`` in the ``s(x || a)`` basis.

    Evaluates each factor at ``a_rho`` separately instead of expanding the
    product first. ``left_alphabet="b"`` gives the two-alphabet coefficients.
    """
    lam, mu = Partition(lam), Partition(mu)
    if len(lam) > n or len(mu) > n:
        return ExpansionResult(lam, mu, {})

    def evaluate(rho: Partition) -> Polynomial:
        left = eval_at_point(lam, rho, n, left_alphabet)
        return left * eval_at_point(mu, rho, n) if left else ZERO

    coeffs = _solve(evaluate, lam.weight + mu.weight, lam.part(1) + mu.part(1), n, "a")
    return ExpansionResult(lam, mu, _ordered(coeffs))


def natural_n(lam, mu) -> int:
    """``lam'_1 + mu'_1``, the number of variables that sees every term."""
    return max(1, len(Partition(lam)) + len(Partition(mu)))


def verify_expansion(lam, mu) -> bool:
    """Check ``s_lam s_mu = sum_nu c^nu s_nu`` as a polynomial identity in ``lam'_1 + mu'_1`` variables."""
    lam, mu = Partition(lam), Partition(mu)
    n = natural_n(lam, mu)
    diff = double_schur(lam, n) * double_schur(mu, n)
    for nu, c in expand_product(lam, mu).items():
        if len(nu) <= n:
            diff = diff - c * double_schur(nu, n)
    return diff.is_zero()


def recurrence_sides(lam, mu, nu, n: int) -> tuple[Polynomial, Polynomial]:
    """Both sides of ``(|a_nu| - |a_mu|) c^nu_{lam mu}(a,b) = sum_{mu+} c^nu_{lam mu+} - sum_{nu-} c^{nu-}_{lam mu}``."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    weight = ASequencePoint(nu, n).total() - ASequencePoint(mu, n).total()
    lhs = weight * lr_ab(lam, mu, nu, n)
    rhs = ZERO
    for up in mu.covers_up(max_rows=n):
        rhs = rhs + lr_ab(lam, up, nu, n)
    for down in nu.covers_down():
        rhs = rhs - lr_ab(lam, mu, down, n)
    return lhs, rhs


def recurrence_check(lam, mu, nu, n: int) -> bool:
    lhs, rhs = recurrence_sides(lam, mu, nu, n)
    return lhs == rhs
