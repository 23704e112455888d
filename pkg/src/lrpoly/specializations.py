"""Equivariant Schubert and quantum-immanant structure constants.

Both are specializations of the Littlewood-Richardson polynomials. On
``Gr(n, N)`` with ``N = n + m`` the parameters become ``a_j = -t_{m+j}`` for
``-m+1 <= j <= n`` and ``a_j = 0`` otherwise; quantum immanants use
``a_i = -i``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lr_rule import lr_polynomial, rule_data
from .partitions import Partition
from .polyring import ONE, ZERO, Generator, Polynomial


@dataclass(frozen=True)
class GrassmannianContext:
    n: int
    m: int

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError(f"n and m must be positive, got n={self.n}, m={self.m}")

    @property
    def N(self) -> int:
        return self.n + self.m

    def fits(self, lam) -> bool:
        lam = Partition(lam)
        return len(lam) <= self.n and lam.part(1) <= self.m

    def check(self, **diagrams) -> None:
        for name, d in diagrams.items():
            if not self.fits(d):
                raise ValueError(f"{name}={tuple(Partition(d))} does not fit the {self.n}x{self.m} rectangle")

    def t(self, k: int) -> Polynomial:
        """``t_k``, or zero when ``k`` is outside ``1..N``."""
        return Polynomial.generator("t", k) if 1 <= k <= self.N else ZERO

    def a_image(self, j: int) -> Polynomial:
        return -self.t(self.m + j)


def specialize_to_schubert(p: Polynomial, ctx: GrassmannianContext) -> Polynomial:
    """Replace ``a_j`` by ``-t_{m+j}``, or by 0 outside ``-m+1 <= j <= n``."""

    def image(g: Generator):
        return ctx.a_image(g.index) if g.family == "a" else None

    return p.substitute(image)


def schubert_to_a(p: Polynomial, ctx: GrassmannianContext) -> Polynomial:
    """Inverse renaming ``t_k -> -a_{k-m}``, for comparisons across contexts."""
    return p.substitute(lambda g: -Polynomial.generator("a", g.index - ctx.m) if g.family == "t" else None)


def schubert_factor(entry: int, region: int, content: int, ctx: GrassmannianContext) -> tuple[int, int]:
    """Indices ``(i, j)`` of the factor ``t_i - t_j`` for one unbarred box."""
    return ctx.m + entry - content, ctx.m + entry - region


def schubert_coeff_direct(lam, mu, nu, ctx: GrassmannianContext) -> Polynomial:
    """``d^nu_{lam mu}`` summed straight from the bounded barred tableaux."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    ctx.check(lam=lam, mu=mu, nu=nu)
    total = ZERO
    for boxes in rule_data(lam, mu, nu):
        term = ONE
        for entry, region, content in boxes:
            i, j = schubert_factor(entry, region, content, ctx)
            term = term * (ctx.t(i) - ctx.t(j))
            if not term:
                break
        total = total + term
    return total


def schubert_coeff(lam, mu, nu, ctx: GrassmannianContext, direct: bool = False) -> Polynomial:
    """Equivariant Schubert structure constant ``d^nu_{lam mu}`` in ``t_1..t_N``."""
    if direct:
        return schubert_coeff_direct(lam, mu, nu, ctx)
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    ctx.check(lam=lam, mu=mu, nu=nu)
    return specialize_to_schubert(lr_polynomial(lam, mu, nu).polynomial, ctx)


def specialize_shifted(p: Polynomial) -> Polynomial:
    """Set ``a_i = -i``."""
    return p.substitute(lambda g: Polynomial.constant(-g.index) if g.family == "a" else None)


def immanant_factors(lam, mu, nu) -> list[tuple[int, ...]]:
    """Per tableau, the integer factors ``rho_T - c`` of its unbarred boxes."""
    return [tuple(region - content for _, region, content in boxes) for boxes in rule_data(lam, mu, nu)]


def immanant_coeff(lam, mu, nu) -> int:
    """Quantum-immanant structure constant ``f^nu_{lam mu}``."""
    total = 0
    for factors in immanant_factors(lam, mu, nu):
        term = 1
        for f in factors:
            term *= f
        total += term
    return total


def immanant_coeff_specialized(lam, mu, nu) -> int:
    p = specialize_shifted(lr_polynomial(lam, mu, nu).polynomial)
    return p.constant_term()
