"""Double Schur polynomials ``s_lambda(x || a)`` and their evaluations.

``s_lambda(x_1..x_n || a)`` is the sum over reverse tableaux ``T`` with entries
in ``1..n`` of ``prod (x_{T(alpha)} - a_{T(alpha) - c(alpha)})``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable

from .partitions import Partition, conjugate
from .polyring import ONE, ZERO, Generator, Polynomial, difference, gen
from .tableaux import iter_super_words

FactorFn = Callable[[int, int, int], Polynomial]


def tableau_sum(lam, n: int, factor: FactorFn) -> Polynomial:
    """Sum over reverse ``lam``-tableaux with entries ``<= n`` of ``prod factor(i, j, T(i,j))``.

    Works column by column: the state is the current column read top to
    bottom, and each column's product is shared by every tableau through it.
    """
    lam = Partition(lam)
    cols = conjugate(lam)
    if not lam:
        return ONE
    if cols[0] > n:
        return ZERO
    states: dict[tuple[int, ...], Polynomial] = {(n + 1,) * cols[0]: ONE}
    for j, h in enumerate(cols, 1):
        weights: dict[tuple[int, ...], Polynomial] = {}
        nxt: dict[tuple[int, ...], Polynomial] = {}
        for col in combinations(range(n, 0, -1), h):
            w = ONE
            for i, e in enumerate(col, 1):
                w = w * factor(i, j, e)
                if not w:
                    break
            if w:
                weights[col] = w
        for prev, acc in states.items():
            for col, w in weights.items():
                if all(e <= p for e, p in zip(col, prev)):
                    nxt[col] = nxt.get(col, ZERO) + acc * w
        states = {k: v for k, v in nxt.items() if v}
    total = ZERO
    for v in states.values():
        total = total + v
    return total


@lru_cache(maxsize=None)
def double_schur(lam, n: int, x_family: str = "x", a_family: str = "a") -> Polynomial:
    lam = Partition(lam)
    if n < 1:
        raise ValueError("n must be positive")

    def factor(i: int, j: int, e: int) -> Polynomial:
        return difference(gen(x_family, e), gen(a_family, e - (j - i)))

    return tableau_sum(lam, n, factor)


@lru_cache(maxsize=None)
def double_schur_supertableau(lam, n: int) -> Polynomial:
    """Same polynomial as :func:`double_schur`, summed over reverse supertableaux.

    Unprimed entries ``k`` contribute ``x_k``, primed entries ``k'`` contribute ``-a_k``.
    """
    lam = Partition(lam)
    if n < 1:
        raise ValueError("n must be positive")
    cache: dict = {}
    total = ZERO
    for word, _ in iter_super_words(lam, n):
        key = tuple(sorted(word))
        if key not in cache:
            term = ONE
            for e in word:
                term = term * (-Polynomial.generator("a", e.value) if e.primed else Polynomial.generator("x", e.value))
            cache[key] = term
        total = total + cache[key]
    return total


def reindex_a_to_u(p: Polynomial, n: int) -> Polynomial:
    """Rename ``a_{n-i+1}`` to ``u_i``; ``a`` indices above ``n`` are rejected."""
    bad = [g for g in p.generators() if g.family == "a" and g.index > n]
    if bad:
        raise ValueError(f"a-generators with index > {n}: {sorted(bad)}")
    return p.substitute(lambda g: Polynomial.generator("u", n - g.index + 1) if g.family == "a" else None)


@dataclass(frozen=True)
class ASequencePoint:
    """The point ``a_rho = (a_{1-rho_1}, ..., a_{n-rho_n})``."""

    rho: Partition
    n: int
    family: str = "a"

    def __post_init__(self):
        object.__setattr__(self, "rho", Partition(self.rho))
        if len(self.rho) > self.n:
            raise ValueError(f"{tuple(self.rho)} has more than {self.n} rows")

    def component(self, i: int) -> Generator:
        return gen(self.family, i - self.rho.part(i))

    def components(self) -> tuple[Generator, ...]:
        return tuple(self.component(i) for i in range(1, self.n + 1))

    def total(self) -> Polynomial:
        acc = ZERO
        for g in self.components():
            acc = acc + Polynomial.of(g)
        return acc

    def substitution(self) -> dict[Generator, Polynomial]:
        return {gen("x", i): Polynomial.of(self.component(i)) for i in range(1, self.n + 1)}


@lru_cache(maxsize=None)
def eval_at_point(lam, rho, n: int, second: str = "a", point_family: str = "a") -> Polynomial:
    """``s_lam(a_rho || second)``: the double Schur polynomial at ``x = a_rho``.

    Substitutes factor by factor inside the tableau sum, so nothing is
    expanded before it has to be.
    """
    lam, point = Partition(lam), ASequencePoint(rho, n, point_family)

    def factor(i: int, j: int, e: int) -> Polynomial:
        return difference(point.component(e), gen(second, e - (j - i)))

    return tableau_sum(lam, n, factor)


@lru_cache(maxsize=None)
def vanishing_factors(lam, family: str = "a") -> tuple[tuple[Generator, Generator], ...]:
    """Factors ``(a_{i - lam_i}, a_{lam'_j - j + 1})`` over the boxes ``(i, j)``, row-major."""
    lam = Partition(lam)
    cols = conjugate(lam)
    return tuple(
        (gen(family, b.row - lam.part(b.row)), gen(family, cols.part(b.col) - b.col + 1))
        for b in lam.boxes()
    )


@lru_cache(maxsize=None)
def vanishing_product(lam, family: str = "a") -> Polynomial:
    """``s_lam(a_lam || a)`` in closed product form."""
    acc = ONE
    for u, v in vanishing_factors(lam, family):
        acc = acc * difference(u, v)
    return acc
