"""Littlewood-Richardson polynomials by the barred-tableau rule.

``lr_polynomial`` sums, over chains ``R`` from ``mu`` to ``nu`` and over
``nu``-bounded barred reverse ``lam``-tableaux compatible with ``R``, the
product over unbarred boxes of ``a_{T - rho_T} - a_{T - c}``, where ``rho`` is
the diagram of the region holding the box and ``c`` its content. Every factor
has the smaller index first, which makes the result positive in the
differences ``a_i - a_j`` with ``i < j``.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, NamedTuple

from .partitions import ChainR, Partition, contains, iter_chains
from .polyring import ZERO, FactoredTerm, Generator, Polynomial, gen
from .tableaux import _first_row_bound, iter_barred_words, iter_reverse_words, iter_super_words, layout


class LRResult(NamedTuple):
    polynomial: Polynomial
    terms: tuple[FactoredTerm, ...]


def _rule_terms(lam: Partition, chain: ChainR, cap: int, row_bound, left: str, right: str) -> Iterator[FactoredTerm]:
    boxes = layout(lam).boxes
    steps = chain.steps
    for word, bars in iter_barred_words(lam, chain, cap, row_bound):
        k = 0
        factors = []
        for b, v, barred in zip(boxes, word, bars):
            if barred:
                k += 1
                continue
            factors.append((gen(left, v - steps[k].part(v)), gen(right, v - b.content)))
        barred_at = tuple(p for p, flag in enumerate(bars) if flag)
        yield FactoredTerm(tuple(factors), 1, (chain.yamanouchi, tuple(word), barred_at))


@lru_cache(maxsize=None)
def lr_polynomial(lam, mu, nu) -> LRResult:
    """``c^nu_{lam mu}(a)`` expanded, plus the factored terms of the rule."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if not contains(mu, nu) or not contains(lam, nu):
        return LRResult(ZERO, ())
    if nu.weight - mu.weight > lam.weight:
        return LRResult(ZERO, ())
    cap = len(nu)
    row_bound = _first_row_bound(lam, nu)
    terms: list[FactoredTerm] = []
    total = ZERO
    for chain in iter_chains(mu, nu):
        for term in _rule_terms(lam, chain, cap, row_bound, "a", "a"):
            terms.append(term)
            total = total + term.expand()
    return LRResult(total, tuple(terms))


def rule_data(lam, mu, nu) -> Iterator[tuple[tuple[int, int, int], ...]]:
    """For each bounded barred tableau, the triples ``(T, rho_T, c)`` of its unbarred boxes."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if not contains(mu, nu) or not contains(lam, nu) or nu.weight - mu.weight > lam.weight:
        return
    boxes = layout(lam).boxes
    row_bound = _first_row_bound(lam, nu)
    for chain in iter_chains(mu, nu):
        steps = chain.steps
        for word, bars in iter_barred_words(lam, chain, len(nu), row_bound):
            k = 0
            out = []
            for b, v, barred in zip(boxes, word, bars):
                if barred:
                    k += 1
                else:
                    out.append((v, steps[k].part(v), b.content))
            yield tuple(out)


def lr_statistics(lam, mu, nu) -> dict[tuple[int, ...], int]:
    """Number of bounded barred tableaux per chain, keyed by Yamanouchi symbol."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    row_bound = _first_row_bound(lam, nu)
    return {
        chain.yamanouchi: sum(1 for _ in iter_barred_words(lam, chain, len(nu), row_bound))
        for chain in iter_chains(mu, nu)
    }


def _check_rows(n: int, **diagrams: Partition) -> None:
    if n < 1:
        raise ValueError("n must be positive")
    for name, d in diagrams.items():
        if len(d) > n:
            raise ValueError(f"{name}={tuple(d)} has more than n={n} rows")


@lru_cache(maxsize=None)
def lr_ab(lam, mu, nu, n: int) -> Polynomial:
    """Two-alphabet coefficient of ``s_nu(x||a)`` in ``s_lam(x||b) s_mu(x||a)``, ``x = x_1..x_n``.

    Sums over all barred tableaux with entries ``<= n``; no boundedness filter.
    """
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    _check_rows(n, lam=lam, mu=mu, nu=nu)
    if not contains(mu, nu):
        return ZERO
    total = ZERO
    for chain in iter_chains(mu, nu):
        for term in _rule_terms(lam, chain, n, None, "a", "b"):
            total = total + term.expand()
    return total


@lru_cache(maxsize=None)
def lr_ab_supertableau(lam, mu, nu, n: int) -> Polynomial:
    """The same coefficient as :func:`lr_ab`, summed over barred reverse supertableaux.

    Unprimed unbarred entries contribute ``a_{T - rho_T}``, primed entries
    ``-b_T``, barred entries nothing.
    """
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    _check_rows(n, lam=lam, mu=mu, nu=nu)
    if not contains(mu, nu):
        return ZERO
    acc: dict[tuple, int] = {}
    for chain in iter_chains(mu, nu):
        steps = chain.steps
        for word, bars in iter_super_words(lam, n, chain):
            k = 0
            sign = 1
            mono = []
            for e, barred in zip(word, bars):
                if e.primed:
                    sign = -sign
                    mono.append(gen("b", e.value))
                elif barred:
                    k += 1
                else:
                    mono.append(gen("a", e.value - steps[k].part(e.value)))
            key = tuple(sorted(mono))
            acc[key] = acc.get(key, 0) + sign
    terms = {}
    for key, c in acc.items():
        counts: dict[Generator, int] = {}
        for g in key:
            counts[g] = counts.get(g, 0) + 1
        terms[tuple(sorted(counts.items()))] = c
    return Polynomial(terms)


def candidate_nus(lam, mu) -> list[Partition]:
    """Diagrams that can carry a nonzero coefficient in the product expansion.

    ``nu`` contains ``lam`` and ``mu``, ``|nu| <= |lam| + |mu|``,
    ``nu_1 <= lam_1 + mu_1`` and ``nu'_1 <= lam'_1 + mu'_1``.
    """
    lam, mu = Partition(lam), Partition(mu)
    width = lam.part(1) + mu.part(1)
    height = len(lam) + len(mu)
    total = lam.weight + mu.weight
    out: list[Partition] = []

    def rows(i: int, prev: int, used: int, acc: list[int]) -> None:
        lo = max(lam.part(i), mu.part(i))
        if lo == 0:
            out.append(Partition(acc))
        if i > height:
            return
        for r in range(min(prev, total - used), max(lo, 1) - 1, -1):
            acc.append(r)
            rows(i + 1, r, used + r, acc)
            acc.pop()

    rows(1, width, 0, [])
    return sorted(set(out), key=expansion_order)


def expansion_order(nu: Partition):
    """Sort key: larger weight first, then reverse lexicographic."""
    return (-nu.weight, tuple(-p for p in nu))


@dataclass(frozen=True)
class ExpansionResult:
    """Coefficients of ``s_left * s_right`` in the double Schur basis."""

    left: Partition
    right: Partition
    coefficients: dict[Partition, Polynomial] = field(default_factory=dict)

    def __getitem__(self, nu) -> Polynomial:
        return self.coefficients.get(Partition(nu), ZERO)

    def __contains__(self, nu) -> bool:
        return Partition(nu) in self.coefficients

    def __iter__(self):
        return iter(self.coefficients)

    def __len__(self) -> int:
        return len(self.coefficients)

    def items(self):
        return self.coefficients.items()

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExpansionResult):
            return NotImplemented
        return self.coefficients == other.coefficients

    def to_json_obj(self) -> dict:
        return {
            "left": list(self.left),
            "right": list(self.right),
            "coefficients": [{"nu": list(nu), "poly": p.to_json_obj()} for nu, p in self.items()],
        }


def default_workers() -> int:
    """Thread count from ``LRPOLY_THREADS``; 1 when unset."""
    try:
        return max(1, int(os.environ.get("LRPOLY_THREADS", "1")))
    except ValueError:
        return 1


def expand_product(lam, mu, workers: int | None = None) -> ExpansionResult:
    """All nonzero ``c^nu_{lam mu}(a)``, in :func:`expansion_order`."""
    lam, mu = Partition(lam), Partition(mu)
    nus = candidate_nus(lam, mu)
    workers = default_workers() if workers is None else workers
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            polys = list(pool.map(lambda nu: lr_polynomial(lam, mu, nu).polynomial, nus))
    else:
        polys = [lr_polynomial(lam, mu, nu).polynomial for nu in nus]
    coeffs = {nu: p for nu, p in zip(nus, polys) if p}
    return ExpansionResult(lam, mu, coeffs)


def is_yamanouchi_word(word, mu: Partition, nu: Partition) -> bool:
    """True iff adding boxes in rows ``word`` to ``mu`` stays a partition and ends at ``nu``."""
    cur = list(mu) + [0] * len(word)
    for r in word:
        if r < 1 or r > len(cur):
            return False
        if r > 1 and cur[r - 2] <= cur[r - 1]:
            return False
        cur[r - 1] += 1
    return Partition(cur) == nu


def classical_lr(lam, mu, nu) -> int:
    """Number of ``nu``-bounded reverse ``lam``-tableaux whose column word is a chain's symbol."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if nu.weight != lam.weight + mu.weight or not contains(mu, nu) or not contains(lam, nu):
        return 0
    row_bound = _first_row_bound(lam, nu)
    return sum(
        1 for word in iter_reverse_words(lam, len(nu), row_bound) if is_yamanouchi_word(word, mu, nu)
    )
