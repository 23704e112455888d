"""Partitions, boxes, containment and chains of diagrams.

Rows and columns are 1-indexed throughout, so box ``(i, j)`` sits in row ``i``
and column ``j`` and has content ``j - i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))`` and hashes the same.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for i, p in enumerate(parts):
            if p < 0:
                raise ValueError(f"negative part {p} in partition {tuple(parts)}")
            if i and p > parts[i - 1]:
                raise ValueError(f"parts are not weakly decreasing: {tuple(parts)}")
            if p == 0:
                raise ValueError(f"zero part before a positive part: {tuple(parts)}")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return format_partition(self)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        """Number of nonzero rows."""
        return len(self)

    def part(self, i: int) -> int:
        """Row length ``λ_i`` (1-indexed); zero past the last row."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> Partition:
        return conjugate(self)

    def boxes(self) -> list[Box]:
        """Boxes in row-major order."""
        return [Box(i, j) for i, row in enumerate(self, 1) for j in range(1, row + 1)]

    def column_order(self) -> list[Box]:
        """Boxes by columns left to right, bottom to top within a column."""
        cols = conjugate(self)
        return [Box(i, j) for j, h in enumerate(cols, 1) for i in range(h, 0, -1)]

    def addable_rows(self, max_rows: int | None = None) -> list[int]:
        rows = [i for i in range(1, len(self) + 2) if i == 1 or self.part(i - 1) > self.part(i)]
        if max_rows is not None:
            rows = [r for r in rows if r <= max_rows]
        return rows

    def removable_rows(self) -> list[int]:
        return [i for i in range(1, len(self) + 1) if self.part(i) > self.part(i + 1)]

    def add_box(self, row: int) -> Partition:
        parts = list(self) + [0]
        parts[row - 1] += 1
        return Partition(parts)

    def remove_box(self, row: int) -> Partition:
        parts = list(self)
        parts[row - 1] -= 1
        return Partition(parts)

    def covers_up(self, max_rows: int | None = None) -> list[Partition]:
        """Partitions obtained by adding one box."""
        return [self.add_box(r) for r in self.addable_rows(max_rows)]

    def covers_down(self) -> list[Partition]:
        """Partitions obtained by removing one box."""
        return [self.remove_box(r) for r in self.removable_rows()]


class Box(NamedTuple):
    row: int
    col: int

    @property
    def content(self) -> int:
        return self.col - self.row


EMPTY = Partition()


def content(box: Box) -> int:
    return box.col - box.row


def conjugate(lam: Iterable[int]) -> Partition:
    lam = Partition(lam)
    if not lam:
        return EMPTY
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def contains(sigma: Iterable[int], rho: Iterable[int]) -> bool:
    """True iff the diagram of ``sigma`` sits inside the diagram of ``rho``."""
    sigma, rho = Partition(sigma), Partition(rho)
    return len(sigma) <= len(rho) and all(s <= r for s, r in zip(sigma, rho))


def parse_partition(text: str) -> Partition:
    """Parse ``"4,2,1"``; ``"-"`` or the empty string give the empty partition."""
    text = text.strip()
    if text in ("", "-", "∅"):
        return EMPTY
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed partition {text!r}") from None
    return Partition(parts)


def format_partition(lam: Iterable[int]) -> str:
    lam = tuple(lam)
    return ",".join(map(str, lam)) if lam else "-"


def partitions_of(n: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield EMPTY
        return
    if max_len == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first, None if max_len is None else max_len - 1):
            yield Partition((first, *rest))


def partitions_up_to(max_weight: int, max_len: int | None = None, max_part: int | None = None) -> list[Partition]:
    """All partitions with weight at most ``max_weight``, by weight."""
    return [p for w in range(max_weight + 1) for p in partitions_of(w, max_part=max_part, max_len=max_len)]


@dataclass(frozen=True)
class ChainR:
    """A chain ``mu = steps[0] -> ... -> steps[l] = nu`` adding one box per step."""

    steps: tuple[Partition, ...]
    yamanouchi: tuple[int, ...]

    def __post_init__(self):
        if not self.steps:
            raise ValueError("a chain needs at least its starting diagram")
        if len(self.yamanouchi) != len(self.steps) - 1:
            raise ValueError("Yamanouchi symbol length does not match the number of steps")
        for k, r in enumerate(self.yamanouchi, 1):
            prev, cur = self.steps[k - 1], self.steps[k]
            if not isinstance(cur, Partition) or cur.weight != prev.weight + 1:
                raise ValueError(f"step {k} does not add exactly one box")
            if r not in prev.addable_rows() or prev.add_box(r) != cur:
                raise ValueError(f"step {k} does not add a box in row {r}")

    @classmethod
    def from_yamanouchi(cls, mu: Iterable[int], symbol: Iterable[int]) -> ChainR:
        steps = [Partition(mu)]
        symbol = tuple(symbol)
        for r in symbol:
            if r not in steps[-1].addable_rows():
                raise ValueError(f"cannot add a box in row {r} to {tuple(steps[-1])}")
            steps.append(steps[-1].add_box(r))
        return cls(tuple(steps), symbol)

    @property
    def start(self) -> Partition:
        return self.steps[0]

    @property
    def end(self) -> Partition:
        return self.steps[-1]

    def __len__(self) -> int:
        return len(self.yamanouchi)


def enumerate_chains(mu: Iterable[int], nu: Iterable[int]) -> list[ChainR]:
    """All chains from ``mu`` to ``nu``, lexicographically smallest symbol first."""
    mu, nu = Partition(mu), Partition(nu)
    if not contains(mu, nu):
        raise ValueError(f"{tuple(mu)} is not contained in {tuple(nu)}")
    return list(iter_chains(mu, nu))


def iter_chains(mu: Partition, nu: Partition) -> Iterator[ChainR]:
    """Lazy version of :func:`enumerate_chains`; yields nothing when ``mu`` is not inside ``nu``."""
    if not contains(mu, nu):
        return
    steps = [mu]
    symbol: list[int] = []

    def dfs() -> Iterator[ChainR]:
        cur = steps[-1]
        if cur == nu:
            yield ChainR(tuple(steps), tuple(symbol))
            return
        for r in cur.addable_rows(len(nu)):
            if cur.part(r) < nu.part(r):
                steps.append(cur.add_box(r))
                symbol.append(r)
                yield from dfs()
                steps.pop()
                symbol.pop()

    yield from dfs()
