"""Reverse tableaux, barred reverse tableaux and reverse supertableaux.

All enumerators fill boxes in column order (columns left to right, bottom to
top inside a column). In that order the box below and the box to the left of
the current box are always filled already, so the row and column conditions
are checked locally and the output is lexicographic in the column word.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple, Sequence

from .partitions import Box, ChainR, Partition, conjugate


@dataclass(frozen=True)
class _Layout:
    """Column-order positions of a shape with links to neighbouring boxes."""

    shape: Partition
    boxes: tuple[Box, ...]
    below: tuple[int | None, ...]
    left: tuple[int | None, ...]

    @classmethod
    def of(cls, shape: Partition) -> _Layout:
        boxes = tuple(shape.column_order())
        where = {b: k for k, b in enumerate(boxes)}
        below = tuple(where.get(Box(b.row + 1, b.col)) for b in boxes)
        left = tuple(where.get(Box(b.row, b.col - 1)) for b in boxes)
        return cls(shape, boxes, below, left)


_LAYOUTS: dict[Partition, _Layout] = {}


def layout(shape: Partition) -> _Layout:
    shape = Partition(shape)
    if shape not in _LAYOUTS:
        _LAYOUTS[shape] = _Layout.of(shape)
    return _LAYOUTS[shape]


@dataclass(frozen=True)
class ReverseTableau:
    """Filling with rows weakly decreasing and columns strictly decreasing."""

    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def from_column_word(cls, shape: Partition, word: Sequence[int]) -> ReverseTableau:
        grid = [[0] * r for r in shape]
        for b, v in zip(layout(shape).boxes, word):
            grid[b.row - 1][b.col - 1] = v
        return cls(Partition(shape), tuple(tuple(r) for r in grid))

    def __getitem__(self, box: tuple[int, int]) -> int:
        i, j = box
        return self.rows[i - 1][j - 1]

    def entry(self, box: tuple[int, int]) -> int:
        return self[box]

    def column_word(self) -> tuple[int, ...]:
        return tuple(self[b] for b in layout(self.shape).boxes)

    def first_row(self) -> tuple[int, ...]:
        return self.rows[0] if self.rows else ()

    def __str__(self) -> str:
        return render(self.rows)


@dataclass(frozen=True)
class BarredTableau:
    """A reverse tableau with the boxes ``barred`` marked, compatible with ``chain``."""

    base: ReverseTableau
    barred: tuple[Box, ...]
    chain: ChainR

    @cached_property
    def region(self) -> dict[Box, Partition]:
        """Map from each unbarred box to the diagram of its region."""
        out = {}
        k = 0
        marked = set(self.barred)
        for b in layout(self.base.shape).boxes:
            if b in marked:
                k += 1
            else:
                out[b] = self.chain.steps[k]
        return out

    def barred_symbol(self) -> tuple[int, ...]:
        return tuple(self.base[b] for b in self.barred)

    def __str__(self) -> str:
        marked = set(self.barred)
        return render(
            [
                [f"{v}*" if Box(i, j) in marked else str(v) for j, v in enumerate(row, 1)]
                for i, row in enumerate(self.base.rows, 1)
            ]
        )


class SupertableauEntry(NamedTuple):
    value: int
    primed: bool = False

    def __str__(self) -> str:
        return f"{self.value}'" if self.primed else str(self.value)

    @property
    def unprimed(self) -> bool:
        return not self.primed


@dataclass(frozen=True)
class ReverseSupertableau:
    shape: Partition
    rows: tuple[tuple[SupertableauEntry, ...], ...]
    n: int

    @classmethod
    def from_column_word(cls, shape: Partition, word: Sequence[SupertableauEntry], n: int) -> ReverseSupertableau:
        grid: list[list] = [[None] * r for r in shape]
        for b, v in zip(layout(shape).boxes, word):
            grid[b.row - 1][b.col - 1] = v
        return cls(Partition(shape), tuple(tuple(r) for r in grid), n)

    def __getitem__(self, box: tuple[int, int]) -> SupertableauEntry:
        i, j = box
        return self.rows[i - 1][j - 1]

    def column_word(self) -> tuple[SupertableauEntry, ...]:
        return tuple(self[b] for b in layout(self.shape).boxes)

    def __str__(self) -> str:
        return render(self.rows)


@dataclass(frozen=True)
class BarredSupertableau:
    base: ReverseSupertableau
    barred: tuple[Box, ...]
    chain: ChainR

    @cached_property
    def region(self) -> dict[Box, Partition]:
        """Map from each unprimed unbarred box to the diagram of its region."""
        out = {}
        k = 0
        marked = set(self.barred)
        for b in layout(self.base.shape).boxes:
            if self.base[b].primed:
                continue
            if b in marked:
                k += 1
            else:
                out[b] = self.chain.steps[k]
        return out

    def __str__(self) -> str:
        marked = set(self.barred)
        return render(
            [
                [f"{e}*" if Box(i, j) in marked else str(e) for j, e in enumerate(row, 1)]
                for i, row in enumerate(self.base.rows, 1)
            ]
        )


def render(rows) -> str:
    """ASCII grid, one tableau row per line."""
    cells = [[str(c) for c in row] for row in rows]
    width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


# -- plain reverse tableaux ------------------------------------------------------


def iter_reverse_words(shape: Partition, n: int, first_row_bound: Sequence[int] | None = None) -> Iterator[list[int]]:
    """Column words of reverse tableaux of ``shape`` with entries in ``1..n``.

    ``first_row_bound[j-1]`` caps the entry in box ``(1, j)`` when given.
    """
    lay = layout(Partition(shape))
    size = len(lay.boxes)
    word = [0] * size

    def dfs(pos: int) -> Iterator[list[int]]:
        if pos == size:
            yield list(word)
            return
        box = lay.boxes[pos]
        lo = 1 if lay.below[pos] is None else word[lay.below[pos]] + 1
        hi = n if lay.left[pos] is None else min(n, word[lay.left[pos]])
        if first_row_bound is not None and box.row == 1:
            hi = min(hi, first_row_bound[box.col - 1])
        for v in range(lo, hi + 1):
            word[pos] = v
            yield from dfs(pos + 1)

    yield from dfs(0)


def enumerate_reverse_tableaux(lam, n: int) -> list[ReverseTableau]:
    lam = Partition(lam)
    if n < 1:
        raise ValueError("n must be positive")
    return [ReverseTableau.from_column_word(lam, w) for w in iter_reverse_words(lam, n)]


def is_bounded(tableau: ReverseTableau, nu) -> bool:
    """First-row test ``T(1, j) <= nu'_j`` for every column of the tableau."""
    cols = conjugate(nu)
    return all(v <= cols.part(j) for j, v in enumerate(tableau.first_row(), 1))


# -- barred reverse tableaux ----------------------------------------------------


def iter_barred_words(
    shape: Partition,
    chain: ChainR,
    cap: int,
    first_row_bound: Sequence[int] | None = None,
) -> Iterator[tuple[list[int], list[bool]]]:
    """Column words plus bar masks of tableaux in the barred set for ``chain``.

    Barred values must spell the chain's Yamanouchi symbol in column order.
    """
    lay = layout(Partition(shape))
    size = len(lay.boxes)
    symbol = chain.yamanouchi
    need = len(symbol)
    word = [0] * size
    bars = [False] * size

    def dfs(pos: int, k: int) -> Iterator[tuple[list[int], list[bool]]]:
        if size - pos < need - k:
            return
        if pos == size:
            yield list(word), list(bars)
            return
        box = lay.boxes[pos]
        lo = 1 if lay.below[pos] is None else word[lay.below[pos]] + 1
        hi = cap if lay.left[pos] is None else min(cap, word[lay.left[pos]])
        if first_row_bound is not None and box.row == 1:
            hi = min(hi, first_row_bound[box.col - 1])
        for v in range(lo, hi + 1):
            word[pos] = v
            bars[pos] = False
            yield from dfs(pos + 1, k)
            if k < need and symbol[k] == v:
                bars[pos] = True
                yield from dfs(pos + 1, k + 1)
                bars[pos] = False

    yield from dfs(0, 0)


def _first_row_bound(shape: Partition, bound: Partition) -> list[int]:
    cols = conjugate(bound)
    return [cols.part(j) for j in range(1, shape.part(1) + 1)]


def enumerate_barred(lam, chain: ChainR, bound=None, n: int | None = None) -> list[BarredTableau]:
    """Barred reverse tableaux of shape ``lam`` compatible with ``chain``.

    With ``bound`` the tableaux are restricted to ``bound``-bounded ones and the
    entry cap defaults to the number of rows of ``bound``. Without it an
    explicit cap ``n`` is required.
    """
    lam = Partition(lam)
    if not isinstance(chain, ChainR):
        raise TypeError("chain must be a ChainR")
    caps = []
    row_bound = None
    if bound is not None:
        bound = Partition(bound)
        caps.append(len(bound))
        row_bound = _first_row_bound(lam, bound)
    if n is not None:
        caps.append(n)
    if not caps:
        raise ValueError("an entry cap n is required when no bound is given")
    cap = min(caps)
    lay = layout(lam)
    out = []
    for word, bars in iter_barred_words(lam, chain, cap, row_bound):
        barred = tuple(b for b, flag in zip(lay.boxes, bars) if flag)
        out.append(BarredTableau(ReverseTableau.from_column_word(lam, word), barred, chain))
    return out


# -- reverse supertableaux ------------------------------------------------------


def _super_candidates(shape: Partition, n: int) -> list[list[SupertableauEntry]]:
    cols = conjugate(shape)
    out = []
    for b in layout(shape).boxes:
        low = cols.part(b.col) - b.col + 1
        out.append(
            [SupertableauEntry(v) for v in range(1, n + 1)]
            + [SupertableauEntry(v, True) for v in range(low, n + 1)]
        )
    return out


def _super_ok(entry: SupertableauEntry, below: SupertableauEntry | None, left: SupertableauEntry | None) -> bool:
    if entry.primed:
        if below is not None and (not below.primed or below.value > entry.value):
            return False
        if left is not None and left.primed and entry.value >= left.value:
            return False
    else:
        if left is not None and (left.primed or entry.value > left.value):
            return False
        if below is not None and not below.primed and entry.value <= below.value:
            return False
    return True


def iter_super_words(shape: Partition, n: int, chain: ChainR | None = None) -> Iterator[tuple[list, list[bool]]]:
    """Column words of reverse supertableaux; with ``chain``, also bar masks."""
    shape = Partition(shape)
    lay = layout(shape)
    size = len(lay.boxes)
    cands = _super_candidates(shape, n)
    symbol = chain.yamanouchi if chain is not None else ()
    need = len(symbol)
    word: list = [None] * size
    bars = [False] * size

    def dfs(pos: int, k: int):
        if pos == size:
            if k == need:
                yield list(word), list(bars)
            return
        if chain is not None and size - pos < need - k:
            return
        below = None if lay.below[pos] is None else word[lay.below[pos]]
        left = None if lay.left[pos] is None else word[lay.left[pos]]
        for e in cands[pos]:
            if not _super_ok(e, below, left):
                continue
            word[pos] = e
            bars[pos] = False
            yield from dfs(pos + 1, k)
            if not e.primed and k < need and symbol[k] == e.value:
                bars[pos] = True
                yield from dfs(pos + 1, k + 1)
                bars[pos] = False

    yield from dfs(0, 0)


def enumerate_reverse_supertableaux(lam, n: int) -> list[ReverseSupertableau]:
    lam = Partition(lam)
    if n < 1:
        raise ValueError("n must be positive")
    return [ReverseSupertableau.from_column_word(lam, w, n) for w, _ in iter_super_words(lam, n)]


def enumerate_barred_supertableaux(lam, chain: ChainR, n: int) -> list[BarredSupertableau]:
    lam = Partition(lam)
    if not isinstance(chain, ChainR):
        raise TypeError("chain must be a ChainR")
    if n < 1:
        raise ValueError("n must be positive")
    lay = layout(lam)
    out = []
    for word, bars in iter_super_words(lam, n, chain):
        barred = tuple(b for b, flag in zip(lay.boxes, bars) if flag)
        out.append(BarredSupertableau(ReverseSupertableau.from_column_word(lam, word, n), barred, chain))
    return out
