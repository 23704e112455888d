import pytest
from hypothesis import given
from hypothesis import strategies as st

import bruteforce as bf
from conftest import partitions
from lrpoly.partitions import ChainR, Partition, contains, iter_chains
from lrpoly.polyring import ZERO, generator
from lrpoly.tableaux import (
    BarredTableau,
    ReverseTableau,
    enumerate_barred,
    enumerate_barred_supertableaux,
    enumerate_reverse_supertableaux,
    enumerate_reverse_tableaux,
    is_bounded,
)


def _as_dict(t: ReverseTableau):
    return {(i, j): v for i, row in enumerate(t.rows, 1) for j, v in enumerate(row, 1)}


def _super_dict(t):
    return {(i, j): (e.value, e.primed) for i, row in enumerate(t.rows, 1) for j, e in enumerate(row, 1)}


def _contribution(bt: BarredTableau):
    term = generator("a", 0) ** 0
    for box, rho in bt.region.items():
        v = bt.base[box]
        term = term * (generator("a", v - rho.part(v)) - generator("a", v - box.content))
    return term


def test_two_reverse_tableaux_for_21():
    ts = enumerate_reverse_tableaux((2, 1), 2)
    assert sorted(t.rows for t in ts) == [((2, 1), (1,)), ((2, 2), (1,))]


def test_column_word_roundtrip():
    t = ReverseTableau.from_column_word(Partition((3, 2)), [1, 2, 1, 2, 1])
    assert t.rows == ((2, 2, 1), (1, 1))
    assert t.column_word() == (1, 2, 1, 2, 1)


def test_barred_tableaux_of_example():
    # lam = (2), chain (2,1) -> (3,1)
    chain = ChainR.from_yamanouchi((2, 1), (1,))
    tabs = enumerate_barred((2,), chain, bound=(3, 1))
    assert len(tabs) == 3
    contributions = sorted(_contribution(t).to_text() for t in tabs)
    assert contributions == sorted(
        [
            (generator("a", -1) - generator("a", 1)).to_text(),
            (generator("a", -2) - generator("a", 0)).to_text(),
            (generator("a", 1) - generator("a", 2)).to_text(),
        ]
    )
    total = ZERO
    for t in tabs:
        total = total + _contribution(t)
    assert total == generator("a", -1) - generator("a", 2) + generator("a", -2) - generator("a", 0)


def test_barred_tableaux_symmetric_side():
    # lam = (2,1), mu = (2), nu = (3,1): one tableau per chain
    got = {}
    for chain in iter_chains(Partition((2,)), Partition((3, 1))):
        tabs = enumerate_barred((2, 1), chain, bound=(3, 1))
        assert len(tabs) == 1
        got[chain.yamanouchi] = _contribution(tabs[0])
    assert got[(1, 2)] == generator("a", -2) - generator("a", 0)
    assert got[(2, 1)] == generator("a", -1) - generator("a", 2)


def test_bounded_counts_of_second_example():
    counts = {}
    for chain in iter_chains(Partition((2, 2)), Partition((5, 2, 2))):
        counts[chain.yamanouchi] = len(enumerate_barred((4, 2, 1), chain, bound=(5, 2, 2)))
    assert len(counts) == 10
    assert counts.pop((1, 3, 3, 1, 1)) == 2
    assert counts.pop((1, 3, 1, 3, 1)) == 2
    assert counts.pop((3, 1, 3, 1, 1)) == 1
    assert set(counts.values()) == {0}


def test_region_and_barred_symbol():
    chain = ChainR.from_yamanouchi((2, 2), (1, 3, 3, 1, 1))
    for t in enumerate_barred((4, 2, 1), chain, bound=(5, 2, 2)):
        assert t.barred_symbol() == chain.yamanouchi
        assert is_bounded(t.base, (5, 2, 2))
        assert len(t.region) == 7 - 5


def test_enumerate_barred_needs_cap():
    with pytest.raises(ValueError):
        enumerate_barred((1,), ChainR.from_yamanouchi((), (1,)))


def test_supertableaux_count_example():
    assert len(enumerate_reverse_supertableaux((2, 1), 2)) == 16
    assert len(enumerate_reverse_supertableaux((1,), 1)) == 2


def test_barred_supertableaux_count_example():
    chain = ChainR.from_yamanouchi((2,), (2,))
    assert len(enumerate_barred_supertableaux((2, 1), chain, 2)) == 12


def test_render():
    chain = ChainR.from_yamanouchi((2, 1), (1,))
    text = sorted(str(t) for t in enumerate_barred((2,), chain, bound=(3, 1)))
    assert all("*" in s for s in text)


@given(partitions(4), st.integers(1, 4))
def test_reverse_tableaux_match_brute_force(lam, n):
    ours = sorted(tuple(sorted(_as_dict(t).items())) for t in enumerate_reverse_tableaux(lam, n))
    brute = sorted(tuple(sorted(t.items())) for t in bf.reverse_tableaux(lam, n))
    assert ours == brute


@given(partitions(3), st.integers(1, 3))
def test_supertableaux_match_brute_force(lam, n):
    ours = sorted(tuple(sorted(_super_dict(t).items())) for t in enumerate_reverse_supertableaux(lam, n))
    brute = sorted(tuple(sorted(t.items())) for t in bf.reverse_supertableaux(lam, n))
    assert ours == brute


@given(partitions(4), partitions(3), partitions(5))
def test_bounded_barred_tableaux_match_brute_force(lam, mu, nu):
    if not contains(mu, nu) or not lam:
        return
    ours = set()
    for chain in iter_chains(mu, nu):
        for t in enumerate_barred(lam, chain, bound=nu):
            ours.add((chain.yamanouchi, tuple(sorted(_as_dict(t.base).items())), tuple(sorted(map(tuple, t.barred)))))
    brute = {
        (seq, tuple(sorted(t.items())), tuple(sorted(barred)))
        for seq, t, barred, _ in bf.barred_terms(lam, mu, nu)
    }
    assert ours == brute


@given(partitions(4), partitions(4), partitions(5))
def test_barred_entries_follow_symbol(lam, mu, nu):
    for chain in iter_chains(mu, nu):
        for t in enumerate_barred(lam, chain, bound=nu):
            assert t.barred_symbol() == chain.yamanouchi
            assert is_bounded(t.base, nu)
            order = Partition(lam).column_order()
            positions = [order.index(b) for b in t.barred]
            assert positions == sorted(positions)
