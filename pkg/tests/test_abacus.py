import pytest
from hypothesis import given, strategies as st

from eqrimhook.abacus import (
    Abacus,
    abacus_from_partition,
    abacus_to_partition,
    canonical_abacus,
    is_flush,
    make_flush,
)
from eqrimhook.partitions import (
    EMPTY,
    Partition,
    covers,
    partitions_in_box,
    partitions_with_rows,
    rim_hook_reduce,
    strip_rim_hooks,
)

from conftest import partitions

P = Partition


def test_from_partition_examples():
    a = abacus_from_partition(P((2, 1)), 2, 3)
    assert sorted(a.active_beads()) == [1, 3]
    assert all(a.is_beaded(p) for p in range(-20, 0))
    assert not a.is_beaded(0) and not a.is_beaded(2)
    assert sorted(abacus_from_partition(EMPTY, 2, 3).active_beads()) == [0, 1]
    assert abacus_from_partition(P((1,)), 1, 2).active_beads() == [1]


def test_to_partition_examples():
    assert abacus_to_partition(Abacus.from_beads(3, 2, {3, 1}, 0)) == P((2, 1))
    assert abacus_to_partition(Abacus.from_beads(3, 2, {1, 0}, 0)) == EMPTY


@given(partitions(max_rows=3, max_part=8), st.integers(2, 6), st.integers(1, 3))
def test_translation_invariance(lam, n, rows):
    a = abacus_from_partition(lam, 3, n)
    # shift every bead up by `rows` full rows; the k extra low beads fill in
    assert abacus_to_partition(a.translate(rows * n)) == lam
    assert abacus_to_partition(a.translate(-rows * n)) == lam


def test_is_flush_examples():
    assert is_flush(abacus_from_partition(EMPTY, 2, 3))
    assert not is_flush(abacus_from_partition(P((2, 1)), 2, 3))
    assert is_flush(abacus_from_partition(P((1,)), 1, 2))


def test_make_flush_examples():
    flush, d = make_flush(abacus_from_partition(P((2, 1)), 2, 3))
    assert (abacus_to_partition(flush), d) == (EMPTY, 1)
    flush, d = make_flush(abacus_from_partition(P((3, 1)), 2, 4))
    assert (abacus_to_partition(flush), d) == (EMPTY, 1)
    for lam in partitions_in_box(2, 4):
        a = abacus_from_partition(lam, 2, 4)
        assert make_flush(a) == (a, 0)


def test_canonical_abacus_examples():
    assert sorted(canonical_abacus(EMPTY, 2, 4).active_beads()) == [2, 3]
    assert sorted(canonical_abacus(P((2, 1)), 2, 4).active_beads()) == [1, 3]
    assert sorted(canonical_abacus(P((2, 2)), 2, 4).active_beads()) == [2, 3]
    with pytest.raises(ValueError):
        canonical_abacus(P((3,)), 2, 4)


@pytest.mark.parametrize("k,n", [(2, 4), (2, 5), (3, 6), (3, 8)])
def test_canonical_abacus_round_trip(k, n):
    for nu in partitions_in_box(k, n):
        a = canonical_abacus(nu, k, n)
        assert abacus_to_partition(a) == nu
        assert max(a.active_beads()) == n - 1
        assert min(a.active_beads()) >= 0


def test_round_trip_p38():
    for lam in partitions_in_box(3, 8):
        assert abacus_to_partition(abacus_from_partition(lam, 3, 8)) == lam


def test_gap_condition_enforced():
    with pytest.raises(ValueError):
        Abacus(3, 1, 0, frozenset({2, 5}))
    with pytest.raises(ValueError):
        Abacus(3, 2, 4, frozenset({1}))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_flush_matches_beta_number_stripping(n):
    for gamma in partitions_with_rows(3, 20):
        red = strip_rim_hooks(gamma, n, 3)
        flush, moves = make_flush(abacus_from_partition(gamma, 3, n))
        assert is_flush(flush)
        assert (abacus_to_partition(flush), moves) == (red.core, red.d)
        assert is_flush(abacus_from_partition(gamma, 3, n)) == (red.d == 0)


@pytest.mark.parametrize("k,n", [(2, 4), (2, 5), (3, 6)])
def test_distinct_runners_when_core_fits(k, n):
    for gamma in partitions_with_rows(k, k * (2 * n - 1 - k)):
        if rim_hook_reduce(gamma, n, k) is None:
            continue
        runners = abacus_from_partition(gamma, k, n).runners()
        assert len(set(runners)) == k


@pytest.mark.parametrize("k,n", [(2, 4), (2, 5), (3, 6), (3, 7)])
def test_cover_moves_one_bead_one_step(k, n):
    for lam in partitions_in_box(k, n):
        before = set(abacus_from_partition(lam, k, n).active_beads())
        for mu in covers(lam, k, n):
            after = set(abacus_from_partition(mu, k, n).active_beads())
            (old,), (new,) = before - after, after - before
            assert new == old + 1


def test_render():
    text = abacus_from_partition(P((2, 1)), 2, 3).render()
    rows = text.splitlines()
    assert rows[0].split() == ["(-3)", "(-2)", "(-1)"]
    assert rows[1].split() == ["0", "(1)", "2"]
    assert rows[2].split() == ["(3)", "4", "5"]
