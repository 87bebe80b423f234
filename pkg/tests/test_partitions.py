import itertools
import random

import pytest
from hypothesis import given, strategies as st

from eqrimhook.partitions import (
    EMPTY,
    Partition,
    bar,
    covers,
    equiv_weight,
    from_beta_numbers,
    beta_numbers,
    in_box,
    is_core,
    lambda_minus,
    nu_plus,
    parse_partition,
    partitions_in_box,
    partitions_of,
    partitions_with_rows,
    removals,
    rim_hook_reduce,
    strip_rim_hooks,
    upward_steps,
)
from eqrimhook.polyring import TPoly

from conftest import partitions

P = Partition


def t(i):
    return TPoly.var(i)


# -- diagram oracle: rim hooks as connected skew shapes without a 2x2 block --


def _cells(lam):
    return {(r, c) for r, row in enumerate(lam) for c in range(row)}


def _rim_hooks(lam, n):
    """(mu, rows spanned) for every n-rim hook lam/mu, by brute force over mu."""
    lam = P(lam)
    out = []
    cells = _cells(lam)
    for mu in partitions_with_rows(len(lam), lam.size - n):
        if not lam.contains(mu) or mu.size != lam.size - n:
            continue
        skew = cells - _cells(mu)
        if any({(r, c), (r + 1, c), (r, c + 1), (r + 1, c + 1)} <= skew for r, c in skew):
            continue
        seen, todo = set(), [next(iter(skew))]
        while todo:
            r, c = todo.pop()
            if (r, c) in seen:
                continue
            seen.add((r, c))
            todo.extend(x for x in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)) if x in skew)
        if seen == skew:
            out.append((mu, len({r for r, _ in skew})))
    return out


def _oracle_core(lam, n):
    hooks = _rim_hooks(lam, n)
    if not hooks:
        return P(lam), 0
    core, d = _oracle_core(hooks[0][0], n)
    return core, d + 1


# ---------------------------------------------------------------------------


def test_parse_partition():
    assert parse_partition("2,1") == P((2, 1))
    assert parse_partition("0") == EMPTY
    assert parse_partition("3, 1,0") == P((3, 1))
    with pytest.raises(ValueError):
        parse_partition("1,2")
    with pytest.raises(ValueError):
        parse_partition("a")


def test_partition_validation():
    with pytest.raises(ValueError):
        P((1, -1))
    assert P((2, 0, 0)) == P((2,))
    assert P((3, 1)).size == 4
    assert P((3, 1)).part(5) == 0
    assert str(EMPTY) == "0"


def test_in_box():
    assert in_box(P((2, 2)), 2, 4)
    assert not in_box(P((3,)), 2, 4)
    assert in_box(EMPTY, 0, 3)
    assert not in_box(P((1, 1, 1)), 2, 4)


def test_box_enumeration_counts():
    from math import comb

    for k, n in [(1, 3), (2, 4), (2, 5), (3, 6), (3, 8)]:
        assert len(partitions_in_box(k, n)) == comb(n, k)
    assert len(partitions_of(6, 2)) == 4
    assert all(p.size == 6 and len(p) <= 2 for p in partitions_of(6, 2))


def test_covers():
    assert covers(EMPTY, 2, 4) == [P((1,))]
    assert covers(P((2, 1)), 2, 4) == [P((2, 2))]
    assert covers(P((2, 2)), 2, 4) == []
    assert sorted(covers(P((1,)), 2, 5)) == [P((1, 1)), P((2,))]


def test_removals():
    assert removals(EMPTY) == []
    assert sorted(removals(P((2, 1)))) == [P((1, 1)), P((2,))]


def test_upward_steps_and_weights():
    assert sorted(upward_steps(EMPTY, 2, 4)) == [1, 2]
    assert sorted(upward_steps(P((2,)), 2, 4)) == [1, 4]
    assert sorted(upward_steps(P((2, 2)), 2, 4)) == [3, 4]
    assert equiv_weight(EMPTY, 2, 4).is_zero()
    assert equiv_weight(P((2,)), 2, 4) == t(4) - t(2)
    assert equiv_weight(P((2, 1)), 2, 4) == t(4) - t(1)
    assert equiv_weight(P((2, 2)), 2, 4) == t(3) + t(4) - t(1) - t(2)


@pytest.mark.parametrize("k,n", [(1, 3), (2, 4), (2, 5), (3, 6), (3, 7)])
def test_equiv_weight_injective(k, n):
    weights = [equiv_weight(lam, k, n) for lam in partitions_in_box(k, n)]
    assert len(set(weights)) == len(weights)


def test_rim_hook_reduce_examples():
    r = rim_hook_reduce(P((3, 1)), 4, 2)
    assert (r.core, r.d, r.heights, r.sign) == (EMPTY, 1, (2,), 1)
    r = rim_hook_reduce(P((4,)), 4, 2)
    assert (r.core, r.d, r.heights, r.sign) == (EMPTY, 1, (1,), -1)
    assert rim_hook_reduce(P((3,)), 4, 2) is None
    for lam in partitions_in_box(2, 4):
        r = rim_hook_reduce(lam, 4, 2)
        assert (r.core, r.d, r.sign) == (lam, 0, 1)


def test_rim_hook_reduce_needs_k_rows():
    with pytest.raises(ValueError):
        strip_rim_hooks(P((1, 1, 1)), 4, 2)


def test_beta_numbers_round_trip():
    for lam in partitions_in_box(3, 8):
        assert from_beta_numbers(beta_numbers(lam, 3)) == lam


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_stripping_matches_diagram_oracle(n):
    for gamma in partitions_with_rows(3, 12):
        red = strip_rim_hooks(gamma, n, 3)
        assert (red.core, red.d) == _oracle_core(gamma, n)
        assert red.core.size + n * red.d == gamma.size


def test_hook_heights_match_diagram_oracle():
    # single-hook partitions: the oracle's row count is the reported height
    for n in (3, 4):
        for gamma in partitions_with_rows(3, 3 * n):
            hooks = _rim_hooks(gamma, n)
            red = strip_rim_hooks(gamma, n, 3)
            if red.d == 1:
                assert len(hooks) == 1
                assert red.heights == (hooks[0][1],)


@given(partitions(max_rows=3, max_part=9), st.integers(2, 6), st.integers(0, 10**6))
def test_removal_order_does_not_matter(gamma, n, seed):
    base = strip_rim_hooks(gamma, n, 3)
    other = strip_rim_hooks(gamma, n, 3, rng=random.Random(seed))
    assert (other.core, other.d, other.sign) == (base.core, base.d, base.sign)


def test_is_core():
    assert is_core(P((2,)), 3)
    assert not is_core(P((2, 1)), 3)
    assert is_core(P((1,)), 2, 1)


def test_bar_lambda_minus_nu_plus_examples():
    assert bar(P((2, 1)), 2, 4) == P((3, 1))
    assert bar(P((2, 2)), 2, 4) == P((3, 2))
    assert bar(P((2,)), 2, 4) == P((3,))
    with pytest.raises(ValueError):
        bar(P((1, 1)), 2, 4)
    assert lambda_minus(P((2, 2)), 2, 4) == P((1,))
    assert lambda_minus(P((2, 1)), 2, 4) == EMPTY
    assert lambda_minus(P((1, 1)), 2, 4) is None
    assert nu_plus(P((1,)), 2, 4) == P((2, 2))
    assert nu_plus(EMPTY, 2, 4) == P((2, 1))
    assert nu_plus(P((2, 1)), 2, 4) is None


@pytest.mark.parametrize("k,n", [(2, 4), (2, 5), (3, 6), (3, 7)])
def test_lambda_minus_nu_plus_round_trip(k, n):
    for nu in partitions_in_box(k, n):
        up = nu_plus(nu, k, n)
        if up is not None:
            assert in_box(up, k, n)
            assert lambda_minus(up, k, n) == nu


@pytest.mark.parametrize("k,n", [(2, 4), (2, 5), (3, 6), (3, 7)])
def test_bar_reduces_to_lambda_minus(k, n):
    for lam in partitions_in_box(k, n):
        low = lambda_minus(lam, k, n)
        if low is None:
            continue
        red = rim_hook_reduce(bar(lam, k, n), n, k)
        assert (red.core, red.d) == (low, 1)
        assert bar(lam, k, n).size == low.size + n
