from __future__ import annotations

from fractions import Fraction as Q

import pytest

from chevbounds.errors import InputError
from chevbounds.rootsys import build_root_system
from chevbounds.weightcomb import (
    b_invariant,
    b_of_weight,
    ceil_log,
    floor_log,
    lambda_stats,
    order_in_fundamental_group,
    p_adic_digits,
    pair_with_coroot,
    structural_constants,
    t_invariant,
)


def test_ceil_and_floor_log() -> None:
    assert ceil_log(2, 1) == 0
    assert ceil_log(2, 2) == 1
    assert ceil_log(2, 3) == 2
    assert ceil_log(3, 9) == 2
    assert ceil_log(3, 10) == 3
    assert ceil_log(3, Q(10)) == 3
    assert floor_log(2, 1) == 0
    assert floor_log(2, 7) == 2
    assert floor_log(2, 8) == 3
    assert floor_log(3, Q(26, 3)) == 1
    assert floor_log(5, Q(25)) == 2
    with pytest.raises(InputError):
        floor_log(2, Q(1, 2))
    with pytest.raises(InputError):
        ceil_log(2, 0)
    with pytest.raises(InputError):
        ceil_log(1, 4)


def test_log_functions_agree_with_powers() -> None:
    for p in (2, 3, 5, 7):
        for x in range(1, 200):
            c = ceil_log(p, x)
            f = floor_log(p, x)
            assert p ** f <= x <= p ** c
            if f:
                assert p ** (f + 1) > x
            if c:
                assert p ** (c - 1) < x


def test_t_invariant() -> None:
    assert t_invariant(0, 2) == 0
    assert t_invariant(1, 2) == 1
    assert t_invariant(2, 2) == 2
    assert t_invariant(3, 2) == 2
    assert t_invariant(4, 2) == 3
    assert t_invariant(1, 3) == 1
    assert t_invariant(3, 3) == 2
    assert t_invariant(8, 3) == 2
    assert t_invariant(9, 3) == 3


def test_p_adic_digits() -> None:
    assert p_adic_digits(0, 3) == ()
    assert p_adic_digits(10, 3) == (1, 0, 1)
    assert p_adic_digits(8, 2) == (0, 0, 0, 1)
    for n in range(1, 100):
        digits = p_adic_digits(n, 5)
        assert digits[-1] != 0
        assert sum(d * 5**i for i, d in enumerate(digits)) == n


def test_pair_with_coroot() -> None:
    a2 = build_root_system("A", 2)
    w1 = a2.fundamental_weight(1)
    alpha1 = a2.simple_roots[0].coords
    assert pair_with_coroot(a2, w1, alpha1) == 1
    assert pair_with_coroot(a2, w1, a2.simple_roots[1].coords) == 0
    assert pair_with_coroot(a2, w1, tuple(-c for c in alpha1)) == -1
    assert pair_with_coroot(a2, w1, (1, 1)) == 1  # the highest root
    with pytest.raises(InputError):
        pair_with_coroot(a2, w1, (2, 0))  # 2*omega_1 is not a root


def test_b_invariant_single_weights() -> None:
    a1 = build_root_system("A", 1)
    rep = b_invariant(a1, {(-1,): 1})
    assert rep.value == 1
    assert rep.via_highest_root == -1
    assert rep.agree is False

    a2 = build_root_system("A", 2)
    rep2 = b_invariant(a2, {(1, 1): 1, (-1, 2): 1})
    assert rep2.value == 2
    assert rep2.via_highest_root == 2
    assert rep2.agree is True


def test_b_of_weight_is_orbit_invariant() -> None:
    rs = build_root_system("B", 2)
    for c1 in range(-2, 3):
        for c2 in range(-2, 3):
            value = b_of_weight(rs, (c1, c2))
            for i in range(rs.rank):
                assert b_of_weight(rs, rs.reflect((c1, c2), i)) == value
    assert b_of_weight(rs, (0, 0)) == 0


def test_structural_constants_table() -> None:
    expected = {
        ("A", 1): (1, 2),
        ("A", 4): (1, 5),
        ("B", 3): (2, 2),
        ("C", 4): (2, 2),
        ("D", 5): (2, 2),
        ("E", 6): (3, 3),
        ("E", 7): (4, 2),
        ("E", 8): (6, 1),
        ("F", 4): (4, 1),
        ("G", 2): (3, 1),
    }
    for (family, rank), pair in expected.items():
        assert structural_constants(build_root_system(family, rank)) == pair


def test_lambda_stats_examples() -> None:
    a1 = build_root_system("A", 1)
    stats = lambda_stats(a1, (1,), 2)
    assert stats.c_lambda == Q(1, 2)
    assert stats.d_lambda == 1
    assert stats.t_p_lambda == 2
    assert stats.order_in_fundamental_group == 2

    a2 = build_root_system("A", 2)
    stats2 = lambda_stats(a2, (1, 0), 3)
    assert stats2.c_lambda == Q(2, 3)
    assert stats2.d_lambda == 1
    assert stats2.t_p_lambda == 3

    with pytest.raises(InputError):
        lambda_stats(a2, (-1, 0), 3)


def test_d_at_most_c_outside_type_a() -> None:
    for family, rank in (("B", 3), ("C", 3), ("D", 4), ("F", 4), ("G", 2), ("E", 6)):
        rs = build_root_system(family, rank)
        for i in range(1, rank + 1):
            stats = lambda_stats(rs, rs.fundamental_weight(i), 2)
            assert stats.d_lambda <= stats.c_lambda
    for rank in (1, 2, 3, 4):
        rs = build_root_system("A", rank)
        for i in range(1, rank + 1):
            stats = lambda_stats(rs, rs.fundamental_weight(i), 2)
            assert stats.d_lambda <= 2 * stats.c_lambda


def test_order_in_fundamental_group() -> None:
    a2 = build_root_system("A", 2)
    assert order_in_fundamental_group(a2, a2.zero) == 1
    assert order_in_fundamental_group(a2, a2.fundamental_weight(1)) == 3
    assert order_in_fundamental_group(a2, a2.highest_root) == 1

    d5 = build_root_system("D", 5)
    orders = [order_in_fundamental_group(d5, d5.fundamental_weight(i)) for i in range(1, 6)]
    assert orders == [2, 1, 2, 4, 4]

    assert order_in_fundamental_group(
        build_root_system("B", 3), build_root_system("B", 3).fundamental_weight(3)
    ) == 2
    e7 = build_root_system("E", 7)
    assert order_in_fundamental_group(e7, e7.fundamental_weight(7)) == 2


def test_order_divides_group_exponent() -> None:
    for family, rank in (("A", 3), ("B", 4), ("C", 3), ("D", 4), ("D", 5), ("E", 6)):
        rs = build_root_system(family, rank)
        exponent = max(rs.fundamental_group_invariants)
        for i in range(1, rank + 1):
            order = order_in_fundamental_group(rs, rs.fundamental_weight(i))
            assert exponent % order == 0
