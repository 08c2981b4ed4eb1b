from itertools import permutations

import pytest

from latinquandle import CayleyTable, NotAGroupError, NotLatinError, Permutation, TooLargeError, compose, invert
from latinquandle.constructions import build_ipq, core, cyclic_group, elementary_abelian_3
from latinquandle.groups import (generate_closure, group_check, inner_group, is_cyclic_group,
                                 multiplication_group, quandle_isomorphic)
from latinquandle.properties import involutory_profile
from latinquandle.spins import recover_group, spin_set

import oracles


def test_group_check(q5_left):
    assert group_check(cyclic_group(5)) == (True, 0)
    assert group_check(q5_left) == (False, None)
    assert group_check(CayleyTable([[0]])) == (True, 0)
    # latin with identity but not associative
    loop5 = CayleyTable([[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]])
    assert group_check(loop5) == (False, None)


def test_closure_examples(q3):
    assert len(generate_closure([Permutation([1, 2, 3, 4, 0])])) == 5
    assert generate_closure([], n=4) == [Permutation.identity(4)]
    with pytest.raises(ValueError):
        generate_closure([])
    assert len(multiplication_group(q3)) == 6


def test_closure_cap():
    gens = [Permutation([1, 0, 2, 3, 4, 5]), Permutation([1, 2, 3, 4, 5, 0])]
    assert len(generate_closure(gens)) == 720
    with pytest.raises(TooLargeError):
        generate_closure(gens, cap=100)


def test_closure_is_closed():
    for gens in ([Permutation([1, 0, 2, 3]), Permutation([0, 2, 3, 1])],
                 [Permutation([2, 0, 1, 4, 3])]):
        group = generate_closure(gens)
        members = set(group)
        assert all(compose(a, b) in members for a in group for b in group)
        assert all(invert(a) in members for a in group)
        assert group[0].is_identity()


def test_inner_group(q3, q5_left):
    assert len(inner_group(q3)) == 6
    assert len(inner_group(CayleyTable([[0]]))) == 1
    inn = set(inner_group(q5_left))
    # independent route: maps x -> m x + c with m a power of 2 mod 5
    expected = {Permutation([(m * x + c) % 5 for x in range(5)]) for m in (1, 2, 4, 3) for c in range(5)}
    assert inn == expected and len(inn) == 20
    with pytest.raises(NotLatinError):
        inner_group(core(cyclic_group(4), 0))


def test_is_cyclic_group(q9_ipq):
    assert is_cyclic_group([Permutation([(x + k) % 5 for x in range(5)]) for k in range(5)])
    a, b = Permutation([1, 0, 3, 2]), Permutation([2, 3, 0, 1])
    assert not is_cyclic_group([Permutation.identity(4), a, b, compose(a, b)])
    assert not is_cyclic_group(spin_set(q9_ipq, "right").members)
    with pytest.raises(NotAGroupError):
        is_cyclic_group([a])


def test_quandle_isomorphic(q5_left, q5_right):
    assert quandle_isomorphic(q5_left, q5_left) == (True, [0, 1, 2, 3, 4])
    assert quandle_isomorphic(q5_left, q5_right) == (False, None)
    ok, f = quandle_isomorphic(recover_group(CayleyTable(oracles.left_core_cells(7)), "right", 0),
                               cyclic_group(7))
    assert ok and f is not None
    assert quandle_isomorphic(q5_left, cyclic_group(3)) == (False, None)
    with pytest.raises(TooLargeError):
        quandle_isomorphic(cyclic_group(13), cyclic_group(13))


def test_isomorphism_witness_is_valid(latin_quandles):
    p = Permutation([3, 0, 4, 1, 2])
    for t in [t for t in latin_quandles if t.n == 5]:
        r = t.relabel(p)
        ok, f = quandle_isomorphic(t, r)
        assert ok
        assert all(f[t(a, b)] == r(f[a], f[b]) for a in range(5) for b in range(5))


def test_isomorphism_distinguishes_groups_of_order_9():
    assert not quandle_isomorphic(cyclic_group(9), elementary_abelian_3(2))[0]
    assert quandle_isomorphic(recover_group(build_ipq(elementary_abelian_3(2)), "right", 0),
                              elementary_abelian_3(2))[0]


def test_isomorphism_is_an_equivalence(latin_quandles):
    order7 = [t for t in latin_quandles if t.n == 7]
    sample = order7[::40]
    for s in sample:
        assert quandle_isomorphic(s, s)[0]
        for t in sample:
            assert quandle_isomorphic(s, t)[0] == quandle_isomorphic(t, s)[0]


def test_iso_classes_share_profiles(latin_quandles):
    for n in (3, 4, 5, 7):
        tables = [t for t in latin_quandles if t.n == n]
        reps = []
        for t in tables:
            match = next((r for r in reps if quandle_isomorphic(r, t)[0]), None)
            if match is None:
                reps.append(t)
            else:
                assert involutory_profile(match).verdicts == involutory_profile(t).verdicts
        # known iso-class counts of latin quandles at these orders
        assert len(reps) == {3: 1, 4: 1, 5: 3, 7: 5}[n]
