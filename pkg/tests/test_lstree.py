import json

import pytest

from positroid.affperm import (
    bcov,
    bounded_permutations,
    compose,
    from_window,
    grassmannian_shape,
    inverse,
    is_zero_grassmannian,
    length,
    normalize_to_bound,
    phi_minus_bounded,
    phi_plus_bounded,
    right_multiply_t,
    tau_power,
)
from positroid.errors import NotBounded, ZeroGrassmannianLeaf
from positroid.lstree import LsExpansion, expand, ls_children, trace, word_inversions
from positroid.schurring import SchurVector, multiply_by_s1, omega_dual

F = from_window(4, [5, 2, 7, 4])


def all_bounded(max_n=5):
    return [(f, k) for n in range(1, max_n + 1) for k in range(n + 1)
            for f in bounded_permutations(k, n)]


def test_children_of_5274():
    plus, minus = ls_children(F, 2, 4)
    # pivot (3, 4); f t_34 = 5,2,4,7
    assert [g.window for g in plus] == [(5, 2, 3, 8)]
    assert minus == []
    h = right_multiply_t(F, 3, 4)
    assert F in phi_plus_bounded(h, 3, 2)


def test_children_of_leaf_raise():
    with pytest.raises(ZeroGrassmannianLeaf):
        ls_children(from_window(4, [1, 2, 7, 8]), 2)


def test_expand_5274():
    e = expand(F, 2, 4)
    assert e.result == SchurVector(2, 2, {(2, 2): 1})
    assert e.stats.node_count == 3


def test_expand_normalizes_shift():
    shifted = compose(tau_power(4, -5), F)
    assert expand(shifted, 2).result == expand(F, 2).result
    assert expand(shifted, 2).f == F
    with pytest.raises(NotBounded):
        expand(F, 1)


def test_maximal_length_gives_rectangle():
    for n in range(2, 6):
        for k in range(1, n):
            for f in bounded_permutations(k, n):
                if length(f) == k * (n - k):
                    assert dict(expand(f, k).result) == {(n - k,) * k: 1}


def test_leaves_give_their_shape():
    for f, k in all_bounded():
        if is_zero_grassmannian(f):
            assert dict(expand(f, k).result) == {grassmannian_shape(f, k): 1}


def test_children_measure_and_lengths():
    for f, k in all_bounded():
        if is_zero_grassmannian(f):
            continue
        plus, minus = ls_children(f, k)
        assert plus
        assert f not in minus
        for g in plus + minus:
            assert length(g) == length(f)
            a, b = word_inversions(g), word_inversions(f)
            assert a < b or (a == b and g.window > f.window)


@pytest.mark.parametrize("n", range(1, 6))
def test_positive_nonzero_and_homogeneous(n):
    for k in range(n + 1):
        for f in bounded_permutations(k, n):
            G = expand(f, k).result
            assert G and G.is_schur_positive()
            assert G.degrees() == {length(f)}


@pytest.mark.parametrize("n", range(1, 6))
def test_chevalley_and_transition(n):
    for k in range(n + 1):
        for f in bounded_permutations(k, n):
            G = expand(f, k).result
            zero = SchurVector(k, n - k)
            for r in range(n):
                rhs = sum((expand(right_multiply_t(f, i, j), k).result
                           for i, j in bcov(f, r)), zero)
                assert multiply_by_s1(G) == rhs
                minus = sum((expand(g, k).result for g in phi_minus_bounded(f, r, k)), zero)
                plus = sum((expand(g, k).result for g in phi_plus_bounded(f, r, k)), zero)
                assert minus == plus


@pytest.mark.parametrize("n", range(1, 6))
def test_omega_duality(n):
    for k in range(n + 1):
        for f in bounded_permutations(k, n):
            dual = normalize_to_bound(inverse(f), n - k)
            assert omega_dual(expand(f, k).result) == expand(dual, n - k).result


def test_trace():
    assert trace(F, 2) == "+5,2,7,4\n  +5,2,3,8\n    +1,2,7,8 → leaf [2,2]"
    leaf = from_window(4, [1, 2, 7, 8])
    assert trace(leaf, 2) == "+1,2,7,8 → leaf [2,2]"
    for f, k in all_bounded(4):
        lines = trace(f, k).splitlines()
        assert len(lines) == expand(f, k).stats.node_count
        for line in lines:
            if "leaf" not in line:
                continue
            window = line.strip()[1:].split(" ")[0]
            assert is_zero_grassmannian(from_window(f.n, map(int, window.split(","))))


def test_threads_agree():
    f = from_window(9, [7, 4, 10, 12, 6, 8, 14, 9, 11])
    one = expand(f, 4)
    many = expand(f, 4, threads=4)
    assert one.result == many.result
    assert one.stats == many.stats


def test_expansion_json_round_trip():
    e = expand(from_window(9, [7, 4, 10, 12, 6, 8, 14, 9, 11]), 4)
    data = json.loads(e.to_json())
    assert data["window"] == [7, 4, 10, 12, 6, 8, 14, 9, 11]
    assert (data["n"], data["k"], data["m"]) == (9, 4, 5)
    assert LsExpansion.from_dict(data) == e
