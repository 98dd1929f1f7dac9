import pytest
from hypothesis import given, settings, strategies as st

from positroid.affperm import (
    Diagram,
    av,
    bcov,
    bounded_class,
    bounded_permutations,
    code,
    compose,
    evaluate,
    format_window,
    from_window,
    grassmannian_shape,
    identity,
    in_t_bound,
    in_t_bound_by_diagram,
    inverse,
    is_bruhat_cover,
    is_zero_grassmannian,
    length,
    max_inversion,
    normalize_to_bound,
    parse_window,
    phi_minus_bounded,
    phi_plus_bounded,
    right_multiply_t,
    rothe_diagram,
    simple_reflection,
    tau_power,
    t_orbit_equal,
)
from positroid.errors import (
    BadWindowSum,
    DuplicateResidue,
    EqualResidues,
    NotZeroGrassmannian,
    PeriodMismatch,
)

F = from_window(4, [5, 2, 7, 4])
G24 = from_window(4, [5, 6, 3, 4])


@st.composite
def affine_perms(draw, max_n=5, spread=2):
    n = draw(st.integers(1, max_n))
    perm = draw(st.permutations(range(1, n + 1)))
    shifts = draw(st.lists(st.integers(-spread, spread), min_size=n, max_size=n))
    # keep the window sum valid by fixing the last shift
    shifts[-1] -= sum(shifts)
    return from_window(n, [p + n * s for p, s in zip(perm, shifts)])


def test_from_window_and_evaluate():
    assert evaluate(F, 8) == 8
    assert F(-1) == 3
    assert from_window(3, [1, 2, 3]) == identity(3)
    assert all(identity(5)(i) == i for i in range(-7, 12))


def test_from_window_errors():
    with pytest.raises(DuplicateResidue):
        from_window(4, [5, 2, 6, 4])
    # distinct residues already force the sum condition
    assert issubclass(BadWindowSum, ValueError)


def test_parse_and_format():
    assert parse_window("5,2,7,4") == F
    assert parse_window(" -1, 4, 3 ") == from_window(3, [-1, 4, 3])
    assert format_window(F) == "5,2,7,4"


def test_group_structure():
    assert inverse(identity(4)) == identity(4)
    assert compose(tau_power(4, 1), tau_power(4, -1)) == identity(4)
    # brute force: solve f(x) = i over a window of candidates
    expected = tuple(next(x for x in range(-10, 11) if F(x) == i) for i in range(1, 5))
    assert inverse(F).window == expected == (-3, 2, -1, 4)
    with pytest.raises(PeriodMismatch):
        compose(F, identity(3))


def test_length_code_av():
    assert length(F) == 4
    assert length(identity(6)) == 0
    assert length(G24) == 4
    assert code(F) == (2, 0, 2, 0)
    assert code(identity(3)) == (0, 0, 0)
    assert av(F) == 2


def test_rothe_diagram():
    d = rothe_diagram(F)
    assert d.cells == {(1, 2), (1, 4), (3, 4), (3, 6)}
    assert len(rothe_diagram(identity(4))) == 0
    assert len(rothe_diagram(G24)) == length(G24) == 4


def test_bounded_class():
    assert bounded_class(F) == 2
    assert bounded_class(identity(4)) == 0
    assert bounded_class(from_window(4, [6, 1, 3, 0])) is None


def test_in_t_bound():
    assert in_t_bound(F, 2)
    shifted = compose(tau_power(4, 1), F)
    assert shifted.window == (6, 3, 8, 5)
    assert in_t_bound(shifted, 2)
    assert not in_t_bound(F, 1)
    assert max(rothe_diagram(F).column_sizes().values()) == 2


def test_covers():
    e = identity(3)
    assert is_bruhat_cover(e, right_multiply_t(e, 1, 2))
    assert not is_bruhat_cover(F, F)
    t15 = right_multiply_t(e, 1, 5)
    assert t15.window == (5, -2, 3)
    brute = sum(1 for i in range(1, 4) for j in range(i + 1, i + 30) if t15(i) > t15(j))
    assert length(t15) == brute == 5
    assert not is_bruhat_cover(e, t15)
    with pytest.raises(EqualResidues):
        right_multiply_t(e, 1, 4)


def test_transposition_is_involution():
    for i, j in [(1, 2), (1, 6), (-2, 3), (2, 7)]:
        f = right_multiply_t(right_multiply_t(F, i, j), i, j)
        assert f == F


def test_simple_reflections():
    assert simple_reflection(4, 0).window == (0, 2, 3, 5)
    assert simple_reflection(4, 3).window == (1, 2, 4, 3)
    assert simple_reflection(4, 1).window == (2, 1, 3, 4)


def test_max_inversion():
    assert max_inversion(F) == (3, 4)
    assert max_inversion(identity(4)) is None
    assert max_inversion(G24) == (2, 4)
    assert is_zero_grassmannian(identity(4))
    assert not is_zero_grassmannian(F)


def test_grassmannian_shape():
    assert grassmannian_shape(from_window(4, [3, 4, 5, 6]), 2) == ()
    # f tau^-2 has window (-1, 2, 3, 5); its code sorts to (1)
    assert grassmannian_shape(from_window(4, [2, 4, 5, 7]), 2) == (1,)
    with pytest.raises(NotZeroGrassmannian):
        grassmannian_shape(F, 2)


def test_maximal_grassmannian_shape_is_rectangle():
    for n in range(2, 6):
        for k in range(1, n):
            top = [f for f in bounded_permutations(k, n)
                   if is_zero_grassmannian(f) and length(f) == k * (n - k)]
            assert top
            for f in top:
                assert grassmannian_shape(f, k) == (n - k,) * k


def test_bcov_and_phi():
    assert bcov(F, 3) == []  # F has maximal length in Bound(2, 4)
    for r in range(1, 5):
        assert phi_minus_bounded(F, r, 2) == phi_plus_bounded(F, r, 2) == []
    f = from_window(4, [1, 2, 7, 8])
    for r in range(1, 5):
        for g in phi_minus_bounded(f, r, 2) + phi_plus_bounded(f, r, 2):
            assert length(g) == length(f) + 1
            assert bounded_class(g) == 2


def test_bcov_brute_force():
    f = from_window(4, [1, 2, 7, 8])
    for r in range(4):
        expected = []
        for i in range(1, 5):
            for j in range(i + 1, i + 4):
                g = right_multiply_t(f, i, j)
                hit = any((x - r) % 4 == 0 for x in range(i, j))
                if hit and length(g) == length(f) + 1 and bounded_class(g) is not None:
                    expected.append((i, j))
        assert bcov(f, r) == expected


def test_bound_counts():
    assert len(bounded_permutations(2, 4)) == 33
    assert sum(len(bounded_permutations(k, 5)) for k in range(6)) == 326


def test_t_orbit_equal():
    assert t_orbit_equal(F, compose(tau_power(4, 3), F))
    assert not t_orbit_equal(F, G24)
    assert normalize_to_bound(from_window(4, [6, 3, 8, 5]), 2) == F


def test_diagram_text_round_trip():
    d = rothe_diagram(F)
    assert d.to_text() == "1: 2,4\n3: 4,6"
    assert Diagram.from_text(d.to_text(), (4, 4)) == d
    assert Diagram.from_text("1: 2,4; 3: 4,6", (4, 4)) == d


@settings(max_examples=200, deadline=None)
@given(affine_perms())
def test_diagram_invariants(f):
    d = rothe_diagram(f)
    assert len(d) == length(f)
    sizes = d.row_sizes()
    assert tuple(sizes.get(i, 0) for i in range(1, f.n + 1)) == code(f)
    assert rothe_diagram(inverse(f)) == d.transpose()
    col = d.column_sizes()
    assert tuple(col.get(c % f.n, 0) for c in range(1, f.n + 1)) == code(inverse(f))


@settings(max_examples=200, deadline=None)
@given(affine_perms(), affine_perms())
def test_av_is_homomorphism(f, g):
    if f.n != g.n:
        return
    assert av(compose(f, g)) == av(f) + av(g)
    assert compose(f, inverse(f)) == identity(f.n)


@pytest.mark.parametrize("n", range(1, 6))
def test_bounded_facts(n):
    for k in range(n + 1):
        for f in bounded_permutations(k, n):
            assert av(f) == k
            assert rothe_diagram(f).is_toric()
            for j in range(n + 1):
                assert in_t_bound(f, j) == in_t_bound_by_diagram(f, j)


@settings(max_examples=300, deadline=None)
@given(affine_perms(max_n=5, spread=1), st.integers(0, 5))
def test_in_t_bound_matches_diagram_test(f, k):
    if k > f.n:
        return
    assert in_t_bound(f, k) == in_t_bound_by_diagram(f, k)
