import itertools

import pytest
from hypothesis import given, strategies as st

from weylkit.shapes import (
    Tableau,
    count_chains,
    diagonal_matrix,
    dominates,
    enumerate_chains,
    enumerate_compositions,
    enumerate_dominating,
    enumerate_omega,
    enumerate_partitions,
    enumerate_sst,
    enumerate_strictly_dominating,
    enumerate_theta,
    enumerate_upper_triangular,
    format_composition,
    format_matrix,
    format_tableau,
    is_lower_triangular,
    kostka,
    matrix_margins,
    parse_composition,
    parse_matrix,
    parse_tableau,
    plus_shift_composition,
    plus_shift_matrix,
    plus_shift_tableau,
    plus_shift_tensor,
    strictly_dominates,
    tensor_margins,
    transpose_matrix,
)


def compositions(n, r):
    return st.sampled_from(enumerate_compositions(n, r))


# ---------------------------------------------------------------------------
# dominance


def test_dominates_examples():
    assert dominates((2, 0), (1, 1))
    assert dominates((1, 1), (1, 1))
    assert not dominates((1, 2), (2, 1))


def test_dominates_rejects_mismatch():
    with pytest.raises(ValueError):
        dominates((1, 0), (1, 0, 0))
    with pytest.raises(ValueError):
        dominates((2, 0), (1, 0))


@given(st.integers(2, 4).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 6))))
def test_dominance_partial_order(nr):
    n, r = nr
    comps = enumerate_compositions(n, r)
    for a in comps:
        assert dominates(a, a)
    for a, b in itertools.product(comps, repeat=2):
        if dominates(a, b) and dominates(b, a):
            assert a == b
    import random

    rng = random.Random(r * 10 + n)
    for _ in range(50):
        a, b, c = (rng.choice(comps) for _ in range(3))
        if dominates(a, b) and dominates(b, c):
            assert dominates(a, c)


# ---------------------------------------------------------------------------
# enumerations


def test_enumerate_compositions_examples():
    assert enumerate_compositions(2, 2) == ((2, 0), (1, 1), (0, 2))
    assert enumerate_compositions(1, 5) == ((5,),)
    assert len(enumerate_compositions(3, 1)) == 3


def test_enumerate_compositions_count():
    import math

    for n in (1, 2, 3, 4):
        for r in range(6):
            assert len(enumerate_compositions(n, r)) == math.comb(r + n - 1, n - 1)


def test_enumerate_strictly_dominating():
    assert enumerate_strictly_dominating((1, 1)) == [(2, 0)]
    assert enumerate_strictly_dominating((4, 0)) == []
    # full composition scan: four strict dominators of (1,1,1)
    expected = [
        a
        for a in enumerate_compositions(3, 3)
        if a != (1, 1, 1) and dominates(a, (1, 1, 1))
    ]
    got = enumerate_strictly_dominating((1, 1, 1))
    assert got == expected
    assert set(got) == {(3, 0, 0), (2, 1, 0), (2, 0, 1), (1, 2, 0)}


def test_matrix_margins_examples():
    assert matrix_margins(((1, 1), (0, 0))) == ((1, 1), (2, 0))
    nu = (3, 1)
    assert matrix_margins(diagonal_matrix(nu)) == (nu, nu)
    assert matrix_margins(((0, 2), (0, 0))) == ((0, 2), (2, 0))


def test_enumerate_omega_examples():
    assert enumerate_omega((2, 0), (1, 1)) == [((1, 1), (0, 0))]
    assert enumerate_omega((3,), (3,)) == [((3,),)]
    two = enumerate_omega((1, 1), (1, 1))
    assert set(two) == {((1, 0), (0, 1)), ((0, 1), (1, 0))}


def test_enumerate_omega_margins_and_determinism():
    for alpha in enumerate_compositions(3, 3):
        for beta in enumerate_compositions(3, 3):
            mats = enumerate_omega(alpha, beta)
            assert mats == enumerate_omega(alpha, beta)
            assert len(set(mats)) == len(mats)
            for w in mats:
                assert matrix_margins(w) == (beta, alpha)


def test_enumerate_theta_examples():
    w = ((1, 1), (0, 0))
    pi = ((1, 0), (1, 0))
    thetas = enumerate_theta(w, pi)
    assert len(thetas) == 1
    theta = thetas[0]
    assert theta[0][0][0] == 1 and theta[0][1][0] == 1
    assert sum(x for plane in theta for row in plane for x in row) == 2

    nu = (2, 1)
    diag = diagonal_matrix(nu)
    thetas = enumerate_theta(diag, diag)
    assert len(thetas) == 1
    assert all(thetas[0][s][s][s] == nu[s] for s in range(2))

    assert enumerate_theta(((1, 0), (0, 0)), ((2, 0), (0, 0))) == []


def test_enumerate_theta_margins():
    for w in enumerate_omega((2, 1), (1, 2)):
        for pi in enumerate_omega((2, 1), (3, 0)):
            for theta in enumerate_theta(w, pi):
                m1, _, m3 = tensor_margins(theta)
                assert m3 == w and m1 == pi


def test_transpose_swaps_margins():
    w = ((1, 1), (0, 0))
    assert transpose_matrix(w) == ((1, 0), (1, 0))
    assert matrix_margins(transpose_matrix(w)) == matrix_margins(w)[::-1]


# ---------------------------------------------------------------------------
# shifts


def test_plus_shift_examples():
    assert plus_shift_composition((1, 1), 1, 2) == (3, 1)
    assert plus_shift_matrix(diagonal_matrix((2, 1)), 1, 3) == diagonal_matrix((5, 1))
    t = Tableau.from_entries([[1, 2], [2, 2]], 2)
    shifted = plus_shift_tableau(t, 1, 3)
    assert shifted.shape == (5, 2)
    assert shifted.counts[0][0] == 4  # four 1s in the top row
    with pytest.raises(ValueError):
        plus_shift_composition((1,), 0, 2)


def test_plus_shift_tensor():
    theta = enumerate_theta(diagonal_matrix((1, 1)), diagonal_matrix((1, 1)))[0]
    shifted = plus_shift_tensor(theta, 1, 2)
    assert shifted[0][0][0] == theta[0][0][0] + 2
    assert tensor_margins(shifted)[0][0][0] == tensor_margins(theta)[0][0][0] + 2


def test_plus_shift_injective_on_compositions():
    seen = {}
    for a in enumerate_compositions(3, 4):
        image = plus_shift_composition(a, 1, 2)
        assert image not in seen
        seen[image] = a


# ---------------------------------------------------------------------------
# tableaux


def test_enumerate_sst_examples():
    assert len(enumerate_sst((2, 1, 0), (1, 1, 1))) == 2
    mu = (3, 2, 0)
    assert [t for t in enumerate_sst(mu, mu)] == [Tableau.canonical(mu)]
    assert enumerate_sst((2, 2), (1, 3)) == ()


def test_sst_are_semistandard_and_sorted():
    for mu in enumerate_partitions(3, 5):
        for alpha in enumerate_compositions(3, 5):
            tabs = enumerate_sst(mu, alpha)
            keys = [t.key() for t in tabs]
            assert keys == sorted(keys, reverse=True)
            for t in tabs:
                assert t.is_semistandard()
                assert t.shape == mu and t.weight == alpha


def test_kostka_symmetry_under_weight_permutation():
    mu = (3, 1, 0)
    for alpha in enumerate_compositions(3, 4):
        sorted_alpha = tuple(sorted(alpha, reverse=True))
        assert kostka(mu, alpha) == kostka(mu, sorted_alpha)


def test_tableau_matrix_bijection():
    mu = (2, 2)
    assert Tableau.canonical(mu).to_matrix() == diagonal_matrix(mu)
    t = Tableau.from_entries([[1, 2], [2, 2]], 2)
    assert t.to_matrix() == ((1, 0), (1, 2))
    for tab in enumerate_sst((3, 2, 1), (2, 2, 2)):
        assert is_lower_triangular(tab.to_matrix())
        assert Tableau(tab.to_matrix()) == tab
    with pytest.raises(ValueError):
        from weylkit.shapes import matrix_to_tableau

        matrix_to_tableau(((1, 0), (1, 2)), shape=(3, 1))


def test_tableau_normalises_row_order():
    a = Tableau.from_entries([[2, 1], [2, 2]], 2)
    b = Tableau.from_entries([[1, 2], [2, 2]], 2)
    assert a == b


# ---------------------------------------------------------------------------
# chains


def test_enumerate_chains_examples():
    chains = enumerate_chains((1, 1), (2, 0), 1)
    assert chains == [(((1, 1), (0, 0)),)]
    # beyond the longest strict dominance chain everything vanishes
    assert enumerate_chains((1, 1), (2, 0), 2) == []
    assert count_chains((2, 1, 0), (3, 0, 0), 9) == 0


def test_chains_against_pair_bruteforce():
    lam, alpha, k = (1, 1, 1), (3, 0, 0), 2
    singles = [
        w
        for beta in enumerate_compositions(3, 3)
        for w in enumerate_upper_triangular(beta)
    ]
    brute = [
        (w1, w2)
        for w1 in singles
        for w2 in singles
        if matrix_margins(w1)[1] == alpha
        and matrix_margins(w1)[0] == matrix_margins(w2)[1]
        and matrix_margins(w2)[0] == lam
    ]
    assert sorted(enumerate_chains(lam, alpha, k)) == sorted(brute)
    assert count_chains(lam, alpha, k) == len(brute)


def test_chain_relations_hold():
    lam = (2, 1, 0)
    for alpha in enumerate_strictly_dominating(lam):
        for k in (1, 2, 3):
            for chain in enumerate_chains(lam, alpha, k):
                assert matrix_margins(chain[0])[1] == alpha
                assert matrix_margins(chain[-1])[0] == lam
                for a, b in zip(chain, chain[1:]):
                    assert matrix_margins(a)[0] == matrix_margins(b)[1]
                for w in chain:
                    assert strictly_dominates(*matrix_margins(w)[::-1])


def test_chain_count_shift_invariance():
    for p in (2, 3):
        for n in (2, 3):
            for r in (2, 3, 4):
                for lam in enumerate_partitions(n, r):
                    lam_s = plus_shift_composition(lam, 1, p)
                    for alpha in enumerate_strictly_dominating(lam):
                        al_s = plus_shift_composition(alpha, 1, p)
                        k = 1
                        while True:
                            c = count_chains(lam, alpha, k)
                            assert c == count_chains(lam_s, al_s, k)
                            if c == 0:
                                break
                            k += 1


def test_dominating_set_shift_bijection():
    for p in (2, 3):
        for lam in enumerate_partitions(3, 4):
            image = {plus_shift_composition(a, 1, p) for a in enumerate_dominating(lam)}
            assert image == set(enumerate_dominating(plus_shift_composition(lam, 1, p)))


def test_theta_shift_bijection():
    # double enumeration on both sides, omega upper triangular or pi lower triangular
    for p in (2, 3):
        for n in (2, 3):
            for r in (2, 3):
                comps = enumerate_compositions(n, r)
                uppers = [w for a in comps for w in enumerate_upper_triangular(a, False)]
                everything = {
                    w for a in comps for b in comps for w in enumerate_omega(a, b)
                }
                for w in uppers:
                    for pi in everything:
                        if matrix_margins(pi)[1] != matrix_margins(w)[0]:
                            continue
                        left = {plus_shift_tensor(t, 1, p) for t in enumerate_theta(w, pi)}
                        right = set(
                            enumerate_theta(plus_shift_matrix(w, 1, p), plus_shift_matrix(pi, 1, p))
                        )
                        assert left == right
                lowers = [transpose_matrix(w) for w in uppers]
                for pi in lowers:
                    for w in everything:
                        if matrix_margins(pi)[1] != matrix_margins(w)[0]:
                            continue
                        left = {plus_shift_tensor(t, 1, p) for t in enumerate_theta(w, pi)}
                        right = set(
                            enumerate_theta(plus_shift_matrix(w, 1, p), plus_shift_matrix(pi, 1, p))
                        )
                        assert left == right


def test_sst_shift_bijection():
    # insertion of p^d leading 1s is a bijection on semistandard tableaux
    # whenever the second row fits under the first-row weight
    for p in (2, 3):
        for n in (2, 3):
            for r in (1, 2, 3, 4, 5):
                for mu in enumerate_partitions(n, r):
                    for alpha in enumerate_compositions(n, r):
                        if (mu[1] if n > 1 else 0) > alpha[0]:
                            continue
                        left = {t.plus_shift(1, p) for t in enumerate_sst(mu, alpha)}
                        right = set(
                            enumerate_sst(
                                plus_shift_composition(mu, 1, p),
                                plus_shift_composition(alpha, 1, p),
                            )
                        )
                        assert left == right


# ---------------------------------------------------------------------------
# text formats


def test_text_roundtrips():
    assert parse_composition("8,3") == (8, 3)
    assert parse_composition("11", n=2) == (11, 0)
    assert format_composition((8, 3)) == "8,3"
    assert parse_matrix("1,1/0,0") == ((1, 1), (0, 0))
    assert format_matrix(((1, 1), (0, 0))) == "1,1/0,0"
    t = parse_tableau("1,2/2,2", 2)
    assert t.counts == ((1, 0), (1, 2))
    assert format_tableau(t) == "1,2/2,2"
    with pytest.raises(ValueError):
        parse_composition("1,x")
