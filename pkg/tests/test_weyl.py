import itertools
import random

import numpy as np
import pytest

from weylkit.shapes import (
    Tableau,
    diagonal_matrix,
    dominates,
    enumerate_compositions,
    enumerate_omega,
    enumerate_partitions,
    enumerate_sst,
    kostka,
    matrix_margins,
    plus_shift_composition,
    transpose_matrix,
)
from weylkit.schur import xi_product
from weylkit.weyl import (
    act,
    act_matrix,
    box_relation_vectors,
    build_weight_space,
    gram_matrix,
    simple_dim,
    simple_weight_dims,
    straighten,
    two_row_straighten,
)


def test_box_relations_column_shape():
    # the column pair (1,1) at weight (2,0): a single relation killing the
    # lone monomial, over every prime
    monomials, relations = box_relation_vectors((1, 1), (2, 0), 2)
    assert len(monomials) == 1
    assert relations.shape == (1, 1)
    assert relations[0, 0] % 2 == 1
    for p in (2, 3, 5):
        model = build_weight_space((1, 1), (2, 0), p)
        assert model.dim == 0  # no semistandard filling of a column with two 1s


def test_box_relations_single_row_empty():
    _, relations = box_relation_vectors((4,), (4,), 3)
    assert relations.shape[0] == 0


def test_box_relation_rank_example():
    model = build_weight_space((2, 1, 0), (1, 1, 1), 3)
    assert len(model.monomials) - model.relation_rank == 2
    assert model.relation_rank == len(model.monomials) - kostka((2, 1, 0), (1, 1, 1))


def test_build_weight_space_examples():
    for p in (2, 3):
        mu = (3, 1)
        model = build_weight_space(mu, mu, p)
        assert model.dim == 1
        assert model.sst[0] == Tableau.canonical(mu)
        # the end-of-range sharpness pair
        zero = build_weight_space((2, 2), (1, 3), p)
        assert zero.dim == 0
        shifted = build_weight_space(
            plus_shift_composition((2, 2), 1, p), plus_shift_composition((1, 3), 1, p), p
        )
        assert shifted.dim == 1
        u_plus = Tableau.from_entries([[1, 2], [2, 2]], 2).plus_shift(1, p)
        assert np.any(shifted.monomial_class(u_plus.to_matrix()))


def test_kostka_dimension_assertion_grid():
    for p in (2, 3, 5):
        for n in (2, 3):
            for r in range(1, 7):
                for mu in enumerate_partitions(n, r):
                    for alpha in enumerate_compositions(n, r):
                        model = build_weight_space(mu, alpha, p)
                        assert model.dim == kostka(mu, alpha), (mu, alpha, p)


def test_straighten_semistandard_is_unit_vector():
    model = build_weight_space((3, 2, 0), (2, 2, 1), 3)
    for i, tab in enumerate(model.sst):
        coords = straighten(tab, 3)
        expected = np.zeros(model.dim, dtype=np.int64)
        expected[i] = 1
        assert np.array_equal(coords, expected)


def test_straighten_sharpness_witness():
    u = Tableau.from_entries([[1, 2], [2, 2]], 2)
    for p in (2, 3):
        assert straighten(u, p).size == 0  # the whole weight slice vanishes
        shifted = u.plus_shift(1, p)
        coords = straighten(shifted, p)
        assert coords.size == 1 and coords[0] != 0


def test_straighten_closed_form_example():
    u = Tableau.from_entries([[1, 2], [1, 2]], 2)
    coords = straighten(u, 3, (2, 2))
    model = build_weight_space((2, 2), (2, 2), 3)
    assert model.sst == (Tableau.from_entries([[1, 1], [2, 2]], 2),)
    assert coords.tolist() == [1]  # -2 = 1 mod 3


def test_straighten_shape_mismatch():
    u = Tableau.from_entries([[1, 2], [2, 2]], 2)
    with pytest.raises(ValueError):
        straighten(u, 2, (3, 1))


def test_two_row_vanishing_branch():
    # top and bottom 1s overflowing the first row kill the class
    t = Tableau.from_entries([[1, 1], [1, 2]], 2)
    assert not np.any(two_row_straighten(t, (2, 2), 3))


def test_two_row_trivial_branch():
    t = Tableau.from_entries([[1, 2], [2, 3]], 3)
    mu = (2, 2, 0)
    coords = two_row_straighten(t, mu, 5)
    model = build_weight_space(mu, t.weight, 5)
    assert coords[model.sst.index(t)] == 1 and np.count_nonzero(coords) == 1


def test_two_row_agrees_with_relation_space():
    for p in (2, 3):
        for r in range(1, 7):
            shapes = [m for m in enumerate_partitions(2, r)]
            shapes += [m + (0,) for m in enumerate_partitions(2, r)]
            for mu in shapes:
                n = len(mu)
                for alpha in enumerate_compositions(n, r):
                    for w in enumerate_omega(alpha, mu):
                        tab = Tableau(w)
                        closed = two_row_straighten(tab, mu, p)
                        reduced = straighten(tab, p, mu)
                        assert np.array_equal(closed, reduced), (mu, alpha, w, p)


def test_straightening_shift_compatibility():
    # coefficients of a tableau class and of its shifted class agree
    # entrywise under the tableau bijection, when mu_2 <= alpha_1
    for p in (2, 3):
        for n in (2, 3):
            for r in range(1, 6):
                for mu in enumerate_partitions(n, r):
                    for alpha in enumerate_compositions(n, r):
                        if (mu[1] if n > 1 else 0) > alpha[0]:
                            continue
                        model = build_weight_space(mu, alpha, p)
                        shifted = build_weight_space(
                            plus_shift_composition(mu, 1, p),
                            plus_shift_composition(alpha, 1, p),
                            p,
                        )
                        mapping = [shifted.sst.index(t.plus_shift(1, p)) for t in model.sst]
                        for w in model.monomials:
                            v = model.monomial_class(w)
                            vs = shifted.monomial_class(Tableau(w).plus_shift(1, p).to_matrix())
                            assert all(v[i] == vs[mapping[i]] for i in range(len(v)))


def test_linear_combination_shift_equivalence():
    # random linear combinations vanish exactly when the shifted ones do
    rng = random.Random(3)
    for _ in range(100):
        p = rng.choice((2, 3))
        r = rng.randint(2, 5)
        mu = rng.choice(enumerate_partitions(2, r))
        alphas = [a for a in enumerate_compositions(2, r) if mu[1] <= a[0]]
        alpha = rng.choice(alphas)
        model = build_weight_space(mu, alpha, p)
        shifted = build_weight_space(
            plus_shift_composition(mu, 1, p), plus_shift_composition(alpha, 1, p), p
        )
        coeffs = [rng.randrange(p) for _ in model.monomials]
        total = np.zeros(model.dim, dtype=np.int64)
        total_shifted = np.zeros(shifted.dim, dtype=np.int64)
        for c, w in zip(coeffs, model.monomials):
            total = (total + c * model.monomial_class(w)) % p
            ws = Tableau(w).plus_shift(1, p).to_matrix()
            total_shifted = (total_shifted + c * shifted.monomial_class(ws)) % p
        assert bool(np.any(total)) == bool(np.any(total_shifted))


# ---------------------------------------------------------------------------
# action


def test_act_diagonal_identity():
    mu, beta, p = (3, 1), (2, 2), 3
    model = build_weight_space(mu, beta, p)
    m = act_matrix(diagonal_matrix(beta), mu, p)
    assert np.array_equal(m, np.eye(model.dim, dtype=np.int64))


def test_act_on_highest_vector_gives_monomial_class():
    mu, p = (2, 1, 0), 3
    for alpha in enumerate_compositions(3, 3):
        for w in enumerate_omega(alpha, mu):
            model = build_weight_space(mu, alpha, p)
            image = act(w, np.ones(1, dtype=np.int64), mu, p)
            assert np.array_equal(image, model.monomial_class(w))


def test_act_weight_mismatch_rejected():
    with pytest.raises(ValueError):
        act(((1, 1), (0, 0)), np.zeros(2, dtype=np.int64), (2, 0), 2)


def test_act_module_axiom_random():
    rng = random.Random(5)
    checked = 0
    while checked < 150:
        p = rng.choice((2, 3))
        r = rng.randint(1, 4)
        comps = enumerate_compositions(2, r)
        mu = rng.choice(enumerate_partitions(2, r))
        a, b, c = (rng.choice(comps) for _ in range(3))
        ws, pis = enumerate_omega(a, b), enumerate_omega(b, c)
        if not ws or not pis:
            continue
        w, pi = rng.choice(ws), rng.choice(pis)
        src = build_weight_space(mu, c, p)
        if src.dim == 0:
            continue
        v = np.array([rng.randrange(p) for _ in range(src.dim)], dtype=np.int64)
        lhs = np.zeros(build_weight_space(mu, a, p).dim, dtype=np.int64)
        for m, coef in xi_product(w, pi, p).terms:
            lhs = (lhs + coef * (act_matrix(m, mu, p) @ v)) % p
        rhs = act(w, act(pi, v, mu, p), mu, p)
        assert np.array_equal(lhs, rhs)
        checked += 1


# ---------------------------------------------------------------------------
# gram, radical, simple head


def test_gram_examples():
    assert gram_matrix((3, 1), (3, 1), 5).gram.tolist() == [[1]]
    g2 = gram_matrix((2, 0), (1, 1), 2)
    assert g2.gram.tolist() == [[0]] and g2.radical_dim == 1
    g3 = gram_matrix((2, 0), (1, 1), 3)
    assert g3.gram.tolist() == [[2]] and g3.radical_dim == 0
    empty = gram_matrix((2, 2), (1, 3), 2)
    assert empty.gram.shape == (0, 0) and empty.radical_dim == 0


def test_gram_symmetric_and_radical_semisimple_case():
    # p > r: every Gram matrix is nonsingular
    p, r = 5, 3
    for mu in enumerate_partitions(2, r):
        for alpha in enumerate_compositions(2, r):
            data = gram_matrix(mu, alpha, p)
            assert np.array_equal(data.gram, data.gram.T)
            assert data.radical_dim == 0


def test_contravariance():
    for p in (2, 3):
        for r in (1, 2, 3, 4):
            comps = enumerate_compositions(2, r)
            for mu in enumerate_partitions(2, r):
                for a in comps:
                    for b in comps:
                        for w in enumerate_omega(a, b):
                            src = gram_matrix(mu, b, p)
                            tgt = gram_matrix(mu, a, p)
                            m = act_matrix(w, mu, p)
                            mt = act_matrix(transpose_matrix(w), mu, p)
                            assert np.array_equal(
                                (m.T @ tgt.gram) % p, (src.gram @ mt) % p
                            ), (mu, w, p)


def test_radical_is_submodule():
    for p in (2, 3):
        for r in (2, 3, 4):
            comps = enumerate_compositions(2, r)
            for mu in enumerate_partitions(2, r):
                for a in comps:
                    for b in comps:
                        for w in enumerate_omega(a, b):
                            src = gram_matrix(mu, b, p)
                            if src.radical_dim == 0:
                                continue
                            tgt = gram_matrix(mu, a, p)
                            image = (act_matrix(w, mu, p) @ src.radical_basis.T) % p
                            assert not np.any((tgt.gram @ image) % p)


def test_simple_weight_dims_examples():
    assert simple_weight_dims((2, 0), 2) == {(2, 0): 1, (1, 1): 0, (0, 2): 1}
    for p in (2, 3, 5):
        for mu in enumerate_partitions(3, 4):
            dims = simple_weight_dims(mu, p)
            assert dims[mu] == 1


def test_p_kostka_shift_equality():
    # partitions alpha with alpha_1 >= r/2 and p^d > r - alpha_1
    for p in (2, 3):
        for n in (2, 3):
            for r in range(1, 6):
                for mu in enumerate_partitions(n, r):
                    for alpha in enumerate_partitions(n, r):
                        if not dominates(mu, alpha):
                            continue
                        if 2 * alpha[0] < r or p <= r - alpha[0]:
                            continue
                        left = simple_dim(mu, alpha, p)
                        right = simple_dim(
                            plus_shift_composition(mu, 1, p),
                            plus_shift_composition(alpha, 1, p),
                            p,
                        )
                        assert left == right, (mu, alpha, p)


def test_radical_invariant_under_global_scaling():
    from weylkit.linalg import kernel_basis_mod

    data = gram_matrix((2, 1, 0), (1, 1, 1), 2)
    for scale in (1, 2):
        scaled = (scale * data.gram) % 3
        assert kernel_basis_mod(scaled, 3).shape[0] == kernel_basis_mod(data.gram % 3, 3).shape[0]
