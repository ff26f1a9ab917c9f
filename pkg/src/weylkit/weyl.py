"""Exact weight-space models of Weyl modules and their simple heads.

A Weyl module of highest weight mu is realised as the quotient of the
divided-power module D(mu) by the span of the box relations: for each
adjacent pair of rows (i, i+1) and each 1 <= t <= mu_{i+1}, the generators
of D(mu_1, ..., mu_i + t, mu_{i+1} - t, ...) map in by splitting t boxes off
row i (coefficient-free comultiplication of divided powers) and merging them
into row i+1 (multiplication, which contributes binomial coefficients).

Everything is computed one weight at a time.  The weight-alpha slice of
D(mu) has the divided monomials as basis, indexed by matrices with column
margin mu and row margin alpha; the semistandard tableaux of weight alpha
survive as a basis of the quotient, and the straightening map is the normal
form against the row-reduced relation span.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .fparith import binom_mod, check_prime
from .linalg import kernel_basis_mod, rref_mod
from .schur import xi_product_terms
from .shapes import (
    Composition,
    Matrix,
    Tableau,
    _compositions_bounded,
    enumerate_compositions,
    enumerate_omega,
    enumerate_sst,
    kostka,
    margin1,
    margin2,
    transpose_matrix,
    validate_composition,
    validate_partition,
)


@dataclass(frozen=True, eq=False)
class WeightSpaceModel:
    """The weight-alpha slice of the Weyl module of highest weight mu over F_p.

    ``monomials`` lists the divided-monomial basis of the ambient slice of
    D(mu); ``sst`` the semistandard tableaux of this weight; ``normal_form``
    maps monomial coordinates to semistandard coordinates (one row per
    monomial).
    """

    mu: Composition
    alpha: Composition
    p: int
    monomials: tuple[Matrix, ...]
    sst: tuple[Tableau, ...]
    relation_rank: int
    normal_form: np.ndarray
    index: dict[Matrix, int]

    @property
    def dim(self) -> int:
        return len(self.sst)

    @property
    def n(self) -> int:
        return len(self.mu)

    def monomial_index(self, w: Matrix) -> int:
        return self.index[w]

    def monomial_class(self, w: Matrix) -> np.ndarray:
        """Semistandard coordinates of the class of the divided monomial w."""
        return self.normal_form[self.index[w]]


def box_relation_vectors(mu, alpha, p: int):
    """Images of the box-relation generators in the weight-alpha monomial basis.

    Returns (monomials, relations) where relations is a matrix over F_p with
    one row per relation generator, in monomial coordinates.
    """
    mu = validate_partition(mu)
    alpha = validate_composition(alpha, n=len(mu), r=sum(mu))
    check_prime(p)
    n = len(mu)
    monomials = tuple(enumerate_omega(alpha, mu))
    index = {w: i for i, w in enumerate(monomials)}
    rows: list[np.ndarray] = []
    for i in range(n - 1):
        for t in range(1, mu[i + 1] + 1):
            gamma = list(mu)
            gamma[i] += t
            gamma[i + 1] -= t
            for rho in enumerate_omega(alpha, tuple(gamma)):
                vec = np.zeros(len(monomials), dtype=np.int64)
                col_i = tuple(rho[s][i] for s in range(n))
                col_next = tuple(rho[s][i + 1] for s in range(n))
                for moved in _compositions_bounded(t, col_i):
                    coeff = 1
                    for s in range(n):
                        coeff = coeff * binom_mod(moved[s] + col_next[s], moved[s], p) % p
                    if coeff == 0:
                        continue
                    target = tuple(
                        tuple(
                            col_i[s] - moved[s]
                            if j == i
                            else (col_next[s] + moved[s] if j == i + 1 else rho[s][j])
                            for j in range(n)
                        )
                        for s in range(n)
                    )
                    vec[index[target]] = (vec[index[target]] + coeff) % p
                rows.append(vec)
    if rows:
        relations = np.array(rows, dtype=np.int64)
    else:
        relations = np.zeros((0, len(monomials)), dtype=np.int64)
    return monomials, relations


@lru_cache(maxsize=None)
def build_weight_space(mu: Composition, alpha: Composition, p: int) -> WeightSpaceModel:
    """Build (and cache) the weight-alpha model of the Weyl module of shape mu."""
    monomials, relations = box_relation_vectors(mu, alpha, p)
    sst = enumerate_sst(tuple(mu), tuple(alpha))
    index = {w: i for i, w in enumerate(monomials)}
    sst_cols = [index[t.to_matrix()] for t in sst]
    other_cols = [c for c in range(len(monomials)) if c not in set(sst_cols)]
    perm = other_cols + sst_cols

    if len(monomials) == 0:
        normal_form = np.zeros((0, len(sst)), dtype=np.int64)
        return WeightSpaceModel(tuple(mu), tuple(alpha), p, monomials, sst, 0, normal_form, index)

    reduced, pivots = rref_mod(relations[:, perm], p)
    rank = len(pivots)
    if rank != len(other_cols) or any(piv >= len(other_cols) for piv in pivots):
        raise AssertionError(
            f"SST basis violated for mu={mu}, alpha={alpha}, p={p}: "
            f"rank {rank}, non-SST columns {len(other_cols)}"
        )
    normal_form = np.zeros((len(monomials), len(sst)), dtype=np.int64)
    for j, col in enumerate(sst_cols):
        normal_form[col, j] = 1
    for i, piv in enumerate(pivots):
        # row: monomial(perm[piv]) + sum over sst cols of reduced entries = 0
        col = perm[piv]
        normal_form[col] = (-reduced[i, len(other_cols):]) % p
    normal_form.flags.writeable = False
    return WeightSpaceModel(tuple(mu), tuple(alpha), p, monomials, sst, rank, normal_form, index)


def straighten(tab: Tableau, p: int, mu=None) -> np.ndarray:
    """Semistandard coordinates of the class of a tableau in its Weyl module.

    The shape is read off the tableau unless given explicitly; the weight is
    always read off the tableau.  The result has one entry per semistandard
    tableau of that shape and weight.
    """
    shape = tuple(mu) if mu is not None else tab.shape
    if tuple(tab.shape) != tuple(shape):
        raise ValueError(f"tableau has shape {tab.shape}, expected {shape}")
    model = build_weight_space(tuple(shape), tab.weight, p)
    return model.monomial_class(tab.to_matrix())


def two_row_straighten(tab: Tableau, mu, p: int) -> np.ndarray:
    """Straighten a two-row tableau by the closed-form exchange expansion.

    If the multiplicities of the entry 1 in the two rows sum to more than
    mu_1 the class is zero.  Otherwise all 1s move to the top row: the b_1
    bottom 1s are exchanged against i_2 + ... + i_n = b_1 top entries, each
    term weighted by (-1)^{b_1} prod_s C(b_s + i_s, b_s).  The coefficients
    do not depend on a_1.  Terms that are still not semistandard (the
    expansion only normalises the entry 1) are resolved against the relation
    span.
    """
    mu = validate_partition(mu)
    if len([m for m in mu if m > 0]) > 2:
        raise ValueError(f"{mu} has more than two rows")
    if tuple(tab.shape) != tuple(mu):
        raise ValueError(f"tableau has shape {tab.shape}, expected {mu}")
    n = tab.n
    a = tuple(tab.counts[s][0] for s in range(n))
    b = tuple(tab.counts[s][1] for s in range(n))
    model = build_weight_space(tuple(mu), tab.weight, p)
    out = np.zeros(model.dim, dtype=np.int64)
    if a[0] + b[0] > mu[0]:
        return out
    sign = (-1) ** b[0] % p
    for moved in _compositions_bounded(b[0], a[1:]):
        coeff = sign
        for s in range(1, n):
            coeff = coeff * binom_mod(b[s] + moved[s - 1], b[s], p) % p
        if coeff == 0:
            continue
        top = (a[0] + b[0],) + tuple(a[s] - moved[s - 1] for s in range(1, n))
        bottom = (0,) + tuple(b[s] + moved[s - 1] for s in range(1, n))
        counts = tuple(
            (top[s], bottom[s]) + (0,) * (n - 2) for s in range(n)
        )
        term = Tableau(counts)
        if term.is_semistandard():
            j = model.sst.index(term)
            out[j] = (out[j] + coeff) % p
        else:
            out = (out + coeff * model.monomial_class(term.to_matrix())) % p
    return out


# ---------------------------------------------------------------------------
# the algebra action on weight spaces


@lru_cache(maxsize=None)
def act_matrix(w: Matrix, mu: Composition, p: int) -> np.ndarray:
    """Matrix of xi_w on the Weyl module of shape mu, from the weight slice
    at the column margin of w to the slice at its row margin, in
    semistandard coordinates."""
    src = build_weight_space(mu, margin1(w), p)
    tgt = build_weight_space(mu, margin2(w), p)
    out = np.zeros((tgt.dim, src.dim), dtype=np.int64)
    for j, tab in enumerate(src.sst):
        col = np.zeros(tgt.dim, dtype=np.int64)
        for m, c in xi_product_terms(w, tab.to_matrix(), p):
            col = (col + c * tgt.monomial_class(m)) % p
        out[:, j] = col
    out.flags.writeable = False
    return out


def act(w, vec, mu, p: int) -> np.ndarray:
    """Apply xi_w to a vector in semistandard coordinates of its weight slice."""
    w = tuple(tuple(row) for row in w)
    vec = np.asarray(vec, dtype=np.int64)
    src_dim = build_weight_space(tuple(mu), margin1(w), p).dim
    if vec.shape != (src_dim,):
        raise ValueError(f"vector has shape {vec.shape}, weight slice has dim {src_dim}")
    return act_matrix(w, tuple(mu), p) @ vec % p


# ---------------------------------------------------------------------------
# contravariant form, radical, simple head


@dataclass(frozen=True, eq=False)
class GramData:
    """Gram matrix of the contravariant form on a weight slice, normalised by
    <v_mu, v_mu> = 1, together with its radical and a fixed coordinate system
    for the quotient (the simple head's weight slice)."""

    mu: Composition
    alpha: Composition
    p: int
    gram: np.ndarray
    radical_basis: np.ndarray
    free_columns: tuple[int, ...]
    projection: np.ndarray  # quotient coords from full coords
    lift: np.ndarray  # representatives: quotient coords back into full coords

    @property
    def radical_dim(self) -> int:
        return self.radical_basis.shape[0]

    @property
    def simple_dim(self) -> int:
        return len(self.free_columns)


@lru_cache(maxsize=None)
def gram_data(mu: Composition, alpha: Composition, p: int) -> GramData:
    """Gram matrix G[i, j] = coefficient of the canonical highest tableau in
    xi_{w(T_i)^t} . [T_j], plus kernel data."""
    model = build_weight_space(mu, alpha, p)
    k = model.dim
    gram = np.zeros((k, k), dtype=np.int64)
    if k:
        top = build_weight_space(mu, mu, p)
        if top.dim != 1:
            raise AssertionError(f"highest weight slice of {mu} is not one-dimensional")
        for i, tab in enumerate(model.sst):
            gram[i, :] = act_matrix(transpose_matrix(tab.to_matrix()), mu, p)[0, :]
    if not np.array_equal(gram, gram.T):
        raise AssertionError(f"contravariant Gram matrix not symmetric for {mu}, {alpha}, p={p}")
    radical = kernel_basis_mod(gram, p)
    reduced, pivots = rref_mod(radical, p) if radical.size else (radical, [])
    pivot_set = set(pivots)
    free = tuple(c for c in range(k) if c not in pivot_set)
    projection = np.zeros((len(free), k), dtype=np.int64)
    for row_idx, f in enumerate(free):
        projection[row_idx, f] = 1
        for i, piv in enumerate(pivots):
            projection[row_idx, piv] = (-reduced[i, f]) % p
    lift = np.zeros((k, len(free)), dtype=np.int64)
    for row_idx, f in enumerate(free):
        lift[f, row_idx] = 1
    for arr in (gram, radical, projection, lift):
        arr.flags.writeable = False
    return GramData(tuple(mu), tuple(alpha), p, gram, radical, free, projection, lift)


def gram_matrix(mu, alpha, p: int) -> GramData:
    return gram_data(tuple(mu), tuple(alpha), p)


def simple_dim(mu, alpha, p: int) -> int:
    """Dimension of the weight-alpha slice of the simple head (p-Kostka number)."""
    return gram_data(tuple(mu), tuple(alpha), p).simple_dim


@lru_cache(maxsize=None)
def act_matrix_simple(w: Matrix, mu: Composition, p: int) -> np.ndarray:
    """Matrix of xi_w between weight slices of the simple head of shape mu."""
    src = gram_data(mu, margin1(w), p)
    tgt = gram_data(mu, margin2(w), p)
    out = tgt.projection @ act_matrix(w, mu, p) @ src.lift % p
    out.flags.writeable = False
    return out


def simple_weight_dims(mu, p: int) -> dict[Composition, int]:
    """Weight-slice dimensions of the simple head, for every weight that
    occurs in the Weyl module of shape mu."""
    mu = validate_partition(mu)
    out: dict[Composition, int] = {}
    for alpha in enumerate_compositions(len(mu), sum(mu)):
        if kostka(mu, alpha) > 0:
            out[alpha] = simple_dim(mu, alpha, p)
    return out


def clear_caches():
    """Drop all memoised models and action matrices (mainly for tests)."""
    build_weight_space.cache_clear()
    gram_data.cache_clear()
    act_matrix.cache_clear()
    act_matrix_simple.cache_clear()
