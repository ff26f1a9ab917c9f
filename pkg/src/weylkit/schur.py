"""The Schur algebra in its basis of weight-matrix symbols.

Basis elements xi_w are indexed by n x n nonnegative integer matrices of
total r.  The product is

    xi_w . xi_pi = sum over 3-tensors theta with last margin w and first
    margin pi of [theta] . xi_{theta^2},

where the structure constant [theta] is a product of multinomial
coefficients taken along the middle index.  The sum is empty (product zero)
unless the column margin of w equals the row margin of pi.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .fparith import FpElement, check_prime, multinom_mod
from .shapes import (
    Matrix,
    diagonal_matrix,
    enumerate_compositions,
    enumerate_theta,
    margin1,
    margin2,
    matrix_total,
    transpose_matrix,
    validate_matrix,
)


def structure_constant_int(theta, p: int) -> int:
    """[theta] mod p: product over (s, q) of the multinomial of the middle fibre."""
    n = len(theta)
    result = 1
    for s in range(n):
        for q in range(n):
            parts = [theta[s][t][q] for t in range(n)]
            total = sum(parts)
            result = result * multinom_mod(total, parts, p) % p
            if result == 0:
                return 0
    return result


def structure_constant(theta, p: int) -> FpElement:
    check_prime(p)
    return FpElement(structure_constant_int(theta, p), p)


@lru_cache(maxsize=None)
def xi_product_terms(w: Matrix, pi: Matrix, p: int) -> tuple[tuple[Matrix, int], ...]:
    """Sparse terms of xi_w . xi_pi as ((matrix, coefficient), ...), zeros dropped.

    Memoised: the resolution differentials reuse the same products many times.
    """
    if margin1(w) != margin2(pi):
        return ()
    acc: dict[Matrix, int] = {}
    for theta in enumerate_theta(w, pi):
        c = structure_constant_int(theta, p)
        if c == 0:
            continue
        n = len(theta)
        mid = tuple(
            tuple(sum(theta[s][t][q] for t in range(n)) for q in range(n)) for s in range(n)
        )
        acc[mid] = (acc.get(mid, 0) + c) % p
    return tuple((m, c) for m, c in sorted(acc.items(), reverse=True) if c)


@dataclass(frozen=True)
class SchurElement:
    """A sparse F_p linear combination of basis symbols xi_w."""

    n: int
    r: int
    p: int
    terms: tuple[tuple[Matrix, int], ...] = field(default=())

    def __post_init__(self):
        check_prime(self.p)
        cleaned: dict[Matrix, int] = {}
        for w, c in self.terms:
            w = validate_matrix(w, self.n)
            if matrix_total(w) != self.r:
                raise ValueError(f"{w} does not have total {self.r}")
            c %= self.p
            if c:
                cleaned[w] = (cleaned.get(w, 0) + c) % self.p
        object.__setattr__(
            self, "terms", tuple((w, c) for w, c in sorted(cleaned.items(), reverse=True) if c)
        )

    @classmethod
    def basis(cls, w, p: int) -> "SchurElement":
        w = validate_matrix(w)
        return cls(len(w), matrix_total(w), p, ((w, 1),))

    @classmethod
    def zero(cls, n: int, r: int, p: int) -> "SchurElement":
        return cls(n, r, p)

    def coefficients(self) -> dict[Matrix, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _check_context(self, other: "SchurElement"):
        if (self.n, self.r, self.p) != (other.n, other.r, other.p):
            raise ValueError("elements live in different Schur algebras")

    def __add__(self, other: "SchurElement") -> "SchurElement":
        self._check_context(other)
        return SchurElement(self.n, self.r, self.p, self.terms + other.terms)

    def __sub__(self, other: "SchurElement") -> "SchurElement":
        return self + other.scale(-1)

    def scale(self, c: int) -> "SchurElement":
        return SchurElement(self.n, self.r, self.p, tuple((w, k * c) for w, k in self.terms))

    def __mul__(self, other: "SchurElement") -> "SchurElement":
        return element_product(self, other)

    def transpose(self) -> "SchurElement":
        """Image under the anti-automorphism xi_w -> xi_{w^t}."""
        return SchurElement(
            self.n, self.r, self.p, tuple((transpose_matrix(w), c) for w, c in self.terms)
        )

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*xi[{'/'.join(','.join(map(str, row)) for row in w)}]" for w, c in self.terms)


def xi_product(w, pi, p: int) -> SchurElement:
    """Product xi_w . xi_pi as a sparse element, coefficients mod p."""
    w = validate_matrix(w)
    pi = validate_matrix(pi, len(w))
    check_prime(p)
    n, r = len(w), matrix_total(w)
    return SchurElement(n, r, p, xi_product_terms(w, pi, p))


def element_product(x: SchurElement, y: SchurElement) -> SchurElement:
    """Bilinear extension of xi_product."""
    x._check_context(y)
    acc: dict[Matrix, int] = {}
    for w, a in x.terms:
        for pi, b in y.terms:
            for m, c in xi_product_terms(w, pi, x.p):
                acc[m] = (acc.get(m, 0) + a * b * c) % x.p
    return SchurElement(x.n, x.r, x.p, tuple(acc.items()))


def identity_element(n: int, r: int, p: int) -> SchurElement:
    """Sum of the diagonal idempotents over all weights: the unit of the algebra."""
    terms = tuple((diagonal_matrix(nu), 1) for nu in enumerate_compositions(n, r))
    return SchurElement(n, r, p, terms)
