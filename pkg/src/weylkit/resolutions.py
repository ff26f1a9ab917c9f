"""Symbolic bookkeeping for three projective resolutions of a Weyl module.

* The chain resolution B_*: degree k is a direct sum of cyclic projectives,
  one per length-k chain of upper-triangular non-diagonal weight matrices
  descending from a top weight to lam.  Differentials are stored as arrows
  (compose with the first chain step, or merge two adjacent steps), never as
  materialised algebra elements; matrices only appear after applying a Hom
  functor, where each summand collapses to a single weight slice.
* The hook resolution P_*(a, b) for lam = (a, 1^b): degree i is a sum of
  divided-power modules indexed by positive compositions with first part in
  [a, a+i]; the differential splits one tensor factor in two.
* The two-step box presentation that realises the Weyl module as a quotient
  of D(lam).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .fparith import check_prime
from .schur import xi_product_terms
from .shapes import (
    Composition,
    Matrix,
    chain_space,
    enumerate_strictly_dominating,
    is_partition,
    margin1,
    validate_partition,
)


class ChainSummand(NamedTuple):
    """One cyclic summand of degree k: the chain and its top weight."""

    top_weight: Composition
    chain: tuple[Matrix, ...]


class DifferentialArrow(NamedTuple):
    """One component of the differential out of a degree-k summand.

    ``kind`` is "compose" (drop the first chain step; the induced map on Hom
    spaces is the action of that step) or "merge" (replace steps i, i+1 by
    the middle margin of a linking tensor; scalar (-1)^i times the structure
    constant).  Degree-1 summands only have their compose arrow.
    """

    source: ChainSummand
    target: ChainSummand
    kind: str
    omega: Matrix | None
    scalar: int


def sy_degree(lam, k: int) -> list[ChainSummand]:
    """Summands of degree k of the chain resolution of lam."""
    lam = validate_partition(lam)
    if k < 0:
        raise ValueError("degree must be nonnegative")
    if k == 0:
        return [ChainSummand(lam, ())]
    space = chain_space(lam)
    out = []
    for alpha in enumerate_strictly_dominating(lam):
        for chain in space.chains(alpha, k):
            out.append(ChainSummand(alpha, chain))
    return out


def sy_arrows(summand: ChainSummand, p: int) -> list[DifferentialArrow]:
    """All differential components out of a degree-k summand (k >= 1)."""
    check_prime(p)
    chain = summand.chain
    k = len(chain)
    if k < 1:
        raise ValueError("degree-0 summand has no outgoing differential")
    arrows: list[DifferentialArrow] = []
    first = chain[0]
    tail = chain[1:]
    tail_top = margin1(first)
    arrows.append(
        DifferentialArrow(summand, ChainSummand(tail_top, tail), "compose", first, 1)
    )
    for i in range(1, k):
        sign = (-1) ** i
        for merged, coeff in xi_product_terms(chain[i - 1], chain[i], p):
            target_chain = chain[: i - 1] + (merged,) + chain[i + 1 :]
            target = ChainSummand(summand.top_weight, target_chain)
            arrows.append(
                DifferentialArrow(summand, target, "merge", merged, sign * coeff % p)
            )
    return arrows


def sy_max_degree(lam) -> int:
    """Largest degree with a nonzero term; beyond it the resolution is zero."""
    return chain_space(validate_partition(lam)).max_length()


def sy_summand_count(lam, alpha, k: int) -> int:
    """Multiplicity of the top weight alpha in degree k."""
    return chain_space(tuple(lam)).count(tuple(alpha), k)


# ---------------------------------------------------------------------------
# hook resolution


@dataclass(frozen=True)
class HookResolution:
    """Terms of the finite resolution of the hook (a, 1^b), by degree.

    ``terms[i]`` lists the compositions (all parts positive, first part
    between a and a+i) indexing the divided-power summands of degree i.  The
    resolution has length b.
    """

    a: int
    b: int
    terms: tuple[tuple[Composition, ...], ...]

    @property
    def r(self) -> int:
        return self.a + self.b

    def degree(self, i: int) -> tuple[Composition, ...]:
        if i < 0 or i > self.b:
            return ()
        return self.terms[i]


def _positive_compositions(total: int, length: int, first_range) -> list[Composition]:
    out = []
    for first in first_range:
        rest_total = total - first
        if rest_total < length - 1 or (length == 1 and rest_total != 0):
            continue
        if length == 1:
            out.append((first,))
            continue
        for rest in _positive_rest(rest_total, length - 1):
            out.append((first,) + rest)
    out.sort(reverse=True)
    return out


def _positive_rest(total: int, length: int):
    if length == 1:
        yield (total,)
        return
    for head in range(total - length + 1, 0, -1):
        for tail in _positive_rest(total - head, length - 1):
            yield (head,) + tail


@lru_cache(maxsize=None)
def hook_resolution(a: int, b: int) -> HookResolution:
    """The length-b resolution of the hook (a, 1^b)."""
    if a < 1 or b < 0:
        raise ValueError("need a >= 1 and b >= 0")
    terms = []
    r = a + b
    for i in range(b + 1):
        length = b + 1 - i
        degree_terms = _positive_compositions(r, length, range(min(a + i, r), a - 1, -1))
        for alpha in degree_terms:
            if any(x > i + 1 for x in alpha[1:]):
                raise AssertionError(f"hook term {alpha} violates the part bound at degree {i}")
        terms.append(tuple(degree_terms))
    return HookResolution(a, b, tuple(terms))


def hook_splits(beta: Composition, position: int) -> list[tuple[int, int]]:
    """Positive two-part splits (u, v) of the entry of beta at ``position``."""
    total = beta[position]
    return [(u, total - u) for u in range(total - 1, 0, -1)]


# ---------------------------------------------------------------------------
# box presentation


class BoxFamily(NamedTuple):
    """One relation family of the box presentation: split t boxes off row
    i+1 of lam into row i (1-based rows i, i+1)."""

    i: int
    t: int
    source: Composition  # the divided-power module D(source) mapping in


def box_presentation(lam) -> list[BoxFamily]:
    """Generator data of the two-step presentation of the Weyl module of lam."""
    lam = validate_partition(lam)
    n = len(lam)
    families = []
    for i in range(n - 1):
        for t in range(1, lam[i + 1] + 1):
            gamma = list(lam)
            gamma[i] += t
            gamma[i + 1] -= t
            families.append(BoxFamily(i + 1, t, tuple(gamma)))
    return families


def is_hook(lam) -> bool:
    """True when lam is (a, 1^b) up to trailing zeros, with a >= 1."""
    lam = tuple(lam)
    if not lam or not is_partition(lam):
        return False
    nonzero = [x for x in lam if x > 0]
    return bool(nonzero) and all(x == 1 for x in nonzero[1:])
