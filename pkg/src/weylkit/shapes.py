"""Index combinatorics: compositions, dominance, weight matrices and tensors,
tableaux, and the degree-raising shift that adds p^d to a leading entry.

Conventions used throughout the package:

* A composition of r with n parts is a tuple of n nonnegative ints summing
  to r.  A partition is a weakly decreasing composition.
* A weight matrix w is an n x n tuple-of-tuples; its margins are
  ``margin1(w)`` = column sums and ``margin2(w)`` = row sums.
* A weight 3-tensor t[s][t][q] has margins ``tensor_margins`` =
  (sum over s, sum over t, sum over q).
* A tableau of shape mu is stored as the count matrix c[i][j] = number of
  entries i+1 in row j+1, padded to n x n.  Column sums give the shape and
  row sums give the weight, so the tableau/matrix correspondence is the
  identity on this representation.
* Every enumeration returns a duplicate-free list sorted by the flattened
  integer tuple in descending lexicographic order.  This single rule fixes
  all basis orderings downstream.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

Composition = tuple[int, ...]
Matrix = tuple[Composition, ...]
Tensor = tuple[Matrix, ...]


# ---------------------------------------------------------------------------
# compositions and dominance


def validate_composition(parts, n: int | None = None, r: int | None = None) -> Composition:
    parts = tuple(int(x) for x in parts)
    if any(x < 0 for x in parts):
        raise ValueError(f"negative part in {parts}")
    if n is not None and len(parts) != n:
        raise ValueError(f"expected {n} parts, got {parts}")
    if r is not None and sum(parts) != r:
        raise ValueError(f"expected total {r}, got {parts}")
    return parts


def is_partition(parts) -> bool:
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def validate_partition(parts, n: int | None = None, r: int | None = None) -> Composition:
    parts = validate_composition(parts, n=n, r=r)
    if not is_partition(parts):
        raise ValueError(f"{parts} is not weakly decreasing")
    return parts


def pad(parts, n: int) -> Composition:
    parts = tuple(parts)
    if len(parts) > n:
        raise ValueError(f"{parts} has more than {n} parts")
    return parts + (0,) * (n - len(parts))


def dominates(a, b) -> bool:
    """Dominance order: every prefix sum of a is >= the matching prefix of b."""
    a, b = tuple(a), tuple(b)
    if len(a) != len(b) or sum(a) != sum(b):
        raise ValueError(f"cannot compare {a} and {b}: different length or total")
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa < sb:
            return False
    return True


def strictly_dominates(a, b) -> bool:
    return tuple(a) != tuple(b) and dominates(a, b)


def _compositions_bounded(total: int, bounds: tuple[int, ...]) -> Iterator[Composition]:
    # Descending-lex generation of tuples c with sum(c) = total, 0 <= c_i <= bounds_i.
    if not bounds:
        if total == 0:
            yield ()
        return
    head_max = min(total, bounds[0])
    for head in range(head_max, -1, -1):
        for rest in _compositions_bounded(total - head, bounds[1:]):
            yield (head,) + rest


@lru_cache(maxsize=None)
def enumerate_compositions(n: int, r: int) -> tuple[Composition, ...]:
    """All of Lambda(n;r) in descending lexicographic order."""
    if n < 1 or r < 0:
        raise ValueError("need n >= 1 and r >= 0")
    return tuple(_compositions_bounded(r, (r,) * n))


@lru_cache(maxsize=None)
def enumerate_partitions(n: int, r: int) -> tuple[Composition, ...]:
    """All partitions of r with at most n parts (padded to length n)."""
    return tuple(a for a in enumerate_compositions(n, r) if is_partition(a))


def enumerate_dominating(lam) -> list[Composition]:
    lam = tuple(lam)
    return [a for a in enumerate_compositions(len(lam), sum(lam)) if dominates(a, lam)]


def enumerate_strictly_dominating(lam) -> list[Composition]:
    lam = tuple(lam)
    return [a for a in enumerate_dominating(lam) if a != lam]


# ---------------------------------------------------------------------------
# weight matrices and 3-tensors


def validate_matrix(w, n: int | None = None) -> Matrix:
    w = tuple(tuple(int(x) for x in row) for row in w)
    size = len(w)
    if n is not None and size != n:
        raise ValueError(f"expected a {n}x{n} matrix")
    if any(len(row) != size for row in w):
        raise ValueError("matrix must be square")
    if any(x < 0 for row in w for x in row):
        raise ValueError("matrix entries must be nonnegative")
    return w


def margin1(w) -> Composition:
    """Column sums."""
    return tuple(sum(row[t] for row in w) for t in range(len(w)))


def margin2(w) -> Composition:
    """Row sums."""
    return tuple(sum(row) for row in w)


def matrix_margins(w) -> tuple[Composition, Composition]:
    """(column sums, row sums) of a weight matrix."""
    return margin1(w), margin2(w)


def matrix_total(w) -> int:
    return sum(sum(row) for row in w)


def transpose_matrix(w) -> Matrix:
    n = len(w)
    return tuple(tuple(w[s][t] for s in range(n)) for t in range(n))


def is_upper_triangular(w) -> bool:
    return all(w[s][t] == 0 for s in range(len(w)) for t in range(s))


def is_lower_triangular(w) -> bool:
    return all(w[s][t] == 0 for s in range(len(w)) for t in range(s + 1, len(w)))


def is_diagonal(w) -> bool:
    return is_upper_triangular(w) and is_lower_triangular(w)


def diagonal_matrix(nu) -> Matrix:
    n = len(nu)
    return tuple(tuple(nu[s] if s == t else 0 for t in range(n)) for s in range(n))


def tensor_margins(t) -> tuple[Matrix, Matrix, Matrix]:
    """(sum over first index, sum over middle index, sum over last index)."""
    n = len(t)
    rng = range(n)
    m1 = tuple(tuple(sum(t[s][a][b] for s in rng) for b in rng) for a in rng)
    m2 = tuple(tuple(sum(t[s][a][b] for a in rng) for b in rng) for s in rng)
    m3 = tuple(tuple(sum(t[s][a][b] for b in rng) for a in rng) for s in rng)
    return m1, m2, m3


def tensor_total(t) -> int:
    return sum(x for plane in t for row in plane for x in row)


def _flatten_matrix(w) -> tuple[int, ...]:
    return tuple(x for row in w for x in row)


def _flatten_tensor(t) -> tuple[int, ...]:
    return tuple(x for plane in t for row in plane for x in row)


@lru_cache(maxsize=None)
def enumerate_contingency(row_sums: Composition, col_sums: Composition) -> tuple[Matrix, ...]:
    """All nonnegative integer matrices with the given row and column sums.

    Empty when the two totals disagree.  Rows are generated in descending-lex
    order, which makes the whole list descending-lex on the flattened matrix.
    """
    if sum(row_sums) != sum(col_sums):
        return ()
    n_cols = len(col_sums)

    def rows(remaining_rows: tuple[int, ...], budget: tuple[int, ...]):
        if not remaining_rows:
            if all(b == 0 for b in budget):
                yield ()
            return
        for row in _compositions_bounded(remaining_rows[0], budget):
            new_budget = tuple(budget[j] - row[j] for j in range(n_cols))
            for rest in rows(remaining_rows[1:], new_budget):
                yield (row,) + rest

    return tuple(rows(tuple(row_sums), tuple(col_sums)))


def enumerate_omega(alpha, beta) -> list[Matrix]:
    """Matrices with row margin alpha and column margin beta."""
    return list(enumerate_contingency(tuple(alpha), tuple(beta)))


def enumerate_theta(w, pi) -> list[Tensor]:
    """3-tensors whose last-index margin is w and first-index margin is pi.

    For each middle index the slice (theta[s][t][q])_{s,q} is a contingency
    matrix with row sums given by column t of w and column sums given by
    row t of pi; the result is the cartesian product over t.
    """
    n = len(w)
    if matrix_total(w) != matrix_total(pi):
        return []
    slices = []
    for t in range(n):
        rows_t = tuple(w[s][t] for s in range(n))
        cols_t = tuple(pi[t])
        options = enumerate_contingency(rows_t, cols_t)
        if not options:
            return []
        slices.append(options)

    results: list[Tensor] = []

    def assemble(t: int, chosen: list[Matrix]):
        if t == n:
            theta = tuple(
                tuple(tuple(chosen[mid][s][q] for q in range(n)) for mid in range(n))
                for s in range(n)
            )
            results.append(theta)
            return
        for option in slices[t]:
            chosen.append(option)
            assemble(t + 1, chosen)
            chosen.pop()

    assemble(0, [])
    results.sort(key=_flatten_tensor, reverse=True)
    return results


@lru_cache(maxsize=None)
def enumerate_upper_triangular(row_sums: Composition, skip_diagonal: bool = True) -> tuple[Matrix, ...]:
    """Upper triangular matrices with the given row sums.

    With ``skip_diagonal`` the purely diagonal matrix is excluded, i.e. the
    result is the row-sum fibre of the span usually written Lambda^1: upper
    triangular with at least one nonzero entry strictly above the diagonal.
    """
    n = len(row_sums)

    def build(s: int):
        if s == n:
            yield ()
            return
        width = n - s
        for tail in _compositions_bounded(row_sums[s], (row_sums[s],) * width):
            row = (0,) * s + tail
            for rest in build(s + 1):
                yield (row,) + rest

    mats = [m for m in build(0) if not (skip_diagonal and is_diagonal(m))]
    mats.sort(key=_flatten_matrix, reverse=True)
    return tuple(mats)


# ---------------------------------------------------------------------------
# degree-raising shift


def _check_shift(d: int, p: int) -> int:
    if d < 1:
        raise ValueError("shift exponent d must be >= 1")
    if p < 2:
        raise ValueError("p must be at least 2")
    return p**d


def plus_shift_composition(a, d: int, p: int) -> Composition:
    """Add p^d to the first part."""
    q = _check_shift(d, p)
    a = tuple(a)
    return (a[0] + q,) + a[1:]


def plus_shift_matrix(w, d: int, p: int) -> Matrix:
    """Add p^d to the (1, 1) entry."""
    q = _check_shift(d, p)
    return ((w[0][0] + q,) + tuple(w[0][1:]),) + tuple(tuple(row) for row in w[1:])


def plus_shift_tensor(t, d: int, p: int) -> Tensor:
    """Add p^d to the (1, 1, 1) entry."""
    q = _check_shift(d, p)
    first_row = (t[0][0][0] + q,) + tuple(t[0][0][1:])
    first_plane = (first_row,) + tuple(tuple(row) for row in t[0][1:])
    return (first_plane,) + tuple(tuple(tuple(row) for row in plane) for plane in t[1:])


# ---------------------------------------------------------------------------
# tableaux


class Tableau:
    """A filling of a Young diagram with entries from {1, ..., n}.

    Entries within a row commute, so the canonical storage is the count
    matrix ``counts[i][j]`` = multiplicity of entry i+1 in row j+1 (an n x n
    matrix).  Arbitrary fillings are normalised to this row-sorted form on
    ingestion.
    """

    __slots__ = ("counts",)

    def __init__(self, counts):
        self.counts: Matrix = validate_matrix(counts)

    @classmethod
    def from_entries(cls, rows, n: int) -> "Tableau":
        counts = [[0] * n for _ in range(n)]
        if len(rows) > n:
            raise ValueError(f"more than {n} rows")
        for j, row in enumerate(rows):
            for entry in row:
                if not 1 <= entry <= n:
                    raise ValueError(f"entry {entry} outside 1..{n}")
                counts[entry - 1][j] += 1
        return cls(tuple(tuple(row) for row in counts))

    @classmethod
    def from_matrix(cls, w) -> "Tableau":
        return cls(w)

    @classmethod
    def canonical(cls, mu) -> "Tableau":
        """The tableau of shape mu whose row j is filled with the entry j."""
        return cls(diagonal_matrix(tuple(mu)))

    @property
    def n(self) -> int:
        return len(self.counts)

    @property
    def shape(self) -> Composition:
        return margin1(self.counts)

    @property
    def weight(self) -> Composition:
        return margin2(self.counts)

    def to_matrix(self) -> Matrix:
        return self.counts

    def rows(self) -> list[list[int]]:
        """Rows as sorted entry lists, trailing empty rows dropped."""
        out = []
        for j in range(self.n):
            row = []
            for i in range(self.n):
                row.extend([i + 1] * self.counts[i][j])
            out.append(row)
        while out and not out[-1]:
            out.pop()
        return out

    def is_semistandard(self) -> bool:
        """Rows weakly increase by construction; columns must strictly increase."""
        shape = self.shape
        if not is_partition(shape):
            return False
        rows = self.rows()
        for j in range(len(rows) - 1):
            upper, lower = rows[j], rows[j + 1]
            for k, entry in enumerate(lower):
                if entry <= upper[k]:
                    return False
        return True

    def plus_shift(self, d: int, p: int) -> "Tableau":
        """Insert p^d entries equal to 1 at the start of the top row."""
        return Tableau(plus_shift_matrix(self.counts, d, p))

    def key(self) -> tuple[int, ...]:
        return _flatten_matrix(self.counts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Tableau) and self.counts == other.counts

    def __hash__(self) -> int:
        return hash(self.counts)

    def __repr__(self) -> str:
        return f"Tableau({format_tableau(self)!r}, n={self.n})"


def plus_shift_tableau(tab: Tableau, d: int, p: int) -> Tableau:
    return tab.plus_shift(d, p)


def tableau_to_matrix(tab: Tableau) -> Matrix:
    """The weight matrix of a tableau: column sums = shape, row sums = weight."""
    return tab.to_matrix()


def matrix_to_tableau(w, shape=None) -> Tableau:
    """Inverse of ``tableau_to_matrix``; optionally checks the column sums."""
    w = validate_matrix(w)
    if shape is not None and margin1(w) != tuple(shape):
        raise ValueError(f"column sums {margin1(w)} do not match shape {tuple(shape)}")
    return Tableau(w)


@lru_cache(maxsize=None)
def enumerate_sst(mu: Composition, alpha: Composition) -> tuple[Tableau, ...]:
    """Semistandard tableaux of shape mu and weight alpha.

    Row j+1 must fit strictly under row j: with rows encoded as count
    vectors, the prefix counts of the lower row at entry value v may not
    exceed the prefix counts of the upper row at v-1.
    """
    mu = validate_partition(mu)
    alpha = validate_composition(alpha)
    n = len(mu)
    if len(alpha) != n or sum(alpha) != sum(mu):
        raise ValueError(f"weight {alpha} incompatible with shape {mu}")

    results: list[Tableau] = []
    columns: list[Composition] = []

    def fill(j: int, remaining: tuple[int, ...], prev_prefix: tuple[int, ...]):
        if j == n or mu[j] == 0:
            if all(x == 0 for x in remaining):
                counts = tuple(
                    tuple(columns[jj][i] if jj < len(columns) else 0 for jj in range(n))
                    for i in range(n)
                )
                results.append(Tableau(counts))
            return
        # entries in row j+1 must be at least j+1 for columns to increase
        bounds = tuple(0 if i < j else min(remaining[i], mu[j]) for i in range(n))
        for row in _compositions_bounded(mu[j], bounds):
            prefix = 0
            ok = True
            for i in range(n):
                prefix += row[i]
                upper = prev_prefix[i - 1] if i > 0 else 0
                if prefix > upper:
                    ok = False
                    break
            if not ok:
                continue
            cum = []
            acc = 0
            for i in range(n):
                acc += row[i]
                cum.append(acc)
            columns.append(row)
            fill(j + 1, tuple(remaining[i] - row[i] for i in range(n)), tuple(cum))
            columns.pop()

    def fill_first():
        # the top row is unconstrained from above
        for row in _compositions_bounded(mu[0], tuple(min(alpha[i], mu[0]) for i in range(n))):
            cum = []
            acc = 0
            for i in range(n):
                acc += row[i]
                cum.append(acc)
            columns.append(row)
            fill(1, tuple(alpha[i] - row[i] for i in range(n)), tuple(cum))
            columns.pop()

    if n > 0 and mu[0] > 0:
        fill_first()
    elif sum(alpha) == 0:
        results.append(Tableau(tuple(tuple(0 for _ in range(n)) for _ in range(n))))
    results.sort(key=Tableau.key, reverse=True)
    return tuple(results)


def kostka(mu, alpha) -> int:
    """Number of semistandard tableaux of shape mu and weight alpha."""
    return len(enumerate_sst(tuple(mu), tuple(alpha)))


def enumerate_row_semistandard(mu, alpha) -> list[Tableau]:
    """Row-semistandard fillings of shape mu and weight alpha."""
    return [Tableau(w) for w in enumerate_omega(tuple(alpha), tuple(mu))]


# ---------------------------------------------------------------------------
# dominance chains of upper triangular steps


class ChainSpace:
    """Chains (w_1, ..., w_k) of upper-triangular non-diagonal weight matrices
    linking a top weight down to a fixed bottom weight lam:

        alpha = rowsums(w_1), colsums(w_i) = rowsums(w_{i+1}), colsums(w_k) = lam.

    Each step strictly lowers the dominance order, so chains have bounded
    length; counting and materialisation are memoised separately because the
    counts are needed for cheap resource estimates.
    """

    def __init__(self, lam: Composition):
        self.lam = tuple(lam)
        self._count_cache: dict[tuple[Composition, int], int] = {}
        self._chain_cache: dict[tuple[Composition, int], tuple[tuple[Matrix, ...], ...]] = {}

    def count(self, alpha: Composition, k: int) -> int:
        alpha = tuple(alpha)
        if k == 0:
            return 1 if alpha == self.lam else 0
        key = (alpha, k)
        if key not in self._count_cache:
            total = 0
            for w in enumerate_upper_triangular(alpha):
                total += self.count(margin1(w), k - 1)
            self._count_cache[key] = total
        return self._count_cache[key]

    def chains(self, alpha: Composition, k: int) -> tuple[tuple[Matrix, ...], ...]:
        alpha = tuple(alpha)
        if k == 0:
            return ((),) if alpha == self.lam else ()
        key = (alpha, k)
        if key not in self._chain_cache:
            out = []
            for w in enumerate_upper_triangular(alpha):
                if self.count(margin1(w), k - 1) == 0:
                    continue
                for tail in self.chains(margin1(w), k - 1):
                    out.append((w,) + tail)
            self._chain_cache[key] = tuple(out)
        return self._chain_cache[key]

    def max_length(self) -> int:
        """Largest k for which some chain exists."""
        k = 0
        while any(self.count(a, k + 1) for a in enumerate_strictly_dominating(self.lam)):
            k += 1
        return k


@lru_cache(maxsize=None)
def chain_space(lam: Composition) -> ChainSpace:
    return ChainSpace(lam)


def enumerate_chains(lam, alpha, k: int) -> list[tuple[Matrix, ...]]:
    """All length-k chains from alpha down to lam; empty unless alpha > lam."""
    lam, alpha = tuple(lam), tuple(alpha)
    if k < 1:
        raise ValueError("chain length must be positive")
    return list(chain_space(lam).chains(alpha, k))


def count_chains(lam, alpha, k: int) -> int:
    return chain_space(tuple(lam)).count(tuple(alpha), k)


# ---------------------------------------------------------------------------
# text formats: "8,3" for compositions, "1,1/0,0" for matrices,
# "1,2/2,2" for tableaux (rows of entries)


def parse_composition(text: str, n: int | None = None) -> Composition:
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse composition {text!r}") from exc
    if n is not None:
        parts = pad(parts, n)
    return validate_composition(parts)


def format_composition(parts) -> str:
    return ",".join(str(x) for x in parts)


def parse_matrix(text: str) -> Matrix:
    rows = tuple(tuple(int(x) for x in row.split(",")) for row in text.split("/"))
    return validate_matrix(rows)


def format_matrix(w) -> str:
    return "/".join(",".join(str(x) for x in row) for row in w)


def parse_tableau(text: str, n: int | None = None) -> Tableau:
    rows = [[int(x) for x in row.split(",")] if row else [] for row in text.split("/")]
    if n is None:
        n = max((max(row) for row in rows if row), default=1)
        n = max(n, len(rows))
    return Tableau.from_entries(rows, n)


def format_tableau(tab: Tableau) -> str:
    return "/".join(",".join(str(x) for x in row) for row in tab.rows())
