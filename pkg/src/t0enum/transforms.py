"""The transform calculus connecting the catalog families.

All transforms take callables or tables rather than hard-wired classes: the
same five transforms apply to dozens of classes and the catalog composes
them.  Callbacks close over every variable except the one being summed.

Vocabulary (used across the package):
  * t0_transform        - signed-Stirling filtration turning plain counts
                          into distinct-column counts, sum s(n,i) a(i);
  * t0_inverse          - its Stirling-second-kind inverse;
  * t0_transform_sets   - the same filtration for edge-set counts summed
                          over all m (index from 0);
  * ordered_with_repeats / unordered_with_repeats / order_factor -
                          edge-multiplicity transforms between the four row
                          conventions;
  * cover_transform     - the shift producing distinct-column cover counts
                          from plain counts of an isolated-vertex-stable
                          property;
  * connected_count     - the connected-component recurrence.
"""

from dataclasses import dataclass, field
from math import factorial

from .exactmath import (
    binom,
    partition_types,
    permutations_with_cycle_type,
    num_blocks,
    sigma,
    stirling1,
    stirling2,
)


class InsufficientTableDepthError(ValueError):
    """A series check was asked for orders the tables do not cover."""


class MissingMemoError(KeyError):
    """connected_count needs every smaller connected value precomputed."""


def t0_transform(source, n):
    """sum_{i=1..n} s(n, i) source(i): plain counts -> distinct-column counts."""
    return sum(stirling1(n, i) * source(i) for i in range(1, n + 1))


def t0_inverse(source_star, n):
    """sum_{i=1..n} S(n, i) source_star(i); inverse of t0_transform on tables."""
    return sum(stirling2(n, i) * source_star(i) for i in range(1, n + 1))


def t0_transform_sets(source, n):
    """sum_{i=0..n} s(n, i) source(i): the filtration for counts summed over
    all edge multisets (no multiple edges, any number of edges)."""
    return sum(stirling1(n, i) * source(i) for i in range(0, n + 1))


def ordered_with_repeats(source, m):
    """sum_{i=1..m} S(m, i) source(i): distinct-row counts -> ordered counts
    with repeated rows allowed (edge-partition-invariant properties only)."""
    return sum(stirling2(m, i) * source(i) for i in range(1, m + 1))


def unordered_with_repeats(source, m):
    """sum_{i=1..m} C(m-1, i-1) source(i): distinct-edge-set counts ->
    edge-multiset counts (edge-partition-invariant properties only)."""
    return sum(binom(m - 1, i - 1) * source(i) for i in range(1, m + 1))


def order_factor(value, m, direction):
    """Divide or multiply by m! between ordered and unordered distinct rows."""
    if direction == "to_unordered":
        q, r = divmod(value, factorial(m))
        if r:
            raise ValueError(f"{value} not divisible by {m}! - upstream classification bug")
        return q
    if direction == "to_ordered":
        return value * factorial(m)
    raise ValueError(f"unknown direction {direction!r}")


def set_partitions(n):
    """Yield every set partition of {0,..,n-1} as a tuple of sorted-tuple
    blocks, blocks ordered by least element.  Deterministic order."""
    if n == 0:
        yield ()
        return

    def extend(k, blocks):
        if k == n:
            yield tuple(tuple(b) for b in blocks)
            return
        for b in blocks:
            b.append(k)
            yield from extend(k + 1, blocks)
            b.pop()
        blocks.append([k])
        yield from extend(k + 1, blocks)
        blocks.pop()

    yield from extend(1, [[0]])


def partition_type_of(blocks, n):
    tau = [0] * n
    for b in blocks:
        tau[len(b) - 1] += 1
    return tuple(tau)


def partition_sum(alpha_pi, n):
    """Inclusion-exclusion over all set partitions of an n-set.

    alpha_pi(blocks) must return the number of class members in which the
    vertices of every block are mutually unseparated; the weight of a
    partition of type (a_1,..,a_n) is prod [(-1)^(i-1) (i-1)!]^(a_i).
    """
    total = 0
    for blocks in set_partitions(n):
        weight = 1
        for b in blocks:
            size = len(b)
            w = (-1) ** (size - 1) * factorial(size - 1)
            weight *= w
        total += weight * alpha_pi(blocks)
    return total


def partition_type_sum(alpha_tau, n):
    """Type-level form of partition_sum for uniform properties:
    sum over types tau of (-1)^(n-|tau|) c(tau) alpha_tau(tau)."""
    total = 0
    for tau in partition_types(n):
        sign = (-1) ** (n - num_blocks(tau))
        total += sign * permutations_with_cycle_type(tau) * alpha_tau(tau)
    return total


def block_count_sum(alpha_k, n):
    """Regular form: the callback depends on the block count only, so the
    type sum collapses to the signed-Stirling transform."""
    return t0_transform(alpha_k, n)


def cover_transform(source, n):
    """sum_{i=1..n+1} s(n+1, i) source(i-1).

    For an isolated-vertex-stable property with plain counts source(i) at i
    vertices, returns the distinct-column cover count at n vertices.
    """
    return sum(stirling1(n + 1, i) * source(i - 1) for i in range(1, n + 2))


def connected_count(alpha, alpha_iso, nu_mode, m, n, memo):
    """One cell of the connected-component recurrence.

    omega(m,n) = alpha(m,n) - alpha_iso(m,n)
                 - sum_{i=1..m} sum_{j=1..n-1} nu(m,i) C(n-1,j-1)
                   alpha(m-i, n-j) omega(i,j)

    nu(m,i) is C(m,i) for nu_mode "ordered" and 1 for "unordered".  The memo
    must hold omega(i, j) for every i <= m, j < n; the result is independent
    of how the memo was filled (pure recursion).
    """
    if nu_mode not in ("ordered", "unordered"):
        raise ValueError(f"unknown nu_mode {nu_mode!r}")
    total = alpha(m, n) - alpha_iso(m, n)
    for i in range(1, m + 1):
        nu = binom(m, i) if nu_mode == "ordered" else 1
        for j in range(1, n):
            if (i, j) not in memo:
                raise MissingMemoError((i, j))
            total -= nu * binom(n - 1, j - 1) * alpha(m - i, n - j) * memo[(i, j)]
    return total


@dataclass
class CountTable:
    """Dense (m, n[, k]) -> count grid with a provenance tag."""

    class_id: str
    entries: dict = field(default_factory=dict)
    provenance: str = "formula"

    def __getitem__(self, key):
        return self.entries[key]

    def __setitem__(self, key, value):
        self.entries[key] = value

    def __contains__(self, key):
        return key in self.entries


@dataclass
class SeriesTable:
    """Truncated bivariate series with exact integer coefficients.

    coefficient(m, n) is the count itself; the normalization is implicit:
    exponential in the vertex variable always, and exponential in the edge
    variable for conventions 1-2 but ordinary for conventions 3-4.  Products
    and logarithms below work on the normalized series through integer
    recurrences only (binomial-weighted convolutions), so no rationals ever
    appear.
    """

    order_m: int
    order_n: int
    y_mode: str  # "egf" | "ogf"
    coefficients: dict = field(default_factory=dict)

    def coeff(self, m, n):
        return self.coefficients.get((m, n), 0)

    def y_convolve(self, f, g):
        """Coefficient list of the product of two edge-variable columns."""
        out = [0] * (self.order_m + 1)
        for m in range(self.order_m + 1):
            acc = 0
            for i in range(m + 1):
                w = binom(m, i) if self.y_mode == "egf" else 1
                acc += w * f[i] * g[m - i]
            out[m] = acc
        return out

    def column(self, n):
        return [self.coeff(m, n) for m in range(self.order_m + 1)]

    def log_x(self):
        """Series L with 1 + L = exp-log inverse of self along the vertex
        variable: a_n = sum_j C(n-1, j-1) (l_j * a_{n-j}), solved for l_n.

        Requires the constant column a(., 0) to be the multiplicative unit
        (1 at m = 0); raises otherwise.
        """
        a0 = self.column(0)
        if a0[0] != 1 or any(a0[1:]):
            raise InsufficientTableDepthError("constant column is not the series unit")
        log_cols = {}
        for n in range(1, self.order_n + 1):
            residual = list(self.column(n))
            for j in range(1, n):
                conv = self.y_convolve(log_cols[j], self.column(n - j))
                c = binom(n - 1, j - 1)
                residual = [r - c * v for r, v in zip(residual, conv)]
            log_cols[n] = residual
        out = SeriesTable(order_m=self.order_m, order_n=self.order_n, y_mode=self.y_mode)
        for n, col in log_cols.items():
            for m, v in enumerate(col):
                if v:
                    out.coefficients[(m, n)] = v
        return out


def egf_log_check(alpha_table, omega_table, convention, order_x, order_y):
    """True iff the connected table is the series logarithm of the plain
    table, coefficientwise, under the convention's normalization.

    alpha_table must be dense for 0 <= m <= order_y, 0 <= n <= order_x and
    omega_table for 0 <= m <= order_y, 1 <= n <= order_x.
    """
    mismatch = first_egf_mismatch(alpha_table, omega_table, convention, order_x, order_y)
    return mismatch is None


def first_egf_mismatch(alpha_table, omega_table, convention, order_x, order_y):
    """First (m, n) where the log identity fails, or None if it holds."""
    y_mode = "egf" if convention in (1, 2) else "ogf"
    series = SeriesTable(order_m=order_y, order_n=order_x, y_mode=y_mode)
    for m in range(order_y + 1):
        for n in range(order_x + 1):
            if (m, n) not in alpha_table:
                raise InsufficientTableDepthError(f"alpha table missing ({m}, {n})")
            series.coefficients[(m, n)] = alpha_table[(m, n)]
    log_series = series.log_x()
    for n in range(1, order_x + 1):
        for m in range(order_y + 1):
            if (m, n) not in omega_table:
                raise InsufficientTableDepthError(f"omega table missing ({m}, {n})")
            if log_series.coeff(m, n) != omega_table[(m, n)]:
                return (m, n)
    return None
