"""Closed forms and recurrences for every named counting family.

Family naming: a two-digit suffix `ij` means column i of the family's
property table and row convention j (1 ordered distinct rows, 2 ordered,
3 unordered distinct, 4 multiset).  A `star` family is the distinct-column
(separated-vertex) variant of the same class.

Boundary cells at n = 0 or m = 0 are taken from the natural closed forms
(`selections` of an empty column universe), which the oracle confirms on
every reachable cell; no ad-hoc stipulations are hard-coded unless a
recurrence needs a base value, and each such base is derived from first
principles in the docstring of the function that uses it.
"""

from functools import cache
from itertools import product
from math import factorial

from ..exactmath import (
    binom,
    block_union_ksets,
    block_union_upto,
    falling,
    selections,
)
from ..transforms import (
    connected_count,
    cover_transform,
    partition_type_sum,
    t0_transform,
)


# ---------------------------------------------------------------------------
# arbitrary / no-empty / no-full families

def alpha(j, conv, m, n):
    """Hypergraph counts with empty/full-edge constraints only.

    j = 0 arbitrary, 1 without empty edges, 2 without full edges, 3 without
    either; the admissible row universe has 2^n - floor((j+1)/2) patterns.
    """
    return selections(conv, 2**n - (j + 1) // 2, m)


def alpha_star(j, conv, m, n):
    """Distinct-column counterpart of `alpha` via the signed-Stirling sum."""
    return t0_transform(lambda i: alpha(j, conv, m, i), n)


def bar_alpha(i, conv, m, n):
    """Classes with no common vertex, by inclusion-exclusion over the set of
    vertices lying in every edge.

    Pinning j >= 1 all-one columns makes any empty-edge constraint vacuous
    while a full-edge constraint survives on the rest, so the inner column
    index is 2*(i//2); the j = n term makes the one-edge cases come out
    right without special-casing.
    """
    total = 0
    for j in range(n + 1):
        inner = i if j == 0 else 2 * (i // 2)
        total += (-1) ** j * binom(n, j) * alpha(inner, conv, m, n - j)
    return total


def bar_alpha_star(i, conv, m, n):
    return t0_transform(lambda t: bar_alpha(i, conv, m, t), n)


# ---------------------------------------------------------------------------
# covers

def beta(i, conv, m, n):
    """Cover counts: i in 0..3 are covers with the `alpha` column constraints,
    i in 4..7 are classes without singular vertices (covers with no common
    vertex) over the corresponding `bar_alpha` column.

    Both use the isolated-vertex sieve; pinning j >= 1 zero columns keeps an
    empty-edge constraint and dissolves a full-edge constraint, so the inner
    column index is (i mod 2).
    """
    if i < 4:
        inner_family = alpha
        base = i
    else:
        inner_family = bar_alpha
        base = i - 4
    total = 0
    for j in range(n + 1):
        inner = base if j == 0 else base % 2
        total += (-1) ** j * binom(n, j) * inner_family(inner, conv, m, n - j)
    return total


def beta_41_closed(m, n):
    """Direct closed form for ordered distinct-row covers with no singular
    vertex: choose the singular columns (2 states each), distinct rows on the
    rest."""
    return sum((-1) ** i * binom(n, i) * 2**i * falling(2 ** (n - i), m) for i in range(n + 1))


def _beta_star_conv1(j, m, n):
    """Distinct-column covers, ordered distinct rows, via the cover shift and
    the one-full-row subtraction."""
    if j == 0:
        return cover_transform(lambda i: falling(2**i, m), n)
    if j == 1:
        return cover_transform(lambda i: falling(2**i - 1, m), n)
    if j == 2:
        return _beta_star_conv1(0, m, n) - m * alpha_star(2, 1, m - 1, n)
    if j == 3:
        return _beta_star_conv1(1, m, n) - m * alpha_star(3, 1, m - 1, n)
    raise ValueError(f"beta_star column {j} has no closed form route")


def beta_star(i, conv, m, n):
    """Distinct-column covers.

    Column 0, convention 2 has the product closed form [2^m - 1]_n; the other
    convention-1 columns come from the cover shift; everything else is the
    signed-Stirling transform of `beta` (the cover property admits it).
    """
    if i == 0 and conv == 2:
        return falling(2**m - 1, n)
    if i < 4 and conv == 1:
        return _beta_star_conv1(i, m, n)
    return t0_transform(lambda t: beta(i, conv, m, t), n)


# ---------------------------------------------------------------------------
# minimal covers (ordered distinct rows only)

def mu_01(m, n):
    """Minimal covers: partition a chosen support into the once-covered part
    and give every remaining vertex at least two incident edges."""
    from ..exactmath import stirling2

    if n < m:
        return 0
    return sum(
        binom(n, i) * stirling2(i, m) * factorial(m) * (2**m - m - 1) ** (n - i)
        for i in range(m, n + 1)
    )


def mu_star_01(m, n):
    """Distinct-column minimal covers: n! C(2^m - m - 1, n - m)."""
    if n < m:
        return 0
    return factorial(n) * binom(2**m - m - 1, n - m)


def mu_41(m, n):
    """Minimal covers without a common vertex, by pinning all-one columns."""
    if n < m or m == 1:
        return 0
    return sum((-1) ** i * binom(n, i) * mu_01(m, n - i) for i in range(n))


# ---------------------------------------------------------------------------
# fixed edge size k (ordered distinct rows)

def _cbar(t, s):
    """Number of nonempty subsets of a t-set with at most s elements."""
    return sum(binom(t, i) for i in range(1, s + 1))


def theta_01(m, n, k):
    return falling(binom(n, k), m)


def theta_11(m, n, k):
    return sum((-1) ** i * binom(n, i) * falling(binom(n - i, k), m) for i in range(n - k + 1))


def theta_prime_01(m, n, k):
    """As theta_01 but with one extra admissible row (the empty edge)."""
    return falling(binom(n, k) + 1, m)


def theta_prime_11(m, n, k):
    return sum(
        (-1) ** i * binom(n, i) * falling(binom(n - i, k) + 1, m) for i in range(n - k + 1)
    )


def theta_3plus(j, m, n, k):
    """k-edge classes without a common vertex: pin i common vertices, the
    rest is the same class with k - i on n - i.  Zero for m = 1 (one k-edge
    with k >= 1 always has a common vertex)."""
    if m == 1:
        return 0
    inner = {0: theta_01, 1: theta_11}[j]
    return sum((-1) ** i * binom(n, i) * inner(m, n - i, k - i) for i in range(k))


def bar_theta_01(m, n, k):
    return falling(_cbar(n, k), m)


def bar_theta_11(m, n, k):
    return sum((-1) ** i * binom(n, i) * falling(_cbar(n - i, k), m) for i in range(n))


def bar_theta_prime_01(m, n, k):
    return falling(_cbar(n, k) + 1, m)


def bar_theta_prime_11(m, n, k):
    return sum((-1) ** i * binom(n, i) * falling(_cbar(n - i, k) + 1, m) for i in range(n))


def bar_theta_3plus(j, m, n, k):
    """Bounded-edge-size classes without a common vertex.  Pinned common
    vertices shrink the bound and allow the pinned-only edge, hence the
    primed inner counts."""
    if m == 1:
        return 0
    plain = {0: bar_theta_01, 1: bar_theta_11}[j]
    primed = {0: bar_theta_prime_01, 1: bar_theta_prime_11}[j]
    total = plain(m, n, k)
    for i in range(1, k):
        total += (-1) ** i * binom(n, i) * primed(m, n - i, k - i)
    return total


def bar_theta_51_from_21(oracle_21, m, n, k):
    """Minimal bounded-size covers without a common vertex, sieved from the
    minimal-cover column (supplied as a callable, normally the oracle).

    Zero for m = 1 like every other no-common-vertex column: a one-edge
    cover is the full edge, which intersects itself everywhere.
    """
    if m == 1:
        return 0
    return sum((-1) ** i * binom(n, i) * oracle_21(m, n - i, k - i) for i in range(k))


# ---------------------------------------------------------------------------
# fixed edge size, distinct columns: the partition-type sums and their column
# recurrences

@cache
def theta_star_0(s, m, n, k):
    """Distinct-column k-uniform counts via the partition-type sum.

    The callback counts edges as block unions of total size k; at m = 0 the
    sum collapses to [n = 1] which is exactly the right boundary.
    """
    if n == 0:
        if m == 0:
            return 1
        return selections(s, 1, m) if k == 0 else 0
    return partition_type_sum(lambda tau: selections(s, block_union_ksets(tau, k), m), n)


@cache
def bar_theta_star_0(s, m, n, k):
    """As theta_star_0 for edge sizes 1..k (no empty edges)."""
    if n == 0:
        return 1 if m == 0 else 0
    return partition_type_sum(lambda tau: selections(s, block_union_upto(tau, k), m), n)


@cache
def theta_star_1(s, m, n, k):
    """Cover column: a distinct-column hypergraph has at most one isolated
    vertex, so theta_star_0(n) = theta_star_1(n) + n * theta_star_1(n-1).

    Base n = 0: the empty-width matrix is vacuously a cover; it is k-uniform
    only for k = 0 (or with no edges at all).
    """
    if n == 0:
        if m == 0:
            return 1
        return selections(s, 1, m) if k == 0 else 0
    return theta_star_0(s, m, n, k) - n * theta_star_1(s, m, n - 1, k)


@cache
def theta_star_3(s, m, n, k):
    """No-common-vertex column: a distinct-column k-uniform hypergraph has at
    most one all-one column; deleting it leaves the (k-1)-uniform class on
    n - 1 vertices, still without a common vertex."""
    if m < 1:
        raise ValueError("column defined for m >= 1")
    if k < 0:
        return 0
    if n == 0:
        return selections(s, 1, m) if k == 0 else 0
    if k == 0:
        # all edges empty: no common vertex for free; distinct columns force n = 1
        return selections(s, 1, m) if n == 1 else 0
    return theta_star_0(s, m, n, k) - n * theta_star_3(s, m, n - 1, k - 1)


@cache
def theta_star_4(s, m, n, k):
    """Cover and no common vertex, by the one-isolated-vertex split again."""
    if m < 1:
        raise ValueError("column defined for m >= 1")
    if n == 0:
        return selections(s, 1, m) if k == 0 else 0
    if k == 0:
        return 0
    return theta_star_3(s, m, n, k) - n * theta_star_4(s, m, n - 1, k)


@cache
def bar_theta_star_1(s, m, n, k):
    """Cover column of the bounded-size family (edges nonempty, size <= k)."""
    if n == 0:
        return 1 if m == 0 else 0
    return bar_theta_star_0(s, m, n, k) - n * bar_theta_star_1(s, m, n - 1, k)


def _completion_count(m, t, size_set):
    """Ordered m-tuples of subsets of a t-set with sizes in size_set whose
    incidence matrix has pairwise-distinct columns, every column with at
    least two ones.  Exhaustive but only ever called with t <= n - m."""
    if t == 0:
        return 1 if (m == 0 or 0 in size_set) else 0
    patterns = [p for p in range(1 << t) if p.bit_count() in size_set]
    total = 0
    for rows in product(patterns, repeat=m):
        cols = [sum(((r >> j) & 1) << i for i, r in enumerate(rows)) for j in range(t)]
        if len(set(cols)) == t and all(c.bit_count() >= 2 for c in cols):
            total += 1
    return total


def theta_star_21(m, n, k):
    """Minimal k-uniform distinct-column covers.

    Distinct columns force exactly one private vertex per edge; place the m
    private vertices ([n]_m ways), then complete each edge with k-1 vertices
    among the rest so that every remaining vertex is covered at least twice
    and columns stay distinct.
    """
    if m < 1 or n < m or k < 1:
        return 0
    return falling(n, m) * _completion_count(m, n - m, {k - 1})


def bar_theta_star_21(m, n, k):
    """Minimal bounded-size distinct-column covers: completions may use any
    size 0..k-1 (the private vertex already makes every edge nonempty)."""
    if m < 1 or n < m or k < 1:
        return 0
    return falling(n, m) * _completion_count(m, n - m, set(range(k)))


# --- the column recurrences exactly as printed, for the errata ledger ------

def theta_star_12_cover_recurrence_as_printed(m, n, k):
    """Cover-column recurrence with the garbled inner subscript read
    literally: the subtracted term is the convention-1 value even though the
    left side is convention 2."""
    if n == 0:
        return 1 if m == 0 else 0
    return theta_star_0(2, m, n, k) - n * theta_star_1(1, m, n - 1, k)


@cache
def theta_star_32_intersection_recurrence_as_printed(m, n, k):
    """No-common-vertex recurrence with the last term keeping parameter k
    instead of k - 1, read literally."""
    if k < 0:
        return 0
    if n == 0:
        return selections(2, 1, m) if k == 0 else 0
    if k == 0:
        return selections(2, 1, m) if n == 1 else 0
    return theta_star_0(2, m, n, k) - n * theta_star_32_intersection_recurrence_as_printed(m, n - 1, k)


def theta_star_21_minimal_recurrence_as_printed(m, n, k):
    """Minimal column from the cover column, read literally: the completion
    factor is the cover count, which also admits once-covered vertices."""
    if m < 1 or n < m or k < 1:
        return 0
    return falling(n, m) * theta_star_1(2, m, n - m, k - 1)


def bar_theta_star_21_minimal_recurrence_as_printed(m, n, k):
    if m < 1 or n < m or k < 1:
        return 0
    return falling(n, m) * sum(
        binom(m, j) * bar_theta_star_1(2, j, n - m, k - 1) for j in range(1, m + 1)
    )


# ---------------------------------------------------------------------------
# graphs without isolated-edge components (the fixed k = 2 worked family)

def _pairings(n, k):
    """Ways to choose k pairwise-disjoint unordered pairs from an n-set."""
    return falling(n, 2 * k) // (2**k * factorial(k))


def bar_theta_circ_03(m, n):
    """Graphs with m edges on n labelled vertices and no component that is a
    single disjoint edge, by inclusion-exclusion on such components."""
    total = 0
    for k in range(min(n // 2, m) + 1):
        total += (-1) ** k * _pairings(n, k) * binom(binom(n - 2 * k, 2), m - k)
    return total


def bbar_theta_circ_03(m, n):
    """Same with loops admitted as edges (sizes 1 and 2, no repeats)."""
    total = 0
    for k in range(min(n // 2, m) + 1):
        slots = (n - 2 * k) + binom(n - 2 * k, 2)
        total += (-1) ** k * _pairings(n, k) * binom(slots, m - k)
    return total


def bar_theta_circ_13(m, n):
    """Adds the no-isolated-vertex sieve."""
    return sum((-1) ** i * binom(n, i) * bar_theta_circ_03(m, n - i) for i in range(n + 1))


def bbar_theta_circ_13(m, n):
    return sum((-1) ** i * binom(n, i) * bbar_theta_circ_03(m, n - i) for i in range(n + 1))


def _exact_quotient(a, b):
    q, r = divmod(a, b)
    if r:
        raise ValueError("expected exact division in dual transfer")
    return q


def bar_beta_star_13(m, n):
    """Unordered distinct-column double covers without empty edges (every
    vertex in exactly two edges), transferred from the graph count by the
    transpose bijection."""
    return _exact_quotient(factorial(n) * bar_theta_circ_13(n, m), factorial(m))


def bbar_beta_star_13(m, n):
    """Bounded variant: every vertex in one or two edges."""
    return _exact_quotient(factorial(n) * bbar_theta_circ_13(n, m), factorial(m))


# ---------------------------------------------------------------------------
# connected families

def _lam(conv, x, j):
    return selections(conv, x, j)


@cache
def omega_1(conv, m, n):
    """Connected hypergraphs without empty edges, by removing everything
    whose first-vertex component is smaller than the whole vertex set.

    Boundaries: omega_1(0, 1) = 1, omega_1(0, n > 1) = 0; at n = 1 all edges
    equal the single vertex, so the count is selections(conv, 1, m).
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if m == 0:
        return 1 if n == 1 else 0
    if n == 1:
        return selections(conv, 1, m)
    memo = {(i, j): omega_1(conv, i, j) for i in range(1, m + 1) for j in range(1, n)}
    nu_mode = "ordered" if conv in (1, 2) else "unordered"
    return connected_count(
        alpha=lambda mm, jj: _lam(conv, 2**jj - 1, mm),
        alpha_iso=lambda mm, nn: _lam(conv, 2 ** (nn - 1) - 1, mm),
        nu_mode=nu_mode,
        m=m,
        n=n,
        memo=memo,
    )


@cache
def omega_0(conv, m, n):
    """Connected hypergraphs with empty edges allowed, by distributing the
    empty rows; at most one for the distinct-row conventions."""
    if m == 0:
        return 1 if n == 1 else 0
    if conv == 1:
        return m * omega_1(1, m - 1, n) + omega_1(1, m, n)
    if conv == 2:
        return sum(binom(m, i) * omega_1(2, m - i, n) for i in range(m + 1))
    if conv == 3:
        return omega_1(3, m - 1, n) + omega_1(3, m, n)
    return sum(omega_1(4, m - i, n) for i in range(m + 1))


def _omega_full_edge_sieve(j, conv, m, n):
    """Count of connected hypergraphs in column j-2 containing a full edge:
    a full edge makes everything connected, so the other edges are free."""
    if conv == 1:
        return m * alpha(j, 1, m - 1, n)
    if conv == 2:
        return sum(binom(m, i) * alpha(j, 2, m - i, n) for i in range(1, m + 1))
    if conv == 3:
        return alpha(j, 3, m - 1, n)
    return sum(alpha(j, 4, m - i, n) for i in range(1, m + 1))


@cache
def omega_2or3(j, conv, m, n):
    base = omega_0(conv, m, n) if j == 2 else omega_1(conv, m, n)
    return base - _omega_full_edge_sieve(j, conv, m, n)


def _covers_with_common_vertex(beta_column, conv, m, n):
    """A cover with a common vertex is connected; count them by pinning the
    all-one columns.  beta_column is 0 (plain covers) or 2 (no full edges)."""
    return -sum((-1) ** i * binom(n, i) * beta(beta_column, conv, m, n - i) for i in range(1, n + 1))


@cache
def omega(i, conv, m, n):
    """All eight connected columns.

    0..3: connected with the empty/full-edge constraints; 4..7 additionally
    without a common vertex (the subtracted connected-and-intersecting counts
    are exactly the covers with a common vertex).
    """
    if i == 0:
        return omega_0(conv, m, n)
    if i == 1:
        return omega_1(conv, m, n)
    if i in (2, 3):
        return omega_2or3(i, conv, m, n)
    if i in (4, 5):
        return omega(i - 4, conv, m, n) - _covers_with_common_vertex(0, conv, m, n)
    if i in (6, 7):
        return omega(i - 4, conv, m, n) - _covers_with_common_vertex(2, conv, m, n)
    raise ValueError(f"omega column {i} out of range")


def _omega_star_no_empty(i, conv, m, n):
    # columns 1, 3, 5, 7 forbid empty edges; their classes are condensation
    # stable, so the signed-Stirling filtration applies
    if m == 0:
        return 1 if n == 1 else 0
    return t0_transform(lambda t: omega(i, conv, m, t), n)


def omega_star(i, conv, m, n):
    """Distinct-column connected counts.

    The filtration transform is valid only for the empty-edge-free columns:
    with empty edges allowed, the one-vertex class contains edgeless
    matrices whose expansions are disconnected, so condensation invariance
    (and with it the Stirling sum) breaks.  Even columns are therefore
    assembled by distributing empty rows over the odd ones; a hypergraph
    with an empty edge never has a common vertex, which is why columns 4
    and 6 fall back to rest columns 1 and 3.
    """
    if i in (1, 3, 5, 7):
        return _omega_star_no_empty(i, conv, m, n)
    rest = 1 if i in (0, 4) else 3
    head = _omega_star_no_empty(i + 1, conv, m, n)
    if conv == 1:
        return head + m * _omega_star_no_empty(rest, 1, m - 1, n)
    if conv == 2:
        return head + sum(
            binom(m, e) * _omega_star_no_empty(rest, 2, m - e, n) for e in range(1, m + 1)
        )
    if conv == 3:
        return head + _omega_star_no_empty(rest, 3, m - 1, n)
    return head + sum(_omega_star_no_empty(rest, 4, m - e, n) for e in range(1, m + 1))


def omega_star_as_printed(i, conv, m, n):
    """The filtration transform applied to every connected column uniformly,
    as the starred proposition states it; wrong for the empty-edge columns."""
    return t0_transform(lambda t: omega(i, conv, m, t), n)


# ---------------------------------------------------------------------------
# connected fixed-edge-size families, distinct columns

def _nu_weight(s, m, i):
    return binom(m, i) if s in (1, 2) else 1


@cache
def bar_omega_star_0(s, m, n, k):
    """Connected k-uniform distinct-column hypergraphs.

    Same component recurrence as omega_1, driven by the theta_star tables;
    theta_star_0 at m = 0 is [n = 1], which is the leftover-isolated-vertex
    boundary the recurrence needs.
    """
    if n == 1:
        if k == 1 and (s in (2, 4) or m == 1):
            return 1
        return 0
    total = theta_star_0(s, m, n, k) - theta_star_1(s, m, n - 1, k)
    for i in range(1, m + 1):
        for j in range(1, n):
            total -= (
                _nu_weight(s, m, i)
                * binom(n - 1, j - 1)
                * theta_star_0(s, m - i, n - j, k)
                * bar_omega_star_0(s, i, j, k)
            )
    return total


@cache
def bbar_omega_star_1(s, m, n, k):
    """Connected bounded-edge-size distinct-column hypergraphs without empty
    edges (sizes 1..k)."""
    if n == 1:
        if s in (2, 4) or m == 1:
            return 1
        return 0
    total = bar_theta_star_0(s, m, n, k) - bar_theta_star_1(s, m, n - 1, k)
    for i in range(1, m + 1):
        for j in range(1, n):
            total -= (
                _nu_weight(s, m, i)
                * binom(n - 1, j - 1)
                * bar_theta_star_0(s, m - i, n - j, k)
                * bbar_omega_star_1(s, i, j, k)
            )
    return total


def _nu_weight_by_k(k, m, i):
    # the literal reading: the weight subscript is the size parameter
    return binom(m, i) if k in (1, 2) else 1


@cache
def bar_omega_star_02_as_printed(m, n, k):
    """Connected k-uniform recurrence read literally: the split weight is
    indexed by the size parameter k, and the zero-edge boundary is 1 even on
    two or more leftover vertices."""
    if n == 1:
        if k == 1:
            return 1
        return 0
    def theta0_printed(mm, nn):
        if mm == 0:
            return 1
        return theta_star_0(2, mm, nn, k)

    total = theta_star_0(2, m, n, k) - theta_star_1(2, m, n - 1, k)
    for i in range(1, m + 1):
        for j in range(1, n):
            total -= (
                _nu_weight_by_k(k, m, i)
                * binom(n - 1, j - 1)
                * theta0_printed(m - i, n - j)
                * bar_omega_star_02_as_printed(i, j, k)
            )
    return total


def bbar_omega_star_12_as_printed(m, n, k, connected_with_empties):
    """Bounded-size connected recurrence read literally: the through-count
    inside the sum is the cover column and the recursion refers to the
    empty-edges-allowed connected family (supplied as a callable, normally
    the oracle since no formula for it is given)."""
    if n == 1:
        return 1
    total = bar_theta_star_0(2, m, n, k) - bar_theta_star_1(2, m, n - 1, k)
    for i in range(1, m + 1):
        for j in range(1, n):
            total -= (
                _nu_weight_by_k(k, m, i)
                * binom(n - 1, j - 1)
                * bar_theta_star_1(2, m - i, n - j, k)
                * connected_with_empties(i, j, k)
            )
    return total
