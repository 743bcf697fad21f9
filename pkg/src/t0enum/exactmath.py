"""Exact integer kernels used throughout the package.

Everything here is pure big-integer arithmetic (Python ints); no floating
point is used anywhere.  Stirling numbers are memoized by whole rows because
every consumer (the Stirling transforms, the partition-type sums) reads whole
rows at a time.
"""

import math

# All enumeration results and signed transform coefficients are plain Python
# ints; the alias documents intent in signatures.
Count = int

# A partition type is a tuple (a_1, ..., a_n) with sum(i * a_i) == n: a_i is
# the number of blocks of size i in a set partition of an n-set.
PartitionType = tuple


def binom(i, j):
    """C(i, j); zero when j < 0 or j > i."""
    if j < 0 or j > i:
        return 0
    return math.comb(i, j)


def falling(x, j):
    """Falling factorial x (x-1) ... (x-j+1), with [x]_0 = 1.

    Accepts negative x (polynomial semantics): transform sums may formally
    evaluate the falling factorial below zero and the closed forms still
    cancel correctly.
    """
    if j < 0:
        raise ValueError("falling factorial needs j >= 0")
    result = 1
    for t in range(j):
        result *= x - t
    return result


_S1_ROWS = [[1]]  # signed Stirling, first kind
_S2_ROWS = [[1]]  # Stirling, second kind


def _extend_triangle(rows, n, step):
    # Rows are appended only when complete, so concurrent readers never see
    # a partial row.
    while len(rows) <= n:
        prev = rows[-1]
        i = len(rows)
        row = [0] * (i + 1)
        for k in range(1, i + 1):
            row[k] = step(i, k, prev[k - 1], prev[k] if k < i else 0)
        rows.append(row)


def stirling1(n, i):
    """Signed Stirling number of the first kind s(n, i).

    Defined by [x]_n = sum_i s(n, i) x^i; s(0, 0) = 1, s(n, i) = 0 for i > n.
    """
    if n < 0 or i < 0:
        return 0
    _extend_triangle(_S1_ROWS, n, lambda m, k, a, b: a - (m - 1) * b)
    return _S1_ROWS[n][i] if i <= n else 0


def stirling2(n, i):
    """Stirling number of the second kind S(n, i): i-block partitions of an n-set."""
    if n < 0 or i < 0:
        return 0
    _extend_triangle(_S2_ROWS, n, lambda m, k, a, b: a + k * b)
    return _S2_ROWS[n][i] if i <= n else 0


def bell(n):
    """Bell number B(n) = number of set partitions of an n-set."""
    return sum(stirling2(n, k) for k in range(n + 1))


def partition_types(n):
    """Yield every partition type of n exactly once.

    Types are fixed-length n-tuples (a_1, ..., a_n) with sum(i * a_i) == n,
    trailing zeros kept so that componentwise comparison is positional.
    Order: lexicographic on the tuple.
    """
    if n < 1:
        raise ValueError("partition types need n >= 1")
    found = []

    def build(i, remaining, acc):
        if i > n:
            if remaining == 0:
                found.append(tuple(acc))
            return
        for a in range(remaining // i + 1):
            build(i + 1, remaining - i * a, acc + [a])

    build(1, n, [])
    found.sort()
    yield from found


def sigma(tau):
    """sum(i * a_i): the size of the underlying set."""
    return sum(i * a for i, a in enumerate(tau, start=1))


def num_blocks(tau):
    """|tau| = total number of blocks."""
    return sum(tau)


def partitions_with_type(tau):
    """Number of set partitions of an n-set having block-size multiplicities tau."""
    n = sigma(tau)
    result = math.factorial(n)
    for i, a in enumerate(tau, start=1):
        result //= math.factorial(a) * math.factorial(i) ** a
    return result


def permutations_with_cycle_type(tau):
    """Number of permutations of an n-set whose cycle type is tau."""
    n = sigma(tau)
    result = math.factorial(n)
    for i, a in enumerate(tau, start=1):
        result //= math.factorial(a) * i**a
    return result


def _sub_type_polynomial(tau, kmax):
    # coefficient j = number of sub-tuples beta <= tau with sigma(beta) == j,
    # weighted by prod C(a_i, b_i); plain polynomial convolution
    coeffs = [0] * (kmax + 1)
    coeffs[0] = 1
    for i, a in enumerate(tau, start=1):
        if a == 0:
            continue
        nxt = [0] * (kmax + 1)
        for j in range(kmax + 1):
            if coeffs[j] == 0:
                continue
            for b in range(a + 1):
                size = j + i * b
                if size > kmax:
                    break
                nxt[size] += coeffs[j] * binom(a, b)
        coeffs = nxt
    return coeffs


def block_union_ksets(tau, k):
    """Number of k-subsets of the ground set expressible as a union of blocks.

    For a partition with type tau, this counts sub-collections of blocks whose
    sizes sum to exactly k; the result depends on the type only.
    """
    if k < 0:
        return 0
    return _sub_type_polynomial(tau, k)[k]


def block_union_upto(tau, k):
    """Number of nonempty block unions of total size at most k."""
    if k < 1:
        return 0
    coeffs = _sub_type_polynomial(tau, k)
    return sum(coeffs[1:])


def selections(convention, i, j):
    """Ways to pick j rows from i candidate row patterns under a row convention.

    convention 1: ordered, distinct   -> [i]_j
    convention 2: ordered, repeats    -> i**j
    convention 3: unordered, distinct -> C(i, j)
    convention 4: multiset            -> C(i+j-1, j)
    """
    if j < 0:
        raise ValueError("selections needs j >= 0")
    if convention == 1:
        return falling(i, j)
    if convention == 2:
        return i**j
    if convention == 3:
        return binom(i, j)
    if convention == 4:
        if i == 0:
            return 1 if j == 0 else 0
        return binom(i + j - 1, j)
    raise ValueError(f"unknown row convention {convention!r}")
