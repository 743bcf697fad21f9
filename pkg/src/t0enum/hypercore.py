"""Incidence matrices of labelled hypergraphs and the predicate suite.

A hypergraph with m edges on n ordered vertices is stored as its m x n binary
incidence matrix: row i is edge i, column j is vertex j.  Rows are Python int
bitmasks with vertex j on bit j-1 (little-endian); this makes the multiset
row order and all table outputs bit-exact reproducible.
"""

from dataclasses import dataclass, field


class MissingParameterError(ValueError):
    """A size constraint was enabled without its integer parameter."""


@dataclass(frozen=True)
class IncidenceMatrix:
    """m x n bit grid; rows = edges, columns = vertices."""

    n: int
    rows: tuple

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one vertex")
        mask = (1 << self.n) - 1
        for r in self.rows:
            if r < 0 or r & ~mask:
                raise ValueError(f"row {r} does not fit width {self.n}")

    @property
    def m(self):
        return len(self.rows)

    @classmethod
    def from_bits(cls, bit_rows):
        """Build from explicit 0/1 row lists, e.g. [[1, 0], [1, 1]]."""
        rows = tuple(canonical_row_code(bits) for bits in bit_rows)
        n = len(bit_rows[0]) if bit_rows else 1
        return cls(n=n, rows=rows)

    def column(self, j):
        """Column j (1-based) as an int with edge i on bit i-1."""
        return sum(((r >> (j - 1)) & 1) << i for i, r in enumerate(self.rows))

    def columns(self):
        return [self.column(j) for j in range(1, self.n + 1)]


def canonical_row_code(bits):
    """Encode a 0/1 membership sequence as an int, vertex j on bit j-1."""
    code = 0
    for j, b in enumerate(bits):
        if b:
            code |= 1 << j
    return code


def transpose(matrix):
    """Incidence matrix of the dual hypergraph (an involution)."""
    if matrix.m == 0:
        raise ValueError("transpose of an edgeless matrix has no vertices")
    return IncidenceMatrix(n=matrix.m, rows=tuple(matrix.columns()))


# Row conventions (the second index of every table family):
#   1 ordered distinct rows, 2 ordered with repetition,
#   3 unordered distinct, 4 unordered multiset.
@dataclass(frozen=True)
class ClassSpec:
    """Declarative description of one hypergraph class.

    `row_convention` belongs to counting, not to a single matrix: `satisfies`
    ignores it.  Enabled flags are conjunctive.  `uniformity` is None,
    ("exact", k) or ("at_most", k); `vertex_degree` is None, ("exact_cover", k)
    or ("at_most_cover", k).
    """

    row_convention: int = 2
    forbid_empty_edges: bool = False
    forbid_full_edges: bool = False
    require_cover: bool = False
    forbid_intersecting: bool = False
    forbid_singular: bool = False
    require_connected: bool = False
    require_minimal_cover: bool = False
    require_t0: bool = False
    uniformity: tuple = None
    vertex_degree: tuple = None

    def __post_init__(self):
        if self.row_convention not in (1, 2, 3, 4):
            raise ValueError(f"row convention must be 1..4, got {self.row_convention}")
        for name in ("uniformity", "vertex_degree"):
            value = getattr(self, name)
            if value is None:
                continue
            kind, k = value
            valid = ("exact", "at_most") if name == "uniformity" else ("exact_cover", "at_most_cover")
            if kind not in valid:
                raise ValueError(f"bad {name} kind {kind!r}")
            if k is None:
                raise MissingParameterError(f"{name} constraint enabled without k")
        # Implied flags: no singular vertices means cover + no common vertex;
        # a minimal cover is a cover; exact k-uniformity with k >= 1 rules out
        # empty edges.
        if self.forbid_singular:
            object.__setattr__(self, "require_cover", True)
            object.__setattr__(self, "forbid_intersecting", True)
        if self.require_minimal_cover:
            object.__setattr__(self, "require_cover", True)
        if self.uniformity and self.uniformity[0] == "exact" and self.uniformity[1] >= 1:
            object.__setattr__(self, "forbid_empty_edges", True)


def _full_row(n):
    return (1 << n) - 1


def has_empty_edge(matrix):
    return 0 in matrix.rows


def has_full_edge(matrix):
    return _full_row(matrix.n) in matrix.rows


def is_cover(matrix):
    """No isolated vertex, i.e. no all-zero column.  An edgeless matrix on
    n >= 1 vertices is not a cover."""
    return 0 not in matrix.columns()


def has_common_vertex(matrix):
    """The intersecting property: some vertex lies in every edge.

    Convention for m = 0: holds vacuously (the empty intersection is the
    whole vertex set)."""
    if matrix.m == 0:
        return True
    full = (1 << matrix.m) - 1
    return full in matrix.columns()


def has_singular_vertex(matrix):
    """Some vertex lies in every edge or in none."""
    full = (1 << matrix.m) - 1
    return any(c == 0 or c == full for c in matrix.columns())


def is_t0(matrix):
    """Every two vertices are separated by some edge: all columns distinct."""
    cols = matrix.columns()
    return len(set(cols)) == matrix.n


def is_connected(matrix):
    """Every pair of vertices is joined by a chain of pairwise-intersecting
    edges.

    Implemented as union-find over vertices merged within each edge; empty
    edges merge nothing, an isolated vertex with n >= 2 breaks connectivity,
    and n = 1 counts as connected regardless of edges.
    """
    n = matrix.n
    if n == 1:
        return True
    if 0 in matrix.columns():
        return False
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for r in matrix.rows:
        first = None
        j = 0
        while r:
            if r & 1:
                if first is None:
                    first = j
                else:
                    a, b = find(first), find(j)
                    if a != b:
                        parent[b] = a
            r >>= 1
            j += 1
    root = find(0)
    return all(find(j) == root for j in range(1, n))


def is_minimal_cover(matrix):
    """A cover in which deleting any single edge destroys the cover property.

    Equivalently: a cover where every edge has a private vertex (a column
    incident to that edge only).
    """
    cols = matrix.columns()
    if 0 in cols:
        return False
    col_set = set(cols)
    return all((1 << i) in col_set for i in range(matrix.m))


def row_sizes(matrix):
    return [r.bit_count() for r in matrix.rows]


def column_sizes(matrix):
    return [c.bit_count() for c in matrix.columns()]


def satisfies(matrix, spec):
    """True iff the matrix satisfies every enabled constraint of the spec."""
    if spec.require_t0 and not is_t0(matrix):
        return False
    if spec.forbid_empty_edges and has_empty_edge(matrix):
        return False
    if spec.forbid_full_edges and has_full_edge(matrix):
        return False
    if spec.forbid_singular and has_singular_vertex(matrix):
        return False
    if spec.require_cover and not is_cover(matrix):
        return False
    if spec.forbid_intersecting and has_common_vertex(matrix):
        return False
    if spec.require_minimal_cover and not is_minimal_cover(matrix):
        return False
    if spec.require_connected and not is_connected(matrix):
        return False
    if spec.uniformity is not None:
        kind, k = spec.uniformity
        sizes = row_sizes(matrix)
        if kind == "exact" and any(s != k for s in sizes):
            return False
        if kind == "at_most" and any(s > k for s in sizes):
            return False
    if spec.vertex_degree is not None:
        kind, k = spec.vertex_degree
        degrees = column_sizes(matrix)
        if kind == "exact_cover" and any(d != k for d in degrees):
            return False
        if kind == "at_most_cover" and any(d < 1 or d > k for d in degrees):
            return False
    return True


@dataclass(frozen=True)
class MatrixFeatures:
    """Per-matrix facts sufficient to evaluate any ClassSpec.

    Extracted once per enumerated matrix so the oracle can aggregate counts
    for many specs without re-scanning bit grids.
    """

    rows_distinct: bool
    empty_edge: bool
    full_edge: bool
    cover: bool
    common_vertex: bool
    singular: bool
    t0: bool
    connected: bool
    minimal: bool
    row_sizes: tuple
    col_sizes: tuple


def matrix_features(matrix):
    return MatrixFeatures(
        rows_distinct=len(set(matrix.rows)) == matrix.m,
        empty_edge=has_empty_edge(matrix),
        full_edge=has_full_edge(matrix),
        cover=is_cover(matrix),
        common_vertex=has_common_vertex(matrix),
        singular=has_singular_vertex(matrix),
        t0=is_t0(matrix),
        connected=is_connected(matrix),
        minimal=is_minimal_cover(matrix),
        row_sizes=tuple(sorted(row_sizes(matrix))),
        col_sizes=tuple(sorted(column_sizes(matrix))),
    )


def features_satisfy(features, spec):
    """Mirror of `satisfies` over extracted features (same truth table)."""
    f = features
    if spec.require_t0 and not f.t0:
        return False
    if spec.forbid_empty_edges and f.empty_edge:
        return False
    if spec.forbid_full_edges and f.full_edge:
        return False
    if spec.forbid_singular and f.singular:
        return False
    if spec.require_cover and not f.cover:
        return False
    if spec.forbid_intersecting and f.common_vertex:
        return False
    if spec.require_minimal_cover and not f.minimal:
        return False
    if spec.require_connected and not f.connected:
        return False
    if spec.uniformity is not None:
        kind, k = spec.uniformity
        if kind == "exact" and any(s != k for s in f.row_sizes):
            return False
        if kind == "at_most" and f.row_sizes and f.row_sizes[-1] > k:
            return False
    if spec.vertex_degree is not None:
        kind, k = spec.vertex_degree
        if kind == "exact_cover" and any(d != k for d in f.col_sizes):
            return False
        if kind == "at_most_cover" and (f.col_sizes[0] < 1 or f.col_sizes[-1] > k):
            return False
    return True
