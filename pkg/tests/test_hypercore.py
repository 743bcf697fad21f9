import random
from itertools import product

import pytest

from t0enum.hypercore import (
    ClassSpec,
    IncidenceMatrix,
    MissingParameterError,
    canonical_row_code,
    features_satisfy,
    has_common_vertex,
    has_empty_edge,
    has_full_edge,
    is_connected,
    is_cover,
    is_t0,
    matrix_features,
    satisfies,
    transpose,
)


def all_matrices(m, n):
    for rows in product(range(1 << n), repeat=m):
        yield IncidenceMatrix(n=n, rows=rows)


def test_canonical_row_code():
    assert canonical_row_code([1, 0]) == 1
    assert canonical_row_code([0, 1]) == 2
    assert canonical_row_code([1, 1]) == 3


def test_transpose_examples():
    m = IncidenceMatrix.from_bits([[1, 0]])
    t = transpose(m)
    assert (t.m, t.n) == (2, 1)
    assert t.rows == (1, 0)
    eye = IncidenceMatrix(n=3, rows=(1, 2, 4))
    assert transpose(eye).rows == (1, 2, 4)


def test_transpose_is_involution():
    rng = random.Random(7)
    for _ in range(100):
        m_, n_ = rng.randint(1, 4), rng.randint(1, 4)
        mat = IncidenceMatrix(n=n_, rows=tuple(rng.randrange(1 << n_) for _ in range(m_)))
        assert transpose(transpose(mat)) == mat


def test_satisfies_examples():
    assert not satisfies(IncidenceMatrix(n=2, rows=(3,)), ClassSpec(require_t0=True))
    good = IncidenceMatrix(n=2, rows=(1, 2, 3))
    assert satisfies(good, ClassSpec(require_t0=True, require_cover=True, require_connected=True))
    disjoint = IncidenceMatrix(n=2, rows=(2, 1))
    assert not satisfies(disjoint, ClassSpec(require_connected=True))


def test_connectivity_single_vertex_convention():
    # n = 1 is connected regardless of edges, including the all-empty matrix
    assert is_connected(IncidenceMatrix(n=1, rows=(0, 0)))
    assert is_connected(IncidenceMatrix(n=1, rows=()))
    assert not is_connected(IncidenceMatrix(n=2, rows=()))


def test_empty_edge_never_contributes_to_connectivity():
    # {v1 v2}, {} , {v2 v3}: connected through the nonempty edges
    mat = IncidenceMatrix(n=3, rows=(3, 0, 6))
    assert is_connected(mat)
    # two components bridged by nothing: the empty edge does not help
    mat2 = IncidenceMatrix(n=3, rows=(3, 0, 4))
    assert not is_connected(mat2)


def test_edgeless_matrix_conventions():
    empty = IncidenceMatrix(n=2, rows=())
    assert has_common_vertex(empty)  # vacuous intersection convention
    assert not is_cover(empty)
    assert not has_empty_edge(empty) and not has_full_edge(empty)


def test_minimal_cover_and_uniformity():
    # rows {v1}, {v2 v3}: deleting either breaks the cover
    mat = IncidenceMatrix(n=3, rows=(1, 6))
    assert satisfies(mat, ClassSpec(require_minimal_cover=True))
    # adding {v3} makes the big edge non-essential? no: v2 still needs it
    mat2 = IncidenceMatrix(n=3, rows=(1, 6, 4))
    assert not satisfies(mat2, ClassSpec(require_minimal_cover=True))
    assert satisfies(mat, ClassSpec(uniformity=("at_most", 2)))
    assert not satisfies(mat, ClassSpec(uniformity=("exact", 2)))
    assert satisfies(IncidenceMatrix(n=3, rows=(3, 6)), ClassSpec(uniformity=("exact", 2)))
    assert satisfies(IncidenceMatrix(n=2, rows=(1, 2, 3)), ClassSpec(vertex_degree=("at_most_cover", 2)))
    assert satisfies(IncidenceMatrix(n=2, rows=(1, 2)), ClassSpec(vertex_degree=("exact_cover", 1)))


def test_spec_invariants_normalization():
    spec = ClassSpec(forbid_singular=True)
    assert spec.require_cover and spec.forbid_intersecting
    spec = ClassSpec(require_minimal_cover=True)
    assert spec.require_cover
    spec = ClassSpec(uniformity=("exact", 2))
    assert spec.forbid_empty_edges
    with pytest.raises(MissingParameterError):
        ClassSpec(uniformity=("exact", None))
    with pytest.raises(ValueError):
        ClassSpec(row_convention=5)


def test_predicate_duality_exhaustive():
    # empty edge <-> isolated vertex; intersecting <-> full edge;
    # bounded-degree cover <-> bounded-size without empty edges
    for m in range(1, 5):
        for n in range(1, 5):
            for mat in all_matrices(m, n):
                dual = transpose(mat)
                assert has_empty_edge(mat) == (0 in dual.columns())
                assert has_common_vertex(mat) == has_full_edge(dual)
                for k in (1, 2):
                    lhs = satisfies(mat, ClassSpec(vertex_degree=("at_most_cover", k)))
                    rhs = satisfies(
                        dual, ClassSpec(uniformity=("at_most", k), forbid_empty_edges=True)
                    )
                    assert lhs == rhs


def test_t0_has_at_most_one_zero_column():
    for m in range(1, 4):
        for n in range(1, 4):
            for mat in all_matrices(m, n):
                if is_t0(mat):
                    assert mat.columns().count(0) <= 1


def test_connected_implies_cover_and_intersecting_cover_is_connected():
    for m in range(1, 4):
        for n in range(2, 4):
            for mat in all_matrices(m, n):
                if is_connected(mat):
                    assert is_cover(mat)
                if is_cover(mat) and has_common_vertex(mat):
                    assert is_connected(mat)


def _random_spec(rng):
    uniformity = rng.choice([None, ("exact", rng.randint(1, 3)), ("at_most", rng.randint(1, 3))])
    degree = rng.choice(
        [None, ("exact_cover", rng.randint(1, 3)), ("at_most_cover", rng.randint(1, 3))]
    )
    return ClassSpec(
        row_convention=rng.randint(1, 4),
        forbid_empty_edges=rng.random() < 0.4,
        forbid_full_edges=rng.random() < 0.4,
        require_cover=rng.random() < 0.4,
        forbid_intersecting=rng.random() < 0.3,
        forbid_singular=rng.random() < 0.2,
        require_connected=rng.random() < 0.3,
        require_minimal_cover=rng.random() < 0.2,
        require_t0=rng.random() < 0.5,
        uniformity=uniformity,
        vertex_degree=degree,
    )


def test_features_agree_with_satisfies():
    rng = random.Random(2024)
    specs = [_random_spec(rng) for _ in range(40)]
    for m in range(1, 4):
        for n in range(1, 4):
            for mat in all_matrices(m, n):
                feats = matrix_features(mat)
                for spec in specs:
                    assert features_satisfy(feats, spec) == satisfies(mat, spec)
