import json
import pathlib

import pytest

from t0enum import catalog
from t0enum.catalog import families as F
from t0enum.catalog import (
    OracleOnlyClassError,
    UnknownClassError,
    manifest,
    resolve_class,
)
from t0enum.hypercore import ClassSpec
from t0enum.oracle import count, verify_grid


def test_alpha_examples():
    assert F.alpha(1, 1, 2, 2) == 6  # [3]_2
    assert F.alpha(0, 2, 2, 2) == 16  # 2^(mn)
    assert F.alpha(3, 2, 2, 2) == 4
    assert F.alpha(3, 2, 2, 2) == count(ClassSpec(row_convention=2, forbid_empty_edges=True, forbid_full_edges=True), 2, 2)


def test_alpha_star_examples():
    assert F.alpha_star(0, 2, 2, 2) == 12
    assert F.alpha_star(0, 1, 2, 2) == 10
    assert F.alpha_star(0, 1, 2, 2) == count(ClassSpec(row_convention=1, require_t0=True), 2, 2)
    for j in range(4):
        for conv in range(1, 5):
            assert F.alpha_star(j, conv, 3, 1) == F.alpha(j, conv, 3, 1)


def test_bar_alpha_one_edge_values():
    for n in range(1, 6):
        assert F.bar_alpha(0, 1, 1, n) == 1
        assert F.bar_alpha(1, 1, 1, n) == 0
        assert F.bar_alpha(2, 1, 1, n) == 1
        assert F.bar_alpha(3, 1, 1, n) == 0
    frozen = count(ClassSpec(row_convention=1, forbid_intersecting=True), 2, 2)
    assert F.bar_alpha(0, 1, 2, 2) == frozen == 8


def test_beta_examples():
    assert F.beta(0, 2, 2, 2) == 9  # (2^m - 1)^n holds in convention 2
    for n in range(1, 5):
        for i in range(4, 8):
            assert F.beta(i, 1, 1, n) == 0
    assert F.beta(0, 1, 2, 2) == count(ClassSpec(row_convention=1, require_cover=True), 2, 2)


def test_beta_star_examples():
    assert F.beta_star(0, 2, 2, 2) == 6  # [2^m - 1]_n
    assert F.beta_star(1, 1, 1, 1) == 1  # only the edge {v}
    # each of the two distinct-column cover columns is symmetric in (m, n)
    for m in range(1, 5):
        for n in range(1, 5):
            assert F.beta_star(1, 1, m, n) == F.beta_star(1, 1, n, m)
            assert F.beta_star(2, 1, m, n) == F.beta_star(2, 1, n, m)
    # the naive cross-table equality fails; (3, 4) is the first witness
    assert F.beta_star(1, 1, 3, 4) == 840
    assert F.beta_star(2, 1, 4, 3) == 768


def test_dual_cross_table_identity():
    # transposing swaps no-empty-edges with cover and no-full with no-common
    for m in range(1, 5):
        for n in range(1, 5):
            assert F.bar_alpha_star(1, 1, m, n) == F.beta_star(2, 1, n, m)
            assert F.bar_alpha_star(2, 1, m, n) == F.bar_alpha_star(2, 1, n, m)
            assert F.bar_alpha_star(1, 1, m, n) == F.bar_alpha_star(1, 1, n, m)


def test_mu_examples():
    assert F.mu_star_01(2, 3) == 6
    assert F.mu_01(2, 3) == 12
    assert F.mu_01(2, 3) == count(ClassSpec(row_convention=1, require_minimal_cover=True), 2, 3)
    for n in range(1, 6):
        assert F.mu_41(1, n) == 0
    assert F.mu_01(3, 2) == 0


def test_theta_examples():
    assert F.theta_01(2, 3, 2) == 6
    assert F.theta_11(2, 3, 2) == 6
    spec = ClassSpec(row_convention=1, uniformity=("exact", 2), require_cover=True)
    assert F.theta_11(2, 3, 2) == count(spec, 2, 3)
    assert F.bar_theta_01(2, 2, 2) == 6  # [C(2,1) + C(2,2)]_2


def test_theta_star_examples():
    spec = ClassSpec(row_convention=2, uniformity=("exact", 2), require_t0=True)
    assert F.theta_star_0(2, 2, 2, 2) == count(spec, 2, 2)
    # k = n collapse: single admissible block union
    for s in range(1, 5):
        from t0enum.exactmath import selections

        assert F.theta_star_0(s, 2, 1, 1) == selections(s, 1, 2)
        spec_kn = ClassSpec(row_convention=s, uniformity=("exact", 2), require_t0=True)
        assert F.theta_star_0(s, 2, 2, 2) == count(spec_kn, 2, 2)


def test_two_cover_examples():
    assert F.bar_theta_circ_03(1, 2) == 0
    assert F.bar_theta_circ_03(3, 3) == 1  # the triangle
    assert F.bar_beta_star_13(3, 3) == resolve_class("bar_beta_star_13").oracle_count(3, 3)


def test_two_cover_against_graph_enumeration():
    entry = resolve_class("bar_theta_circ_03")
    for m in range(1, 6):
        for n in range(1, 6):
            assert F.bar_theta_circ_03(m, n) == entry.oracle_count(m, n)


def test_omega_examples():
    for n in range(1, 7):
        assert F.omega(1, 2, 1, n) == 1
        assert F.omega(1, 2, 2, n) == 3**n - 2**n
        assert F.omega(1, 2, 3, n) == 7**n - 3 * 4**n + 2 * 3**n
        assert F.omega(1, 2, 4, n) == 15**n - 4 * 8**n - 3 * 6**n + 12 * 5**n - 6 * 4**n
    assert F.omega(1, 2, 4, 2) == 65
    assert F.omega(0, 2, 1, 1) == 2
    assert F.omega(0, 1, 1, 1) == 2 and F.omega(0, 3, 1, 1) == 2 and F.omega(0, 4, 1, 1) == 2


def test_omega_star_examples():
    spec = ClassSpec(row_convention=2, forbid_empty_edges=True, require_connected=True, require_t0=True)
    assert F.omega_star(1, 2, 2, 2) == count(spec, 2, 2) == 4
    for i in range(8):
        for conv in range(1, 5):
            assert F.omega_star(i, conv, 3, 1) == F.omega(i, conv, 3, 1)
    # only the plain connected table is symmetric; its starred version is not
    assert F.omega_star(1, 2, 2, 3) != F.omega_star(1, 2, 3, 2)


def test_omega_12_symmetry():
    for m in range(1, 7):
        for n in range(1, 7):
            assert F.omega(1, 2, m, n) == F.omega(1, 2, n, m)


def test_omega_uniform_star_examples():
    for m in range(1, 5):
        assert F.bar_omega_star_0(2, m, 1, 1) == 1
    # the one-full-edge column: distinct columns force k = 1
    assert F.bar_omega_star_0(2, 1, 1, 1) == 1
    for k in (2, 3):
        spec = ClassSpec(row_convention=2, uniformity=("exact", k), require_connected=True, require_t0=True)
        assert F.bar_omega_star_0(2, 1, k, k) == count(spec, 1, k) == 0
    spec = ClassSpec(row_convention=2, uniformity=("exact", 2), require_connected=True, require_t0=True)
    assert F.bar_omega_star_0(2, 2, 3, 2) == count(spec, 2, 3)


def test_resolve_class():
    entry = resolve_class("alpha_02")
    assert entry.evaluate(2, 2) == 16
    assert entry.class_spec() == ClassSpec(row_convention=2)
    omega_entry = resolve_class("omega_12")
    assert omega_entry.evaluate(2, 2) == 5
    with pytest.raises(OracleOnlyClassError):
        resolve_class("theta_21").evaluate(2, 2, k=2)
    assert resolve_class("theta_21").oracle_count(2, 3, k=2) >= 0
    with pytest.raises(UnknownClassError):
        resolve_class("no_such_class")


def test_sandwich_inequalities():
    # connected <= cover <= plain, and distinct-column <= plain, cellwise
    for conv in range(1, 5):
        for m in range(1, 5):
            for n in range(1, 5):
                assert F.omega(1, conv, m, n) <= F.beta(1, conv, m, n) <= F.alpha(1, conv, m, n)
                assert F.alpha_star(1, conv, m, n) <= F.alpha(1, conv, m, n)
                assert F.beta_star(0, conv, m, n) <= F.beta(0, conv, m, n)
                assert F.omega_star(1, conv, m, n) <= F.omega(1, conv, m, n)


def test_minimal_cover_saturation():
    # degree bounds at or above n do not constrain minimal covers
    entry = resolve_class("mu_bar_01")
    for m in range(1, 4):
        for n in range(1, 4):
            for k in range(n, n + 2):
                assert entry.oracle_count(m, n, k=k) == F.mu_01(m, n)


def test_containment_inequalities():
    # class containments restated as cellwise count inequalities (m >= 2)
    for m in range(2, 5):
        for n in range(1, 5):
            assert F.mu_41(m, n) <= F.mu_01(m, n) <= F.beta(1, 1, m, n)
            assert F.mu_01(m, n) <= F.beta(3, 1, m, n)
            assert F.beta(3, 1, m, n) <= F.beta(2, 1, m, n) <= F.beta(0, 1, m, n)
            assert F.beta(3, 1, m, n) <= F.beta(1, 1, m, n) <= F.beta(0, 1, m, n)
            assert F.beta(7, 1, m, n) <= F.beta(5, 1, m, n) <= F.beta(4, 1, m, n)
            assert F.beta(4, 1, m, n) <= F.beta(0, 1, m, n)
            assert F.beta(5, 1, m, n) <= F.beta(1, 1, m, n)


def test_registered_classes_present():
    ids = catalog.all_class_ids()
    for expected in (
        "alpha_02", "alpha_star_02", "bar_alpha_11", "beta_01", "beta_star_11",
        "mu_01", "mu_star_01", "mu_41", "theta_01", "theta_21", "bar_theta_51",
        "theta_star_01", "bar_theta_star_04", "theta_star_21", "bar_theta_circ_03",
        "bar_beta_star_13", "omega_12", "omega_star_12", "bar_omega_star_02",
        "bbar_omega_star_12", "beta_01_as_printed", "beta_41_as_printed",
        "theta_star_12_as_printed", "theta_star_32_as_printed",
    ):
        assert expected in ids


def test_every_formula_class_evaluates():
    for cid in catalog.formula_class_ids():
        entry = resolve_class(cid)
        k = 2 if entry.needs_k else None
        value = entry.evaluate(2, 2, k=k)
        assert isinstance(value, int)


def test_manifest_matches_shipped_file():
    shipped = pathlib.Path(__file__).resolve().parents[1] / "catalog_manifest.json"
    assert shipped.exists(), "regenerate with: python3 -m t0enum.catalog.registry catalog_manifest.json"
    assert json.loads(shipped.read_text()) == json.loads(json.dumps(manifest()))


def test_classification_statuses():
    rep = verify_grid("beta_01_as_printed", 3, 3)
    assert {r.status for r in rep.errata} == {"convention-gap"}
    rep = verify_grid("beta_41_as_printed", 3, 3)
    assert {r.status for r in rep.errata} == {"confirmed-typo"}
