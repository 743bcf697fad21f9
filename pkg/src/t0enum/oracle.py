"""Exhaustive ground-truth counting for small (m, n).

The oracle is the referee for every catalog formula: it enumerates all
matrices of the requested shape under the spec's row convention and counts
the ones that satisfy the spec.  Enumeration order is fixed (row-major over
canonical row codes) so failures are reproducible by index.

Per (kind, m, n) cell the oracle extracts `MatrixFeatures` for every matrix
once and aggregates them into a Counter; evaluating a spec then only walks
the (much smaller) set of distinct feature records.  `features_satisfy` is
property-tested against `satisfies` so the fast path cannot drift.
"""

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, product

from .hypercore import IncidenceMatrix, features_satisfy, matrix_features, satisfies


class BudgetExceededError(RuntimeError):
    """Requested cell is outside the enumeration budget."""

    def __init__(self, message, m=None, n=None):
        super().__init__(message)
        self.m = m
        self.n = n


@dataclass(frozen=True)
class OracleBudget:
    """Enumeration caps: max_cells bounds m*n for ordered sweeps,
    max_universe bounds 2**n for the multiset conventions."""

    max_cells: int = 20
    max_universe: int = 64

    def __post_init__(self):
        if self.max_cells < 1 or self.max_universe < 2:
            raise ValueError("budget caps must be positive")

    def check(self, convention, m, n):
        if convention in (1, 2):
            if m * n > self.max_cells:
                raise BudgetExceededError(
                    f"m*n = {m*n} exceeds max_cells = {self.max_cells}", m=m, n=n
                )
        else:
            if 2**n > self.max_universe:
                raise BudgetExceededError(
                    f"2**n = {2**n} exceeds max_universe = {self.max_universe}", m=m, n=n
                )


DEFAULT_BUDGET = OracleBudget()

_FEATURE_CACHE = {}


def _feature_counter(kind, m, n):
    """Counter of MatrixFeatures over all (m, n) matrices of one enumeration
    kind: 'ordered' (all row tuples), 'sets' (strictly increasing codes),
    'multisets' (nondecreasing codes)."""
    key = (kind, m, n)
    hit = _FEATURE_CACHE.get(key)
    if hit is not None:
        return hit
    universe = range(1 << n)
    if kind == "ordered":
        rows_iter = product(universe, repeat=m)
    elif kind == "sets":
        rows_iter = combinations(universe, m)
    else:
        rows_iter = combinations_with_replacement(universe, m)
    counter = Counter()
    for rows in rows_iter:
        counter[matrix_features(IncidenceMatrix(n=n, rows=rows))] += 1
    _FEATURE_CACHE[key] = counter
    return counter


def count(spec, m, n, budget=DEFAULT_BUDGET):
    """Exact number of labelled (m, n)-hypergraphs in the class.

    Convention 2 filters all 2**(m*n) matrices; convention 1 keeps those with
    pairwise-distinct rows; conventions 3 and 4 enumerate strictly increasing
    / nondecreasing sequences of canonical row codes.
    """
    if m < 1 or n < 1:
        raise ValueError("oracle counts need m >= 1 and n >= 1")
    conv = spec.row_convention
    budget.check(conv, m, n)
    if conv in (1, 2):
        counter = _feature_counter("ordered", m, n)
        distinct_only = conv == 1
    else:
        counter = _feature_counter("sets" if conv == 3 else "multisets", m, n)
        distinct_only = False
    total = 0
    for feats, mult in counter.items():
        if distinct_only and not feats.rows_distinct:
            continue
        if features_satisfy(feats, spec):
            total += mult
    return total


def count_dual(spec, m, n, budget=DEFAULT_BUDGET):
    """Number of (m, n) matrices whose transpose satisfies the spec.

    The spec's row convention is applied to the columns (= rows of the
    transpose), so for conventions 1 and 2 this equals count(spec, n, m) via
    the transpose bijection; the equality is a test, not the implementation.
    """
    if m < 1 or n < 1:
        raise ValueError("oracle counts need m >= 1 and n >= 1")
    conv = spec.row_convention
    budget.check(2, m, n)
    nospec_conv = _strip_convention(spec)
    total = 0
    for rows in product(range(1 << n), repeat=m):
        matrix = IncidenceMatrix(n=n, rows=rows)
        cols = tuple(matrix.columns())
        if conv == 1 and len(set(cols)) != n:
            continue
        if conv == 3 and any(cols[i] >= cols[i + 1] for i in range(n - 1)):
            continue
        if conv == 4 and any(cols[i] > cols[i + 1] for i in range(n - 1)):
            continue
        dual = IncidenceMatrix(n=m, rows=cols)
        if satisfies(dual, nospec_conv):
            total += 1
    return total


def _strip_convention(spec):
    from dataclasses import replace

    return replace(spec, row_convention=2)


@dataclass(frozen=True)
class ErrataRecord:
    """One formula-vs-oracle disagreement at one grid cell."""

    class_id: str
    m: int
    n: int
    k: object
    formula_value: int
    oracle_value: int
    reference: str
    status: str  # confirmed-typo | convention-gap | unresolved

    def as_dict(self):
        return {
            "class_id": self.class_id,
            "m": self.m,
            "n": self.n,
            "k": self.k,
            "formula_value": str(self.formula_value),
            "oracle_value": str(self.oracle_value),
            "reference": self.reference,
            "status": self.status,
        }


@dataclass
class GridReport:
    """Outcome of verifying one class over a rectangular grid.

    Iterating the report yields the errata records; budget-blocked cells are
    listed in `skipped`, never raised as failures.
    """

    class_id: str
    errata: list = field(default_factory=list)
    skipped: list = field(default_factory=list)
    cells_checked: int = 0

    def __iter__(self):
        return iter(self.errata)

    @property
    def verified(self):
        return not self.errata


def verify_grid(class_id, m_max, n_max, k=None, budget=DEFAULT_BUDGET, errata_corrected=False):
    """Evaluate formula and oracle on every in-budget cell of a class.

    `class_id` must resolve to a catalog entry carrying both an evaluator and
    a ClassSpec (or a custom oracle).  Returns a GridReport; one ErrataRecord
    per disagreement, an empty record list meaning the class verified.
    """
    from . import catalog

    entry = catalog.resolve_class(class_id)
    report = GridReport(class_id=class_id)
    for m in range(1, m_max + 1):
        for n in range(1, n_max + 1):
            try:
                oracle_value = entry.oracle_count(m, n, k=k, budget=budget)
            except BudgetExceededError:
                report.skipped.append((m, n, k))
                continue
            formula_value = entry.evaluate(m, n, k=k, errata_corrected=errata_corrected)
            report.cells_checked += 1
            if formula_value != oracle_value:
                report.errata.append(
                    ErrataRecord(
                        class_id=class_id,
                        m=m,
                        n=n,
                        k=k,
                        formula_value=formula_value,
                        oracle_value=oracle_value,
                        reference=entry.reference,
                        status=catalog.classify_discrepancy(entry, m, n, k, formula_value, oracle_value),
                    )
                )
    return report
