"""Exit criteria. Each test carries an ``acceptance`` mark; the terminal
summary prints one PASS/FAIL line per criterion number."""

import time
from fractions import Fraction

import numpy as np
import pytest

from conftest import random_connected_graphs
from dslq._table1 import TABLE1
from dslq.extremal import (
    build_family,
    build_ghat,
    discrepancy_report,
    family_partition,
    ghat_partition,
    observed_minimizer,
    reproduce_table1,
    table_row,
    verify_theorem2,
)
from dslq.graph import complete, cycle, path, random_graph, star
from dslq.matching import (
    find_factor_backtracking,
    fractional_matching_number_brute,
    fractional_matching_number_fast,
    has_k2ck_factor,
    is_k2ck_factor,
)
from dslq.quotient import quotient_eigenvalues, quotient_largest_eigenvalue, quotient_matrix
from dslq.spectra import dsl_matrix, eta, full_spectrum, spectral_radius

SPECTRAL = 1e-7


@pytest.fixture(scope="module")
def table():
    start = time.perf_counter()
    rows = reproduce_table1(4, 36)
    return rows, time.perf_counter() - start


@pytest.mark.acceptance(1, "published table within 0.01, dual path within 1e-7, sweep under 60 s")
def test_table1_reproduction(table):
    rows, elapsed = table
    assert elapsed < 60, f"sweep took {elapsed:.1f} s"
    assert [r.n for r in rows] == list(range(4, 37))
    checked = 0
    for row in rows:
        printed_ghat, printed_family = TABLE1[row.n]
        assert len(row.family) == len(printed_family)
        for entry, printed in zip(row.family, printed_family):
            assert abs(entry.eta_direct - float(printed)) <= 0.01, (row.n, entry.s)
            assert entry.dual_path_gap < SPECTRAL
            checked += 1
        assert abs(row.ghat.eta_direct - float(printed_ghat)) <= 0.01, (row.n, "ghat")
        assert row.ghat.dual_path_gap < SPECTRAL
        checked += 1
    print(f"\n  {checked} table entries matched; sweep {elapsed:.2f} s")


@pytest.mark.acceptance(2, "eta(K_n) = 2n - 2 within 1e-8, n = 2..50")
def test_complete_graph_identity():
    for n in range(2, 51):
        assert abs(eta(complete(n)) - (2 * n - 2)) < 1e-8, n


def _table_instances():
    for n in range(4, 37):
        for s in range(1, (n - 1) // 2 + 1):
            yield build_family(n, s, 1), family_partition(n, s, 1)
        yield build_ghat(n), ghat_partition(n)


@pytest.mark.acceptance(3, "equitable quotient spectra embed in the full spectrum within 1e-7")
def test_quotient_embedding():
    count = 0
    for g, part in _table_instances():
        m = dsl_matrix(g)
        q = quotient_matrix(m, part)
        assert q.equitable
        full = full_spectrum(m).eigenvalues
        assert abs(quotient_largest_eigenvalue(q) - full[0]) < SPECTRAL
        assert abs(quotient_largest_eigenvalue(q) - spectral_radius(m)) < SPECTRAL
        for lam in quotient_eigenvalues(q):
            assert np.min(np.abs(full - lam)) < SPECTRAL
        count += 1
    print(f"\n  {count} quotient instances checked")


@pytest.mark.acceptance(4, "brute-force and double-cover fractional matching numbers agree exactly")
def test_matching_oracles_agree():
    graphs = random_connected_graphs(200, (2, 12), seed=2024)
    graphs += [star(3), cycle(5), complete(4), path(6)]
    for g in graphs:
        brute = fractional_matching_number_brute(g)
        fast = fractional_matching_number_fast(g)
        assert isinstance(brute, Fraction) and isinstance(fast, Fraction)
        assert brute == fast
    assert fractional_matching_number_fast(star(3)) == 1
    assert fractional_matching_number_fast(cycle(5)) == Fraction(5, 2)
    assert fractional_matching_number_fast(complete(4)) == 2
    assert fractional_matching_number_fast(path(6)) == 3


@pytest.mark.acceptance(5, "deficiency test agrees with backtracking; named certificates")
def test_factor_consistency():
    gen = np.random.default_rng(55)
    with_factor = 0
    for _ in range(150):
        n = int(gen.integers(1, 11))
        g = random_graph(n, float(gen.uniform(0.1, 0.7)), gen)
        has, _ = has_k2ck_factor(g)
        factor = find_factor_backtracking(g)
        assert has == (factor is not None)
        if factor is not None:
            assert is_k2ck_factor(g, factor)
            with_factor += 1
    assert 0 < with_factor < 150

    has, wit = has_k2ck_factor(star(3))
    assert not has and wit.s == (0,) and wit.deficiency >= 1
    for g in (cycle(7), complete(4)):
        has, _ = has_k2ck_factor(g)
        factor = find_factor_backtracking(g)
        assert has and factor is not None and is_k2ck_factor(g, factor)


@pytest.mark.acceptance(6, "extremal fractional matching numbers and factor-free extremal graphs")
def test_extremal_certificates():
    for n, k in [(38, 1), (52, 2), (10, 1), (16, 1)]:
        assert fractional_matching_number_fast(build_family(n, 1, k)) == Fraction(n - k, 2)
    assert fractional_matching_number_brute(build_family(10, 1, 1)) == Fraction(9, 2)
    for n in (12, 14, 16, 25, 36):
        g = build_family(n, 1, 1)
        has, wit = has_k2ck_factor(g)
        assert not has
        if wit is not None:
            assert wit.s == (n - 3,)  # the join vertex


@pytest.mark.acceptance(7, "minimizer follows the case split; G_1 strictly minimal for n = 37..40")
def test_minimizer_shape(table):
    rows, _ = table
    for row in rows:
        want = "G1" if row.n in (12, 14) or row.n >= 16 else "ghat"
        assert observed_minimizer(row) == want, row.n
    for n in (37, 38, 39, 40):
        row = table_row(n)
        e1 = row.family[0].eta_direct
        assert all(e.eta_direct > e1 for e in row.family[1:]), n
        assert row.ghat.eta_direct > e1
        assert verify_theorem2(n).verdicts["C_large_n_ordering"] is True


@pytest.mark.acceptance(8, "edge addition and entrywise monotonicity of the spectral radius")
def test_monotonicity():
    gen = np.random.default_rng(88)
    pairs = 0
    while pairs < 100:
        n = int(gen.integers(3, 25))
        g = random_graph(n, float(gen.uniform(0.05, 0.6)), gen, connected=True)
        missing = list(g.non_edges())
        if not missing:
            continue
        u, v = missing[int(gen.integers(len(missing)))]
        assert eta(g.add_edge(u, v)) <= eta(g) + 1e-9
        pairs += 1
    for _ in range(100):
        n = int(gen.integers(1, 40))
        a = gen.random((n, n)) * (gen.random((n, n)) < 0.5)
        a = a + a.T
        e = gen.random((n, n)) * (gen.random((n, n)) < 0.3)
        b = a + e + e.T
        assert spectral_radius(a) <= spectral_radius(b) + 1e-9


@pytest.mark.acceptance(9, "printed G_1 cubic constant flagged at n = 5; printed Ghat quadratic never flagged")
def test_discrepancy_report():
    report = discrepancy_report("T2_eq2", 5)
    constant = report[0]
    assert constant.x == 0 and constant.flagged
    assert constant.printed == -162 and constant.derived == -172
    flagged = [r for r in report if r.flagged]
    assert flagged
    assert all(r.root_agrees for r in flagged)
    assert abs(flagged[0].derived_root - eta(build_family(5, 1, 1))) < SPECTRAL
    for n in range(3, 40, 2):
        xs = [0, 1, 2 * n - 2, Fraction(7, 3), 4 * n]
        assert not any(r.flagged for r in discrepancy_report("T2_eq3", n, xs=xs)), n
        assert not any(r.flagged for r in discrepancy_report("T2_eq3", n)), n
