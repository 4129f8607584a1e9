"""Acceptance suite: one test per criterion, each printing PASS/FAIL.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines and measured runtimes.  Every tolerance is stated inline; counting
is exact integer arithmetic throughout.
"""

import math
import time

from symgraph import (
    char_poly,
    closed_form,
    combined_count,
    complete_graph,
    complete_linear_bounds,
    complete_linear_system,
    conjecture_scan,
    count_series,
    entropy_series,
    fit_scaling,
    find_inadmissible_subword,
    golden_graph,
    golden_linear_bounds,
    golden_linear_system,
    graph_from_bitmask,
    iter_connected_bitmasks,
    iter_word_sets,
    linear_graph,
    topological_entropy_estimate,
    two_cycle_graph,
    verify_recurrence,
    CombinedSystem,
    quartic_schedule,
)

MU = (1 + math.sqrt(5)) / 2


def report(number: int, ok: bool, detail: str) -> None:
    print(f"CRITERION {number}: {'PASS' if ok else 'FAIL'} - {detail}")


def test_criterion_01_characteristic_polynomials():
    char_poly(golden_graph())  # warm-up
    start = time.perf_counter()
    p1 = char_poly(golden_graph())
    p2 = char_poly(linear_graph())
    elapsed = time.perf_counter() - start
    ok = (
        p1.coefficients == (1, -2, 0, 1)
        and p2.coefficients == (1, -2, 1, 0)
        and elapsed < 1e-3
    )
    report(1, ok, f"x^3-2x^2+1 and x^3-2x^2+x exact, {elapsed * 1e6:.0f} us")
    assert p1.coefficients == (1, -2, 0, 1)
    assert p2.coefficients == (1, -2, 1, 0)
    assert elapsed < 1e-3


def test_criterion_02_recurrence_to_200():
    start = time.perf_counter()
    named = [golden_graph(), linear_graph(), complete_graph(), two_cycle_graph()]
    for g in named:
        assert verify_recurrence(g, 200).ok
    checked = len(named)
    for k in (1, 2, 3):
        for mask in iter_connected_bitmasks(k):
            assert verify_recurrence(graph_from_bitmask(k, mask), 200).ok
            checked += 1
    elapsed = time.perf_counter() - start
    report(2, elapsed < 10, f"{checked} graphs verified entrywise to n=200 in {elapsed:.1f}s")
    assert elapsed < 10


def test_criterion_03_closed_forms():
    form1 = closed_form(golden_graph())
    worst = 0.0
    for row in count_series(golden_graph(), 60).rows:
        worst = max(worst, abs(form1.evaluate(row.n) - row.total) / row.total)
    mu_coeff = next(
        t.coefficients[0].real for t in form1.terms if abs(t.root - MU) < 1e-6
    )
    coeff_err = abs(mu_coeff - (15 + 7 * math.sqrt(5)) / 10)

    form2 = closed_form(linear_graph())
    exact2 = all(
        round(form2.evaluate(row.n)) == row.total
        and abs(form2.evaluate(row.n) - row.total) < 1e-9
        for row in count_series(linear_graph(), 60).rows[1:]
    )
    ok = worst <= 1e-9 and exact2 and coeff_err <= 1e-6
    report(3, ok, f"golden rel err {worst:.2e}, mu-coeff err {coeff_err:.2e}, linear exact {exact2}")
    assert worst <= 1e-9
    assert coeff_err <= 1e-6
    assert exact2


def test_criterion_04_oracle_equivalence_k_le_4():
    start = time.perf_counter()
    graphs = 0
    mismatches = 0
    for k in (1, 2, 3, 4):
        for mask in iter_connected_bitmasks(k):
            g = graph_from_bitmask(k, mask)
            totals = [row.total for row in count_series(g, 10).rows]
            sizes = [len(ws) for ws in iter_word_sets(g, 10, cap=10 ** 7)]
            if sizes != totals:
                mismatches += 1
            graphs += 1
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and elapsed < 120
    report(4, ok, f"{graphs} graphs, n<=10, {mismatches} mismatches, {elapsed:.1f}s")
    assert mismatches == 0
    assert elapsed < 120


def test_criterion_05_golden_linear_bounds():
    start = time.perf_counter()
    assert combined_count(golden_linear_system(1), 16) == 91
    reports = [golden_linear_bounds(t) for t in range(1, 7)]
    elapsed = time.perf_counter() - start
    ok = all(r.holds for r in reports) and reports[-1].n == 2401 and elapsed < 1
    report(5, ok, f"count(16)=91; strict bounds hold for t<=6 (n up to 2401) in {elapsed:.2f}s")
    assert all(r.holds for r in reports)
    assert reports[-1].n == 2401
    assert elapsed < 1


def test_criterion_06_complete_linear_bounds():
    start = time.perf_counter()
    first = complete_linear_bounds(1)
    assert (first.lower, first.actual, first.upper) == (81, 729, 2025)
    reports = [complete_linear_bounds(t) for t in range(1, 9)]
    elapsed = time.perf_counter() - start
    ok = all(r.holds for r in reports) and elapsed < 1
    report(6, ok, f"count(16)=729 in (81, 2025); strict bounds hold for t<=8 in {elapsed:.2f}s")
    assert all(r.holds for r in reports)
    assert elapsed < 1


def test_criterion_07_stretched_exponential():
    start = time.perf_counter()
    system = complete_linear_system(12)
    samples = [((t + 1) ** 4, combined_count(system, (t + 1) ** 4)) for t in range(1, 13)]
    ratios = [math.log(c, 3) / math.sqrt(n) for n, c in samples]
    decreasing = all(ratios[t] > ratios[t + 1] for t in range(3, 11))
    fit = fit_scaling(entropy_series(samples))
    elapsed = time.perf_counter() - start
    in_interval = 1.0 <= ratios[-1] <= 1.35
    ok = in_interval and decreasing and fit.model == "power" and 0.45 <= fit.mu <= 0.55 and elapsed < 5
    report(
        7,
        ok,
        f"ratio(t=12)={ratios[-1]:.4f} (required [1.0, 1.35]); decreasing for t>=4: "
        f"{decreasing}; fit {fit.model} mu={fit.mu:.3f}; {elapsed:.2f}s",
    )
    assert decreasing
    assert fit.model == "power" and 0.45 <= fit.mu <= 0.55
    assert elapsed < 5
    # Stated interval [1.0, 1.35] at t = 12.  The exact count gives
    # log3(count)/sqrt(n) = 1.4085, inside the bound-derived window
    # [1.0, 1.0 + log3(prod(2*s_2i+1))/sqrt(n)] = [1.0, 1.479] but above
    # 1.35; the 1.35 ceiling is reached only near t ~ 28.  Asserted as
    # stated rather than weakened.
    assert in_interval, f"log3(count)/sqrt(n) = {ratios[-1]:.4f} not in [1.0, 1.35]"


def test_criterion_08_subword_witness():
    system = golden_linear_system(1)
    witness = find_inadmissible_subword(system, 5)
    assert witness is not None
    from symgraph import iter_combined_word_sets
    levels = list(iter_combined_word_sets(system, 5))
    word_ok = tuple(witness.word) in set(levels[len(witness.word) - 1])
    sub_bad = tuple(witness.subword) not in set(levels[len(witness.subword) - 1])
    degenerate = CombinedSystem((golden_graph(), golden_graph()), quartic_schedule(1))
    none_found = find_inadmissible_subword(degenerate, 5) is None
    ok = word_ok and sub_bad and none_found
    report(8, ok, f"witness subword verified inadmissible; degenerate system yields none")
    assert word_ok and sub_bad and none_found


def test_criterion_09_entropy_estimates():
    est_k3 = topological_entropy_estimate(entropy_series(count_series(complete_graph(), 40)))
    err_k3 = abs(est_k3 - math.log2(3))
    est_g1 = topological_entropy_estimate(entropy_series(count_series(golden_graph(), 60)))
    err_g1 = abs(est_g1 - math.log2(MU))
    est_g2 = topological_entropy_estimate(entropy_series(count_series(linear_graph(), 400)))
    ok = err_k3 <= 1e-9 and err_g1 <= 1e-6 and abs(est_g2) <= 0.01
    report(9, ok, f"errors: complete {err_k3:.1e}, golden {err_g1:.1e}, linear {abs(est_g2):.4f}")
    assert err_k3 <= 1e-9
    assert err_g1 <= 1e-6
    assert abs(est_g2) <= 0.01


def test_criterion_10_scan_deterministic():
    r1 = conjecture_scan(3)
    r2 = conjecture_scan(3)
    identical = r1.to_csv().encode() == r2.to_csv().encode()
    no_strong_mixed = r1.mixed_strongly_connected == ()
    ok = identical and no_strong_mixed
    report(10, ok, f"{len(r1.rows)} graphs; zero mixed among strongly connected; byte-identical")
    assert identical
    assert no_strong_mixed
