#!/usr/bin/env python3
"""Word census of a single graph: counts, recurrences, closed forms.

Walks through the three bundled 3-letter graphs plus the 2-cycle and
shows, for each one:

  * exact word counts by matrix powers (and a cross-check by explicit
    enumeration),
  * the characteristic polynomial and the induced integer recurrence,
  * the eigenvalue closed form of the total count,
  * the growth classification (exponential / polynomial / mixed).

Run:  python demos/single_graph_growth.py
"""

from symgraph import (
    char_poly,
    classify_growth,
    closed_form,
    complete_graph,
    count_series,
    enumerate_words,
    golden_graph,
    linear_graph,
    total_count,
    two_cycle_graph,
    validate,
    verify_recurrence,
)


def show(graph):
    print("=" * 64)
    print(f"graph {graph.name!r} on alphabet {''.join(graph.alphabet.symbols)}")
    diag = validate(graph)
    print(f"  edges: {graph.edge_count}, strongly connected: {diag.strongly_connected},"
          f" absorbing: {list(diag.absorbing_states) or 'none'}")

    series = count_series(graph, 12)
    totals = [row.total for row in series.rows]
    print(f"  word counts n=1..12: {totals}")

    enum_sizes = [len(enumerate_words(graph, n)) for n in range(1, 9)]
    assert enum_sizes == totals[:8], "enumeration disagrees with matrix counts"
    print(f"  enumeration cross-check n<=8: ok ({enum_sizes})")
    print(f"  sample words of length 4: {enumerate_words(graph, 4).strings()[:6]}")

    poly = char_poly(graph)
    print(f"  characteristic polynomial: {poly.pretty()}")
    rec = verify_recurrence(graph, 60)
    print(f"  induced recurrence verified exactly to n=60: {rec.ok}")

    form = closed_form(graph)
    print(f"  closed form (valid from n={form.validity_floor}):")
    for term in form.terms:
        coeffs = ", ".join(f"{c.real:+.6f}" for c in term.coefficients)
        print(f"    root {term.root.real:+.6f}{term.root.imag:+.2f}i"
              f" (multiplicity {term.multiplicity}), coefficients [{coeffs}]")
    check_n = 30
    print(f"  closed form at n={check_n}: {form.evaluate(check_n):.6f}"
          f" vs exact {total_count(graph, check_n)}")

    growth = classify_growth(graph)
    print(f"  growth class: {growth.kind} (rho={growth.rho:.6f},"
          f" polynomial degree {growth.poly_degree})")


def main():
    for graph in (golden_graph(), linear_graph(), complete_graph(), two_cycle_graph()):
        show(graph)
    print("=" * 64)
    print("note: the golden graph grows like the golden ratio to the n,")
    print("the linear graph like 2n+1, and no single graph can sit in between.")


if __name__ == "__main__":
    main()
