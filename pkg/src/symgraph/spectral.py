"""Spectral analysis of the counting recursion.

Every count sequence coming from a graph satisfies the integer linear
recurrence induced by the characteristic polynomial of the adjacency
matrix (Cayley-Hamilton), and therefore has a closed form as a sum of
polynomial-times-geometric terms over the nonzero eigenvalues.  This
module computes the polynomial exactly (division-free Berkowitz scheme),
verifies the recurrence in exact arithmetic, extracts the closed form,
classifies the resulting growth (exponential / polynomial / mixed), and
scans all small weakly connected digraphs for mixed-growth witnesses.

Numerical policy: eigenvalue multiplicities are never inferred from
floating-point root clustering alone.  The integer polynomial is first
split into square-free factors by Yun's algorithm in exact rational
arithmetic, so each numerical root comes with an exact multiplicity;
the 1e-7 clustering tolerance then only merges genuinely coincident
values and defines "ties" for the dominant modulus.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graphs import Alphabet, DirectedGraph, validate
from .intmat import IntMatrix, identity, mat_mul, mat_total
from .census import count_series

ROOT_TOL = 1e-7     # clustering tolerance == distinctness threshold
COEFF_TOL = 1e-8    # relative modulus below which a term is treated as absent
COND_LIMIT = 1e12

EXPONENTIAL = "exponential"
POLYNOMIAL = "polynomial"
MIXED = "mixed-polynomial-exponential"


class RootClusterError(RuntimeError):
    """Root clustering is ambiguous at the configured tolerance."""


class IllConditionedError(RuntimeError):
    """The closed-form coefficient system is numerically unreliable."""

    def __init__(self, condition: float):
        self.condition = condition
        super().__init__(f"coefficient system condition estimate {condition:.3e}")


# ---------------------------------------------------------------------------
# characteristic polynomial


@dataclass(frozen=True)
class CharPoly:
    """Monic integer polynomial, coefficients from the leading term down."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coefficients or self.coefficients[0] != 1:
            raise ValueError("characteristic polynomial must be monic")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def trailing_zeros(self) -> int:
        """Multiplicity of the zero root, read off exactly."""
        z = 0
        for c in reversed(self.coefficients):
            if c != 0:
                break
            z += 1
        return z

    def pretty(self, var: str = "x") -> str:
        parts = []
        for i, c in enumerate(self.coefficients):
            p = self.degree - i
            if c == 0:
                continue
            term = f"{var}^{p}" if p > 1 else (var if p == 1 else "")
            mag = abs(c)
            coeff = "" if (mag == 1 and p > 0) else str(mag)
            body = f"{coeff}{term}" if term or coeff else "1"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts) if parts else "0"


def char_poly(graph: DirectedGraph) -> CharPoly:
    """det(xI - M) with exact integer coefficients (Berkowitz, division-free)."""
    a = graph.adjacency
    k = graph.k
    v = [1, -a[0][0]]
    for r in range(2, k + 1):
        sub = [row[: r - 1] for row in a[: r - 1]]
        row = a[r - 1][: r - 1]
        col = [a[i][r - 1] for i in range(r - 1)]
        # Toeplitz column: 1, -a_rr, -(row @ sub^i @ col) for i = 0..r-2
        toep = [1, -a[r - 1][r - 1]]
        w = list(col)
        for _ in range(r - 1):
            toep.append(-sum(x * y for x, y in zip(row, w)))
            w = [sum(sub[i][j] * w[j] for j in range(r - 1)) for i in range(r - 1)]
        nv = [0] * (r + 1)
        for i in range(r + 1):
            nv[i] = sum(toep[i - j] * v[j] for j in range(len(v)) if 0 <= i - j < len(toep))
        v = nv
    return CharPoly(tuple(v))


def charpoly_at_matrix(poly: CharPoly, m: IntMatrix) -> IntMatrix:
    """Evaluate the polynomial at a matrix by exact integer Horner."""
    k = len(m)
    acc = identity(k)
    for c in poly.coefficients[1:]:
        acc = mat_mul(acc, m)
        if c:
            acc = tuple(
                tuple(acc[i][j] + (c if i == j else 0) for j in range(k)) for i in range(k)
            )
    return acc


# ---------------------------------------------------------------------------
# recurrence verification


@dataclass(frozen=True)
class RecurrenceFailure:
    n: int
    i: int | None      # None, None marks the total-count sequence
    j: int | None
    expected: int
    got: int


@dataclass(frozen=True)
class RecurrenceReport:
    ok: bool
    n_max: int
    failures: tuple[RecurrenceFailure, ...]


def verify_recurrence(graph: DirectedGraph, n_max: int) -> RecurrenceReport:
    """Check the induced recurrence exactly for k < n <= n_max.

    Both the total count and every endpoint-resolved count sequence are
    checked, in unbounded integer arithmetic.
    """
    k = graph.k
    if n_max <= k:
        raise ValueError(f"n_max must exceed the alphabet size {k}")
    poly = char_poly(graph)
    a_coef = poly.coefficients[1:]  # a_{k-1}, ..., a_0
    mats = [None, identity(k)]     # mats[n] = M^(n-1)
    for _ in range(2, n_max + 1):
        mats.append(mat_mul(mats[-1], graph.adjacency))
    failures: list[RecurrenceFailure] = []
    for n in range(k + 1, n_max + 1):
        # value(n) = -sum_r a_r * value(n-k+r)
        for i in range(k):
            for j in range(k):
                want = -sum(a_coef[k - 1 - r] * mats[n - k + r][i][j] for r in range(k))
                got = mats[n][i][j]
                if got != want:
                    failures.append(RecurrenceFailure(n, i, j, want, got))
        want = -sum(a_coef[k - 1 - r] * mat_total(mats[n - k + r]) for r in range(k))
        got = mat_total(mats[n])
        if got != want:
            failures.append(RecurrenceFailure(n, None, None, want, got))
    return RecurrenceReport(not failures, n_max, tuple(failures))


# ---------------------------------------------------------------------------
# exact square-free decomposition (rational arithmetic)

Poly = tuple[Fraction, ...]  # descending coefficients, leading nonzero


def _trim(p: list[Fraction]) -> Poly:
    i = 0
    while i < len(p) - 1 and p[i] == 0:
        i += 1
    return tuple(p[i:])


def _deriv(p: Poly) -> Poly:
    n = len(p) - 1
    if n == 0:
        return (Fraction(0),)
    return _trim([c * (n - i) for i, c in enumerate(p[:-1])])


def _divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if len(b) == 1 and b[0] == 0:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    qdeg = len(a) - len(b)
    if qdeg < 0:
        return (Fraction(0),), a
    quot = [Fraction(0)] * (qdeg + 1)
    for i in range(qdeg + 1):
        c = rem[i] / b[0]
        quot[i] = c
        if c:
            for j, bc in enumerate(b):
                rem[i + j] -= c * bc
    return _trim(quot), _trim(rem[qdeg + 1:] if len(rem) > qdeg + 1 else [Fraction(0)])


def _monic(p: Poly) -> Poly:
    lead = p[0]
    return tuple(c / lead for c in p) if lead != 1 else p


def _gcd(a: Poly, b: Poly) -> Poly:
    while not (len(b) == 1 and b[0] == 0):
        a, b = b, _divmod(a, b)[1]
    return _monic(a) if len(a) > 1 else (Fraction(1),)


def _squarefree_factors(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: p = prod factor^multiplicity, factors square-free."""
    if len(p) == 1:
        return []
    dp = _deriv(p)
    a = _gcd(p, dp)
    b = _divmod(p, a)[0]
    c = _divmod(dp, a)[0]
    d = _trim([x - y for x, y in _zip_pad(c, _deriv(b))])
    out: list[tuple[Poly, int]] = []
    i = 1
    while len(b) > 1:
        g = _gcd(b, d)
        if len(g) > 1:
            out.append((g, i))
        b = _divmod(b, g)[0]
        c = _divmod(d, g)[0]
        d = _trim([x - y for x, y in _zip_pad(c, _deriv(b))])
        i += 1
    return out


def _zip_pad(a: Poly, b: Poly):
    la, lb = len(a), len(b)
    n = max(la, lb)
    pa = (Fraction(0),) * (n - la) + a
    pb = (Fraction(0),) * (n - lb) + b
    return zip(pa, pb)


# ---------------------------------------------------------------------------
# closed form


@dataclass(frozen=True)
class ClosedFormTerm:
    root: complex
    multiplicity: int
    coefficients: tuple[complex, ...]  # for n^0, n^1, ..., n^(multiplicity-1)


@dataclass(frozen=True)
class ClosedForm:
    terms: tuple[ClosedFormTerm, ...]
    validity_floor: int
    zero_multiplicity: int
    condition: float

    def evaluate(self, n: int) -> float:
        acc = 0j
        for term in self.terms:
            scale = term.root ** n
            acc += sum(c * n ** q for q, c in enumerate(term.coefficients)) * scale
        return acc.real

    @property
    def constant_term(self) -> float | None:
        """Coefficient of the root-1 term, when 1 is a simple-enough root."""
        for term in self.terms:
            if abs(term.root - 1) <= ROOT_TOL:
                return term.coefficients[0].real
        return None


def _roots_with_multiplicity(poly: CharPoly, root_tol: float) -> list[tuple[complex, int]]:
    z = poly.trailing_zeros
    reduced = poly.coefficients[: len(poly.coefficients) - z]
    if len(reduced) == 1:
        return []
    frac = tuple(Fraction(c) for c in reduced)
    pairs: list[tuple[complex, int]] = []
    for factor, mult in _squarefree_factors(frac):
        coefs = [float(c) for c in factor]
        for r in np.roots(coefs):
            pairs.append((complex(r), mult))
    # merge numerically coincident roots across factors
    clusters: list[list[tuple[complex, int]]] = []
    for root, mult in sorted(pairs, key=lambda p: (p[0].real, p[0].imag)):
        for cluster in clusters:
            if abs(cluster[0][0] - root) <= root_tol:
                cluster.append((root, mult))
                break
        else:
            clusters.append([(root, mult)])
    merged: list[tuple[complex, int]] = []
    for cluster in clusters:
        span = max(abs(a[0] - b[0]) for a in cluster for b in cluster)
        if span > root_tol:
            raise RootClusterError(
                f"cluster diameter {span:.3e} exceeds tolerance {root_tol:.1e}"
            )
        total_mult = sum(m for _, m in cluster)
        center = sum(r * m for r, m in cluster) / total_mult
        merged.append((center, total_mult))
    for a, _ in merged:
        for b, _ in merged:
            if a is not b and abs(a - b) <= root_tol:
                raise RootClusterError(
                    f"distinct roots {a} and {b} within tolerance {root_tol:.1e}"
                )
    merged.sort(key=lambda p: (-abs(p[0]), -p[0].real, p[0].imag))
    return merged


def closed_form(
    graph: DirectedGraph,
    root_tol: float = ROOT_TOL,
    cond_limit: float = COND_LIMIT,
) -> ClosedForm:
    """Closed form of the total count over the nonzero eigenvalues.

    Coefficients are solved from exact counts at n = z+1 .. z+u, where z
    is the exact multiplicity of the zero root and u the number of
    unknowns; the form is exact for every n >= z+1.
    """
    poly = char_poly(graph)
    z = poly.trailing_zeros
    roots = _roots_with_multiplicity(poly, root_tol)
    u = sum(m for _, m in roots)
    if u == 0:
        return ClosedForm((), z + 1, z, 1.0)
    ns = list(range(z + 1, z + u + 1))
    counts = [row.total for row in count_series(graph, z + u).rows[z:]]
    columns: list[tuple[complex, int]] = [
        (root, q) for root, mult in roots for q in range(mult)
    ]
    a = np.array(
        [[(n ** q) * (root ** n) for root, q in columns] for n in ns],
        dtype=complex,
    )
    b = np.array([float(c) for c in counts], dtype=complex)
    condition = float(np.linalg.cond(a))
    if condition > cond_limit:
        raise IllConditionedError(condition)
    solution = np.linalg.solve(a, b)
    terms = []
    pos = 0
    for root, mult in roots:
        coefs = tuple(complex(solution[pos + q]) for q in range(mult))
        terms.append(ClosedFormTerm(root, mult, coefs))
        pos += mult
    return ClosedForm(tuple(terms), z + 1, z, condition)


# ---------------------------------------------------------------------------
# growth classification


@dataclass(frozen=True)
class GrowthClass:
    kind: str            # EXPONENTIAL, POLYNOMIAL, or MIXED
    rho: float           # dominant surviving root modulus
    poly_degree: int


def classify_growth(
    source: DirectedGraph | ClosedForm,
    coeff_tol: float = COEFF_TOL,
    root_tol: float = ROOT_TOL,
) -> GrowthClass:
    """Growth trichotomy of the count sequence.

    Terms whose coefficient modulus is below coeff_tol (relative to the
    largest coefficient) do not participate: rho is the largest surviving
    root modulus and the polynomial degree is the largest power attached
    to a root of that modulus.
    """
    form = source if isinstance(source, ClosedForm) else closed_form(source, root_tol)
    entries = [
        (term.root, q, c)
        for term in form.terms
        for q, c in enumerate(term.coefficients)
    ]
    max_coeff = max((abs(c) for _, _, c in entries), default=0.0)
    if max_coeff == 0.0:
        return GrowthClass(POLYNOMIAL, 0.0, 0)
    surviving = [(root, q) for root, q, c in entries if abs(c) > coeff_tol * max_coeff]
    if not surviving:
        return GrowthClass(POLYNOMIAL, 0.0, 0)
    rho = max(abs(root) for root, _ in surviving)
    degree = max(q for root, q in surviving if abs(abs(root) - rho) <= root_tol)
    if abs(rho - 1.0) <= root_tol:
        rho = 1.0  # snap the unit root so polynomial growth reports rho <= 1
    if rho > 1.0:
        kind = EXPONENTIAL if degree == 0 else MIXED
        return GrowthClass(kind, rho, degree if kind == MIXED else 0)
    return GrowthClass(POLYNOMIAL, rho, degree)


# ---------------------------------------------------------------------------
# exhaustive small-graph scan


@dataclass(frozen=True)
class ScanRow:
    bitmask: int         # adjacency bits, row-major: bit i*k+j is edge i->j
    k: int
    strongly_connected: bool
    kind: str
    rho: float
    poly_degree: int


@dataclass(frozen=True)
class ScanReport:
    k_max: int
    candidates_by_k: tuple[tuple[int, int], ...]  # (k, 2**(k*k))
    rows: tuple[ScanRow, ...]

    @property
    def mixed_rows(self) -> tuple[ScanRow, ...]:
        return tuple(r for r in self.rows if r.kind == MIXED)

    @property
    def mixed_strongly_connected(self) -> tuple[ScanRow, ...]:
        return tuple(r for r in self.mixed_rows if r.strongly_connected)

    @property
    def mixed_weakly_only(self) -> tuple[ScanRow, ...]:
        return tuple(r for r in self.mixed_rows if not r.strongly_connected)

    def to_csv(self) -> str:
        lines = ["bitmask,k,strongly_connected,kind,rho,poly_degree"]
        for r in self.rows:
            lines.append(
                f"{r.bitmask},{r.k},{str(r.strongly_connected).lower()},"
                f"{r.kind},{r.rho!r},{r.poly_degree}"
            )
        return "\n".join(lines) + "\n"


_SCAN_SYMBOLS = ("A", "B", "C", "D")


def graph_from_bitmask(k: int, bitmask: int) -> DirectedGraph:
    """Adjacency from row-major bits: bit i*k+j set means edge i -> j."""
    adj = tuple(
        tuple((bitmask >> (i * k + j)) & 1 for j in range(k)) for i in range(k)
    )
    return DirectedGraph(Alphabet(_SCAN_SYMBOLS[:k]), adj)


def iter_connected_bitmasks(k: int):
    """Row-major bitmasks of all weakly connected digraphs on k labeled vertices."""
    for mask in range(1 << (k * k)):
        parent = list(range(k))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        touched = [False] * k
        for i in range(k):
            for j in range(k):
                if (mask >> (i * k + j)) & 1:
                    touched[i] = touched[j] = True
                    ri, rj = find(i), find(j)
                    if ri != rj:
                        parent[ri] = rj
        if all(touched) and len({find(i) for i in range(k)}) == 1:
            yield mask


def conjecture_scan(k_max: int) -> ScanReport:
    """Classify every weakly connected digraph on up to k_max labeled vertices.

    The report lists each graph with its growth class, in canonical
    (k, bitmask) order, so that mixed polynomial-exponential findings can
    be inspected separately for strongly and only-weakly connected graphs.
    """
    if not 1 <= k_max <= 4:
        raise ValueError("k_max must be between 1 and 4")
    rows: list[ScanRow] = []
    for k in range(1, k_max + 1):
        for mask in iter_connected_bitmasks(k):
            graph = graph_from_bitmask(k, mask)
            growth = classify_growth(graph)
            strongly = validate(graph).strongly_connected
            rows.append(
                ScanRow(mask, k, strongly, growth.kind, growth.rho, growth.poly_degree)
            )
    candidates = tuple((k, 1 << (k * k)) for k in range(1, k_max + 1))
    return ScanReport(k_max, candidates, tuple(rows))
