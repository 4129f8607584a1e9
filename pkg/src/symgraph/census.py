"""Exact counting and explicit enumeration of admissible words.

Counting goes through powers of the adjacency matrix: the number of
admissible length-n words from symbol i to symbol j is entry (i, j) of
M**(n-1), in unbounded integer arithmetic.  Enumeration realizes the same
census independently, by iterating the 1-letter extension map on the set
of all words, starting from the alphabet itself.  The two routes are
checked against each other in the test suite.

Enumerated words of length n over k symbols are carried as base-k integer
codes (most significant digit = first letter), grouped by their last
letter so extension is a single multiply-add per word.  Code order equals
lexicographic word order.  When every code fits in int64 the levels are
numpy arrays; otherwise plain Python integer sets, with identical
semantics.
"""

from __future__ import annotations

import os
from bisect import bisect_left
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

import numpy as np

from .graphs import DirectedGraph, Alphabet, GraphSpecError
from . import intmat
from .intmat import IntMatrix, identity, mat_mul, mat_pow, mat_total

DEFAULT_ENUM_CAP = 10_000_000
ENUM_CAP_ENV = "SYMGRAPH_ENUM_CAP"

Word = tuple[int, ...]
SuccTable = tuple[tuple[int, ...], ...]


class EnumerationCapError(RuntimeError):
    """Enumeration would materialize more words than the cap allows."""

    def __init__(self, length: int, count: int, cap: int):
        self.length = length
        self.count = count
        self.cap = cap
        super().__init__(
            f"enumeration of {count} words at length {length} exceeds cap {cap}"
        )


def enumeration_cap(override: int | None = None) -> int:
    """Effective cap: explicit override, else SYMGRAPH_ENUM_CAP, else default."""
    if override is not None:
        return int(override)
    env = os.environ.get(ENUM_CAP_ENV)
    return int(env) if env else DEFAULT_ENUM_CAP


# ---------------------------------------------------------------------------
# word coercion


def as_indices(alphabet: Alphabet, word: str | Sequence[str] | Sequence[int]) -> Word:
    """Coerce a word given as index tuple, symbol sequence, or plain string.

    Strings are only accepted when every alphabet symbol is a single
    character (then each character is one letter).
    """
    if isinstance(word, str):
        if any(len(s) != 1 for s in alphabet.symbols):
            raise GraphSpecError(
                "string words need a single-character alphabet; pass a symbol sequence"
            )
        return tuple(alphabet.index(ch) for ch in word)
    letters: list[int] = []
    for item in word:
        if isinstance(item, str):
            letters.append(alphabet.index(item))
        else:
            idx = int(item)
            if not 0 <= idx < alphabet.k:
                raise GraphSpecError(f"letter index {idx} out of range for k={alphabet.k}")
            letters.append(idx)
    return tuple(letters)


def format_word(alphabet: Alphabet, letters: Sequence[int]) -> str:
    sep = "" if all(len(s) == 1 for s in alphabet.symbols) else "."
    return sep.join(alphabet.symbols[i] for i in letters)


def is_admissible(graph: DirectedGraph, word: str | Sequence[str] | Sequence[int]) -> bool:
    """True iff every adjacent letter pair is an edge; length-1 words pass."""
    letters = as_indices(graph.alphabet, word)
    if not letters:
        return False
    return all(graph.has_edge(a, b) for a, b in zip(letters, letters[1:]))


# ---------------------------------------------------------------------------
# exact counts


@dataclass(frozen=True)
class CountMatrix:
    """Entry (i, j) is the number of admissible length-n words i -> j."""

    alphabet: Alphabet
    n: int
    entries: IntMatrix

    @property
    def total(self) -> int:
        return mat_total(self.entries)

    @property
    def row_sums(self) -> tuple[int, ...]:
        return intmat.row_sums(self.entries)

    @property
    def col_sums(self) -> tuple[int, ...]:
        return intmat.col_sums(self.entries)

    def entry(self, frm: int | str, to: int | str) -> int:
        i = frm if isinstance(frm, int) else self.alphabet.index(frm)
        j = to if isinstance(to, int) else self.alphabet.index(to)
        return self.entries[i][j]


@dataclass(frozen=True)
class CountRow:
    n: int
    total: int
    row_sums: tuple[int, ...]
    col_sums: tuple[int, ...]


@dataclass(frozen=True)
class CountSeries:
    alphabet: Alphabet
    rows: tuple[CountRow, ...]

    def totals(self) -> list[tuple[int, int]]:
        return [(r.n, r.total) for r in self.rows]

    def to_csv(self) -> str:
        syms = self.alphabet.symbols
        header = (
            ["n", "omega_total"]
            + [f"omega_row_{s}" for s in syms]
            + [f"omega_col_{s}" for s in syms]
        )
        lines = [",".join(header)]
        for r in self.rows:
            cells = [str(r.n), str(r.total)]
            cells += [str(v) for v in r.row_sums]
            cells += [str(v) for v in r.col_sums]
            lines.append(",".join(cells))
        return "\n".join(lines) + "\n"


def count_matrix(graph: DirectedGraph, n: int) -> CountMatrix:
    """Exact census by endpoints: M**(n-1) via repeated squaring."""
    if n < 1:
        raise ValueError("word length must be >= 1")
    return CountMatrix(graph.alphabet, n, mat_pow(graph.adjacency, n - 1))


def total_count(graph: DirectedGraph, n: int) -> int:
    return count_matrix(graph, n).total


def count_series(graph: DirectedGraph, n_max: int) -> CountSeries:
    """Counts for n = 1..n_max via one cumulative product sweep."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    rows = []
    power = identity(graph.k)
    for n in range(1, n_max + 1):
        rows.append(CountRow(n, mat_total(power), intmat.row_sums(power), intmat.col_sums(power)))
        if n < n_max:
            power = mat_mul(power, graph.adjacency)
    return CountSeries(graph.alphabet, tuple(rows))


# ---------------------------------------------------------------------------
# enumeration


class WordSet:
    """Immutable set of equal-length words, stored as base-k codes."""

    def __init__(self, alphabet: Alphabet, length: int, groups: Sequence):
        self.alphabet = alphabet
        self.length = length
        # one sorted, duplicate-free code collection per last letter
        self._groups = tuple(groups)
        self._size = sum(len(g) for g in self._groups)

    def __len__(self) -> int:
        return self._size

    def _decode(self, code: int) -> Word:
        k = self.alphabet.k
        letters = [0] * self.length
        if k > 1:
            for pos in range(self.length - 1, -1, -1):
                code, letters[pos] = divmod(code, k)
        return tuple(letters)

    def codes(self) -> list[int]:
        """All codes in ascending (= lexicographic word) order."""
        merged: list[int] = []
        for g in self._groups:
            merged.extend(int(c) for c in g)
        merged.sort()
        return merged

    def __iter__(self) -> Iterator[Word]:
        for code in self.codes():
            yield self._decode(code)

    def strings(self) -> list[str]:
        return [format_word(self.alphabet, w) for w in self]

    def contains_code(self, code: int) -> bool:
        k = self.alphabet.k
        group = self._groups[code % k] if k > 1 else self._groups[0]
        if isinstance(group, np.ndarray):
            pos = int(np.searchsorted(group, code))
            return pos < group.size and int(group[pos]) == code
        pos = bisect_left(group, code)
        return pos < len(group) and group[pos] == code

    def __contains__(self, word) -> bool:
        try:
            letters = as_indices(self.alphabet, word)
        except GraphSpecError:
            return False
        if len(letters) != self.length:
            return False
        code = 0
        for letter in letters:
            code = code * self.alphabet.k + letter
        return self.contains_code(code)


def _iter_group_levels(
    k: int,
    succ_at: Callable[[int], SuccTable],
    n_max: int,
    cap: int,
) -> Iterator[list]:
    """Yield per-length code groups for lengths 1..n_max.

    succ_at(j) is the successor table applied when extending words of
    length j-1 to length j.  The cap guards every materialized length.
    """
    use_numpy = k >= 2 and n_max * k.bit_length() < 62
    if use_numpy:
        groups: list = [np.array([v], dtype=np.int64) for v in range(k)]
    else:
        groups = [{v} for v in range(k)]
    if k > cap:
        raise EnumerationCapError(1, k, cap)
    yield groups
    for n in range(2, n_max + 1):
        succ = succ_at(n)
        next_size = sum(len(groups[v]) * len(succ[v]) for v in range(k))
        if next_size > cap:
            raise EnumerationCapError(n, next_size, cap)
        if use_numpy:
            parts: list[list[np.ndarray]] = [[] for _ in range(k)]
            for v in range(k):
                g = groups[v]
                if not g.size:
                    continue
                base = g * k
                for u in succ[v]:
                    parts[u].append(base + u)
            groups = [
                np.unique(np.concatenate(p)) if p else np.empty(0, dtype=np.int64)
                for p in parts
            ]
        else:
            new: list[set[int]] = [set() for _ in range(k)]
            for v in range(k):
                for u in succ[v]:
                    new[u].update(c * k + u for c in groups[v])
            groups = new
        yield groups


def _sorted_groups(groups: list) -> list:
    return [
        g if isinstance(g, np.ndarray) else tuple(sorted(g))
        for g in groups
    ]


def iter_word_sets(
    graph: DirectedGraph, n_max: int, cap: int | None = None
) -> Iterator[WordSet]:
    """Word sets for n = 1..n_max, each level extended from the previous."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    effective_cap = enumeration_cap(cap)
    succ = graph._succ
    for n, groups in enumerate(
        _iter_group_levels(graph.k, lambda j: succ, n_max, effective_cap), start=1
    ):
        yield WordSet(graph.alphabet, n, _sorted_groups(groups))


def enumerate_words(graph: DirectedGraph, n: int, cap: int | None = None) -> WordSet:
    """The set of admissible length-n words, by iterated 1-letter extension."""
    result = None
    for ws in iter_word_sets(graph, n, cap):
        result = ws
    assert result is not None
    return result
