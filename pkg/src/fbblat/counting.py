"""Exact counts of labeled graphs on unisolated vertices, three ways.

``count_d`` fills the edge-count recurrence

    q * d(n, q) = (N - q + 1) d(n, q-1) + n (n-1) d(n-1, q-1) + N d(n-2, q-1)

with N = C(n,2), d(0,0) = 1 and d(n,0) = d(0,q) = 0 otherwise (values with a
negative first argument are 0, which makes the n-2 term total).  The division
by q must be exact; a remainder would mean the recurrence is wrong as coded,
so it raises instead of truncating.

``count_f`` fills the block recurrence

    f(m+1, l) = sum_{k=1..m} sum_{j=0..k} C(m,j) C(m-j, k-j) f(m-j, l-k)

with f(0,0) = 1 and f(1,l) = 0; negative l contributes 0.

``count_d_oracle`` is the independent inclusion-exclusion sum over forced
isolated-vertex sets and exists purely to cross-check the other two.

Everything is an exact Python int; tables are filled iteratively row by row
(no recursion) and grow on demand.  Completed rows are never mutated.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb

_d_rows = [[1], [0]]
_f_rows = [[1], [0]]


def _fill_d(n):
    while len(_d_rows) <= n:
        m = len(_d_rows)
        big_n = comb(m, 2)
        prev1 = _d_rows[m - 1]
        prev2 = _d_rows[m - 2]
        row = [0] * (big_n + 1)
        for q in range(1, big_n + 1):
            acc = (big_n - q + 1) * row[q - 1]
            if q - 1 < len(prev1):
                acc += m * (m - 1) * prev1[q - 1]
            if q - 1 < len(prev2):
                acc += big_n * prev2[q - 1]
            if acc % q:
                raise ArithmeticError(
                    f"internal error: d({m},{q}) recurrence value {acc} is "
                    f"not divisible by {q}")
            row[q] = acc // q
        _d_rows.append(row)


def count_d(n, q):
    """Number of labeled graphs on n unisolated vertices with q edges."""
    if n < 0 or q < 0:
        raise ValueError("need n, q >= 0")
    _fill_d(n)
    row = _d_rows[n]
    return row[q] if q < len(row) else 0


def count_d_oracle(n, q):
    """Same count by inclusion-exclusion over isolated-vertex sets."""
    if n < 0 or q < 0:
        raise ValueError("need n, q >= 0")
    return sum((-1) ** k * comb(n, k) * comb(comb(n - k, 2), q)
               for k in range(n + 1))


def _fill_f(n):
    while len(_f_rows) <= n:
        m = len(_f_rows) - 1  # recurrence steps from row m to row m+1
        big_n = comb(m + 1, 2)
        row = [0] * (big_n + 1)
        for l in range(big_n + 1):
            acc = 0
            for k in range(1, min(m, l) + 1):
                for j in range(k + 1):
                    src = _f_rows[m - j]
                    if l - k < len(src):
                        acc += comb(m, j) * comb(m - j, k - j) * src[l - k]
            row[l] = acc
        _f_rows.append(row)


def count_f(n, l):
    """Number of fundamental basic blocks on n comparable reducibles with
    nullity l."""
    if n < 0 or l < 0:
        raise ValueError("need n, l >= 0")
    _fill_f(n)
    row = _f_rows[n]
    return row[l] if l < len(row) else 0


# -- triangle emission ---------------------------------------------------------

_COUNTERS = {"d": count_d, "f": count_f}
TRIANGLE_MAX_N = 64


def _counter(kind):
    try:
        return _COUNTERS[kind]
    except KeyError:
        raise ValueError(f"kind must be one of {sorted(_COUNTERS)}, got {kind!r}") from None


def _row_start(n):
    return (n + 1) // 2  # == ceil(n/2)


@dataclass(frozen=True)
class CountTable:
    """In-band cells of one triangle, (n, q) -> exact count."""

    kind: str
    max_n: int
    cells: dict

    @classmethod
    def build(cls, kind, max_n):
        fn = _counter(kind)
        if not 0 <= max_n <= TRIANGLE_MAX_N:
            raise ValueError(f"max_n must be within 0..{TRIANGLE_MAX_N}")
        cells = {}
        for n in range(max_n + 1):
            for q in range(_row_start(n), comb(n, 2) + 1):
                cells[(n, q)] = fn(n, q)
        return cls(kind, max_n, cells)

    def rows(self):
        return [[self.cells[(n, q)]
                 for q in range(_row_start(n), comb(n, 2) + 1)]
                for n in range(self.max_n + 1)]


def emit_triangle(kind, max_n, fmt="csv"):
    """Triangle rows n = 0..max_n, columns q = ceil(n/2)..C(n,2).

    ``csv`` emits one `n,q,value` line per cell under a header; ``json``
    emits an array of row arrays (values only).
    """
    table = CountTable.build(kind, max_n)
    if fmt == "csv":
        lines = ["n,q,value"]
        for n in range(max_n + 1):
            start = _row_start(n)
            lines += [f"{n},{start + off},{v}"
                      for off, v in enumerate(table.rows()[n])]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        return json.dumps(table.rows()) + "\n"
    raise ValueError(f"unsupported format {fmt!r}")


# -- b-file comparison ----------------------------------------------------------


@dataclass(frozen=True)
class BFileMismatch:
    n: int
    q: int
    triangle_value: int
    file_value: int
    index: int
    line_no: int


@dataclass(frozen=True)
class BFileDiff:
    path: str
    kind: str
    compared: int
    mismatches: tuple
    warnings: tuple

    @property
    def ok(self):
        return not self.mismatches


def _triangle_cells(kind, max_n):
    fn = _counter(kind)
    for n in range(max_n + 1):
        for q in range(_row_start(n), comb(n, 2) + 1):
            yield n, q, fn(n, q)


def diff_bfile(path, kind, max_n=TRIANGLE_MAX_N):
    """Compare a b-file (``index value`` per line, comments with '#') against
    the triangle linearized by rows; empty mismatch list means agreement."""
    _counter(kind)
    entries = []
    with open(path, encoding="ascii") as handle:
        for line_no, line in enumerate(handle, start=1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            parts = text.split()
            if len(parts) != 2:
                raise ValueError(
                    f"{path}:{line_no}: expected 'index value', got {text!r}")
            try:
                index, value = int(parts[0]), int(parts[1])
            except ValueError:
                raise ValueError(
                    f"{path}:{line_no}: expected 'index value', got {text!r}") from None
            entries.append((index, value, line_no))
    warnings = []
    if not entries:
        warnings.append("b-file contains no entries")
    mismatches = []
    compared = 0
    cells = _triangle_cells(kind, max_n)
    for index, value, line_no in entries:
        try:
            n, q, ours = next(cells)
        except StopIteration:
            warnings.append(
                f"file extends beyond the triangle through n = {max_n}; "
                f"stopped before line {line_no}")
            break
        compared += 1
        if value != ours:
            mismatches.append(BFileMismatch(n, q, ours, value, index, line_no))
    return BFileDiff(str(path), kind, compared, tuple(mismatches), tuple(warnings))
