"""Exact integer matrices: banded weight matrices, Smith normal form,
minor gcds, and the per-prime witness condition used by the decision rules."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Sequence

from .errors import BadOrder, BadWeights, InternalInconsistency


@dataclass(frozen=True)
class IntMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.entries or not self.entries[0]:
            raise ValueError("matrix dimensions must be positive")
        width = len(self.entries[0])
        if any(len(row) != width for row in self.entries):
            raise ValueError("ragged rows")
        object.__setattr__(
            self, "entries", tuple(tuple(int(v) for v in row) for row in self.entries)
        )

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


def weight_matrix(a: Sequence[int], j: int) -> IntMatrix:
    """(j+1) x (d+j+1) band matrix: row i carries a_0..a_d in columns i..i+d."""
    a = tuple(int(v) for v in a)
    if len(a) < 2 or a[-1] == 0:
        raise BadWeights("need d+1 >= 2 weights with nonzero top weight")
    if j < 0:
        raise BadWeights("band index must be nonnegative")
    d = len(a) - 1
    cols = d + j + 1
    rows = []
    for i in range(j + 1):
        row = [0] * cols
        row[i:i + d + 1] = a
        rows.append(tuple(row))
    return IntMatrix(tuple(rows))


def weight_matrix_with_corner(a: Sequence[int], j: int, corner: int) -> IntMatrix:
    """weight_matrix with the bottom right-hand entry replaced by -corner."""
    base = weight_matrix(a, j).to_lists()
    d = len(a) - 1
    base[j][j + d] = -int(corner)
    return IntMatrix(tuple(tuple(row) for row in base))


def _det_bareiss(rows: list[list[int]]) -> int:
    """Fraction-free determinant; exact for integer entries."""
    n = len(rows)
    if n == 0:
        return 1
    m = [row[:] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot_row = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot_row is None:
                return 0
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for jj in range(k + 1, n):
                m[i][jj] = (m[i][jj] * m[k][k] - m[i][k] * m[k][jj]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _column_subsets(cols: int, k: int):
    """Contiguous windows first (they decide banded cases quickly), then the
    remaining subsets in lexicographic order."""
    windows = [tuple(range(s, s + k)) for s in range(cols - k + 1)]
    seen = set(windows)
    yield from windows
    for subset in combinations(range(cols), k):
        if subset not in seen:
            yield subset


def minors_gcd(matrix: IntMatrix, k: int) -> int:
    """gcd of the absolute values of all k x k minors (0 if all vanish)."""
    if k < 0 or k > min(matrix.rows, matrix.cols):
        raise BadOrder(f"minor order {k} out of range")
    if k == 0:
        return 1
    g = 0
    rows = matrix.entries
    for row_idx in combinations(range(matrix.rows), k):
        for col_idx in _column_subsets(matrix.cols, k):
            sub = [[rows[i][j] for j in col_idx] for i in row_idx]
            g = gcd(g, abs(_det_bareiss(sub)))
            if g == 1:
                return 1
    return g


def smith_normal_form(matrix: IntMatrix) -> tuple[IntMatrix, tuple[int, ...]]:
    """Diagonalize by elementary row/column operations.

    Returns (D, diag) where D = U*A*V for unimodular U, V, the diagonal is
    nonnegative and each entry divides the next.
    """
    m = matrix.to_lists()
    n_rows, n_cols = matrix.rows, matrix.cols
    n = min(n_rows, n_cols)

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]

    def swap_cols(i, j):
        for row in m:
            row[i], row[j] = row[j], row[i]

    for t in range(n):
        while True:
            pivot = None
            for i in range(t, n_rows):
                for jj in range(t, n_cols):
                    v = m[i][jj]
                    if v and (pivot is None or abs(v) < abs(m[pivot[0]][pivot[1]])):
                        pivot = (i, jj)
            if pivot is None:
                break
            swap_rows(t, pivot[0])
            swap_cols(t, pivot[1])
            # clear row and column t; a nonzero remainder becomes the new
            # (strictly smaller) pivot, so this terminates
            dirty = False
            for i in range(t + 1, n_rows):
                if m[i][t]:
                    q = m[i][t] // m[t][t]
                    for jj in range(t, n_cols):
                        m[i][jj] -= q * m[t][jj]
                    if m[i][t]:
                        swap_rows(i, t)
                        dirty = True
            for jj in range(t + 1, n_cols):
                if m[t][jj]:
                    q = m[t][jj] // m[t][t]
                    for i in range(t, n_rows):
                        m[i][jj] -= q * m[i][t]
                    if m[t][jj]:
                        swap_cols(jj, t)
                        dirty = True
            if dirty:
                continue
            # divisibility fix: fold in a row whose entries the pivot misses
            p = m[t][t]
            bad = next(
                (
                    i
                    for i in range(t + 1, n_rows)
                    if any(m[i][jj] % p for jj in range(t + 1, n_cols))
                ),
                None,
            )
            if bad is None:
                break
            for jj in range(n_cols):
                m[t][jj] += m[bad][jj]
        if t < n_rows and m[t][t] < 0:
            for jj in range(n_cols):
                m[t][jj] = -m[t][jj]
    diag = tuple(m[i][i] for i in range(n))
    for a, b in zip(diag, diag[1:]):
        if a and b % a:
            raise InternalInconsistency("Smith diagonal lost its divisibility chain")
        if a == 0 and b != 0:
            raise InternalInconsistency("zero before nonzero on the Smith diagonal")
    return IntMatrix(tuple(tuple(row) for row in m)), diag


def unit_smith_diagonal(a: Sequence[int], j: int) -> bool:
    """True iff the band matrix of the weights has all-ones Smith diagonal,
    equivalently the gcd of its (j+1) x (j+1) minors is 1.  Both routes are
    computed and compared."""
    matrix = weight_matrix(a, j)
    via_minors = minors_gcd(matrix, j + 1) == 1
    _d, diag = smith_normal_form(matrix)
    via_snf = all(v == 1 for v in diag)
    if via_minors != via_snf:
        raise InternalInconsistency(
            f"minors gcd and Smith diagonal disagree for weights {tuple(a)}, j={j}"
        )
    return via_minors


def prime_factorize(m: int) -> list[tuple[int, int]]:
    """Trial-division factorization of m >= 1 as (prime, exponent) pairs."""
    if m < 1:
        raise ValueError("need a positive integer")
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out


@dataclass(frozen=True)
class PrimeWitnesses:
    """For each prime of m, the least weight index not divisible by it."""

    ok: bool
    witness: dict[int, int]
    missing: tuple[int, ...]


def prime_witnesses(a: Sequence[int], m: int) -> PrimeWitnesses:
    """For every prime p | m find the minimal index r with p not dividing a_r.

    When every prime has a witness, the band matrices of the extended weight
    vector have unit Smith diagonal for every band index.  m = 1 passes
    vacuously.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    a = tuple(int(v) for v in a)
    witness: dict[int, int] = {}
    missing: list[int] = []
    for p, _e in prime_factorize(m):
        r = next((i for i, v in enumerate(a) if v % p), None)
        if r is None:
            missing.append(p)
        else:
            witness[p] = r
    return PrimeWitnesses(ok=not missing, witness=witness, missing=tuple(missing))
