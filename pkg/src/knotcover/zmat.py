"""Exact integer matrices: products, powers, determinants, minors and Smith form.

Entries are plain Python ints, so nothing here ever overflows or rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from .groups import AbelianGroup


class DimensionError(ValueError):
    """Raised when matrix shapes are incompatible with an operation."""


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise DimensionError(f"matrix must be at least 1x1, got {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> IntMatrix:
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise DimensionError("empty matrix")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), width, tuple(int(x) for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls.diag([1] * n)

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> IntMatrix:
        cols = rows if cols is None else cols
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def diag(cls, values: Sequence[int]) -> IntMatrix:
        n = len(values)
        return cls.from_rows([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def transpose(self) -> IntMatrix:
        return IntMatrix.from_rows([list(col) for col in zip(*self.to_rows())])

    def _same_shape(self, other: IntMatrix) -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __add__(self, other: IntMatrix) -> IntMatrix:
        self._same_shape(other)
        return IntMatrix(self.rows, self.cols, tuple(x + y for x, y in zip(self.entries, other.entries)))

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        self._same_shape(other)
        return IntMatrix(self.rows, self.cols, tuple(x - y for x, y in zip(self.entries, other.entries)))

    def __neg__(self) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(-x for x in self.entries))

    def scale(self, k: int) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(k * x for x in self.entries))

    def __rmul__(self, k: int) -> IntMatrix:
        if isinstance(k, bool) or not isinstance(k, int):
            return NotImplemented
        return self.scale(k)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        return mat_mul(self, other)

    def __str__(self) -> str:
        rows = self.to_rows()
        width = max(len(str(x)) for x in self.entries)
        return "\n".join("[" + " ".join(str(x).rjust(width) for x in r) + "]" for r in rows)


@dataclass(frozen=True)
class SnfResult:
    diagonal: tuple[int, ...]

    def __post_init__(self):
        d = self.diagonal
        if any(x < 0 for x in d):
            raise ValueError(f"negative invariant factor in {d}")
        for x, y in zip(d, d[1:]):
            if not _divides(x, y):
                raise ValueError(f"divisibility chain broken in {d}")

    @property
    def rank(self) -> int:
        return sum(1 for x in self.diagonal if x != 0)


def _divides(x: int, y: int) -> bool:
    if x == 0:
        return y == 0
    return y % x == 0


def _require_square(a: IntMatrix, what: str) -> None:
    if not a.is_square:
        raise DimensionError(f"{what} needs a square matrix, got {a.rows}x{a.cols}")


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    bt = b.transpose().to_rows()
    out = []
    for row in a.to_rows():
        out.extend(sum(x * y for x, y in zip(row, col)) for col in bt)
    return IntMatrix(a.rows, b.cols, tuple(out))


def mat_pow(a: IntMatrix, n: int) -> IntMatrix:
    """Square-and-multiply power; ``a**0`` is the identity."""
    _require_square(a, "mat_pow")
    if n < 0:
        raise ValueError("negative exponent")
    result = IntMatrix.identity(a.rows)
    base = a
    while n:
        if n & 1:
            result = mat_mul(result, base)
        n >>= 1
        if n:
            base = mat_mul(base, base)
    return result


def determinant(a: IntMatrix) -> int:
    """Bareiss fraction-free elimination; every division is exact."""
    _require_square(a, "determinant")
    m = a.to_rows()
    n = a.rows
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def minor(a: IntMatrix, rows: Sequence[int], cols: Sequence[int]) -> int:
    sub = IntMatrix.from_rows([[a[i, j] for j in cols] for i in rows])
    return determinant(sub)


def gcd_of_minors(a: IntMatrix, k: int) -> int:
    """Nonnegative gcd of all k x k minors (0 when every minor vanishes)."""
    if not 1 <= k <= min(a.rows, a.cols):
        raise ValueError(f"minor size {k} out of range for {a.rows}x{a.cols}")
    g = 0
    for rows in combinations(range(a.rows), k):
        for cols in combinations(range(a.cols), k):
            g = gcd(g, minor(a, rows, cols))
            if g == 1:
                return 1
    return g


def adjugate(a: IntMatrix) -> IntMatrix:
    _require_square(a, "adjugate")
    n = a.rows
    if n == 1:
        return IntMatrix.identity(1)
    idx = range(n)
    cof = [
        [(-1) ** (i + j) * minor(a, [r for r in idx if r != i], [c for c in idx if c != j]) for j in idx]
        for i in idx
    ]
    return IntMatrix.from_rows(cof).transpose()


def inverse_unimodular(a: IntMatrix) -> IntMatrix:
    """Exact inverse of a matrix with determinant +1 or -1."""
    det = determinant(a)
    if det not in (1, -1):
        raise ValueError(f"matrix is not unimodular (det = {det})")
    return adjugate(a).scale(det)


def smith_normal_form(a: IntMatrix) -> SnfResult:
    m = a.to_rows()
    nr, nc = a.rows, a.cols
    diagonal = []
    for t in range(min(nr, nc)):
        while True:
            pos = _smallest_nonzero(m, t, nr, nc)
            if pos is None:
                diagonal.extend([0] * (min(nr, nc) - t))
                return SnfResult(_normalized(diagonal))
            i, j = pos
            m[t], m[i] = m[i], m[t]
            if j != t:
                for row in m:
                    row[t], row[j] = row[j], row[t]
            p = m[t][t]
            dirty = False
            for i in range(t + 1, nr):
                q = m[i][t] // p
                if q:
                    ri, rt = m[i], m[t]
                    for j in range(t, nc):
                        ri[j] -= q * rt[j]
                dirty = dirty or m[i][t] != 0
            for j in range(t + 1, nc):
                q = m[t][j] // p
                if q:
                    for i in range(t, nr):
                        m[i][j] -= q * m[i][t]
                dirty = dirty or m[t][j] != 0
            if dirty:
                continue
            # pivot must divide the whole remaining block
            bad = next(
                (i for i in range(t + 1, nr) if any(m[i][j] % p for j in range(t + 1, nc))),
                None,
            )
            if bad is None:
                diagonal.append(abs(p))
                break
            rb, rt = m[bad], m[t]
            for j in range(t, nc):
                rt[j] += rb[j]
    return SnfResult(_normalized(diagonal))


def _smallest_nonzero(m, t, nr, nc):
    best = None
    best_abs = 0
    for i in range(t, nr):
        row = m[i]
        for j in range(t, nc):
            v = abs(row[j])
            if v and (best is None or v < best_abs):
                best, best_abs = (i, j), v
                if v == 1:
                    return best
    return best


def _normalized(diagonal: Iterable[int]) -> tuple[int, ...]:
    d = [abs(x) for x in diagonal]
    # elimination already yields the chain; guard against any residual ordering slip
    nonzero = [x for x in d if x]
    zeros = len(d) - len(nonzero)
    for i in range(len(nonzero)):
        for j in range(i + 1, len(nonzero)):
            g = gcd(nonzero[i], nonzero[j])
            nonzero[i], nonzero[j] = g, nonzero[i] * nonzero[j] // g
    return tuple(nonzero) + (0,) * zeros


def cokernel(a: IntMatrix) -> AbelianGroup:
    """Abelian group Z^m / im(a) for a square matrix ``a``."""
    _require_square(a, "cokernel")
    diag = smith_normal_form(a).diagonal
    return AbelianGroup(
        free_rank=sum(1 for d in diag if d == 0),
        torsion=tuple(d for d in diag if d > 1),
    )


def gcd_all(values: Iterable[int]) -> int:
    return reduce(gcd, values, 0)
