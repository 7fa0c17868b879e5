"""Quotient matrices of symmetric matrices under ordered vertex partitions."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import InvalidPartitionError, UnsupportedOrderError

FLOAT_TOL = 1e-9
BISECTION_TOL = 1e-12


class NonEquitableWarning(UserWarning):
    """The quotient is not equitable, so its eigenvalues need not be eigenvalues of the matrix."""


@dataclass(frozen=True)
class Partition:
    blocks: tuple[tuple[int, ...], ...]

    def __init__(self, blocks: Sequence[Sequence[int]]):
        object.__setattr__(self, "blocks", tuple(tuple(int(v) for v in b) for b in blocks))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"0|1,2,3"``: blocks separated by ``|``, vertices by ``,``."""
        blocks = []
        for chunk in text.strip().split("|"):
            chunk = chunk.strip()
            if not chunk:
                raise InvalidPartitionError(f"empty block in partition {text!r}")
            try:
                blocks.append([int(tok) for tok in chunk.split(",")])
            except ValueError:
                raise InvalidPartitionError(f"non-integer vertex in block {chunk!r}") from None
        return cls(blocks)

    def validate(self, n: int) -> None:
        seen: set[int] = set()
        for b in self.blocks:
            if not b:
                raise InvalidPartitionError("partition has an empty block")
            for v in b:
                if not 0 <= v < n:
                    raise InvalidPartitionError(f"vertex {v} outside 0..{n - 1}")
                if v in seen:
                    raise InvalidPartitionError(f"vertex {v} appears in two blocks")
                seen.add(v)
        if len(seen) != n:
            missing = sorted(set(range(n)) - seen)
            raise InvalidPartitionError(f"partition misses vertices {missing}")

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def __str__(self):
        return "|".join(",".join(str(v) for v in b) for b in self.blocks)


@dataclass(frozen=True)
class QuotientMatrix:
    entries: tuple[tuple[Fraction, ...], ...]
    equitable: bool

    @classmethod
    def from_rows(cls, rows, equitable: bool = True) -> "QuotientMatrix":
        return cls(tuple(tuple(Fraction(x) for x in row) for row in rows), equitable)

    @property
    def k(self) -> int:
        return len(self.entries)

    @property
    def array(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.entries])

    def row_sums(self) -> list[Fraction]:
        return [sum(row, Fraction(0)) for row in self.entries]

    def __eq__(self, other):
        if not isinstance(other, QuotientMatrix):
            return NotImplemented
        return self.entries == other.entries


def _is_integral(a: np.ndarray) -> bool:
    return np.issubdtype(a.dtype, np.integer) or bool(np.all(a == np.round(a)))


def quotient_matrix(m, p: Partition) -> QuotientMatrix:
    """Block-average matrix of ``m`` under ``p``, with its equitability flag.

    Integer matrices are handled in exact arithmetic; anything else is
    compared with tolerance ``FLOAT_TOL``.
    """
    a = np.asarray(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvalidPartitionError(f"matrix must be square, got shape {a.shape}")
    p.validate(a.shape[0])
    exact = _is_integral(a)
    if exact:
        a = np.round(a).astype(np.int64)
    # row_to_block[u, j] = sum of m[u, v] over v in block j
    row_to_block = np.stack([a[:, list(b)].sum(axis=1) for b in p.blocks], axis=1)
    entries = []
    equitable = True
    for b in p.blocks:
        sums = row_to_block[list(b)]
        if exact:
            row = tuple(Fraction(int(col.sum()), len(b)) for col in sums.T)
            equitable &= bool(np.all(sums == sums[0]))
        else:
            row = tuple(Fraction(float(col.mean())) for col in sums.T)
            equitable &= bool(np.all(np.abs(sums - sums[0]) <= FLOAT_TOL))
        entries.append(row)
    return QuotientMatrix(tuple(entries), equitable)


def is_equitable(m, p: Partition) -> bool:
    return quotient_matrix(m, p).equitable


def char_poly_coeffs(b: QuotientMatrix) -> list[Fraction]:
    """Monic characteristic polynomial, highest degree first (``k <= 3``)."""
    e = b.entries
    k = b.k
    if k == 1:
        return [Fraction(1), -e[0][0]]
    if k == 2:
        return [Fraction(1), -(e[0][0] + e[1][1]), e[0][0] * e[1][1] - e[0][1] * e[1][0]]
    if k == 3:
        trace = e[0][0] + e[1][1] + e[2][2]
        minors = (
            e[0][0] * e[1][1] - e[0][1] * e[1][0]
            + e[0][0] * e[2][2] - e[0][2] * e[2][0]
            + e[1][1] * e[2][2] - e[1][2] * e[2][1]
        )
        det = (
            e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1])
            - e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0])
            + e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0])
        )
        return [Fraction(1), -trace, minors, -det]
    raise UnsupportedOrderError(f"characteristic polynomial only for k <= 3, got k={k}")


def poly_eval(coeffs: Sequence, x) -> Fraction | float:
    acc = 0 * x
    for c in coeffs:
        acc = acc * x + c
    return acc


def _largest_critical_point(coeffs: list[Fraction]) -> float | None:
    deg = len(coeffs) - 1
    if deg < 2:
        return None
    if deg == 2:
        return -float(coeffs[1]) / 2.0
    # cubic: p'(x) = 3x^2 + 2 c1 x + c2
    c1, c2 = float(coeffs[1]), float(coeffs[2])
    disc = 4 * c1 * c1 - 12 * c2
    if disc < 0:
        return None
    return (-2 * c1 + math.sqrt(disc)) / 6.0


def _general_largest(b: QuotientMatrix) -> float:
    vals = np.linalg.eigvals(b.array)
    return float(np.max(vals.real))


def quotient_largest_eigenvalue(b: QuotientMatrix) -> float:
    """Largest real eigenvalue of a quotient matrix.

    For ``k <= 3`` this is the largest root of the exact characteristic
    polynomial, found by bisection (exact sign tests) inside the row-sum
    bracket widened by one. Larger quotients go to a general eigensolver.
    Emits :class:`NonEquitableWarning` when ``b`` is not equitable.
    """
    if not b.equitable:
        warnings.warn("quotient matrix is not equitable", NonEquitableWarning, stacklevel=2)
    if b.k > 3:
        return _general_largest(b)
    coeffs = char_poly_coeffs(b)
    sums = [float(s) for s in b.row_sums()]
    lo, hi = min(sums) - 1.0, max(sums) + 1.0
    crit = _largest_critical_point(coeffs)
    if crit is not None and crit > lo:
        lo = crit
    if not (poly_eval(coeffs, Fraction(lo)) <= 0 < poly_eval(coeffs, Fraction(hi))):
        return _general_largest(b)
    while hi - lo > BISECTION_TOL:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if poly_eval(coeffs, Fraction(mid)) > 0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def quotient_eigenvalues(b: QuotientMatrix) -> np.ndarray:
    """All eigenvalues (real parts), descending."""
    return np.sort(np.linalg.eigvals(b.array).real)[::-1]
