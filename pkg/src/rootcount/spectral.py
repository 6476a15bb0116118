"""Dominant eigenpair of incidence matrices.

Exact quantities come from :func:`integer_root_floor`, which uses only
integer arithmetic. :func:`power_iteration` is the one floating-point routine
and serves as an independent cross-check.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .counts import Matrix, identity
from .words import DomainError


@dataclass(frozen=True)
class FixedPointDecimal:
    """The exact value ``mantissa / 10**scale``."""

    mantissa: int
    scale: int

    def __post_init__(self):
        if self.scale < 0:
            raise DomainError("scale must be >= 0")

    def as_fraction(self) -> Fraction:
        return Fraction(self.mantissa, 10**self.scale)

    def __str__(self) -> str:
        sign = "-" if self.mantissa < 0 else ""
        whole, frac = divmod(abs(self.mantissa), 10**self.scale)
        if self.scale == 0:
            return f"{sign}{whole}"
        return f"{sign}{whole}.{frac:0{self.scale}d}"


def integer_root_floor(N: int, m: int, digits: int = 0) -> int:
    """``floor(N ** (1/m) * 10**digits)`` by bisection on ``x**m <= N * 10**(m*digits)``.

    >>> integer_root_floor(2, 2, 14)
    141421356237309
    """
    if N < 0 or m < 1 or digits < 0:
        raise DomainError(f"need N >= 0, m >= 1, digits >= 0; got {N}, {m}, {digits}")
    target = N * 10 ** (m * digits)
    lo, hi = 0, 1 << (target.bit_length() // m + 1)
    # invariant: lo**m <= target < hi**m
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid**m <= target:
            lo = mid
        else:
            hi = mid
    return lo


def _check_root_args(m: int, N: int, digits: int) -> None:
    if m < 1 or N < 1 or digits < 0:
        raise DomainError(f"need m >= 1, N >= 1, digits >= 0; got {m}, {N}, {digits}")


def dominant_eigenvalue_root_family(m: int, N: int, digits: int) -> FixedPointDecimal:
    """``1 + N**(1/m)`` truncated to ``digits`` decimal places."""
    _check_root_args(m, N, digits)
    return FixedPointDecimal(10**digits + integer_root_floor(N, m, digits), digits)


def perron_vector_root_family(m: int, N: int, digits: int) -> tuple[FixedPointDecimal, ...]:
    """``(lam**(m-1), ..., lam, 1)`` with ``lam = N**(1/m)``, each truncated.

    ``lam**k`` is the m-th root of ``N**k``, so every component is an exact
    floor rather than a power of an already-truncated value.
    """
    _check_root_args(m, N, digits)
    return tuple(
        FixedPointDecimal(integer_root_floor(N**k, m, digits), digits)
        for k in range(m - 1, -1, -1)
    )


def _bool_mul(a, b):
    cols = list(zip(*b))
    return tuple(tuple(any(x and y for x, y in zip(row, col)) for col in cols) for row in a)


def is_primitive(mat: Matrix) -> bool:
    """True iff some power ``mat**k``, ``k <= (m-1)**2 + 1``, is entrywise positive."""
    m = len(mat)
    pattern = tuple(tuple(x > 0 for x in row) for row in mat)
    power = pattern
    for _ in range((m - 1) ** 2 + 1):
        if all(all(row) for row in power):
            return True
        power = _bool_mul(power, pattern)
    return False


@dataclass(frozen=True)
class PowerIterationResult:
    eigenvalue: float
    vector: tuple[float, ...]
    residual: float
    iterations: int
    converged: bool


def power_iteration(mat: Matrix, tol: float = 1e-12, max_iters: int = 10_000) -> PowerIterationResult:
    """Estimate the dominant eigenpair of a primitive non-negative matrix.

    The vector is scaled so its last component is 1 and the eigenvalue
    estimate is the last component of ``mat @ v``. Iteration stops once two
    successive estimates, and the vectors, differ by less than ``tol``. If
    ``max_iters`` runs out first, the result has ``converged=False`` and holds
    the last estimate.
    """
    rows = [[float(x) for x in row] for row in mat]
    m = len(rows)
    v = [1.0] * m
    mu_prev = math.nan
    mu = math.nan
    converged = False
    it = 0
    for it in range(1, max_iters + 1):
        w = [sum(a * x for a, x in zip(row, v)) for row in rows]
        mu = w[-1]
        if mu == 0.0:
            break
        v_next = [x / mu for x in w]
        shift = max(abs(a - b) for a, b in zip(v_next, v))
        v = v_next
        # the eigenvalue estimate alone can repeat by coincidence early on
        if abs(mu - mu_prev) < tol and shift < tol:
            converged = True
            break
        mu_prev = mu
    w = [sum(a * x for a, x in zip(row, v)) for row in rows]
    residual = max(abs(a - mu * b) for a, b in zip(w, v))
    return PowerIterationResult(mu, tuple(v), residual, it, converged)


def determinant(mat: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant by Gaussian elimination over the rationals."""
    a = [[Fraction(x) for x in row] for row in mat]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            if f:
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    return det


def characteristic_value(mat: Matrix, x: Fraction) -> Fraction:
    """``det(mat - x*I)`` evaluated exactly."""
    eye = identity(len(mat))
    return determinant([[a - x * e for a, e in zip(row, erow)] for row, erow in zip(mat, eye)])


def perron_residual(mat: Matrix, eigenvalue: Fraction, vector: Sequence[Fraction]) -> Fraction:
    """``max_j |(mat @ v)_j - eigenvalue * v_j|`` in exact arithmetic."""
    vector = [Fraction(x) for x in vector]
    return max(
        abs(sum(a * x for a, x in zip(row, vector)) - eigenvalue * vj)
        for row, vj in zip(mat, vector)
    )
