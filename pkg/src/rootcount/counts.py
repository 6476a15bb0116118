"""Incidence matrices and exact iteration of count vectors.

Matrices are tuples of rows of Python ints, so nothing ever overflows.
"""
from __future__ import annotations

from typing import Sequence

from .words import CountVector, DomainError, RuleSet, count

Matrix = tuple[tuple[int, ...], ...]


def incidence(rules: RuleSet) -> Matrix:
    """``entries[j][k]`` = occurrences of symbol ``j`` in the image of ``k``.

    >>> from rootcount.words import make_root_rules
    >>> incidence(make_root_rules(2, 2))
    ((1, 2), (1, 1))
    """
    cols = [count(img, rules.m) for img in rules.images]
    return tuple(tuple(cols[k][j] for k in range(rules.m)) for j in range(rules.m))


def identity(m: int) -> Matrix:
    return tuple(tuple(int(j == k) for k in range(m)) for j in range(m))


def _check_square(mat: Sequence[Sequence[int]]) -> int:
    m = len(mat)
    if any(len(row) != m for row in mat):
        raise DomainError("matrix is not square")
    return m


def step(mat: Matrix, v: Sequence[int]) -> CountVector:
    m = _check_square(mat)
    if len(v) != m:
        raise DomainError(f"vector of length {len(v)} does not fit a {m}x{m} matrix")
    return tuple(sum(a * x for a, x in zip(row, v)) for row in mat)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    m = _check_square(a)
    if _check_square(b) != m:
        raise DomainError("matrix dimensions differ")
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def matrix_power(mat: Matrix, depth: int) -> Matrix:
    if depth < 0:
        raise DomainError(f"depth must be >= 0, got {depth}")
    result = identity(_check_square(mat))
    base = tuple(tuple(row) for row in mat)
    while depth:
        if depth & 1:
            result = mat_mul(result, base)
        depth >>= 1
        if depth:
            base = mat_mul(base, base)
    return result


def power_counts(mat: Matrix, v0: Sequence[int], depth: int) -> CountVector:
    """``mat ** depth @ v0`` using O(log depth) matrix products."""
    if depth < 0:
        raise DomainError(f"depth must be >= 0, got {depth}")
    if len(v0) != _check_square(mat):
        raise DomainError("vector length does not match matrix")
    if depth == 0:
        return tuple(v0)
    return step(matrix_power(mat, depth), v0)
