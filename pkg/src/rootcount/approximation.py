"""Streams of exact rational approximants ``n_j / n_{j+1}``."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence, Union

from .counts import Matrix, incidence, step
from .spectral import integer_root_floor
from .words import CountVector, DomainError, make_root_rules


class NonFinite(enum.Enum):
    INFINITY = "infinity"
    UNDEFINED = "NaN"

    def __str__(self) -> str:
        return self.value


INFINITY = NonFinite.INFINITY
UNDEFINED = NonFinite.UNDEFINED

Ratio = Union[Fraction, NonFinite]


def ratio(counts: Sequence[int], j: int) -> Ratio:
    if not 0 <= j < len(counts) - 1:
        raise DomainError(f"ratio index {j} out of range for {len(counts)} counts")
    num, den = counts[j], counts[j + 1]
    if den == 0:
        return INFINITY if num > 0 else UNDEFINED
    return Fraction(num, den)


def decimal(r: Fraction, places: int) -> str:
    """Render ``r`` with exactly ``places`` fractional digits.

    Rounds to nearest, ties away from zero.

    >>> decimal(Fraction(17, 12), 16)
    '1.4166666666666667'
    """
    if places < 0:
        raise DomainError("places must be >= 0")
    r = Fraction(r)
    sign = "-" if r < 0 else ""
    q, rem = divmod(abs(r.numerator) * 10**places, r.denominator)
    if 2 * rem >= r.denominator:
        q += 1
    if q == 0:
        sign = ""
    whole, frac = divmod(q, 10**places)
    if places == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{places}d}"


def render_ratio(r: Ratio, places: int) -> str:
    if isinstance(r, NonFinite):
        return str(r)
    return decimal(r, places)


def scientific(x: Fraction, sig: int = 3) -> str:
    """Exact scientific notation, e.g. ``1.23e-05``, rounded like :func:`decimal`."""
    x = Fraction(x)
    if x == 0:
        return "0"
    sign = "-" if x < 0 else ""
    x = abs(x)
    e = len(str(x.numerator)) - len(str(x.denominator))
    if x < Fraction(10) ** e:
        e -= 1
    mant = decimal(x / Fraction(10) ** e, sig - 1)
    if mant.startswith("10"):
        e += 1
        mant = decimal(x / Fraction(10) ** e, sig - 1)
    return f"{sign}{mant}e{e:+03d}"


def abs_error(r: Fraction, m: int, N: int) -> Fraction:
    """``|r**m - N|``, which tends to zero exactly when ``r`` tends to ``N**(1/m)``."""
    return abs(Fraction(r) ** m - N)


def reference_digits(m: int, N: int, digits: int) -> str:
    """``N**(1/m)`` truncated (not rounded) to ``digits`` places."""
    if m < 1 or N < 1 or digits < 0:
        raise DomainError(f"need m >= 1, N >= 1, digits >= 0; got {m}, {N}, {digits}")
    x = integer_root_floor(N, m, digits)
    whole, frac = divmod(x, 10**digits)
    return f"{whole}.{frac:0{digits}d}" if digits else str(whole)


@dataclass(frozen=True)
class ApproximantRow:
    iter: int
    counts: CountVector
    ratios: tuple[Ratio, ...]
    decimals: tuple[str, ...]
    abs_errors: tuple[Optional[Fraction], ...]
    stop_reason: Optional[str] = None


def _row(i, counts, places, m, N, stop_reason=None) -> ApproximantRow:
    ratios = tuple(ratio(counts, j) for j in range(len(counts) - 1))
    if N is None:
        errors = (None,) * len(ratios)
    else:
        errors = tuple(None if isinstance(r, NonFinite) else abs_error(r, m, N) for r in ratios)
    return ApproximantRow(
        i, tuple(counts), ratios, tuple(render_ratio(r, places) for r in ratios), errors, stop_reason
    )


def stream_rows(
    mat: Matrix,
    seed_counts: Sequence[int],
    max_iters: int = 200,
    stop_places: Optional[int] = None,
    places: int = 14,
    root: Optional[tuple[int, int]] = None,
) -> Iterator[ApproximantRow]:
    """Rows ``0 .. max_iters`` of ``mat**i @ seed_counts`` with their ratios.

    ``root=(m, N)`` enables the ``|r**m - N|`` error column. With
    ``stop_places`` set, the stream ends early at the first row whose leading
    ratio moved by less than ``10**-stop_places`` since the previous row. The
    last row carries ``stop_reason`` ``"converged"`` or ``"max_iters"``.
    """
    seed_counts = tuple(seed_counts)
    if len(seed_counts) != len(mat):
        raise DomainError("seed counts do not match the alphabet size")
    if any(c < 0 for c in seed_counts) or not any(seed_counts):
        raise DomainError("seed counts must be non-negative and not all zero")
    if max_iters < 0:
        raise DomainError("max_iters must be >= 0")
    if stop_places is not None and stop_places < 0:
        raise DomainError("stop_places must be >= 0")
    m, N = root if root else (len(mat), None)
    tol = Fraction(1, 10**stop_places) if stop_places is not None else None
    return _generate(mat, seed_counts, max_iters, tol, places, m, N)


def _generate(mat, seed_counts, max_iters, tol, places, m, N):
    counts = seed_counts
    prev = None
    for i in range(max_iters + 1):
        r0 = ratio(counts, 0) if len(counts) > 1 else UNDEFINED
        reason = None
        if (
            tol is not None
            and isinstance(r0, Fraction)
            and isinstance(prev, Fraction)
            and abs(r0 - prev) < tol
        ):
            reason = "converged"
        elif i == max_iters:
            reason = "max_iters"
        yield _row(i, counts, places, m, N, reason)
        if reason:
            return
        prev = r0
        counts = step(mat, counts)


def approximants(
    m: int,
    N: int,
    seed_counts: Optional[Sequence[int]] = None,
    max_iters: int = 200,
    stop_places: Optional[int] = None,
    places: int = 14,
) -> Iterator[ApproximantRow]:
    """Approximant rows for the root family of ``(m, N)``.

    >>> rows = list(approximants(2, 2, max_iters=4))
    >>> rows[-1].counts, rows[-1].decimals
    ((17, 12), ('1.41666666666667',))
    """
    if m < 2:
        raise DomainError(f"approximants need m >= 2, got {m}")
    mat = incidence(make_root_rules(m, N))
    if seed_counts is None:
        seed_counts = (1,) + (0,) * (m - 1)
    return stream_rows(mat, seed_counts, max_iters, stop_places, places, root=(m, N))
