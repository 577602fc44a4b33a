"""Pade approximants, Hankel determinants, and table structure, all exact.

Conventions used throughout:

  * The approximant [L/M] of a series has numerator degree at most L,
    denominator degree at most M, denominator constant term 1, and matches
    the series through index L + M. The denominator comes from the M x M
    Toeplitz system; a singular system marks the entry as a block member
    instead of inventing a fraction.
  * The Hankel determinant of window (m, p) is det [s_{m+i+j}] for
    i, j = 0 .. p-1, with the empty determinant (p = 0) equal to 1.
    Coefficients at negative indices are zero. Public entry points insist
    on m >= 0; the zero-padded form is used internally and by the Hadamard
    construction, where shifted windows arise naturally.
  * The normality flag of (L, M) checks the four governing determinants
    with windows (L-M+1, M), (L-M+2, M), (L-M, M+1), (L-M+1, M+1); the
    entry is normal when none vanish.

Singular systems cluster: inside a table they form square regions, and the
fraction they repeat sits one step up-left of the square's corner. The
table groups markers into those squares and reports them as blocks.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional

from .contfrac import AlgebraicCF, cf_from_convergents
from .core.poly import Polynomial, RationalFunction
from .core.series import PowerSeries, series_of_rational_function
from .errors import (
    InputError,
    InsufficientCoefficientsError,
    NonNormalWindowError,
    OriginPoleError,
    RowNotNormalError,
)

# ---------------------------------------------------------------------------
# Exact linear algebra: fraction-free elimination with first-nonzero pivoting


def exact_det(matrix: list[list[Fraction]]) -> Fraction:
    """Determinant by Bareiss elimination; the empty matrix gives 1."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    m = [[Fraction(x) for x in row] for row in matrix]
    if any(len(row) != n for row in m):
        raise InputError("determinant needs a square matrix")
    sign = 1
    prev = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev
            m[i][k] = Fraction(0)
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def exact_solve(
    matrix: list[list[Fraction]], rhs: list[Fraction]
) -> Optional[list[Fraction]]:
    """Solve a square system exactly; None when the matrix is singular."""
    n = len(matrix)
    if n == 0:
        return []
    aug = [
        [Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(matrix)
    ]
    if any(len(row) != n + 1 for row in aug):
        raise InputError("system needs a square matrix and matching rhs")
    prev = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if aug[i][k] != 0), None)
        if piv is None:
            return None
        if piv != k:
            aug[k], aug[piv] = aug[piv], aug[k]
        for i in range(k + 1, n):
            for j in range(k + 1, n + 1):
                aug[i][j] = (aug[k][k] * aug[i][j] - aug[i][k] * aug[k][j]) / prev
            aug[i][k] = Fraction(0)
        prev = aug[k][k]
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = aug[i][n]
        for j in range(i + 1, n):
            acc -= aug[i][j] * x[j]
        x[i] = acc / aug[i][i]
    return x


# ---------------------------------------------------------------------------
# Hankel determinants


@dataclass(frozen=True)
class HankelSpec:
    """Window of a Hankel determinant: offset m, size p."""

    m: int
    p: int

    def validate(self) -> None:
        if not isinstance(self.m, int) or self.m < 0:
            raise InputError(f"window offset must be a nonnegative integer, got {self.m!r}")
        if not isinstance(self.p, int) or self.p < 1:
            raise InputError(f"window size must be a positive integer, got {self.p!r}")

    @property
    def top_index(self) -> int:
        return self.m + 2 * self.p - 2


def _padded_coefficient(series: PowerSeries, i: int) -> Fraction:
    """Series coefficient with zeros below index 0."""
    if i < 0:
        return Fraction(0)
    return series.coefficient(i)


def _hankel_det_padded(series: PowerSeries, m: int, p: int) -> Fraction:
    """Hankel determinant allowing negative offsets via zero padding."""
    if p == 0:
        return Fraction(1)
    top = m + 2 * p - 2
    if top > series.order:
        raise InsufficientCoefficientsError(
            f"window (m={m}, p={p}) needs coefficient {top}, "
            f"series stops at {series.order}"
        )
    return exact_det(
        [[_padded_coefficient(series, m + i + j) for j in range(p)] for i in range(p)]
    )


def hankel_det(series: PowerSeries, m: int, p: int) -> Fraction:
    """Hankel determinant of the window starting at offset m with size p.

    The offset must be nonnegative here; p = 0 returns 1 by the empty
    determinant convention.
    """
    if not isinstance(p, int) or p < 0:
        raise InputError(f"window size must be a nonnegative integer, got {p!r}")
    if p == 0:
        if not isinstance(m, int) or m < 0:
            raise InputError(f"window offset must be a nonnegative integer, got {m!r}")
        return Fraction(1)
    HankelSpec(m, p).validate()
    return _hankel_det_padded(series, m, p)


def hankel_grid(series: PowerSeries, m_max: int, p_max: int) -> list[list[Fraction]]:
    """Grid of determinants: row m in 0..m_max, column p in 1..p_max."""
    if m_max < 0 or p_max < 1:
        raise InputError("grid needs m_max >= 0 and p_max >= 1")
    return [[hankel_det(series, m, p) for p in range(1, p_max + 1)] for m in range(m_max + 1)]


# ---------------------------------------------------------------------------
# Approximants


@dataclass(frozen=True)
class PadeEntry:
    """One table entry: either a fraction or a block marker.

    A marker means the (L, M) denominator system was singular; the pair
    (L, M) itself indexes the defining singular system. The normal flag is
    filled in by table construction when enough coefficients exist to
    evaluate the four governing determinants, and stays None otherwise.
    """

    L: int
    M: int
    fraction: Optional[RationalFunction]
    normal: Optional[bool] = None

    @property
    def is_block(self) -> bool:
        return self.fraction is None

    @property
    def singular_system(self) -> Optional[tuple[int, int]]:
        return (self.L, self.M) if self.fraction is None else None


def pade_approximant(series: PowerSeries, L: int, M: int) -> PadeEntry:
    """The [L/M] entry of the series, or a block marker.

    Denominator coefficients solve the Toeplitz system that kills the
    series coefficients at indices L+1 .. L+M; the numerator is the product
    f * den truncated at degree L. Everything stays in exact arithmetic, so
    a singular system is detected exactly, not by a pivot tolerance.
    """
    if L < 0 or M < 0:
        raise InputError("approximant orders must be nonnegative")
    if series.order < L + M:
        raise InsufficientCoefficientsError(
            f"[{L}/{M}] needs coefficients through {L + M}, "
            f"series stops at {series.order}"
        )
    if M == 0:
        num = Polynomial(series.coeffs[: L + 1])
        return PadeEntry(L, M, RationalFunction(num, Polynomial.one()))
    matrix = [
        [_padded_coefficient(series, L + 1 + r - c) for c in range(1, M + 1)]
        for r in range(M)
    ]
    rhs = [-series.coefficient(L + 1 + r) for r in range(M)]
    sol = exact_solve(matrix, rhs)
    if sol is None:
        return PadeEntry(L, M, None)
    den = Polynomial([Fraction(1)] + sol)
    num_coeffs = []
    for k in range(L + 1):
        acc = Fraction(0)
        for j in range(0, min(k, M) + 1):
            acc += den.coefficient(j) * series.coefficient(k - j)
        num_coeffs.append(acc)
    num = Polynomial(num_coeffs)
    return PadeEntry(L, M, RationalFunction(num, den))


def order_of_contact(series: PowerSeries, rf: RationalFunction) -> Optional[int]:
    """Index of the first coefficient where rf's expansion leaves the series.

    None means the two agree through the series' truncation order. The
    fraction must be regular at the origin.
    """
    if rf.den.coefficient(0) == 0:
        raise OriginPoleError("fraction has a pole at the origin")
    expansion = series_of_rational_function(rf, series.order)
    for i in range(series.order + 1):
        if expansion.coefficient(i) != series.coefficient(i):
            return i
    return None


def hadamard_polynomial(series: PowerSeries, m: int, p: int) -> Polynomial:
    """Monic degree-p polynomial attached to the Hankel window (m, p).

    Coefficient i is the signed maximal minor of the (p+1) x p matrix
    whose rows are (s_{m+r}, ..., s_{m+r+p-1}) for r = 0 .. p, divided by
    the window determinant. Equivalently: border that matrix with the
    column of powers 1, u, ..., u^p and expand along it. The construction
    needs the window determinant to be nonzero; offsets may be negative,
    with coefficients below index 0 read as zeros.

    Reversing the coefficients of the result for degree p gives the
    denominator of the approximant [m+p-1 / p] exactly, whenever that
    entry is not a block.
    """
    if not isinstance(p, int) or p < 0:
        raise InputError(f"window size must be a nonnegative integer, got {p!r}")
    if not isinstance(m, int):
        raise InputError(f"window offset must be an integer, got {m!r}")
    if p == 0:
        return Polynomial.one()
    top = m + 2 * p - 1
    if top > series.order:
        raise InsufficientCoefficientsError(
            f"window (m={m}, p={p}) needs coefficient {top}, "
            f"series stops at {series.order}"
        )
    h = _hankel_det_padded(series, m, p)
    if h == 0:
        raise NonNormalWindowError(f"non-normal window (m={m}, p={p})")
    rows = [
        [_padded_coefficient(series, m + r + j) for j in range(p)] for r in range(p + 1)
    ]
    coeffs = []
    for i in range(p + 1):
        minor = exact_det(rows[:i] + rows[i + 1 :])
        sign = -1 if (i + p) % 2 else 1
        coeffs.append(sign * minor / h)
    return Polynomial(coeffs)


# ---------------------------------------------------------------------------
# Tables


@dataclass(frozen=True)
class Block:
    """A square of block markers found in a table.

    corner is the upper-left marker (lowest L, lowest M); size counts
    markers along each side. clipped records that the square touches the
    table boundary, so the underlying region may extend further. fraction
    is the entry repeated around the square, read one step up-left of the
    corner, or None when the corner sits on a table edge.
    """

    corner: tuple[int, int]
    size: int
    clipped: bool
    fraction: Optional[RationalFunction]


@dataclass(frozen=True)
class PadeTable:
    """All entries [L/M] for L <= Lmax, M <= Mmax, plus block structure."""

    Lmax: int
    Mmax: int
    entries: dict
    blocks: tuple[Block, ...]
    block_of: dict

    def entry(self, L: int, M: int) -> PadeEntry:
        try:
            return self.entries[(L, M)]
        except KeyError:
            raise InputError(f"entry ({L}, {M}) outside table") from None


def _normality_flag(series: PowerSeries, L: int, M: int) -> Optional[bool]:
    """All four governing determinants nonzero; None when out of reach."""
    if series.order < L + M + 1:
        return None
    windows = ((L - M + 1, M), (L - M + 2, M), (L - M, M + 1), (L - M + 1, M + 1))
    return all(_hankel_det_padded(series, m, p) != 0 for m, p in windows)


def pade_table(series: PowerSeries, Lmax: int, Mmax: int) -> PadeTable:
    """Rectangular table of entries with normality flags and block squares."""
    if Lmax < 0 or Mmax < 0:
        raise InputError("table bounds must be nonnegative")
    if series.order < Lmax + Mmax:
        raise InsufficientCoefficientsError(
            f"table to ({Lmax}, {Mmax}) needs coefficients through {Lmax + Mmax}, "
            f"series stops at {series.order}"
        )
    entries = {}
    for L in range(Lmax + 1):
        for M in range(Mmax + 1):
            entry = pade_approximant(series, L, M)
            entries[(L, M)] = replace(entry, normal=_normality_flag(series, L, M))

    blocks: list[Block] = []
    block_of: dict = {}
    for L0 in range(Lmax + 1):
        for M0 in range(Mmax + 1):
            if not entries[(L0, M0)].is_block or (L0, M0) in block_of:
                continue
            size = 1
            while True:
                edge = size
                layer = [(L0 + i, M0 + edge) for i in range(edge + 1)] + [
                    (L0 + edge, M0 + j) for j in range(edge)
                ]
                visible = [
                    c for c in layer if c[0] <= Lmax and c[1] <= Mmax
                ]
                if not visible:
                    break
                if all(entries[c].is_block for c in visible):
                    size += 1
                else:
                    break
            shared = None
            if L0 >= 1 and M0 >= 1:
                shared = entries[(L0 - 1, M0 - 1)].fraction
            clipped = (L0 + size - 1 >= Lmax) or (M0 + size - 1 >= Mmax)
            block = Block((L0, M0), size, clipped, shared)
            idx = len(blocks)
            blocks.append(block)
            for i in range(size):
                for j in range(size):
                    cell = (L0 + i, M0 + j)
                    if cell[0] <= Lmax and cell[1] <= Mmax and entries[cell].is_block:
                        block_of[cell] = idx
    return PadeTable(Lmax, Mmax, entries, tuple(blocks), block_of)


# ---------------------------------------------------------------------------
# Row sequences


def row_sequence(
    series: PowerSeries, p: int, n_min: int, n_max: int
) -> list[PadeEntry]:
    """Entries [n/p] for n = n_min .. n_max, in order."""
    if p < 0 or n_min < 0 or n_min > n_max:
        raise InputError("row range needs 0 <= n_min <= n_max and p >= 0")
    return [pade_approximant(series, n, p) for n in range(n_min, n_max + 1)]


def row_to_cf(series: PowerSeries, p: int, n_min: int, n_max: int) -> AlgebraicCF:
    """Algebraic continued fraction whose convergents are a table row.

    Feeds the exact (numerator, denominator) pairs of the row entries to
    the inverse convergent construction. Blocks in the range make the row
    non-normal and are rejected; see cf_from_convergents for the offset
    convention when the first denominator is not the constant 1.
    """
    entries = row_sequence(series, p, n_min, n_max)
    for entry in entries:
        if entry.is_block:
            raise RowNotNormalError(
                f"row {p} is not normal over {n_min}..{n_max}: "
                f"block at [{entry.L}/{entry.M}]"
            )
    pairs = [(e.fraction.num, e.fraction.den) for e in entries]
    return cf_from_convergents(pairs)
