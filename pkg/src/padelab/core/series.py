"""Truncated power series, builtin generators, and series documents.

A PowerSeries is a finite coefficient list with a variable tag. The tag is
"z" for ordinary expansions around the origin and "1/z" for expansions at
infinity such as the alternating moment series; the tag changes nothing in
the arithmetic, it only keeps the two kinds from being mixed by accident.

Series documents are the JSON form used on the command line. A document is
one of four kinds:

    {"kind": "explicit", "coeffs": ["1", "1", "1/2"]}
    {"kind": "builtin", "name": "exp"}
    {"kind": "builtin", "name": "geometric", "ratio": "2"}
    {"kind": "rational", "num": ["1"], "den": ["1", "-1"]}
    {"kind": "sum", "parts": [ ... ]}

Coefficient arrays are ascending, entries are exact rational literals.
parse_series_document turns a document into a SeriesSource, which can
produce coefficients to any order its kind supports.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Optional

from ..errors import (
    InputError,
    InsufficientCoefficientsError,
    OriginPoleError,
    SchemaError,
    UnknownBuiltinError,
)
from .poly import Polynomial, RationalFunction
from .scalars import format_rational, parse_rational

_VARIABLES = ("z", "1/z")


class PowerSeries:
    """Series truncated at a fixed order; coeffs[i] sits at index i."""

    __slots__ = ("_coeffs", "_variable")

    def __init__(self, coeffs: Iterable, variable: str = "z") -> None:
        cs = []
        for c in coeffs:
            if isinstance(c, float):
                raise InputError(f"exact coefficient expected, got float {c!r}")
            cs.append(Fraction(c))
        if not cs:
            raise InputError("a series needs at least the constant coefficient")
        if variable not in _VARIABLES:
            raise InputError(f"variable must be one of {_VARIABLES}, got {variable!r}")
        self._coeffs = tuple(cs)
        self._variable = variable

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def order(self) -> int:
        """Truncation order: the largest index carried."""
        return len(self._coeffs) - 1

    @property
    def variable(self) -> str:
        return self._variable

    def coefficient(self, i: int) -> Fraction:
        if i < 0:
            raise InputError("coefficient index must be nonnegative")
        if i > self.order:
            raise InsufficientCoefficientsError(
                f"series truncated at order {self.order}, index {i} requested"
            )
        return self._coeffs[i]

    def truncated(self, order: int) -> "PowerSeries":
        if order < 0 or order > self.order:
            raise InputError(f"cannot truncate order-{self.order} series to {order}")
        return PowerSeries(self._coeffs[: order + 1], self._variable)

    def as_polynomial(self) -> Polynomial:
        return Polynomial(self._coeffs)

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return NotImplemented
        if self._variable != other._variable:
            raise InputError("cannot add series in different variables")
        n = min(self.order, other.order)
        return PowerSeries(
            tuple(self._coeffs[i] + other._coeffs[i] for i in range(n + 1)),
            self._variable,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self._coeffs == other._coeffs and self._variable == other._variable

    def __hash__(self) -> int:
        return hash(("PowerSeries", self._coeffs, self._variable))

    def __repr__(self) -> str:
        return f"PowerSeries({list(self._coeffs)!r}, variable={self._variable!r})"


def series_of_rational_function(rf: RationalFunction, order: int) -> PowerSeries:
    """Expand num/den around the origin through the given order.

    Long division against the denominator; den(0) must not vanish. The
    normal form of RationalFunction guarantees den(0) = 1 in that case,
    but the division below does not rely on it.
    """
    if order < 0:
        raise InputError("expansion order must be nonnegative")
    den0 = rf.den.coefficient(0)
    if den0 == 0:
        raise OriginPoleError("denominator vanishes at the origin")
    out = []
    for k in range(order + 1):
        acc = rf.num.coefficient(k)
        for j in range(1, min(k, rf.den.degree) + 1):
            acc -= rf.den.coefficient(j) * out[k - j]
        out.append(acc / den0)
    return PowerSeries(out)


def builtin_series(name: str, order: int, ratio=None) -> PowerSeries:
    """Named series through the given order.

    "exp" has coefficients 1/i!, "geometric" has coefficients ratio**i
    (ratio defaults to 1). Unknown names are rejected.
    """
    if order < 0:
        raise InputError("series order must be nonnegative")
    if name == "exp":
        if ratio is not None:
            raise InputError("exp takes no ratio")
        return PowerSeries(tuple(Fraction(1, factorial(i)) for i in range(order + 1)))
    if name == "geometric":
        r = Fraction(1) if ratio is None else Fraction(ratio)
        return PowerSeries(tuple(r**i for i in range(order + 1)))
    raise UnknownBuiltinError(f"unknown builtin series {name!r}")


def series_from_moments(moments: Iterable) -> PowerSeries:
    """Alternating series in 1/z built from a moment list.

    Index i carries (-1)**i times moment i. Applying the construction to
    the resulting coefficients restores the original list, since the signs
    cancel.
    """
    ms = list(moments)
    if not ms:
        raise InputError("moment list must be nonempty")
    return PowerSeries(
        tuple(Fraction(m) * (-1) ** i for i, m in enumerate(ms)), variable="1/z"
    )


# ---------------------------------------------------------------------------
# Series documents


class SeriesSource:
    """Parsed series document; produces coefficients to a requested order."""

    kind = "?"

    def coefficients(self, order: int) -> tuple[Fraction, ...]:
        raise NotImplementedError

    def series(self, order: int, variable: str = "z") -> PowerSeries:
        return PowerSeries(self.coefficients(order), variable)

    def available_order(self) -> Optional[int]:
        """Largest producible order, None when unbounded."""
        return None

    def to_document(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class ExplicitSource(SeriesSource):
    coeffs: tuple
    kind = "explicit"

    def coefficients(self, order: int) -> tuple[Fraction, ...]:
        if order >= len(self.coeffs):
            raise InsufficientCoefficientsError(
                f"explicit series has {len(self.coeffs)} coefficients, "
                f"order {order} requested"
            )
        return tuple(self.coeffs[: order + 1])

    def available_order(self) -> Optional[int]:
        return len(self.coeffs) - 1

    def to_document(self) -> dict:
        return {"kind": "explicit", "coeffs": [format_rational(c) for c in self.coeffs]}


@dataclass(frozen=True)
class BuiltinSource(SeriesSource):
    name: str
    ratio: Optional[Fraction] = None
    kind = "builtin"

    def coefficients(self, order: int) -> tuple[Fraction, ...]:
        return builtin_series(self.name, order, self.ratio).coeffs

    def to_document(self) -> dict:
        doc = {"kind": "builtin", "name": self.name}
        if self.ratio is not None:
            doc["ratio"] = format_rational(self.ratio)
        return doc


@dataclass(frozen=True)
class RationalSource(SeriesSource):
    function: RationalFunction
    kind = "rational"

    def coefficients(self, order: int) -> tuple[Fraction, ...]:
        return series_of_rational_function(self.function, order).coeffs

    def to_document(self) -> dict:
        return {
            "kind": "rational",
            "num": [format_rational(c) for c in self.function.num.coeffs],
            "den": [format_rational(c) for c in self.function.den.coeffs],
        }


@dataclass(frozen=True)
class SumSource(SeriesSource):
    parts: tuple
    kind = "sum"

    def coefficients(self, order: int) -> tuple[Fraction, ...]:
        total = [Fraction(0)] * (order + 1)
        for part in self.parts:
            for i, c in enumerate(part.coefficients(order)):
                total[i] += c
        return tuple(total)

    def available_order(self) -> Optional[int]:
        bounds = [p.available_order() for p in self.parts]
        finite = [b for b in bounds if b is not None]
        return min(finite) if finite else None

    def to_document(self) -> dict:
        return {"kind": "sum", "parts": [p.to_document() for p in self.parts]}


def _coeff_array(value, path: str) -> tuple[Fraction, ...]:
    if not isinstance(value, list) or not value:
        raise SchemaError("nonempty coefficient array expected", path)
    out = []
    for i, c in enumerate(value):
        try:
            out.append(parse_rational(c))
        except InputError as exc:
            raise SchemaError(str(exc), f"{path}[{i}]") from exc
    return tuple(out)


def parse_series_document(doc, path: str = "$") -> SeriesSource:
    """Validate a series document and return its source."""
    if not isinstance(doc, dict):
        raise SchemaError("series document must be a JSON object", path)
    kind = doc.get("kind")
    if kind == "explicit":
        return ExplicitSource(_coeff_array(doc.get("coeffs"), f"{path}.coeffs"))
    if kind == "builtin":
        name = doc.get("name")
        if name not in ("exp", "geometric"):
            raise SchemaError(f"unknown builtin name {name!r}", f"{path}.name")
        ratio = None
        if "ratio" in doc:
            if name != "geometric":
                raise SchemaError("only geometric takes a ratio", f"{path}.ratio")
            try:
                ratio = parse_rational(doc["ratio"])
            except InputError as exc:
                raise SchemaError(str(exc), f"{path}.ratio") from exc
        return BuiltinSource(name, ratio)
    if kind == "rational":
        num = _coeff_array(doc.get("num"), f"{path}.num")
        den = _coeff_array(doc.get("den"), f"{path}.den")
        if all(c == 0 for c in den):
            raise SchemaError("denominator must be nonzero", f"{path}.den")
        return RationalSource(RationalFunction(Polynomial(num), Polynomial(den)))
    if kind == "sum":
        parts = doc.get("parts")
        if not isinstance(parts, list) or not parts:
            raise SchemaError("nonempty parts array expected", f"{path}.parts")
        return SumSource(
            tuple(
                parse_series_document(p, f"{path}.parts[{i}]")
                for i, p in enumerate(parts)
            )
        )
    raise SchemaError(
        "kind must be one of explicit, builtin, rational, sum", f"{path}.kind"
    )
