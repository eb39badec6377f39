"""Exact checkers for the isoperimetric inequalities and the row-count bounds.

Every verdict is decided on an integerized form of the inequality, so no
floating-point tolerance enters a pass/fail result:

- ``|N| >= c sqrt|W|`` becomes ``n^2 >= c^2 |W|``;
- ``|B| >= c sqrt(|W| + c^2/4) - c^2/2`` becomes ``b^2 + c^2 b >= c^2 |W|``;
- ``c^2 = 9 - 6 sqrt 2`` for the finite edge bound is compared by squaring
  once more.

Floats appear only in :func:`f`, :func:`g`, :func:`r_threshold` and the
diagnostic :func:`cross_check`.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, Optional, Sequence, Union

import numpy as np

from .errors import DomainError, InvalidArgumentsError

logger = logging.getLogger(__name__)

Exact = Union[int, Fraction]

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)
SQRT6 = math.sqrt(6.0)


@dataclass(frozen=True)
class BoundCheck:
    """Outcome of one integerized inequality ``lhs >= rhs``."""

    name: str
    holds: bool
    lhs: Exact
    rhs: Exact
    tight: bool

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary; exact numbers become decimal strings."""
        return {
            "name": self.name,
            "holds": self.holds,
            "tight": self.tight,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
        }


@dataclass(frozen=True)
class ConstantC:
    """A constant ``c`` of one of the inequalities.

    ``square`` is the exact value of ``c^2`` when it is rational; the finite
    edge constant has an irrational square and keeps ``None``.
    """

    role: str
    value: float
    square: Optional[Fraction]
    exact: str

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "role": self.role,
            "value": self.value,
            "square": None if self.square is None else str(self.square),
            "exact": self.exact,
        }


# ---------------------------------------------------------------------------
# Constants
# ---------------------------------------------------------------------------

FINITE_N_RATIONAL = Fraction(6053, 10**4)

INFINITE_C = ConstantC("infinite", SQRT6, Fraction(6), "sqrt(6)")
FINITE_N_C = ConstantC("finite_N", 0.6053, FINITE_N_RATIONAL**2, "6053/10000")
FINITE_E_C = ConstantC("finite_E", SQRT6 - SQRT3, None, "sqrt(6) - sqrt(3)")
CONJECTURE_C = ConstantC("conjecture", 2.0 / SQRT3, Fraction(4, 3), "2/sqrt(3)")

CONSTANTS: Dict[str, ConstantC] = {
    c.role: c for c in (INFINITE_C, FINITE_N_C, FINITE_E_C, CONJECTURE_C)
}


# ---------------------------------------------------------------------------
# Integerized checks
# ---------------------------------------------------------------------------

def _require_counts(w_size: int, count: int) -> None:
    for label, value in (("W_size", w_size), ("count", count)):
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise InvalidArgumentsError(f"{label} must be a non-negative integer, got {value!r}")


def _verdict(name: str, lhs: Exact, rhs: Exact) -> BoundCheck:
    return BoundCheck(name=name, holds=lhs >= rhs, lhs=lhs, rhs=rhs, tight=lhs == rhs)


def _square_bound(name: str, w_size: int, count: int, q: Fraction) -> BoundCheck:
    """``count >= c sqrt(w_size)`` with ``c^2 = q``."""
    _require_counts(w_size, count)
    return _verdict(name, q.denominator * count * count, q.numerator * w_size)


def _boundary_bound(name: str, w_size: int, b_count: int, q: Fraction) -> BoundCheck:
    """``b >= c sqrt(w + c^2/4) - c^2/2`` with ``c^2 = q``, i.e. ``b^2 + q b >= q w``."""
    _require_counts(w_size, b_count)
    den, num = q.denominator, q.numerator
    return _verdict(name, den * b_count * b_count + num * b_count, num * w_size)


def check_inf_N(w_size: int, n_count: int) -> BoundCheck:
    """``|N(W)| >= sqrt6 sqrt|W|`` as ``n^2 >= 6|W|``."""
    return _square_bound("inf_N", w_size, n_count, Fraction(6))


def check_inf_E(w_size: int, e_count: int) -> BoundCheck:
    """``|E(W)| >= sqrt6 sqrt|W|`` as ``e^2 >= 6|W|``."""
    return _square_bound("inf_E", w_size, e_count, Fraction(6))


def check_inf_B(w_size: int, b_count: int) -> BoundCheck:
    """Boundary bound with ``c = sqrt6`` as ``b^2 + 6b >= 6|W|``."""
    return _boundary_bound("inf_B", w_size, b_count, Fraction(6))


def check_fin_N_at(w_size: int, n_count: int, c: Fraction) -> BoundCheck:
    """Neighbour bound inside a finite grid for an arbitrary rational ``c``."""
    c = _rational(c)
    return _square_bound("fin_N", w_size, n_count, c * c)


def check_fin_B_at(w_size: int, b_count: int, c: Fraction) -> BoundCheck:
    """Boundary bound inside a finite grid for an arbitrary rational ``c``."""
    c = _rational(c)
    return _boundary_bound("fin_B", w_size, b_count, c * c)


def check_fin_N(w_size: int, n_count: int) -> BoundCheck:
    """``10^8 n^2 >= 36638809 |W|`` (``c = 0.6053``)."""
    return check_fin_N_at(w_size, n_count, FINITE_N_RATIONAL)


def check_fin_B(w_size: int, b_count: int) -> BoundCheck:
    """``10^8 b^2 + 36638809 b >= 36638809 |W|`` (``c = 0.6053``)."""
    return check_fin_B_at(w_size, b_count, FINITE_N_RATIONAL)


def check_fin_E(w_size: int, e_count: int) -> BoundCheck:
    """``e^2 >= (9 - 6 sqrt2) |W|`` decided exactly.

    If ``e^2 >= 9|W|`` the bound holds outright.  Otherwise both sides of
    ``6 sqrt2 |W| >= 9|W| - e^2`` are non-negative and squaring gives
    ``72 |W|^2 >= (9|W| - e^2)^2``.  Equality needs ``|W| = e = 0``.
    """
    _require_counts(w_size, e_count)
    e_sq = e_count * e_count
    if e_sq >= 9 * w_size:
        return BoundCheck(
            name="fin_E",
            holds=True,
            lhs=e_sq,
            rhs=9 * w_size,
            tight=w_size == 0 and e_count == 0,
        )
    gap = 9 * w_size - e_sq
    lhs, rhs = 72 * w_size * w_size, gap * gap
    return BoundCheck(name="fin_E", holds=lhs >= rhs, lhs=lhs, rhs=rhs, tight=False)


def check_conjecture(w_size: int, count: int) -> BoundCheck:
    """``count >= (2/sqrt3) sqrt|W|`` as ``3 count^2 >= 4|W|``."""
    return _square_bound("conjecture", w_size, count, CONJECTURE_C.square)  # type: ignore[arg-type]


#: Name -> checker, in report order.
CHECKS: Dict[str, Callable[[int, int], BoundCheck]] = {
    "inf_N": check_inf_N,
    "inf_E": check_inf_E,
    "inf_B": check_inf_B,
    "fin_N": check_fin_N,
    "fin_E": check_fin_E,
    "fin_B": check_fin_B,
    "conjecture": check_conjecture,
}

#: Which perimeter measure each check consumes.
CHECK_MEASURE: Dict[str, str] = {
    "inf_N": "N",
    "inf_E": "E",
    "inf_B": "B",
    "fin_N": "N",
    "fin_E": "E",
    "fin_B": "B",
    "conjecture": "N",
}


def _rational(c: Any) -> Fraction:
    if isinstance(c, float):
        raise InvalidArgumentsError("c must be an exact rational (Fraction, int or decimal string)")
    try:
        value = Fraction(c)
    except (TypeError, ValueError) as exc:
        raise InvalidArgumentsError(f"cannot read {c!r} as a rational") from exc
    if value < 0:
        raise InvalidArgumentsError(f"c must be non-negative, got {value}")
    return value


# ---------------------------------------------------------------------------
# Row-count bounds
# ---------------------------------------------------------------------------

def _require_rows(l: Sequence[int]) -> tuple:  # noqa: E741
    if len(l) != 3 or any(not isinstance(x, int) or x < 1 for x in l):
        raise InvalidArgumentsError(f"gray-row counts must be three positive integers, got {l!r}")
    return tuple(l)


def eq1_lower(l: Sequence[int]) -> int:  # noqa: E741
    """Lower bound ``l1 + l2 + l3`` on ``|N(W)|`` for a set without bad rows."""
    return sum(_require_rows(l))


def eq2_upper(l: Sequence[int]) -> Fraction:  # noqa: E741
    """Upper bound on ``|W|`` for a set without bad rows.

    ``2 l1 l2 - (l1 + l2 - l3)^2 / 2`` with ``l3`` the largest count, which
    expands to the symmetric ``-(l1^2 + l2^2 + l3^2)/2 + l1 l2 + l1 l3 + l2 l3``.
    """
    a, b, c = _require_rows(l)
    return Fraction(-(a * a + b * b + c * c), 2) + (a * b + a * c + b * c)


def eq1_eq2_chain(l: Sequence[int]) -> BoundCheck:  # noqa: E741
    """``(l1 + l2 + l3)^2 >= 6 * eq2_upper(l)``; tight iff all counts are equal."""
    total = eq1_lower(l)
    return _verdict("eq1_eq2_chain", Fraction(total * total), 6 * eq2_upper(l))


# ---------------------------------------------------------------------------
# Scalar functions
# ---------------------------------------------------------------------------

def f(c: float) -> float:
    """Radius from which ``|N(W)| >= c sqrt|W|`` holds in ``G_r``.

    Raises:
        DomainError: unless ``-sqrt3 < c < sqrt6 - sqrt3``.
    """
    if not (-SQRT3 < c < SQRT6 - SQRT3):
        raise DomainError(f"f is defined on (-sqrt3, sqrt6 - sqrt3), got {c!r}")
    return SQRT3 * c / (-2.0 * SQRT3 * (c + SQRT3) * (c - SQRT6 + SQRT3))


def g(c: float) -> float:
    """``(24c - 12 sqrt6) / ((-4c^2 + 4 sqrt6 c - 12) sqrt3)``; equals 1 at ``c = sqrt6 - sqrt3``."""
    denominator = (-4.0 * c * c + 4.0 * c * SQRT6 - 12.0) * SQRT3
    return (24.0 * c - 12.0 * SQRT6) / denominator


def r_threshold(c: float) -> int:
    """``ceil(f(c))`` for ``0 <= c < sqrt6 - sqrt3``.

    Raises:
        DomainError: outside that window.
    """
    if not (0.0 <= c < SQRT6 - SQRT3):
        raise DomainError(f"r_threshold is defined on [0, sqrt6 - sqrt3), got {c!r}")
    return math.ceil(f(c))


# ---------------------------------------------------------------------------
# Float cross-check
# ---------------------------------------------------------------------------

def radical_margin(name: str, w_size: int, count: int) -> float:
    """Signed slack of the radical form of check ``name`` in extended precision."""
    if name not in CHECKS:
        raise InvalidArgumentsError(f"unknown check {name!r}")
    constant = {
        "inf": INFINITE_C,
        "fin": FINITE_N_C,
        "conjecture": CONJECTURE_C,
    }[name.split("_")[0]]
    if name == "fin_E":
        constant = FINITE_E_C
    ld = np.longdouble
    if constant.square is not None:
        c = np.sqrt(ld(constant.square.numerator) / ld(constant.square.denominator))
    else:
        c = np.sqrt(ld(6)) - np.sqrt(ld(3))
    w, k = ld(w_size), ld(count)
    if CHECK_MEASURE[name] == "B":
        return float(k - (c * np.sqrt(w + c * c / 4) - c * c / 2))
    return float(k - c * np.sqrt(w))


def cross_check(name: str, w_size: int, count: int, margin: float = 1e-9) -> bool:
    """Whether the exact verdict agrees with the radical form.

    Disagreements with ``|slack| <= margin`` are tolerated and logged.
    """
    exact = CHECKS[name](w_size, count).holds
    slack = radical_margin(name, w_size, count)
    approx = slack >= 0
    if exact == approx:
        return True
    if abs(slack) <= margin:
        logger.warning(
            "%s(%d, %d): exact=%s but float slack %.3e lies inside the margin",
            name,
            w_size,
            count,
            exact,
            slack,
        )
        return True
    return False


__all__ = [
    "BoundCheck",
    "ConstantC",
    "CONSTANTS",
    "INFINITE_C",
    "FINITE_N_C",
    "FINITE_E_C",
    "CONJECTURE_C",
    "FINITE_N_RATIONAL",
    "CHECKS",
    "CHECK_MEASURE",
    "check_inf_N",
    "check_inf_E",
    "check_inf_B",
    "check_fin_N",
    "check_fin_E",
    "check_fin_B",
    "check_fin_N_at",
    "check_fin_B_at",
    "check_conjecture",
    "eq1_lower",
    "eq2_upper",
    "eq1_eq2_chain",
    "f",
    "g",
    "r_threshold",
    "radical_margin",
    "cross_check",
]
