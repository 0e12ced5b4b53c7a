"""Non-negative exact rationals extended with +infinity.

Every measure value in this package is an :class:`ExtRational`. Arithmetic
follows the measure-theoretic conventions, in particular ``0 * inf == 0``,
and ratios that have no meaningful value raise instead of returning one.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .errors import IndeterminateRatio, ZeroDenominator

RationalLike = Union["ExtRational", Fraction, int, str]

INF_TOKEN = "inf"


class ExtRational:
    """A non-negative rational kept in lowest terms, or +infinity.

    Instances are immutable, hashable, and totally ordered with every
    finite value below infinity. Addition and multiplication accept ints
    and Fractions on either side; subtraction is deliberately absent
    (the domain is non-negative).
    """

    __slots__ = ("_frac",)

    def __init__(self, value: RationalLike = 0, denominator: int | None = None):
        if denominator is not None:
            if denominator == 0:
                raise ZeroDenominator("denominator is zero")
            frac = Fraction(value, denominator)
        elif isinstance(value, ExtRational):
            frac = value._frac
        elif isinstance(value, str):
            text = value.strip()
            if text == INF_TOKEN:
                frac = None
            else:
                try:
                    frac = Fraction(text)
                except (ValueError, ZeroDivisionError) as exc:
                    raise ValueError(f"not a rational: {value!r}") from exc
        elif isinstance(value, (int, Fraction)):
            frac = Fraction(value)
        else:
            raise TypeError(f"cannot build ExtRational from {type(value).__name__}")
        if frac is not None and frac < 0:
            raise ValueError(f"negative value not allowed: {frac}")
        self._frac = frac

    @classmethod
    def infinity(cls) -> "ExtRational":
        out = cls.__new__(cls)
        out._frac = None
        return out

    @property
    def is_infinite(self) -> bool:
        return self._frac is None

    @property
    def is_zero(self) -> bool:
        return self._frac == 0

    @property
    def numerator(self) -> int:
        return self.as_fraction().numerator

    @property
    def denominator(self) -> int:
        return self.as_fraction().denominator

    def as_fraction(self) -> Fraction:
        if self._frac is None:
            raise ValueError("infinite value has no Fraction form")
        return self._frac

    @staticmethod
    def _coerce(value) -> "ExtRational | None":
        if isinstance(value, ExtRational):
            return value
        if isinstance(value, (int, Fraction)):
            return ExtRational(value)
        return None

    def __add__(self, other) -> "ExtRational":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if self._frac is None or rhs._frac is None:
            return INF
        return ExtRational(self._frac + rhs._frac)

    __radd__ = __add__

    def __mul__(self, other) -> "ExtRational":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if self._frac is None or rhs._frac is None:
            # 0 * inf == 0 by the measure-theoretic convention
            if self._frac == 0 or rhs._frac == 0:
                return ExtRational(0)
            return INF
        return ExtRational(self._frac * rhs._frac)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "ExtRational":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if rhs._frac is not None and rhs._frac == 0:
            raise ZeroDenominator("ratio with zero denominator")
        if self._frac is None and rhs._frac is None:
            raise IndeterminateRatio("inf / inf is undefined")
        if rhs._frac is None:
            return ExtRational(0)
        if self._frac is None:
            return INF
        return ExtRational(self._frac / rhs._frac)

    def _key(self):
        # order key: finite values first, by magnitude; infinity above all
        if self._frac is None:
            return (1, Fraction(0))
        return (0, self._frac)

    def __eq__(self, other) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._frac == rhs._frac

    def __lt__(self, other) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._key() < rhs._key()

    def __le__(self, other) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._key() <= rhs._key()

    def __gt__(self, other) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._key() > rhs._key()

    def __ge__(self, other) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._key() >= rhs._key()

    def __hash__(self):
        if self._frac is None:
            return hash(("ExtRational", "inf"))
        return hash(self._frac)

    def __str__(self) -> str:
        if self._frac is None:
            return INF_TOKEN
        return str(self._frac)

    def __repr__(self) -> str:
        return f"ExtRational({str(self)!r})"


INF = ExtRational.infinity()
