"""Semifields: commutative addition, a multiplicative group, no subtraction.

Two concrete instances are provided.  ``PositiveRational`` is the exact
sub-semifield of the positive reals; ``TropicalInt`` is ``(Z, max, +)``.
Values of both types are immutable and hashable, and they support ``+``,
``*``, ``/`` and :meth:`inv`.  Mixing the two raises ``TypeError``.

Each instance also has a descriptor object (``RATIONAL``, ``TROPICAL``)
that knows its name, its unit and how to read and write JSON scalars.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
import operator
import re

__all__ = [
    "PositiveRational",
    "TropicalInt",
    "Semifield",
    "RATIONAL",
    "TROPICAL",
    "semifield_by_name",
    "semifield_of",
    "sf_add",
    "sf_mul",
    "sf_inv",
    "sf_sum",
    "sf_prod",
]


class PositiveRational:
    """A positive rational number in lowest terms."""

    __slots__ = ("_q",)

    def __init__(self, numerator=1, denominator=1):
        q = Fraction(numerator, denominator)
        if q <= 0:
            raise ValueError(f"not a positive rational: {q}")
        object.__setattr__(self, "_q", q)

    @classmethod
    def _wrap(cls, q):
        # every op below preserves positivity; keep the check as a guard
        if q <= 0:
            raise ArithmeticError(f"semifield operation left R_>0: {q}")
        obj = object.__new__(cls)
        object.__setattr__(obj, "_q", q)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("PositiveRational is immutable")

    @property
    def numerator(self):
        return self._q.numerator

    @property
    def denominator(self):
        return self._q.denominator

    def as_fraction(self):
        return self._q

    def _check(self, other):
        if not isinstance(other, PositiveRational):
            raise TypeError(
                f"cannot combine PositiveRational with {type(other).__name__}")
        return other._q

    def __add__(self, other):
        return PositiveRational._wrap(self._q + self._check(other))

    def __mul__(self, other):
        return PositiveRational._wrap(self._q * self._check(other))

    def __truediv__(self, other):
        return PositiveRational._wrap(self._q / self._check(other))

    def inv(self):
        return PositiveRational._wrap(1 / self._q)

    def __eq__(self, other):
        if isinstance(other, PositiveRational):
            return self._q == other._q
        return NotImplemented

    def __hash__(self):
        return hash(("Q+", self._q))

    def __repr__(self):
        return f"PositiveRational({self})"

    def __str__(self):
        if self._q.denominator == 1:
            return str(self._q.numerator)
        return f"{self._q.numerator}/{self._q.denominator}"


class TropicalInt:
    """An element of the tropical semifield: ``a + b = max``, ``a * b = a + b``."""

    __slots__ = ("_v",)

    def __init__(self, value=0):
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"tropical values are integers, got {value!r}")
        object.__setattr__(self, "_v", value)

    def __setattr__(self, name, value):
        raise AttributeError("TropicalInt is immutable")

    @property
    def value(self):
        return self._v

    def _check(self, other):
        if not isinstance(other, TropicalInt):
            raise TypeError(
                f"cannot combine TropicalInt with {type(other).__name__}")
        return other._v

    def __add__(self, other):
        return TropicalInt(max(self._v, self._check(other)))

    def __mul__(self, other):
        return TropicalInt(self._v + self._check(other))

    def __truediv__(self, other):
        return TropicalInt(self._v - self._check(other))

    def inv(self):
        return TropicalInt(-self._v)

    def __eq__(self, other):
        if isinstance(other, TropicalInt):
            return self._v == other._v
        return NotImplemented

    def __hash__(self):
        return hash(("T", self._v))

    def __repr__(self):
        return f"TropicalInt({self._v})"

    def __str__(self):
        return str(self._v)


_RATIONAL_RE = re.compile(r"^\s*(\d+)\s*(?:/\s*(\d+))?\s*$")


class Semifield:
    """Descriptor for one semifield instance."""

    def __init__(self, name, value_type):
        self.name = name
        self.value_type = value_type

    def __repr__(self):
        return f"Semifield({self.name!r})"

    def one(self):
        return self.value_type()

    def contains(self, x):
        return isinstance(x, self.value_type)

    def coerce(self, x):
        """Turn ``x`` into a value of this semifield.

        Accepts existing values, Python ints, and (for the rational
        semifield) ``Fraction`` and ``"p/q"`` strings.
        """
        if isinstance(x, self.value_type):
            return x
        if self is RATIONAL:
            if isinstance(x, str):
                m = _RATIONAL_RE.match(x)
                if not m:
                    raise ValueError(f"malformed rational {x!r}")
                den = int(m.group(2) or 1)
                if den == 0:
                    raise ValueError(f"zero denominator in {x!r}")
                return PositiveRational(int(m.group(1)), den)
            if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
                return PositiveRational(x)
        elif self is TROPICAL:
            if isinstance(x, int) and not isinstance(x, bool):
                return TropicalInt(x)
            if isinstance(x, str) and re.fullmatch(r"\s*-?\d+\s*", x):
                return TropicalInt(int(x))
        raise TypeError(f"cannot interpret {x!r} in the {self.name} semifield")

    def to_json(self, x):
        if self is RATIONAL:
            return str(x)
        return x.value


RATIONAL = Semifield("rational", PositiveRational)
TROPICAL = Semifield("tropical", TropicalInt)

_BY_NAME = {K.name: K for K in (RATIONAL, TROPICAL)}


def semifield_by_name(name):
    try:
        return _BY_NAME[name]
    except KeyError:
        raise ValueError(
            f"unknown semifield {name!r}; expected one of {sorted(_BY_NAME)}"
        ) from None


def semifield_of(x):
    for K in _BY_NAME.values():
        if K.contains(x):
            return K
    raise TypeError(f"{x!r} is not a semifield value")


def sf_add(a, b):
    return a + b


def sf_mul(a, b):
    return a * b


def sf_inv(a):
    return a.inv()


def sf_sum(values):
    """Semifield sum of a non-empty iterable (there is no additive zero)."""
    return reduce(operator.add, values)


def sf_prod(values, one):
    return reduce(operator.mul, values, one)
