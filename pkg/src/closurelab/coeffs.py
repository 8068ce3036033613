"""Exact coefficient fields: the rationals and prime fields GF(p).

Polynomials store *raw* coefficient values (``mpq``/``Fraction`` for QQ, plain
``int`` in ``[0, p)`` for GF(p)) and route arithmetic through the owning
:class:`Field`.  :class:`FieldScalar` is the user-facing boxed value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any

from .errors import UsageError

try:
    from gmpy2 import mpq as _rational
except ImportError:  # pragma: no cover - gmpy2 is optional
    _rational = Fraction

DEFAULT_PRIME = 65537


class Field:
    """Common interface; concrete fields override the arithmetic."""

    characteristic = 0
    zero: Any
    one: Any

    def __call__(self, x) -> "FieldScalar":
        return FieldScalar(self, self.convert(x))

    def convert(self, x):
        raise NotImplementedError

    def add(self, a, b):
        return self.convert(a + b)

    def sub(self, a, b):
        return self.convert(a - b)

    def mul(self, a, b):
        return self.convert(a * b)

    def neg(self, a):
        return self.convert(-a)

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def random_nonzero(self, rng, bound=1000):
        """A nonzero element drawn with ``rng`` (a ``random.Random``)."""
        raise NotImplementedError

    def to_str(self, a) -> str:
        return str(a)

    def to_json(self, a):
        return self.to_str(a)


class RationalField(Field):
    characteristic = 0
    name = "QQ"

    def __init__(self):
        self.zero = _rational(0)
        self.one = _rational(1)

    def convert(self, x):
        if isinstance(x, FieldScalar):
            if x.field is not self:
                raise UsageError(f"cannot coerce element of {x.field} into QQ")
            return x.value
        if isinstance(x, str):
            return _rational(Fraction(x))
        return _rational(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in QQ")
        return self.one / a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in QQ")
        return a / b

    def random_nonzero(self, rng, bound=1000):
        return _rational(rng.randint(1, bound))

    def to_str(self, a) -> str:
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_prime(p):
            raise UsageError(f"{p} is not prime")
        self.characteristic = p
        self.p = p
        self.zero = 0
        self.one = 1 % p
        self.name = f"GF({p})"

    def convert(self, x):
        p = self.p
        if isinstance(x, FieldScalar):
            if x.field != self:
                raise UsageError(f"cannot coerce element of {x.field} into {self.name}")
            return x.value
        if isinstance(x, (Fraction, str)) or type(x).__name__ == "mpq":
            q = Fraction(x) if isinstance(x, str) else Fraction(int(x.numerator), int(x.denominator))
            if q.denominator % p == 0:
                raise ZeroDivisionError(f"denominator {q.denominator} vanishes mod {p}")
            return q.numerator * pow(q.denominator, -1, p) % p
        return int(x) % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of zero in {self.name}")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def random_nonzero(self, rng, bound=None):
        return rng.randint(1, self.p - 1)

    def to_str(self, a) -> str:
        return str(a)

    def to_json(self, a):
        return a

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int = DEFAULT_PRIME) -> PrimeField:
    return PrimeField(p)


def field_from_name(name: str, prime: int = DEFAULT_PRIME) -> Field:
    """Resolve ``"q"``/``"QQ"`` or ``"fp"``/``"GF(p)"`` to a field."""
    key = name.strip().lower()
    if key in ("q", "qq", "rationals"):
        return QQ
    if key in ("fp", "f_p", "gf"):
        return GF(prime)
    if key.startswith("gf(") and key.endswith(")"):
        return GF(int(key[3:-1]))
    raise UsageError(f"unknown field {name!r}")


@dataclass(frozen=True)
class FieldScalar:
    """An immutable element of QQ or GF(p) in canonical form."""

    field: Field
    value: Any

    def _other(self, other) -> Any:
        if isinstance(other, FieldScalar):
            if other.field != self.field:
                raise UsageError(f"mixed-field operands: {self.field} and {other.field}")
            return other.value
        return self.field.convert(other)

    def __add__(self, other):
        return FieldScalar(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldScalar(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldScalar(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldScalar(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldScalar(self.field, self.field.div(self.value, self._other(other)))

    def __rtruediv__(self, other):
        return FieldScalar(self.field, self.field.div(self._other(other), self.value))

    def __neg__(self):
        return FieldScalar(self.field, self.field.neg(self.value))

    def inverse(self) -> "FieldScalar":
        return FieldScalar(self.field, self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def __eq__(self, other):
        if isinstance(other, FieldScalar):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field.convert(other)
        except (TypeError, ValueError, ZeroDivisionError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.field.to_str(self.value)))

    def __repr__(self):
        return f"{self.field!r}({self.field.to_str(self.value)})"

    def __str__(self):
        return self.field.to_str(self.value)
