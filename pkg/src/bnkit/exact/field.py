"""Prime fields F_c, with c = 0 standing for the rationals.

Field elements are plain Python values: ``int`` residues in ``[0, c)`` for
c > 0, and ``int`` or reduced ``Fraction`` for c = 0 (a fraction with
denominator 1 is always demoted to ``int``).  A :class:`Field` instance
owns the arithmetic and keeps every result in that canonical form, so
elements compare equal exactly when they are equal in the field.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Union

Scalar = Union[int, Fraction]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Field:
    """The prime field of characteristic ``c`` (``c = 0`` gives Q)."""

    __slots__ = ("c",)

    def __init__(self, c: int):
        c = int(c)
        if c != 0 and not is_prime(c):
            raise ValueError(f"characteristic must be 0 or a prime, got {c}")
        self.c = c

    def __repr__(self) -> str:
        return f"Field({self.c})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and other.c == self.c

    def __hash__(self) -> int:
        return hash(("Field", self.c))

    @property
    def name(self) -> str:
        return "Q" if self.c == 0 else f"F{self.c}"

    def __call__(self, x) -> Scalar:
        """Coerce an int or Fraction into canonical form."""
        if self.c == 0:
            if isinstance(x, Fraction):
                return x.numerator if x.denominator == 1 else x
            return int(x)
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.c)) % self.c
        return int(x) % self.c

    zero = 0
    one = 1

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        if self.c:
            return (a + b) % self.c
        return self._q(a + b)

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        if self.c:
            return (a - b) % self.c
        return self._q(a - b)

    def neg(self, a: Scalar) -> Scalar:
        if self.c:
            return (-a) % self.c
        return -a

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        if self.c:
            return (a * b) % self.c
        return self._q(a * b)

    def inv(self, a: Scalar) -> Scalar:
        if not a:
            raise ZeroDivisionError("inverse of 0")
        if self.c:
            return pow(a, -1, self.c)
        return self._q(1 / Fraction(a))

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        if not b:
            raise ZeroDivisionError("division by 0")
        if self.c:
            return (a * pow(b, -1, self.c)) % self.c
        if isinstance(a, int) and isinstance(b, int) and a % b == 0:
            return a // b
        return self._q(Fraction(a) / b)

    @staticmethod
    def _q(x) -> Scalar:
        if isinstance(x, Fraction) and x.denominator == 1:
            return x.numerator
        return x

    def format(self, a: Scalar) -> str:
        return str(a)

    def parse(self, text: str) -> Scalar:
        """Parse ``"3"``, ``"-2"`` or (for c = 0, or c not dividing q) ``"3/4"``."""
        if "/" in text:
            num, den = text.split("/", 1)
            return self(Fraction(int(num), int(den)))
        return self(int(text))


@lru_cache(maxsize=None)
def field(c: int) -> Field:
    """Shared :class:`Field` instance for characteristic ``c``."""
    return Field(c)
