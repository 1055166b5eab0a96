"""Univariate polynomials over a prime field, in the variable H."""

from __future__ import annotations

from typing import Iterable, Sequence

from .field import Field, Scalar


class Poly:
    """Immutable polynomial ``sum(coeffs[k] * H**k)`` over ``field``.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``
    and ``degree == -1``.
    """

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: Field, coeffs: Iterable = ()):
        cs = [field(x) for x in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.coeffs: tuple = tuple(cs)
        self._hash = None

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field, ())

    @classmethod
    def const(cls, field: Field, c) -> "Poly":
        return cls(field, (c,))

    @classmethod
    def monomial(cls, field: Field, c, m: int) -> "Poly":
        if m < 0:
            raise ValueError("negative exponent")
        return cls(field, [0] * m + [c])

    @classmethod
    def h(cls, field: Field) -> "Poly":
        return cls(field, (0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Scalar:
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_unit(self) -> bool:
        return len(self.coeffs) == 1

    def is_monomial(self) -> bool:
        return bool(self.coeffs) and all(not c for c in self.coeffs[:-1])

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, int) and other == 0:
            return not self.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field.c, self.coeffs))
        return self._hash

    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("H" if k == 1 else f"H^{k}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.field != self.field:
                raise ValueError(f"field mismatch: {self.field} vs {other.field}")
            return other
        return Poly.const(self.field, other)

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = f.add(out[k], c)
        return Poly(f, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        f = self.field
        return Poly(f, [f.neg(c) for c in self.coeffs])

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        other = self._coerce(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(f)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = f.add(out[i + j], f.mul(x, y))
        return Poly(f, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative power")
        out = Poly.const(self.field, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def scale(self, c) -> "Poly":
        f = self.field
        c = f(c)
        return Poly(f, [f.mul(c, x) for x in self.coeffs])

    def __divmod__(self, other) -> tuple["Poly", "Poly"]:
        return poly_divmod(self, self._coerce(other))

    def __floordiv__(self, other) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        return self.scale(self.field.inv(self.lead))

    def __call__(self, x):
        f = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Euclidean division ``a = q*b + r`` with ``deg r < deg b``."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    f = a.field
    r = list(a.coeffs)
    db = b.degree
    inv_lead = f.inv(b.lead)
    if len(r) - 1 < db:
        return Poly(f), a
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = f.mul(r[k + db], inv_lead)
        q[k] = c
        if c:
            for i, bc in enumerate(b.coeffs):
                r[k + i] = f.sub(r[k + i], f.mul(c, bc))
    return Poly(f, q), Poly(f, r[:db])


def poly_from_terms(field: Field, terms: Sequence[tuple[int, Scalar]]) -> Poly:
    """Build a polynomial from ``(exponent, coefficient)`` pairs."""
    if not terms:
        return Poly(field)
    out = [0] * (max(e for e, _ in terms) + 1)
    for e, c in terms:
        out[e] = field.add(out[e], field(c))
    return Poly(field, out)
