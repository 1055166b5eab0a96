"""The Bar-Natan algebra: paths in the two-vertex quiver with loops D and
connecting arrows S, modulo the relations that any D next to an S is zero.

Every nonzero path is an idempotent, a power ``D^k`` at one vertex, or an
alternating word ``S^len``.  Products are written as composition:
``mul(a, b)`` is "b first, then a".
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Mapping

from .exact import Bigrading, Field, Poly


class Vertex(Enum):
    DOT = "."
    CIRCLE = "o"

    def other(self) -> "Vertex":
        return Vertex.CIRCLE if self is Vertex.DOT else Vertex.DOT

    def __repr__(self) -> str:
        return "•" if self is Vertex.DOT else "∘"


DOT, CIRCLE = Vertex.DOT, Vertex.CIRCLE


class ParseError(ValueError):
    """Malformed input, with 1-based line and column."""

    def __init__(self, message: str, line: int = 1, col: int = 1):
        self.message, self.line, self.col = message, line, col
        super().__init__(f"line {line}, column {col}: {message}")


@dataclass(frozen=True)
class BasisPath:
    """``kind`` is ``"1"`` (idempotent), ``"D"`` (``D^n``) or ``"S"`` (``S^n``);
    ``start`` is the vertex the path leaves from."""

    kind: str
    start: Vertex
    n: int = 0

    def __post_init__(self):
        if self.kind == "1":
            if self.n != 0:
                raise ValueError("idempotents carry no exponent")
        elif self.kind in ("D", "S"):
            if self.n < 1:
                raise ValueError(f"{self.kind}-path needs length >= 1")
        else:
            raise ValueError(f"unknown path kind {self.kind!r}")

    # ordering on Enum members is not defined, so compare on a plain key
    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def sort_key(self) -> tuple:
        return (self.start.value, "1DS".index(self.kind), self.n)

    @property
    def end(self) -> Vertex:
        if self.kind == "S" and self.n % 2:
            return self.start.other()
        return self.start

    @property
    def grading(self) -> Bigrading:
        return grading(self)

    def __str__(self) -> str:
        if self.kind == "1":
            return f"1{self.start.value}"
        return f"{self.kind}^{self.n}{self.start.value}"


def idem(v: Vertex) -> BasisPath:
    return BasisPath("1", v)


def dpow(v: Vertex, k: int = 1) -> BasisPath:
    return BasisPath("D", v, k)


def sword(v: Vertex, length: int = 1) -> BasisPath:
    return BasisPath("S", v, length)


def grading(p: BasisPath) -> Bigrading:
    if p.kind == "1":
        return Bigrading(0, 0)
    if p.kind == "D":
        return Bigrading(0, -2 * p.n)
    return Bigrading(0, -p.n)


def mul_paths(a: BasisPath, b: BasisPath) -> BasisPath | None:
    """Composite "b then a", or ``None`` when it vanishes."""
    if b.end is not a.start:
        return None
    if a.kind == "1":
        return b
    if b.kind == "1":
        return a
    if a.kind != b.kind:
        return None
    return BasisPath(a.kind, b.start, a.n + b.n)


class AlgebraElement:
    """Finite linear combination of basis paths with nonzero coefficients."""

    __slots__ = ("field", "_terms")

    def __init__(self, field: Field, terms: Mapping[BasisPath, object] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[BasisPath, object] = {}
        for p, c in items:
            acc[p] = field.add(acc.get(p, 0), field(c))
        self.field = field
        self._terms = {p: c for p, c in sorted(acc.items()) if c}

    @classmethod
    def of(cls, field: Field, path: BasisPath, coeff=1) -> "AlgebraElement":
        return cls(field, {path: coeff})

    @classmethod
    def zero(cls, field: Field) -> "AlgebraElement":
        return cls(field, {})

    @property
    def terms(self) -> Mapping[BasisPath, object]:
        return dict(self._terms)

    def __iter__(self) -> Iterator[tuple[BasisPath, object]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, AlgebraElement):
            return self.field == other.field and self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.c, tuple(self._terms.items())))

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(self.field, list(self) + list(other))

    def __neg__(self) -> "AlgebraElement":
        return self.scale(-1)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, c) -> "AlgebraElement":
        f = self.field
        c = f(c)
        return AlgebraElement(f, [(p, f.mul(c, x)) for p, x in self])

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return mul(self, other)

    def endpoints(self) -> set[tuple[Vertex, Vertex]]:
        return {(p.start, p.end) for p in self._terms}

    def components(self) -> dict[int, "AlgebraElement"]:
        """Homogeneous components keyed by quantum degree."""
        parts: dict[int, list] = {}
        for p, c in self:
            parts.setdefault(grading(p).q, []).append((p, c))
        return {q: AlgebraElement(self.field, ts) for q, ts in sorted(parts.items())}

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{self.field.format(c)}*{p}" for p, c in self)

    __str__ = to_text

    def __repr__(self) -> str:
        return f"AlgebraElement({self.to_text()})"


def mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """``a ∘ b``: bilinear extension of path composition (b first)."""
    if a.field != b.field:
        raise ValueError("field mismatch")
    f = a.field
    out = []
    for pa, ca in a:
        for pb, cb in b:
            p = mul_paths(pa, pb)
            if p is not None:
                out.append((p, f.mul(ca, cb)))
    return AlgebraElement(f, out)


def h_element(field: Field) -> AlgebraElement:
    """``H = SS_• - D_• + SS_∘ - D_∘``."""
    return AlgebraElement(
        field,
        [(sword(DOT, 2), 1), (dpow(DOT), -1), (sword(CIRCLE, 2), 1), (dpow(CIRCLE), -1)],
    )


def basis_paths(max_len: int) -> list[BasisPath]:
    """All basis paths of word length at most ``max_len`` (idempotents included)."""
    out = []
    for v in (DOT, CIRCLE):
        out.append(idem(v))
        for k in range(1, max_len + 1):
            out.append(dpow(v, k))
            out.append(sword(v, k))
    return out


# -- F[H]-bases of morphism spaces -------------------------------------------

ATOMS_SAME = ("1", "D")
ATOMS_DIFF = ("S",)


def atoms(src: Vertex, dst: Vertex) -> tuple[str, ...]:
    """Free F[H]-basis labels for paths from ``src`` to ``dst``."""
    return ATOMS_SAME if src is dst else ATOMS_DIFF


def atom_path(atom: str, src: Vertex) -> BasisPath:
    return {"1": idem, "D": dpow, "S": sword}[atom](src)


@dataclass(frozen=True)
class KHDecomposition:
    """Coefficients in ``F[H]`` of an element on the standard basis atoms."""

    src: Vertex
    dst: Vertex
    coeffs: Mapping[str, Poly]

    def __getitem__(self, atom: str) -> Poly:
        return self.coeffs[atom]

    def expand(self) -> AlgebraElement:
        return expand_kH(self)


def decompose_kH(x: AlgebraElement, src: Vertex, dst: Vertex) -> KHDecomposition:
    """Write ``x`` (all terms from ``src`` to ``dst``) over F[H].

    Uses ``S^2m = H^m 1 + H^(m-1) D``, ``D^k = (-H)^(k-1) D`` and
    ``S^(2m+1) = H^m S``.
    """
    f = x.field
    acc = {a: [0] for a in atoms(src, dst)}

    def add(atom: str, power: int, c) -> None:
        cs = acc[atom]
        if len(cs) <= power:
            cs.extend([0] * (power + 1 - len(cs)))
        cs[power] = f.add(cs[power], c)

    for p, c in x:
        if p.start is not src or p.end is not dst:
            raise ValueError(
                f"term {p} runs {p.start!r}->{p.end!r}, expected {src!r}->{dst!r}"
            )
        if p.kind == "1":
            add("1", 0, c)
        elif p.kind == "D":
            sign = -1 if (p.n - 1) % 2 else 1
            add("D", p.n - 1, f.mul(c, sign))
        elif src is dst:
            m = p.n // 2
            add("1", m, c)
            add("D", m - 1, c)
        else:
            add("S", p.n // 2, c)
    return KHDecomposition(src, dst, {a: Poly(f, cs) for a, cs in acc.items()})


def h_power(field: Field, k: int) -> AlgebraElement:
    out = AlgebraElement.of(field, idem(DOT)) + AlgebraElement.of(field, idem(CIRCLE))
    h = h_element(field)
    for _ in range(k):
        out = mul(h, out)
    return out


def expand_kH(d: KHDecomposition) -> AlgebraElement:
    """Inverse of :func:`decompose_kH`, computed with the algebra's own H."""
    f = next(iter(d.coeffs.values())).field if d.coeffs else None
    if f is None:
        raise ValueError("empty decomposition")
    out = AlgebraElement.zero(f)
    for atom, poly in d.coeffs.items():
        base = AlgebraElement.of(f, atom_path(atom, d.src))
        for k, c in enumerate(poly.coeffs):
            if c:
                out = out + mul(h_power(f, k), base).scale(c)
    return out


# -- text grammar ------------------------------------------------------------

_TERM = re.compile(
    r"\s*(?:(?P<coef>[+-]?\d+(?:/\d+)?)\s*\*\s*)?"
    r"(?P<atom>1(?P<iv>[.o])|(?P<kind>[DS])\^(?P<n>\d+)(?P<v>[.o]))\s*"
)


def parse_element(text: str, field: Field, line: int = 1, col: int = 1) -> AlgebraElement:
    """Parse ``1*S^2. + 2*D^1.``; ``col`` is the column where ``text`` begins."""
    pos = 0
    terms = []
    if text.strip() == "0":
        return AlgebraElement.zero(field)
    while True:
        m = _TERM.match(text, pos)
        if not m:
            at = len(text) - len(text[pos:].lstrip())
            raise ParseError(
                f"expected a term like '2*S^1.' or '1o', found {text[at:at + 12]!r}",
                line,
                col + at,
            )
        coef = field.parse(m["coef"]) if m["coef"] else field(1)
        if m["iv"]:
            path = idem(Vertex(m["iv"]))
        else:
            n = int(m["n"])
            if n < 1:
                raise ParseError("path exponent must be >= 1", line, col + m.start("n"))
            path = BasisPath(m["kind"], Vertex(m["v"]), n)
        terms.append((path, coef))
        pos = m.end()
        if pos == len(text):
            break
        if text[pos] != "+":
            raise ParseError(f"expected '+' between terms, found {text[pos]!r}", line, col + pos)
        pos += 1
    return AlgebraElement(field, terms)
