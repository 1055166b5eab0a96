"""Finitely generated free bigraded complexes over F_c[H] and their homology.

Differentials have bidegree (+1, 0) and H carries quantum degree -2, so a
homogeneous entry ``c*H^m`` from generator ``i`` to generator ``j`` needs
``h_j = h_i + 1`` and ``q_j = q_i + 2m``.

Homology is computed by graded elimination: repeatedly take an entry of
least H-degree ``m`` (it divides everything in its row and column), change
bases so that it splits off a summand ``F[H] --H^m--> F[H]``, and record a
torsion summand ``F[H]/(H^m)`` at the target generator when ``m > 0``.
This is a Smith normal form computed in place on the whole complex.
Generators left with no differential are the towers.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field as dc_field
from types import MappingProxyType
from typing import Hashable, Iterable, Mapping, NamedTuple, Sequence

from .field import Field
from .poly import Poly


class Bigrading(NamedTuple):
    h: int
    q: int

    def shift(self, dh: int = 0, dq: int = 0) -> "Bigrading":
        return Bigrading(self.h + dh, self.q + dq)

    def __str__(self) -> str:
        return f"({self.h}, {self.q})"


class InvalidComplexError(ValueError):
    def __init__(self, violations: Sequence[str]):
        self.violations = list(violations)
        head = "; ".join(self.violations[:5])
        more = f" (+{len(self.violations) - 5} more)" if len(self.violations) > 5 else ""
        super().__init__(f"invalid complex: {head}{more}")


class FreeBigradedComplex:
    """Free F_c[H]-complex on bigraded generators.

    ``differential`` maps ``(j, i)`` (target index, source index) to a
    nonzero :class:`Poly`; missing keys are zero entries.
    """

    def __init__(
        self,
        field: Field,
        generators: Iterable[tuple[Hashable, Bigrading]],
        differential: Mapping[tuple[int, int], Poly] | None = None,
    ):
        self.field = field
        self.generators = tuple((gid, Bigrading(*gr)) for gid, gr in generators)
        d = {}
        for (j, i), p in (differential or {}).items():
            if p:
                if p.field != field:
                    raise ValueError("entry over the wrong field")
                d[(j, i)] = p
        self.differential = MappingProxyType(d)

    @classmethod
    def from_matrix(cls, field: Field, generators, matrix: Sequence[Sequence[Poly]]):
        d = {}
        for j, row in enumerate(matrix):
            for i, p in enumerate(row):
                if p:
                    d[(j, i)] = p
        return cls(field, generators, d)

    def __len__(self) -> int:
        return len(self.generators)

    def __repr__(self) -> str:
        return (
            f"FreeBigradedComplex({self.field.name}, {len(self.generators)} generators, "
            f"{len(self.differential)} entries)"
        )

    def grading(self, i: int) -> Bigrading:
        return self.generators[i][1]

    def matrix(self) -> list[list[Poly]]:
        n = len(self.generators)
        zero = Poly.zero(self.field)
        m = [[zero] * n for _ in range(n)]
        for (j, i), p in self.differential.items():
            m[j][i] = p
        return m

    def block(self, h: int) -> tuple[list[int], list[int], list[list[Poly]]]:
        """Differential from homological degree ``h`` to ``h + 1`` as a matrix.

        Returns ``(source indices, target indices, matrix)`` with the
        matrix indexed ``[target][source]``.
        """
        src = [i for i, (_, g) in enumerate(self.generators) if g.h == h]
        dst = [j for j, (_, g) in enumerate(self.generators) if g.h == h + 1]
        pos = {j: r for r, j in enumerate(dst)}
        spos = {i: c for c, i in enumerate(src)}
        zero = Poly.zero(self.field)
        m = [[zero] * len(src) for _ in dst]
        for (j, i), p in self.differential.items():
            if i in spos and j in pos:
                m[pos[j]][spos[i]] = p
        return src, dst, m

    def homological_degrees(self) -> list[int]:
        return sorted({g.h for _, g in self.generators})

    def shifted(self, dh: int, dq: int) -> "FreeBigradedComplex":
        return FreeBigradedComplex(
            self.field,
            [(gid, g.shift(dh, dq)) for gid, g in self.generators],
            self.differential,
        )


@dataclass(frozen=True)
class HomologySummary:
    """Towers ``F[H]`` and torsion summands ``F[H]/(H^ord)`` with bigradings."""

    towers: tuple[Bigrading, ...] = ()
    torsion: tuple[tuple[Bigrading, int], ...] = dc_field(default=())

    def __post_init__(self):
        towers = tuple(sorted(Bigrading(*t) for t in self.towers))
        torsion = tuple(sorted((Bigrading(*g), int(o)) for g, o in self.torsion))
        for _, o in torsion:
            if o < 1:
                raise ValueError(f"torsion order must be >= 1, got {o}")
        object.__setattr__(self, "towers", towers)
        object.__setattr__(self, "torsion", torsion)

    def shift(self, dh: int, dq: int) -> "HomologySummary":
        return HomologySummary(
            tuple(t.shift(dh, dq) for t in self.towers),
            tuple((g.shift(dh, dq), o) for g, o in self.torsion),
        )

    @property
    def tower_hs(self) -> list[int]:
        return sorted(t.h for t in self.towers)

    def dim_at(self, h: int, q: int) -> int:
        """F-dimension of the homology in bigrading (h, q); H lowers q by 2."""
        total = sum(1 for t in self.towers if t.h == h and t.q >= q and (t.q - q) % 2 == 0)
        for g, o in self.torsion:
            if g.h == h and 0 <= g.q - q < 2 * o and (g.q - q) % 2 == 0:
                total += 1
        return total

    def lines(self) -> list[str]:
        rows = [(t.h, t.q, "tower", 0) for t in self.towers]
        rows += [(g.h, g.q, "torsion", o) for g, o in self.torsion]
        out = []
        for h, q, kind, o in sorted(rows):
            if kind == "tower":
                out.append(f"tower h={h} q={q}")
            else:
                out.append(f"torsion h={h} q={q} ord={o}")
        return out

    def to_text(self) -> str:
        return "".join(line + "\n" for line in self.lines())

    @classmethod
    def from_text(cls, text: str) -> "HomologySummary":
        towers, torsion = [], []
        for n, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line:
                continue
            kind, *fields = line.split()
            kv = dict(f.split("=", 1) for f in fields)
            g = Bigrading(int(kv["h"]), int(kv["q"]))
            if kind == "tower":
                towers.append(g)
            elif kind == "torsion":
                torsion.append((g, int(kv["ord"])))
            else:
                raise ValueError(f"line {n}: unknown summand kind {kind!r}")
        return cls(tuple(towers), tuple(torsion))

    def to_dict(self) -> dict:
        return {
            "towers": [{"h": t.h, "q": t.q} for t in self.towers],
            "torsion": [{"h": g.h, "q": g.q, "ord": o} for g, o in self.torsion],
        }

    def diff(self, other: "HomologySummary") -> list[str]:
        """Lines present in exactly one of the two summaries (``-`` self, ``+`` other)."""
        from collections import Counter

        a, b = Counter(self.lines()), Counter(other.lines())
        out = [f"- {line}" for line in sorted((a - b).elements())]
        out += [f"+ {line}" for line in sorted((b - a).elements())]
        return out


def _entry_degree(c: FreeBigradedComplex, j: int, i: int) -> int | None:
    gi, gj = c.grading(i), c.grading(j)
    dq = gj.q - gi.q
    if dq < 0 or dq % 2:
        return None
    return dq // 2


def validate_complex(c: FreeBigradedComplex) -> list[str]:
    """All homogeneity violations and nonzero entries of d^2; empty iff valid."""
    report = []
    ids = [gid for gid, _ in c.generators]
    for (j, i), p in sorted(c.differential.items()):
        gi, gj = c.grading(i), c.grading(j)
        where = f"entry {ids[i]} -> {ids[j]}"
        if gj.h != gi.h + 1:
            report.append(f"{where}: homological degree {gi.h} -> {gj.h}, expected +1")
        if not p.is_monomial():
            report.append(f"{where}: entry {p} is not homogeneous")
            continue
        m = p.degree
        if gj.q - gi.q != 2 * m:
            report.append(
                f"{where}: entry {p} needs quantum rise {2 * m}, found {gj.q - gi.q}"
            )
    outgoing = defaultdict(list)
    for (j, i), p in c.differential.items():
        outgoing[i].append((j, p))
    sq: dict[tuple[int, int], Poly] = {}
    for i, targets in outgoing.items():
        for j, p in targets:
            for k, r in outgoing.get(j, ()):
                key = (k, i)
                sq[key] = sq.get(key, Poly.zero(c.field)) + r * p
    for (k, i), p in sorted(sq.items()):
        if p:
            report.append(f"d^2 nonzero: {ids[i]} -> {ids[k]} has coefficient {p}")
    return report


class _Sparse:
    """Scalar sparse matrix of the differential, entries keyed both ways."""

    def __init__(self, field: Field):
        self.f = field
        self.out: dict[int, dict[int, object]] = defaultdict(dict)
        self.inn: dict[int, dict[int, object]] = defaultdict(dict)

    def set(self, i: int, j: int, v) -> None:
        if v:
            self.out[i][j] = v
            self.inn[j][i] = v
        else:
            self.out[i].pop(j, None)
            self.inn[j].pop(i, None)

    def eliminate(self, i: int, j: int) -> None:
        f = self.f
        p = self.out[i][j]
        col = [(y, a) for y, a in self.out[i].items() if y != j]
        row = [(x, a) for x, a in self.inn[j].items() if x != i]
        for x, ajx in row:
            factor = f.div(ajx, p)
            ox = self.out[x]
            for y, ayi in col:
                self.set(x, y, f.sub(ox.get(y, 0), f.mul(factor, ayi)))
        for g in (i, j):
            for y in list(self.out.pop(g, {})):
                self.inn[y].pop(g, None)
            for x in list(self.inn.pop(g, {})):
                self.out[x].pop(g, None)

    def edges(self):
        for i, targets in self.out.items():
            for j in targets:
                yield i, j


def free_homology(c: FreeBigradedComplex, check: bool = True) -> HomologySummary:
    """Towers and torsion of the homology of a valid free bigraded complex."""
    if check:
        report = validate_complex(c)
        if report:
            raise InvalidComplexError(report)
    f = c.field
    qs = [g.q for _, g in c.generators]
    sp = _Sparse(f)
    for (j, i), p in c.differential.items():
        sp.set(i, j, p.lead)

    def deg(i: int, j: int) -> int:
        return (qs[j] - qs[i]) // 2

    alive = set(range(len(c.generators)))
    torsion = []
    m = 0
    while True:
        pending = sorted((i, j) for i, j in sp.edges() if deg(i, j) == m)
        if not pending:
            degs = [deg(i, j) for i, j in sp.edges()]
            if not degs:
                break
            m = min(degs)
            continue
        for i, j in pending:
            if j not in sp.out.get(i, ()):
                continue
            sp.eliminate(i, j)
            alive.discard(i)
            alive.discard(j)
            if m > 0:
                torsion.append((c.grading(j), m))
    towers = [c.grading(i) for i in sorted(alive)]
    return HomologySummary(tuple(towers), tuple(torsion))


def specialized_homology_dims(c: FreeBigradedComplex, value) -> dict[int, int]:
    """Dimension per homological degree of ``H(C)`` after substituting ``H = value``.

    The quantum grading is not preserved by the substitution and is not
    reported.
    """
    f = c.field
    value = f(value)
    sp = _Sparse(f)
    for (j, i), p in c.differential.items():
        sp.set(i, j, p(value))
    alive = set(range(len(c.generators)))
    while True:
        pending = sorted(sp.edges())
        if not pending:
            break
        for i, j in pending:
            if j in sp.out.get(i, ()):
                sp.eliminate(i, j)
                alive.discard(i)
                alive.discard(j)
    dims: dict[int, int] = defaultdict(int)
    for i in alive:
        dims[c.grading(i).h] += 1
    return dict(sorted(dims.items()))
