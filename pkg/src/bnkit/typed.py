"""Bigraded type D structures over the Bar-Natan algebra.

A structure is a directed graph: generators tagged with an idempotent and a
bigrading, arrows labelled with algebra elements running from the source's
idempotent to the target's.  A label term ``a`` on ``x -> y`` must satisfy
``h(y) = h(x) + 1`` and ``q(y) = q(x) - q(a)``.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass
from typing import NamedTuple

from .algebra import (
    CIRCLE,
    DOT,
    AlgebraElement,
    ParseError,
    Vertex,
    dpow,
    grading,
    mul,
    parse_element,
    sword,
)
from .exact import Bigrading, Field, field as get_field


class Generator(NamedTuple):
    id: str
    idem: Vertex
    grading: Bigrading


class Arrow(NamedTuple):
    src: str
    dst: str
    label: AlgebraElement


def _as_field(c) -> Field:
    return c if isinstance(c, Field) else get_field(c)


@dataclass(frozen=True)
class TypeDStructure:
    field: Field
    generators: tuple[Generator, ...]
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self):
        gens = tuple(
            sorted(
                (Generator(g.id, g.idem, Bigrading(*g.grading)) for g in self.generators),
                key=lambda g: (g.grading.h, g.grading.q, g.id),
            )
        )
        ids = [g.id for g in gens]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate generator id")
        known = set(ids)
        seen = set()
        for a in self.arrows:
            for end in (a.src, a.dst):
                if end not in known:
                    raise ValueError(f"arrow {a.src} -> {a.dst} references unknown generator {end}")
            if (a.src, a.dst) in seen:
                raise ValueError(f"duplicate arrow {a.src} -> {a.dst}")
            if a.label.field != self.field:
                raise ValueError(f"arrow {a.src} -> {a.dst}: label over the wrong field")
            seen.add((a.src, a.dst))
        arrows = tuple(sorted(self.arrows, key=lambda a: (a.src, a.dst)))
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "arrows", arrows)

    def __getitem__(self, gid: str) -> Generator:
        for g in self.generators:
            if g.id == gid:
                return g
        raise KeyError(gid)

    def gen_map(self) -> dict[str, Generator]:
        return {g.id: g for g in self.generators}

    def successors(self) -> dict[str, list[Arrow]]:
        out = defaultdict(list)
        for a in self.arrows:
            out[a.src].append(a)
        return out

    def predecessors(self) -> dict[str, list[Arrow]]:
        out = defaultdict(list)
        for a in self.arrows:
            out[a.dst].append(a)
        return out


def single(idem: Vertex, h: int = 0, q: int = 0, c=2, gid: str = "g0") -> TypeDStructure:
    """One generator, no arrows: ``•`` is Q_0, ``∘`` the infinity tangle."""
    return TypeDStructure(_as_field(c), (Generator(gid, idem, Bigrading(h, q)),))


def validate(t: TypeDStructure) -> list[str]:
    """Idempotent compatibility, d^2 = 0 and arrow gradings; empty iff valid."""
    report = []
    gens = t.gen_map()
    for a in t.arrows:
        s, d = gens[a.src], gens[a.dst]
        where = f"arrow {a.src} -> {a.dst}"
        if not a.label:
            report.append(f"{where}: zero label")
        for p, _ in a.label:
            if p.start is not s.idem or p.end is not d.idem:
                report.append(
                    f"{where}: term {p} runs {p.start.value}->{p.end.value}, "
                    f"generators are {s.idem.value}->{d.idem.value}"
                )
            want = Bigrading(s.grading.h + 1, s.grading.q - grading(p).q)
            if d.grading != want:
                report.append(
                    f"{where}: term {p} needs target grading (h={want.h}, q={want.q}), "
                    f"found (h={d.grading.h}, q={d.grading.q})"
                )
    succ = t.successors()
    sq: dict[tuple[str, str], AlgebraElement] = {}
    for a in t.arrows:
        for b in succ.get(a.dst, ()):
            term = mul(b.label, a.label)
            key = (a.src, b.dst)
            sq[key] = sq[key] + term if key in sq else term
    for (x, z), e in sorted(sq.items()):
        if e:
            report.append(f"delta^2 nonzero from {x} to {z}: {e}")
    return report


def shift(t: TypeDStructure, dh: int, dq: int) -> TypeDStructure:
    return TypeDStructure(
        t.field,
        tuple(Generator(g.id, g.idem, g.grading.shift(dh, dq)) for g in t.generators),
        t.arrows,
    )


def _qn_labels(f: Field, n: int) -> list[AlgebraElement]:
    # S, D, SS, D, SS, ... read away from the • generator
    labels = []
    for k in range(1, abs(n) + 1):
        if k == 1:
            p = sword(DOT if n > 0 else CIRCLE, 1)
        elif k % 2 == 0:
            p = dpow(CIRCLE)
        else:
            p = sword(CIRCLE, 2)
        labels.append(AlgebraElement.of(f, p))
    return labels


def build_qn(n: int, c=2) -> TypeDStructure:
    """Type D structure of the rational tangle Q_n, oriented for the 0-closure.

    The • generator sits at (0, n); the other gradings follow from the arrow
    convention.  Generators are named ``g0 .. g|n|`` along the arrows.
    """
    f = _as_field(c)
    if n == 0:
        return single(DOT, 0, 0, f)
    labels = _qn_labels(f, n)
    size = abs(n) + 1
    gens: list[Generator] = []
    arrows: list[Arrow] = []
    if n > 0:
        g = Bigrading(0, n)
        gens.append(Generator("g0", DOT, g))
        for k, lab in enumerate(labels, 1):
            (p, _), = lab
            g = Bigrading(g.h + 1, g.q - grading(p).q)
            gens.append(Generator(f"g{k}", CIRCLE, g))
            arrows.append(Arrow(f"g{k - 1}", f"g{k}", lab))
    else:
        # walk backwards from the • end
        g = Bigrading(0, n)
        gens.append(Generator(f"g{size - 1}", DOT, g))
        for k, lab in enumerate(labels, 1):
            (p, _), = lab
            g = Bigrading(g.h - 1, g.q + grading(p).q)
            idx = size - 1 - k
            gens.append(Generator(f"g{idx}", CIRCLE, g))
            arrows.append(Arrow(f"g{idx}", f"g{idx + 1}", lab))
    return TypeDStructure(f, tuple(gens), tuple(arrows))


class RationalMatch(NamedTuple):
    n: int
    dh: int
    dq: int


def _chain(t: TypeDStructure) -> list[str] | None:
    ins, outs = defaultdict(int), defaultdict(int)
    for a in t.arrows:
        outs[a.src] += 1
        ins[a.dst] += 1
    if len(t.arrows) != len(t.generators) - 1:
        return None
    if any(v > 1 for v in ins.values()) or any(v > 1 for v in outs.values()):
        return None
    starts = [g.id for g in t.generators if ins[g.id] == 0]
    if len(starts) != 1:
        return None
    succ = {a.src: a.dst for a in t.arrows}
    chain = [starts[0]]
    while chain[-1] in succ:
        chain.append(succ[chain[-1]])
    return chain if len(chain) == len(t.generators) else None


def match_rational(t: TypeDStructure) -> tuple[RationalMatch | None, str]:
    """Like :func:`identify_rational` but also explains a failed match."""
    dots = [g for g in t.generators if g.idem is DOT]
    if len(dots) != 1:
        return None, f"expected exactly one • generator, found {len(dots)}"
    dot = dots[0]
    if len(t.generators) == 1 and not t.arrows:
        return RationalMatch(0, dot.grading.h, dot.grading.q), ""
    chain = _chain(t)
    if chain is None:
        return None, "arrows do not form a single zig-zag chain"
    if chain[0] == dot.id:
        n = len(chain) - 1
    elif chain[-1] == dot.id:
        n = -(len(chain) - 1)
    else:
        return None, "the • generator is not at an end of the chain"
    ref = build_qn(n, t.field)
    ref_chain = _chain(ref) or []
    ref_gens, gens = ref.gen_map(), t.gen_map()
    ref_dot = next(g for g in ref.generators if g.idem is DOT)
    dh = dot.grading.h - ref_dot.grading.h
    dq = dot.grading.q - ref_dot.grading.q
    labels = {(a.src, a.dst): a.label for a in t.arrows}
    ref_labels = {(a.src, a.dst): a.label for a in ref.arrows}
    for k, (x, rx) in enumerate(zip(chain, ref_chain)):
        g, rg = gens[x], ref_gens[rx]
        if g.idem is not rg.idem:
            return None, f"generator {x}: idempotent {g.idem.value}, Q_{n} has {rg.idem.value}"
        if g.grading != rg.grading.shift(dh, dq):
            return None, f"generator {x}: grading {tuple(g.grading)} breaks the Q_{n} pattern"
        if k:
            lab = labels[(chain[k - 1], x)]
            want = ref_labels[(ref_chain[k - 1], rx)]
            if lab != want:
                return None, f"arrow into {x}: label {lab}, Q_{n} has {want}"
    return RationalMatch(n, dh, dq), ""


def identify_rational(t: TypeDStructure) -> RationalMatch | None:
    """``(n, dh, dq)`` if ``t`` is ``shift(build_qn(n), dh, dq)`` up to renaming."""
    return match_rational(t)[0]


def theta_of_rational(t: TypeDStructure) -> int:
    """Ceiling of the slope of the (line-shaped) curve lift: the n of Q_n."""
    m, why = match_rational(t)
    if m is None:
        raise ValueError(f"not the type D structure of a rational tangle: {why}")
    return m.n


# -- file format --------------------------------------------------------------

HEADER = "typed v1"


def serialize_typed(t: TypeDStructure) -> str:
    lines = [HEADER, f"char {t.field.c}"]
    for g in t.generators:
        lines.append(f"gen {g.id} idem={g.idem.value} h={g.grading.h} q={g.grading.q}")
    for a in t.arrows:
        lines.append(f"arrow {a.src} -> {a.dst} label={a.label.to_text()}")
    return "\n".join(lines) + "\n"


_ID = r"[A-Za-z_][A-Za-z0-9_.\-]*"
_GEN = re.compile(
    rf"gen\s+(?P<id>{_ID})\s+idem=(?P<idem>[.o])\s+h=(?P<h>-?\d+)\s+q=(?P<q>-?\d+)\s*$"
)
_ARROW = re.compile(rf"arrow\s+(?P<src>{_ID})\s*->\s*(?P<dst>{_ID})\s+label=(?P<label>.*?)\s*$")


def _fail_position(line: str, pattern_parts: list[tuple[str, str]]) -> tuple[int, str]:
    """Column and expected token at which ``line`` stops matching a prefix sequence."""
    pos = 0
    for regex, expected in pattern_parts:
        m = re.compile(regex).match(line, pos)
        if not m:
            return pos + 1, expected
        pos = m.end()
    return pos + 1, "end of line"


_GEN_PARTS = [
    (r"gen\s+", "'gen'"),
    (rf"{_ID}\s+", "generator id"),
    (r"idem=[.o]\s+", "'idem=.' or 'idem=o'"),
    (r"h=-?\d+\s+", "'h=<int>'"),
    (r"q=-?\d+\s*$", "'q=<int>'"),
]
_ARROW_PARTS = [
    (r"arrow\s+", "'arrow'"),
    (rf"{_ID}\s*", "source id"),
    (r"->\s*", "'->'"),
    (rf"{_ID}\s+", "target id"),
    (r"label=", "'label='"),
]


def parse_typed(text: str) -> TypeDStructure:
    """Parse the ``typed v1`` format; errors carry line and column."""
    f = None
    gens: list[Generator] = []
    arrows: list[tuple] = []
    seen_header = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        stripped = line.lstrip()
        indent = len(line) - len(stripped)
        if not stripped:
            continue
        if not seen_header:
            if stripped != HEADER:
                raise ParseError(f"expected header {HEADER!r}", lineno, indent + 1)
            seen_header = True
            continue
        word = stripped.split()[0]
        if word == "char":
            m = re.fullmatch(r"char\s+(\d+)", stripped)
            if not m:
                raise ParseError("expected 'char <int>'", lineno, indent + 1)
            if f is not None:
                raise ParseError("duplicate 'char' line", lineno, indent + 1)
            try:
                f = get_field(int(m[1]))
            except ValueError as e:
                raise ParseError(str(e), lineno, indent + m.start(1) + 1) from None
        elif word == "gen":
            if f is None:
                raise ParseError("'char' must precede generators", lineno, indent + 1)
            m = _GEN.match(stripped)
            if not m:
                col, exp = _fail_position(stripped, _GEN_PARTS)
                raise ParseError(f"expected {exp}", lineno, indent + col)
            g = Generator(m["id"], Vertex(m["idem"]), Bigrading(int(m["h"]), int(m["q"])))
            if any(x.id == g.id for x in gens):
                raise ParseError(f"duplicate generator {g.id!r}", lineno, indent + m.start("id") + 1)
            gens.append(g)
        elif word == "arrow":
            if f is None:
                raise ParseError("'char' must precede arrows", lineno, indent + 1)
            m = _ARROW.match(stripped)
            if not m:
                col, exp = _fail_position(stripped, _ARROW_PARTS)
                raise ParseError(f"expected {exp}", lineno, indent + col)
            arrows.append(
                (lineno, indent, m["src"], m["dst"], m["label"],
                 m.start("label"), m.start("src"), m.start("dst"))
            )
        else:
            raise ParseError(
                f"expected 'char', 'gen' or 'arrow', found {word!r}", lineno, indent + 1
            )
    if not seen_header:
        raise ParseError(f"expected header {HEADER!r}", 1, 1)
    if f is None:
        raise ParseError("missing 'char' line", 1, 1)
    known = {g.id for g in gens}
    built: list[Arrow] = []
    pairs = set()
    for lineno, indent, src, dst, label, lcol, scol, dcol in arrows:
        for gid, col in ((src, scol), (dst, dcol)):
            if gid not in known:
                raise ParseError(f"undeclared generator {gid!r}", lineno, indent + col + 1)
        if (src, dst) in pairs:
            raise ParseError(f"duplicate arrow {src} -> {dst}", lineno, indent + 1)
        pairs.add((src, dst))
        built.append(Arrow(src, dst, parse_element(label, f, lineno, indent + lcol + 1)))
    return TypeDStructure(f, tuple(gens), tuple(built))


def load_typed(path) -> TypeDStructure:
    with open(path, encoding="utf-8") as fh:
        return parse_typed(fh.read())

