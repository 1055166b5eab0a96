"""Cube-of-resolutions Bar-Natan complexes of 2-strand braid closures.

The diagram of the closure of ``σ1^n`` has ``|n|`` crossings stacked along
the braid.  Segment ``(k, s)`` is the arc of strand ``s`` entering crossing
``k`` from below; the closure identifies the top of crossing ``|n|-1`` with
the bottom of crossing 0.  Resolving a crossing vertically joins
``(k, s)`` to ``(k+1, s)``; horizontally it joins ``(k, 0)`` to ``(k, 1)``
and ``(k+1, 0)`` to ``(k+1, 1)``.

Coefficients live in ``A = F[H][X]/(X^2 - H X)`` with ``q(1) = 1``,
``q(X) = -1``.  For ``σ1`` the 0-smoothing is vertical; for ``σ1^{-1}``
it is horizontal.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .exact import (
    Bigrading,
    Field,
    FreeBigradedComplex,
    HomologySummary,
    Poly,
    field as get_field,
    free_homology,
    specialized_homology_dims,
)

MAX_CROSSINGS = 20


class ScaleError(ValueError):
    pass


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)

    def classes(self) -> list[list]:
        groups: dict = {}
        for x in self.parent:
            groups.setdefault(self.find(x), []).append(x)
        return sorted(sorted(g) for g in groups.values())


@dataclass(frozen=True)
class LinkDiagram:
    """Closure of the 2-strand braid ``σ1^n``.

    ``orientation`` is ``"parallel"`` (both strands upward) or
    ``"antiparallel"`` (the component through segment (0, 1) reversed;
    only meaningful for 2-component closures).  The basepoint sits on
    segment ``(0, basepoint_strand)``.
    """

    n: int
    orientation: str = "parallel"
    basepoint_strand: int = 0

    def __post_init__(self):
        if self.orientation not in ("parallel", "antiparallel"):
            raise ValueError(f"unknown orientation {self.orientation!r}")
        if self.orientation == "antiparallel" and self.components == 1:
            raise ValueError("a knot has no antiparallel orientation")
        if self.basepoint_strand not in (0, 1):
            raise ValueError("basepoint strand must be 0 or 1")

    @property
    def size(self) -> int:
        return abs(self.n)

    def segments(self) -> list[tuple[int, int]]:
        return [(k, s) for k in range(max(self.size, 1)) for s in (0, 1)]

    def component_classes(self) -> list[list[tuple[int, int]]]:
        uf = _UnionFind(self.segments())
        for k in range(self.size):
            # a crossing swaps strands
            nxt = (k + 1) % self.size
            uf.union((k, 0), (nxt, 1))
            uf.union((k, 1), (nxt, 0))
        return uf.classes()

    @property
    def components(self) -> int:
        return len(self.component_classes())

    def component_of(self, seg: tuple[int, int]) -> int:
        for idx, cls in enumerate(self.component_classes()):
            if seg in cls:
                return idx
        raise KeyError(seg)

    def crossing_signs(self) -> list[int]:
        braid_sign = 1 if self.n > 0 else -1
        classes = self.component_classes()
        reversed_comp = None
        if self.orientation == "antiparallel":
            reversed_comp = next(i for i, c in enumerate(classes) if (0, 1) in c)
        signs = []
        for k in range(self.size):
            dirs = []
            for s in (0, 1):
                comp = next(i for i, c in enumerate(classes) if (k, s) in c)
                dirs.append(-1 if comp == reversed_comp else 1)
            signs.append(braid_sign * dirs[0] * dirs[1])
        return signs

    @property
    def n_plus(self) -> int:
        return sum(1 for s in self.crossing_signs() if s > 0)

    @property
    def n_minus(self) -> int:
        return sum(1 for s in self.crossing_signs() if s < 0)

    def reversed_component(self) -> "LinkDiagram":
        other = "antiparallel" if self.orientation == "parallel" else "parallel"
        return LinkDiagram(self.n, other, self.basepoint_strand)

    def circles(self, word: int) -> list[list[tuple[int, int]]]:
        """Circles of the resolution ``word`` (bit k set = 1-smoothing at crossing k)."""
        uf = _UnionFind(self.segments())
        size = self.size
        for k in range(size):
            bit = (word >> k) & 1
            vertical = (bit == 0) == (self.n > 0)
            nxt = (k + 1) % size
            if vertical:
                uf.union((k, 0), (nxt, 0))
                uf.union((k, 1), (nxt, 1))
            else:
                uf.union((k, 0), (k, 1))
                uf.union((nxt, 0), (nxt, 1))
        return uf.classes()


def torus_diagram(n: int) -> LinkDiagram:
    return LinkDiagram(n, "parallel", 0)


def linking_number(d: LinkDiagram) -> int:
    """Half the signed count of inter-component crossings.

    Also recounts negative crossings after reversing one component and
    checks ``n_-(reversed) = n_-(d) + 2 lk``.
    """
    if d.components != 2:
        raise ValueError(f"linking number needs 2 components, diagram has {d.components}")
    classes = d.component_classes()
    total = 0
    for k, sign in enumerate(d.crossing_signs()):
        a = next(i for i, c in enumerate(classes) if (k, 0) in c)
        b = next(i for i, c in enumerate(classes) if (k, 1) in c)
        if a != b:
            total += sign
    lk = total // 2
    if total % 2:
        raise AssertionError("odd inter-component crossing count")
    rev = d.reversed_component()
    if rev.n_minus != d.n_minus + 2 * lk:
        raise AssertionError(
            f"reversal recount failed: n_-={d.n_minus}, reversed n_-={rev.n_minus}, lk={lk}"
        )
    return lk


def _check_scale(d: LinkDiagram) -> None:
    if d.size > MAX_CROSSINGS:
        raise ScaleError(f"|n| = {d.size} exceeds the cube scale guard {MAX_CROSSINGS}")


def _edge_sign(word: int, k: int) -> int:
    return -1 if bin(word & ((1 << k) - 1)).count("1") % 2 else 1


def cbn_complex(d: LinkDiagram, c=2, reduced: bool = False) -> FreeBigradedComplex:
    """Bar-Natan chain complex over F_c[H] (optionally reduced at the basepoint).

    Gradings: ``h = |v| - n_-`` and ``q = #1 - #X + |v| + n_+ - 2 n_-``,
    plus 1 for the reduced complex, whose generators put X on the marked
    circle.
    """
    _check_scale(d)
    f: Field = c if isinstance(c, Field) else get_field(c)
    size = d.size
    base = (0, d.basepoint_strand)
    n_plus, n_minus = d.n_plus, d.n_minus
    one = Poly.const(f, 1)
    hpoly = Poly.h(f)

    circles_at: dict[int, list[list[tuple[int, int]]]] = {}
    gens: list[tuple[tuple, Bigrading]] = []
    index: dict[tuple[int, tuple[int, ...]], int] = {}
    by_word: dict[int, list[tuple[tuple[int, ...], int]]] = {}
    for word in range(1 << size):
        circs = d.circles(word)
        circles_at[word] = circs
        weight = bin(word).count("1")
        marked = next(i for i, cl in enumerate(circs) if base in cl)
        for labels in product((1, 0), repeat=len(circs)):  # 1 = "1", 0 = "X"
            if reduced and labels[marked] != 0:
                continue
            ones = sum(labels)
            q = ones - (len(labels) - ones) + weight + n_plus - 2 * n_minus
            if reduced:
                q += 1
            index[(word, labels)] = len(gens)
            by_word.setdefault(word, []).append((labels, len(gens)))
            label_text = "".join("1" if x else "X" for x in labels)
            gens.append(((word, label_text), Bigrading(weight - n_minus, q)))

    diff: dict[tuple[int, int], Poly] = {}
    for word in range(1 << size):
        src_c = circles_at[word]
        src_of = {seg: i for i, cl in enumerate(src_c) for seg in cl}
        for k in range(size):
            if (word >> k) & 1:
                continue
            tgt_word = word | (1 << k)
            tgt_c = circles_at[tgt_word]
            tgt_of = {seg: i for i, cl in enumerate(tgt_c) for seg in cl}
            sign = _edge_sign(word, k)
            touched = {(k, 0), (k, 1), ((k + 1) % size, 0), ((k + 1) % size, 1)}
            src_inv = sorted({src_of[s] for s in touched})
            tgt_inv = sorted({tgt_of[s] for s in touched})
            # circles away from the crossing carry their label across
            carry = {i: tgt_of[cl[0]] for i, cl in enumerate(src_c) if i not in src_inv}
            for labels, col in by_word.get(word, ()):
                for out_labels, coeff in _edge_map(labels, src_inv, tgt_inv, carry, len(tgt_c), one, hpoly):
                    row = index.get((tgt_word, out_labels))
                    if row is None:
                        continue
                    term = coeff.scale(sign)
                    key = (row, col)
                    diff[key] = diff[key] + term if key in diff else term
    return FreeBigradedComplex(f, gens, diff)


def _edge_map(labels, src_inv, tgt_inv, carry, n_tgt, one, hpoly):
    """Merge (m) or split (Δ) on the circles at one crossing."""
    base = [None] * n_tgt
    for i, j in carry.items():
        base[j] = labels[i]
    if len(src_inv) == 2 and len(tgt_inv) == 1:
        a, b = labels[src_inv[0]], labels[src_inv[1]]
        (t,) = tgt_inv
        out = list(base)
        if a and b:
            out[t] = 1
            yield tuple(out), one
        elif a or b:
            out[t] = 0
            yield tuple(out), one
        else:
            out[t] = 0
            yield tuple(out), hpoly
    elif len(src_inv) == 1 and len(tgt_inv) == 2:
        x = labels[src_inv[0]]
        t1, t2 = tgt_inv
        if x:
            for l1, l2, coeff in ((1, 0, one), (0, 1, one), (1, 1, -hpoly)):
                out = list(base)
                out[t1], out[t2] = l1, l2
                yield tuple(out), coeff
        else:
            out = list(base)
            out[t1], out[t2] = 0, 0
            yield tuple(out), one
    else:
        raise AssertionError("a smoothing change must merge or split exactly one circle")


def cube_homology(d: LinkDiagram, c=2, reduced: bool = True) -> HomologySummary:
    return free_homology(cbn_complex(d, c, reduced))


def lee_homology_dims(d: LinkDiagram, c=2) -> dict[int, int]:
    """Homology dimensions of the H = 1 specialisation, per homological degree."""
    return specialized_homology_dims(cbn_complex(d, c, reduced=False), 1)
