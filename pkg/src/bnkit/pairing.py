"""Morphism complexes of type D structures and closures of tangles.

``Mor(T1, T2)`` is free over F[H] on triples ``(x1, x2, atom)`` where the
atom runs over the F[H]-basis of paths from ``idem(x1)`` to ``idem(x2)``
({1, D} for equal idempotents, {S} otherwise).  Such a morphism has grading
``gr(x2) - gr(x1) + gr(atom)`` and differential
``D(f) = f∘δ1 - (-1)^h(f) δ2∘f``.
"""

from __future__ import annotations

from .algebra import DOT, AlgebraElement, atom_path, atoms, decompose_kH, grading, mul
from .exact import Bigrading, FreeBigradedComplex, HomologySummary, Poly, free_homology
from .typed import TypeDStructure, build_qn, single, validate


def mor_generators(t1: TypeDStructure, t2: TypeDStructure) -> list[tuple[str, str, str, Bigrading]]:
    out = []
    for x1 in t1.generators:
        for x2 in t2.generators:
            for a in atoms(x1.idem, x2.idem):
                g = grading(atom_path(a, x1.idem))
                gr = Bigrading(
                    x2.grading.h - x1.grading.h + g.h,
                    x2.grading.q - x1.grading.q + g.q,
                )
                out.append((x1.id, x2.id, a, gr))
    return out


def mor_id(x1: str, x2: str, atom: str) -> str:
    return f"{x1}>{x2}:{atom}"


def mor_complex(t1: TypeDStructure, t2: TypeDStructure) -> FreeBigradedComplex:
    if t1.field != t2.field:
        raise ValueError(f"characteristic mismatch: {t1.field.c} vs {t2.field.c}")
    f = t1.field
    gens = mor_generators(t1, t2)
    index = {(x1, x2, a): k for k, (x1, x2, a, _) in enumerate(gens)}
    g1, g2 = t1.gen_map(), t2.gen_map()
    pred1 = t1.predecessors()
    succ2 = t2.successors()
    d: dict[tuple[int, int], Poly] = {}

    def add(target_src: str, target_dst: str, elem: AlgebraElement, col: int, sign: int):
        src_v, dst_v = g1[target_src].idem, g2[target_dst].idem
        dec = decompose_kH(elem, src_v, dst_v)
        for atom, poly in dec.coeffs.items():
            if not poly:
                continue
            key = (index[(target_src, target_dst, atom)], col)
            term = poly.scale(sign)
            d[key] = d[key] + term if key in d else term

    for col, (x1, x2, a, gr) in enumerate(gens):
        path = AlgebraElement.of(f, atom_path(a, g1[x1].idem))
        koszul = -1 if gr.h % 2 else 1
        for arr in pred1.get(x1, ()):
            elem = mul(path, arr.label)
            if elem:
                add(arr.src, x2, elem, col, 1)
        for arr in succ2.get(x2, ()):
            elem = mul(arr.label, path)
            if elem:
                add(x1, arr.dst, elem, col, -koszul)
    return FreeBigradedComplex(
        f, [(mor_id(x1, x2, a), gr) for x1, x2, a, gr in gens], d
    )


def closure_complex(t: TypeDStructure) -> FreeBigradedComplex:
    """``Mor(•(0,0), T)``: the reduced Bar-Natan complex of the closure, shifted by {-1}."""
    report = validate(t)
    if report:
        raise ValueError("invalid type D structure: " + "; ".join(report))
    return mor_complex(single(DOT, 0, 0, t.field), t)


def reduced_bn_of_closure(t: TypeDStructure) -> HomologySummary:
    """Reduced Bar-Natan homology of the link obtained by closing ``t`` with
    the trivial tangle (quantum gradings with the {-1} undone)."""
    return free_homology(closure_complex(t)).shift(0, 1)


def torus_link_bn(n: int, c=2) -> HomologySummary:
    """Reduced Bar-Natan homology of the 2-strand torus link T(2, n)."""
    return reduced_bn_of_closure(build_qn(n, c))
