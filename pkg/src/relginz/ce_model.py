"""Local dg-algebras of the subdivided graph, their colimit A, and the boundary part B.

Every local piece uses the global naming scheme from :mod:`relginz.naming`, so
the colimit is the union of generators plus a consistency check on the
boundary generators that several pieces share.

Conventions fixed here:

* for an arrow e: v1 -> v2 the tail half-edge plays v1 and the head plays v2,
  also when e is a loop;
* the chord c_e runs v2 -> v1, so that h_e·c and c·h_e are composable loops;
* for frozen e we use d(b_{e,v}) = d_{e,v} in the edge piece, matching the
  frozen-vertex piece. ``paper_literal=True`` restores d(b_{e,v}) = 0 there,
  which breaks d^2 = 0 and the gluing; it exists for regression tests.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import naming as nm
from .dg_core import QQ, Element, GeneratorInfo, Morphism, Presentation
from .dg_core.algebra import AlgebraError
from .quiver import HEAD, TAIL, HalfEdge, QuiverWithFrozen

VERTEX_V = "A_v(V)"
VERTEX_F0 = "A_v(F0)"
EDGE_E = "A_e(E)"
EDGE_F1 = "A_e(F1)"


class ColimitConflict(AlgebraError):
    """Two local pieces disagree on the differential of a shared generator.

    ``conflicts`` lists ``(generator, first value, second value, pieces)``;
    ``presentation`` is the colimit built from the first value seen, which
    comes from the vertex piece.
    """

    def __init__(self, conflicts, presentation):
        ids = ", ".join(c[0] for c in conflicts)
        super().__init__(f"differential conflict on shared generators: {ids}")
        self.conflicts = conflicts
        self.presentation = presentation


class ClosureError(AlgebraError):
    pass


@dataclass(frozen=True)
class LocalPiece:
    kind: str
    label: str
    presentation: Presentation


def _vertices_of(*vs):
    return tuple(dict.fromkeys(vs))


def _arrow(q: QuiverWithFrozen, e: str):
    for a in q.arrows:
        if a.id == e:
            return a
    raise KeyError(f"unknown arrow {e!r}")


def build_local_vertex(v: str, q: QuiverWithFrozen, n: int, *, field=QQ) -> Presentation:
    if v not in q.vertices:
        raise KeyError(f"unknown vertex {v!r}")
    frozen = q.is_frozen(v)
    hes = q.half_edges_at(v)
    gens = [GeneratorInfo(nm.a_v(v), v, v, 1 - n)]
    if frozen:
        gens.append(GeneratorInfo(nm.b_v(v), v, v, 2 - n))
    for he in hes:
        gens.append(GeneratorInfo(nm.b_e(he), v, v, 2 - n))
        if he.frozen:
            gens.append(GeneratorInfo(nm.d_e(he), v, v, 3 - n))
    p = Presentation((v,), gens, field=field, check=False)

    da = {(nm.b_e(he),): 1 for he in hes}
    diff = {}
    if frozen:
        da[(nm.b_v(v),)] = -1
        diff[nm.b_v(v)] = p.element(v, v, {(nm.d_e(he),): 1 for he in hes if he.frozen})
        for he in hes:
            if he.frozen:
                diff[nm.b_e(he)] = p.gen(nm.d_e(he))
    diff[nm.a_v(v)] = p.element(v, v, da)
    kind = VERTEX_F0 if frozen else VERTEX_V
    return Presentation((v,), gens, diff, field=field, name=f"{kind}[{v}]")


def build_local_edge_vertex(
    e: str, q: QuiverWithFrozen, n: int, *, field=QQ, paper_literal: bool = False
) -> Presentation:
    arrow = _arrow(q, e)
    v1, v2 = arrow.src, arrow.tgt
    t, hd = HalfEdge(arrow, TAIL), HalfEdge(arrow, HEAD)
    verts = _vertices_of(v1, v2)

    if not arrow.frozen:
        gg, gs = nm.g(e), nm.g_star(e)
        gens = [
            GeneratorInfo(nm.a_e(t), v1, v1, 1 - n),
            GeneratorInfo(nm.a_e(hd), v2, v2, 1 - n),
            GeneratorInfo(nm.b_e(t), v1, v1, 2 - n),
            GeneratorInfo(nm.b_e(hd), v2, v2, 2 - n),
            GeneratorInfo(gg, v1, v2, 0),
            GeneratorInfo(gs, v2, v1, 2 - n),
        ]
        p = Presentation(verts, gens, field=field, check=False)
        diff = {
            nm.a_e(t): p.element(v1, v1, {(nm.b_e(t),): 1, (gg, gs): -1}),
            nm.a_e(hd): p.element(v2, v2, {(nm.b_e(hd),): 1, (gs, gg): 1}),
        }
        return Presentation(verts, gens, diff, field=field, name=f"{EDGE_E}[{e}]")

    he_, hs, c = nm.h_e(e), nm.h_star(e), nm.c_e(e)
    gens = [
        GeneratorInfo(nm.a_e(t), v1, v1, 1 - n),
        GeneratorInfo(nm.a_e(hd), v2, v2, 1 - n),
        GeneratorInfo(c, v2, v1, 2 - n),
        GeneratorInfo(nm.b_e(t), v1, v1, 2 - n),
        GeneratorInfo(nm.b_e(hd), v2, v2, 2 - n),
        GeneratorInfo(nm.d_e(t), v1, v1, 3 - n),
        GeneratorInfo(nm.d_e(hd), v2, v2, 3 - n),
        GeneratorInfo(nm.a_prime(t), v1, v1, 2 - n),
        GeneratorInfo(nm.a_prime(hd), v2, v2, 2 - n),
        GeneratorInfo(hs, v2, v1, 3 - n),
        GeneratorInfo(he_, v1, v2, 0),
    ]
    p = Presentation(verts, gens, field=field, check=False)
    diff = {
        nm.a_e(t): p.element(v1, v1, {(nm.b_e(t),): 1, (he_, c): -1, (nm.a_prime(t),): -1}),
        nm.a_e(hd): p.element(v2, v2, {(nm.b_e(hd),): 1, (c, he_): 1, (nm.a_prime(hd),): -1}),
        nm.a_prime(t): p.element(v1, v1, {(nm.d_e(t),): 1, (he_, hs): -1}),
        nm.a_prime(hd): p.element(v2, v2, {(nm.d_e(hd),): 1, (hs, he_): 1}),
        c: p.gen(hs),
    }
    if not paper_literal:
        diff[nm.b_e(t)] = p.gen(nm.d_e(t))
        diff[nm.b_e(hd)] = p.gen(nm.d_e(hd))
    return Presentation(
        verts, gens, diff, field=field, name=f"{EDGE_F1}[{e}]", check=not paper_literal
    )


def local_pieces(q: QuiverWithFrozen, n: int, *, field=QQ, paper_literal=False) -> list[LocalPiece]:
    """Vertex pieces in declaration order, then edge-vertex pieces in arrow order."""
    pieces = []
    for v in q.vertices:
        kind = VERTEX_F0 if q.is_frozen(v) else VERTEX_V
        pieces.append(LocalPiece(kind, v, build_local_vertex(v, q, n, field=field)))
    for a in q.arrows:
        kind = EDGE_F1 if a.frozen else EDGE_E
        p = build_local_edge_vertex(a.id, q, n, field=field, paper_literal=paper_literal)
        pieces.append(LocalPiece(kind, a.id, p))
    return pieces


def glue(vertices, pieces: list[LocalPiece], *, field=QQ, name="A") -> Presentation:
    """Union of the pieces' generators; raises ColimitConflict on disagreement."""
    gens: dict[str, GeneratorInfo] = {}
    diff: dict[str, Element] = {}
    origin: dict[str, str] = {}
    conflicts = []
    for piece in pieces:
        p = piece.presentation
        where = p.name
        for gid, info in p.generators.items():
            dx = p.differential[gid]
            if gid not in gens:
                gens[gid], diff[gid], origin[gid] = info, dx, where
                continue
            if gens[gid] != info:
                raise AlgebraError(f"generator {gid!r} declared differently in {origin[gid]} and {where}")
            if diff[gid] != dx:
                conflicts.append((gid, diff[gid], dx, (origin[gid], where)))
    result = Presentation(vertices, gens.values(), diff, field=field, name=name)
    if conflicts:
        raise ColimitConflict(conflicts, result)
    return result


def assemble_colimit(q: QuiverWithFrozen, n: int, *, field=QQ, paper_literal=False) -> Presentation:
    return glue(
        q.vertices, local_pieces(q, n, field=field, paper_literal=paper_literal), field=field
    )


def boundary_generator_ids(q: QuiverWithFrozen) -> list[str]:
    ids = [nm.b_v(v) for v in q.frozen_vertex_list]
    for a in q.frozen_arrows:
        t, hd = HalfEdge(a, TAIL), HalfEdge(a, HEAD)
        ids += [nm.d_e(t), nm.d_e(hd), nm.a_prime(t), nm.a_prime(hd), nm.h_star(a.id), nm.h_e(a.id)]
    return ids


def boundary_subalgebra(a: Presentation, q: QuiverWithFrozen, n: int) -> Presentation:
    """B on the frozen vertices, generated by b_v, d_{e,v}, a'_{e,v}, h_e, h*_e."""
    ids = boundary_generator_ids(q)
    leaks = a.is_closed_under(ids)
    if leaks:
        raise ClosureError(f"differential leaves B on {leaks}")
    return Presentation(
        q.frozen_vertex_list,
        [a.generators[g] for g in ids],
        {g: a.differential[g] for g in ids},
        field=a.field,
        name="B",
    )


def inclusion(b: Presentation, a: Presentation) -> Morphism:
    return Morphism(b, a, {v: v for v in b.vertices}, {g: a.gen(g) for g in b.generators}, name="incl")
