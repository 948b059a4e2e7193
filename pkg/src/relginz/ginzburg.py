"""Relative Ginzburg algebras of a quiver with frozen subquiver, and the map G."""

from __future__ import annotations

from . import naming as nm
from .dg_core import QQ, Element, GeneratorInfo, Morphism, Presentation
from .quiver import TAIL, QuiverWithFrozen


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"n must be an integer >= 2, got {n!r}")


def bracket(p: Presentation, q: QuiverWithFrozen, v: str, arrows, prefix: str = "") -> Element:
    """Sum of g·g* over arrows leaving v minus g*·g over arrows entering v.

    ``arrows`` is the set A of arrow ids to sum over; a loop at v contributes
    both terms. The result lives in ``p`` and is a loop at v.
    """
    terms: dict = {}
    for he in q.half_edges_at(v):
        e = he.arrow.id
        if e not in arrows:
            continue
        ge, gs = prefix + nm.g(e), prefix + nm.g_star(e)
        if he.role == TAIL:
            terms[(ge, gs)] = terms.get((ge, gs), 0) + 1
        else:
            terms[(gs, ge)] = terms.get((gs, ge), 0) - 1
    return p.element(v, v, terms)


def build_relative_ginzburg(
    q: QuiverWithFrozen, n: int, *, field=QQ, prefix: str = "", name: str | None = None
) -> Presentation:
    """Path algebra on g (deg 0), g* (deg 2-n, non-frozen arrows), h_v (deg 1-n, non-frozen v)."""
    _check_n(n)
    gens = []
    for a in q.arrows:
        gens.append(GeneratorInfo(prefix + nm.g(a.id), a.src, a.tgt, 0))
    for a in q.nonfrozen_arrows:
        gens.append(GeneratorInfo(prefix + nm.g_star(a.id), a.tgt, a.src, 2 - n))
    for v in q.nonfrozen_vertices:
        gens.append(GeneratorInfo(prefix + nm.h_loop(v), v, v, 1 - n))
    # Differential is filled in after construction since the bracket needs the
    # generator table; d^2 = 0 is checked on the final presentation.
    shell = Presentation(q.vertices, gens, field=field, check=False)
    live = {a.id for a in q.nonfrozen_arrows}
    diff = {prefix + nm.h_loop(v): bracket(shell, q, v, live, prefix) for v in q.nonfrozen_vertices}
    return Presentation(
        q.vertices, gens, diff, field=field, name=name or "G_n(Q,F)"
    )


def build_ginzburg(q: QuiverWithFrozen, n: int, *, field=QQ, prefix: str = "", name=None) -> Presentation:
    return build_relative_ginzburg(q.unfrozen(), n, field=field, prefix=prefix, name=name or "G_n(Q)")


def build_frozen_ginzburg(q: QuiverWithFrozen, n: int, *, field=QQ) -> Presentation:
    """G*_{n-1}(F): the ordinary Ginzburg algebra of F at parameter n-1, ids prefixed ``F:``."""
    return build_ginzburg(q.frozen_subquiver(), n - 1, field=field, prefix=nm.FROZEN_NS, name="G_{n-1}(F)")


def build_inclusion_G(
    q: QuiverWithFrozen,
    n: int,
    *,
    source: Presentation | None = None,
    target: Presentation | None = None,
    field=QQ,
) -> Morphism:
    """G: G*_{n-1}(F) -> G*_n(Q,F) with g -> g, g* -> 0, h_v -> bracket over Q1 minus F1."""
    source = source or build_frozen_ginzburg(q, n, field=field)
    target = target or build_relative_ginzburg(q, n, field=field)
    ns = nm.FROZEN_NS
    live = {a.id for a in q.nonfrozen_arrows}
    images = {}
    for a in q.frozen_arrows:
        images[ns + nm.g(a.id)] = target.gen(nm.g(a.id))
        images[ns + nm.g_star(a.id)] = Element.zero()
    for v in q.frozen_vertex_list:
        images[ns + nm.h_loop(v)] = bracket(target, q, v, live)
    return Morphism(source, target, {v: v for v in source.vertices}, images, name="G")
