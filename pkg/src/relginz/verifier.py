"""Comparison maps between A and the relative Ginzburg algebra, and the check suite.

For each n the suite checks d^2 = 0 on every algebra involved, that G, tau,
phi, sigma, epsilon are chain maps, that tau·phi and sigma·epsilon are the
identity, that K and J are homotopies dK + Kd = s·(id - phi·tau) and
dJ + Jd = s·(id - epsilon·sigma) with one common sign s, that the square
tau∘incl = G∘sigma commutes on B, and that degree-0 word counts of A agree
with an adjacency-matrix path count of Q.
"""

from __future__ import annotations

import logging
import random
import warnings
from dataclasses import dataclass, field

import numpy as np

from . import naming as nm
from .ce_model import (
    EDGE_E,
    EDGE_F1,
    VERTEX_F0,
    VERTEX_V,
    ColimitConflict,
    boundary_subalgebra,
    glue,
    inclusion,
    local_pieces,
)
from .dg_core import (
    QQ,
    CheckReport,
    Element,
    Morphism,
    Presentation,
    Residual,
    TwistedDerivation,
    check_chain_map,
    check_d_squared,
    check_homotopy,
    check_morphisms_equal,
    compose_morphisms,
    graded_dimension,
    identity_morphism,
    resolve_homotopy_sign,
)
from .ginzburg import bracket, build_frozen_ginzburg, build_inclusion_G, build_relative_ginzburg
from .quiver import HEAD, TAIL, Arrow, HalfEdge, QuiverWithFrozen

log = logging.getLogger(__name__)

DEFAULT_N_LIST = (4, 5, 6, 7)
DEFAULT_H0_LENGTH = 4


# -- maps ------------------------------------------------------------------


def build_tau(q: QuiverWithFrozen, n: int, a: Presentation, gz: Presentation) -> Morphism:
    """tau: A -> G*_n(Q,F)."""
    live = {e.id for e in q.nonfrozen_arrows}
    images = {gid: Element.zero() for gid in a.generators}
    for v in q.nonfrozen_vertices:
        images[nm.a_v(v)] = gz.gen(nm.h_loop(v))
    for v in q.frozen_vertex_list:
        images[nm.b_v(v)] = bracket(gz, q, v, live)
    for e in q.nonfrozen_arrows:
        g, gs = nm.g(e.id), nm.g_star(e.id)
        images[g] = gz.gen(g)
        images[gs] = gz.gen(gs)
        images[nm.b_e(HalfEdge(e, TAIL))] = gz.word(g, gs)
        images[nm.b_e(HalfEdge(e, HEAD))] = -gz.word(gs, g)
    for e in q.frozen_arrows:
        images[nm.h_e(e.id)] = gz.gen(nm.g(e.id))
    return Morphism(a, gz, {v: v for v in q.vertices}, images, name="tau")


def build_phi(q: QuiverWithFrozen, n: int, gz: Presentation, a: Presentation) -> Morphism:
    """phi: G*_n(Q,F) -> A."""
    images = {}
    for e in q.arrows:
        images[nm.g(e.id)] = a.gen(nm.h_e(e.id) if e.frozen else nm.g(e.id))
    for e in q.nonfrozen_arrows:
        images[nm.g_star(e.id)] = a.gen(nm.g_star(e.id))
    for v in q.nonfrozen_vertices:
        x = a.gen(nm.a_v(v))
        for he in q.half_edges_at(v):
            x = x - a.gen(nm.a_e(he))
        images[nm.h_loop(v)] = x
    return Morphism(gz, a, {v: v for v in q.vertices}, images, name="phi")


def build_K(q: QuiverWithFrozen, n: int, a: Presentation, phi_tau: Morphism) -> TwistedDerivation:
    images = {gid: Element.zero() for gid in a.generators}
    for he in q.half_edges():
        images[nm.b_e(he)] = a.gen(nm.a_e(he))
        if he.frozen:
            e = he.arrow.id
            hc = a.word(nm.h_e(e), nm.c_e(e)) if he.role == TAIL else -a.word(nm.c_e(e), nm.h_e(e))
            images[nm.d_e(he)] = hc + a.gen(nm.a_prime(he))
    for v in q.frozen_vertex_list:
        x = -a.gen(nm.a_v(v))
        for he in q.half_edges_at(v):
            x = x + a.gen(nm.a_e(he))
        images[nm.b_v(v)] = x
    for e in q.frozen_arrows:
        images[nm.h_star(e.id)] = a.gen(nm.c_e(e.id))
    return TwistedDerivation(a, phi_tau, images, name="K")


def build_sigma(q: QuiverWithFrozen, n: int, b: Presentation, gf: Presentation) -> Morphism:
    """sigma: B -> G*_{n-1}(F)."""
    ns = nm.FROZEN_NS
    images = {}
    for v in q.frozen_vertex_list:
        images[nm.b_v(v)] = gf.gen(ns + nm.h_loop(v))
    for e in q.frozen_arrows:
        g, gs = ns + nm.g(e.id), ns + nm.g_star(e.id)
        images[nm.h_e(e.id)] = gf.gen(g)
        images[nm.h_star(e.id)] = gf.gen(gs)
        images[nm.d_e(HalfEdge(e, TAIL))] = gf.word(g, gs)
        images[nm.d_e(HalfEdge(e, HEAD))] = -gf.word(gs, g)
        for role in (TAIL, HEAD):
            images[nm.a_prime(HalfEdge(e, role))] = Element.zero()
    return Morphism(b, gf, {v: v for v in b.vertices}, images, name="sigma")


def build_epsilon(q: QuiverWithFrozen, n: int, gf: Presentation, b: Presentation) -> Morphism:
    """epsilon: G*_{n-1}(F) -> B."""
    ns = nm.FROZEN_NS
    images = {}
    for v in q.frozen_vertex_list:
        x = b.gen(nm.b_v(v))
        for he in q.half_edges_at(v):
            if he.frozen:
                x = x - b.gen(nm.a_prime(he))
        images[ns + nm.h_loop(v)] = x
    for e in q.frozen_arrows:
        images[ns + nm.g(e.id)] = b.gen(nm.h_e(e.id))
        images[ns + nm.g_star(e.id)] = b.gen(nm.h_star(e.id))
    return Morphism(gf, b, {v: v for v in gf.vertices}, images, name="epsilon")


def build_J(q: QuiverWithFrozen, n: int, b: Presentation, eps_sigma: Morphism) -> TwistedDerivation:
    images = {gid: Element.zero() for gid in b.generators}
    for he in q.half_edges():
        if he.frozen:
            images[nm.d_e(he)] = b.gen(nm.a_prime(he))
    return TwistedDerivation(b, eps_sigma, images, name="J")


@dataclass
class Construction:
    """Everything built for one (Q, F, n)."""

    q: QuiverWithFrozen
    n: int
    gz: Presentation
    gf: Presentation
    pieces: list
    a: Presentation
    b: Presentation
    G: Morphism
    tau: Morphism
    phi: Morphism
    K: TwistedDerivation
    sigma: Morphism
    epsilon: Morphism
    J: TwistedDerivation
    incl: Morphism
    conflicts: list = field(default_factory=list)


def construct(q: QuiverWithFrozen, n: int, *, field=QQ, paper_literal=False) -> Construction:
    gz = build_relative_ginzburg(q, n, field=field)
    gf = build_frozen_ginzburg(q, n, field=field)
    pieces = local_pieces(q, n, field=field, paper_literal=paper_literal)
    conflicts = []
    try:
        a = glue(q.vertices, pieces, field=field)
    except ColimitConflict as exc:
        conflicts = exc.conflicts
        a = exc.presentation
    b = boundary_subalgebra(a, q, n)
    G = build_inclusion_G(q, n, source=gf, target=gz)
    tau = build_tau(q, n, a, gz)
    phi = build_phi(q, n, gz, a)
    K = build_K(q, n, a, compose_morphisms(phi, tau, name="phi∘tau"))
    sigma = build_sigma(q, n, b, gf)
    epsilon = build_epsilon(q, n, gf, b)
    J = build_J(q, n, b, compose_morphisms(epsilon, sigma, name="epsilon∘sigma"))
    return Construction(
        q, n, gz, gf, pieces, a, b, G, tau, phi, K, sigma, epsilon, J, inclusion(b, a), conflicts
    )


# -- path-count oracle -------------------------------------------------------


def adjacency_matrix(q: QuiverWithFrozen) -> np.ndarray:
    index = {v: i for i, v in enumerate(q.vertices)}
    m = np.zeros((len(q.vertices), len(q.vertices)), dtype=object)
    m[:, :] = 0
    for e in q.arrows:
        m[index[e.src], index[e.tgt]] += 1
    return m


def path_count(q: QuiverWithFrozen, max_len: int) -> int:
    """Number of paths of length <= max_len in Q, idempotents included."""
    a = adjacency_matrix(q)
    power = np.identity(len(q.vertices), dtype=object)
    total = 0
    for _ in range(max_len + 1):
        total += int(power.sum())
        power = power.dot(a)
    return total


def check_h0(a: Presentation, q: QuiverWithFrozen, max_len: int = DEFAULT_H0_LENGTH) -> CheckReport:
    count = graded_dimension(a, 0, max_len)
    oracle = path_count(q, max_len)
    residuals = []
    if count != oracle:
        residuals.append(
            Residual("degree0_words", Element.zero(), note=f"word count {count} != path count {oracle}")
        )
    return CheckReport("h0:A", residuals, {"max_len": max_len, "count": count, "oracle": oracle})


# -- report -------------------------------------------------------------------


@dataclass
class VerificationReport:
    instance: QuiverWithFrozen
    n: int
    resolved_homotopy_sign: int
    checks: list[CheckReport]
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckReport]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {
            "instance": self.instance.to_document(),
            "n": self.n,
            "resolved_homotopy_sign": self.resolved_homotopy_sign,
            "checks": [c.to_json() for c in self.checks],
            "notes": list(self.notes),
        }

    def render(self) -> str:
        lines = [f"n={self.n} homotopy sign {self.resolved_homotopy_sign:+d}"]
        lines += [f"  note: {x}" for x in self.notes]
        for c in self.checks:
            extra = f"  ({len(c.residuals)} residuals)" if c.residuals else ""
            lines.append(f"  {c.status.upper():4} {c.name}{extra}")
        return "\n".join(lines)


def extrapolation_notes(q: QuiverWithFrozen) -> list[str]:
    """Flag shapes outside the planar surface pictures (loops, parallel arrows)."""
    notes = []
    if any(a.is_loop for a in q.arrows):
        notes.append("extrapolation: quiver has loops")
    pairs = [(a.src, a.tgt) for a in q.arrows if not a.is_loop]
    if len(pairs) != len(set(pairs)):
        notes.append("extrapolation: quiver has parallel arrows")
    return notes


def _merge(name: str, reports: list[CheckReport]) -> CheckReport:
    residuals = []
    for r in reports:
        residuals.extend(r.residuals)
    return CheckReport(name, residuals)


def verify_instance(
    q: QuiverWithFrozen,
    n: int,
    *,
    field=QQ,
    paper_literal: bool = False,
    h0_length: int = DEFAULT_H0_LENGTH,
) -> VerificationReport:
    if n < 3:
        raise ValueError("verification needs n >= 3 (G*_{n-1}(F) needs n-1 >= 2)")
    if n == 3:
        warnings.warn(
            "n=3: the geometric model assumes every frozen vertex has valency < 3; "
            "the algebraic identities are checked regardless",
            stacklevel=2,
        )
    c = construct(q, n, field=field, paper_literal=paper_literal)
    checks = [
        check_d_squared(c.gz, "d_squared:G_n(Q,F)"),
        check_d_squared(c.gf, "d_squared:G_{n-1}(F)"),
    ]
    for kind in (VERTEX_V, VERTEX_F0, EDGE_E, EDGE_F1):
        reports = [check_d_squared(p.presentation) for p in c.pieces if p.kind == kind]
        checks.append(_merge(f"d_squared:{kind}", reports))
    checks.append(
        CheckReport(
            "colimit:A",
            [Residual(gid, first - second, note=f"{where[0]} vs {where[1]}")
             for gid, first, second, where in c.conflicts],
        )
    )
    checks.append(check_d_squared(c.a, "d_squared:A"))
    checks.append(check_d_squared(c.b, "d_squared:B"))
    checks += [
        check_chain_map(c.G, "chain_map:G"),
        check_chain_map(c.tau, "chain_map:tau"),
        check_chain_map(c.phi, "chain_map:phi"),
        check_chain_map(c.sigma, "chain_map:sigma"),
        check_chain_map(c.epsilon, "chain_map:epsilon"),
        check_morphisms_equal(
            compose_morphisms(c.tau, c.phi), identity_morphism(c.gz), "identity:tau∘phi"
        ),
        check_morphisms_equal(
            compose_morphisms(c.sigma, c.epsilon), identity_morphism(c.gf), "identity:sigma∘epsilon"
        ),
    ]
    sign = resolve_homotopy_sign(c.K, c.K.companion)
    resolved = sign if sign is not None else 1
    checks.append(check_homotopy(c.K, c.K.companion, resolved, "homotopy:K"))
    checks.append(check_homotopy(c.J, c.J.companion, resolved, "homotopy:J"))
    checks.append(
        check_morphisms_equal(
            compose_morphisms(c.tau, c.incl), compose_morphisms(c.G, c.sigma), "square:tau∘incl=G∘sigma"
        )
    )
    checks.append(check_h0(c.a, q, h0_length))
    return VerificationReport(q, n, resolved, checks, extrapolation_notes(q))


def run_verification(q: QuiverWithFrozen, n_list=DEFAULT_N_LIST, **kwargs) -> list[VerificationReport]:
    n_list = list(n_list)
    if not n_list:
        raise ValueError("n_list must be nonempty")
    return [verify_instance(q, n, **kwargs) for n in n_list]


# -- random instances ----------------------------------------------------------


def random_quiver(rng: random.Random, max_vertices: int = 6, max_arrows: int = 10) -> QuiverWithFrozen:
    """Vertex count uniform in 1..max_vertices, arrow count uniform in 0..max_arrows.

    Arrows are frozen with probability 1/3; frozen vertices are the endpoints
    of frozen arrows plus each other vertex independently with probability 1/4.
    """
    nv = rng.randint(1, max_vertices)
    vertices = [f"v{i}" for i in range(nv)]
    arrows = []
    for i in range(rng.randint(0, max_arrows)):
        arrows.append(Arrow(f"e{i}", rng.choice(vertices), rng.choice(vertices), rng.random() < 1 / 3))
    frozen = {x for a in arrows if a.frozen for x in (a.src, a.tgt)}
    for v in vertices:
        if rng.random() < 0.25:
            frozen.add(v)
    return QuiverWithFrozen(tuple(vertices), tuple(arrows), frozenset(frozen))


def _without_arrow(q: QuiverWithFrozen, arrow_id: str) -> QuiverWithFrozen:
    return QuiverWithFrozen(q.vertices, tuple(a for a in q.arrows if a.id != arrow_id), q.frozen_vertices)


def _without_vertex(q: QuiverWithFrozen, v: str):
    if any(v in (a.src, a.tgt) for a in q.arrows) or len(q.vertices) == 1:
        return None
    return QuiverWithFrozen(
        tuple(x for x in q.vertices if x != v), q.arrows, q.frozen_vertices - {v}
    )


def shrink(q: QuiverWithFrozen, fails) -> QuiverWithFrozen:
    """Greedily delete arrows, then vertices, while ``fails(q)`` stays true."""
    changed = True
    while changed:
        changed = False
        for a in q.arrows:
            smaller = _without_arrow(q, a.id)
            if fails(smaller):
                q, changed = smaller, True
                break
    changed = True
    while changed:
        changed = False
        for v in q.vertices:
            smaller = _without_vertex(q, v)
            if smaller is not None and fails(smaller):
                q, changed = smaller, True
                break
    return q


def run_random(
    count: int, seed: int, n_list=(4, 5), *, paper_literal=False, shrink_failures=True
) -> list[VerificationReport]:
    """Verify ``count`` seeded random instances; failing ones are shrunk first."""
    rng = random.Random(seed)
    reports = []
    for _ in range(count):
        q = random_quiver(rng)
        for n in n_list:
            rep = verify_instance(q, n, paper_literal=paper_literal)
            if not rep.passed and shrink_failures:
                small = shrink(q, lambda x: not verify_instance(x, n, paper_literal=paper_literal).passed)
                log.warning("random instance failed at n=%d; shrunk to %s", n, small.to_json())
                rep = verify_instance(small, n, paper_literal=paper_literal)
            reports.append(rep)
    return reports
