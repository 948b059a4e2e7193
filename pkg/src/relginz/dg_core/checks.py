"""Identity checks. Failures are collected as residuals, never raised."""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import AlgebraError, Element, EndpointError, Presentation, element_to_json
from .maps import Morphism, TwistedDerivation, apply_morphism, apply_twisted_derivation


@dataclass(frozen=True)
class Residual:
    generator: str
    element: Element
    note: str = ""

    def to_json(self) -> dict:
        out = {"generator": self.generator, "element": element_to_json(self.element)}
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class CheckReport:
    name: str
    residuals: list[Residual] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    def __post_init__(self):
        self.residuals.sort(key=lambda r: r.generator)

    @property
    def passed(self) -> bool:
        return not self.residuals

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def failing_ids(self) -> list[str]:
        return [r.generator for r in self.residuals]

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "status": self.status,
            "residuals": [r.to_json() for r in self.residuals],
        }
        out.update(self.info)
        return out


def check_d_squared(p: Presentation, name: str | None = None) -> CheckReport:
    residuals = []
    for gid, dx in p.differential.items():
        ddx = p.d(dx)
        if ddx:
            residuals.append(Residual(gid, ddx))
    return CheckReport(name or f"d_squared:{p.name}", residuals)


def check_chain_map(m: Morphism, name: str | None = None) -> CheckReport:
    """m(dx) - d(m x) on every source generator."""
    residuals = []
    for gid in m.source.generators:
        lhs = apply_morphism(m, m.source.differential[gid])
        rhs = m.target.d(m.gen_map[gid])
        diff = lhs - rhs
        if diff:
            residuals.append(Residual(gid, diff))
    return CheckReport(name or f"chain_map:{m.name}", residuals)


def check_homotopy(
    k: TwistedDerivation, f: Morphism, sign: int = 1, name: str | None = None
) -> CheckReport:
    """(dK + Kd)(x) - sign·(x - f(x)) on every generator."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    p = k.presentation
    if f.source is not p or f.target is not p:
        raise AlgebraError(f"{f.name} is not an endomorphism of {p.name}")
    if k.companion is not f and not check_morphisms_equal(k.companion, f).passed:
        raise AlgebraError(f"{k.name}: companion morphism differs from {f.name}")
    residuals = []
    for gid in p.generators:
        x = p.gen(gid)
        lhs = p.d(k.gen_map[gid]) + apply_twisted_derivation(k, p.differential[gid])
        rhs = (x - apply_morphism(f, x)).scale(sign)
        diff = lhs - rhs
        if diff:
            residuals.append(Residual(gid, diff))
    return CheckReport(name or f"homotopy:{k.name}", residuals, {"sign": sign})


def resolve_homotopy_sign(k: TwistedDerivation, f: Morphism) -> int | None:
    """The sign s with dK + Kd = s·(id - f), or None if neither sign works."""
    for sign in (1, -1):
        if check_homotopy(k, f, sign).passed:
            return sign
    return None


def check_morphisms_equal(a: Morphism, b: Morphism, name: str | None = None) -> CheckReport:
    if a.source is not b.source or a.target is not b.target:
        raise AlgebraError(f"{a.name} and {b.name} do not share source and target")
    residuals = []
    for v in a.source.vertices:
        if a.vertex_map[v] != b.vertex_map[v]:
            residuals.append(Residual(v, Element.zero(), note="vertex images differ"))
    for gid in a.source.generators:
        try:
            diff = a.gen_map[gid] - b.gen_map[gid]
        except EndpointError:
            residuals.append(Residual(gid, a.gen_map[gid], note="images have different endpoints"))
            continue
        if diff:
            residuals.append(Residual(gid, diff))
    return CheckReport(name or f"equal:{a.name}={b.name}", residuals)
