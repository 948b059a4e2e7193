"""Algebra morphisms and twisted derivations between presentations."""

from __future__ import annotations

from typing import Mapping

from .algebra import (
    AlgebraError,
    DegreeError,
    Element,
    EndpointError,
    Presentation,
    UnknownGenerator,
)


class Morphism:
    """Degree-0 map of path algebras given on vertices and generators.

    Extended linearly and multiplicatively; idempotents go through the vertex
    map. Every source generator must have an image (possibly zero).
    """

    def __init__(
        self,
        source: Presentation,
        target: Presentation,
        vertex_map: Mapping[str, str],
        gen_map: Mapping[str, Element],
        name: str = "",
    ):
        self.source = source
        self.target = target
        self.vertex_map = dict(vertex_map)
        self.gen_map = dict(gen_map)
        self.name = name
        for v in source.vertices:
            if self.vertex_map.get(v) not in target._vset:
                raise EndpointError(f"{name}: vertex {v!r} has no image in {target.name}")
        for gid in self.gen_map:
            source.info(gid)
        for gid, g in source.generators.items():
            if gid not in self.gen_map:
                raise UnknownGenerator(f"{name}: no image given for generator {gid!r}")
            img = self.gen_map[gid]
            if img.is_zero():
                continue
            target._check_element(img)
            want = (self.vertex_map[g.src], self.vertex_map[g.tgt])
            if (img.src, img.tgt) != want:
                raise EndpointError(f"{name}: image of {gid} runs {img.src}->{img.tgt}, expected {want}")
            if target.degree(img) != g.degree:
                raise DegreeError(f"{name}: image of {gid} has degree {target.degree(img)}, expected {g.degree}")

    def __repr__(self):
        return f"Morphism({self.name!r}: {self.source.name} -> {self.target.name})"

    def image_of_word(self, word, src) -> Element:
        if not word:
            return self.target.idem(self.vertex_map[src])
        result = None
        for gid in word:
            try:
                img = self.gen_map[gid]
            except KeyError:
                raise UnknownGenerator(f"{self.name}: unknown generator {gid!r}") from None
            if img.is_zero():
                return Element.zero()
            result = img if result is None else result * img
            if result.is_zero():
                return result
        return result

    def __call__(self, x: Element) -> Element:
        return apply_morphism(self, x)


def apply_morphism(m: Morphism, x: Element) -> Element:
    total = Element.zero()
    for word, coeff in x.items():
        img = m.image_of_word(word, x.src)
        if img:
            total = total + img.scale(coeff)
    return total


def identity_morphism(p: Presentation) -> Morphism:
    return Morphism(p, p, {v: v for v in p.vertices}, {g: p.gen(g) for g in p.generators}, name="id")


def compose_morphisms(m2: Morphism, m1: Morphism, name: str | None = None) -> Morphism:
    """``m2 ∘ m1``: first m1, then m2."""
    if m1.target is not m2.source:
        raise AlgebraError(f"cannot compose {m2.name} after {m1.name}: presentations differ")
    return Morphism(
        m1.source,
        m2.target,
        {v: m2.vertex_map[w] for v, w in m1.vertex_map.items()},
        {g: apply_morphism(m2, img) for g, img in m1.gen_map.items()},
        name=name if name is not None else f"{m2.name}∘{m1.name}",
    )


class TwistedDerivation:
    """Degree -1 map K with K(xy) = K(x)·f(y) + (-1)^{|x|} x·K(y).

    ``companion`` is the endomorphism f twisting the right-hand factor.
    K vanishes on idempotents.
    """

    def __init__(
        self,
        presentation: Presentation,
        companion: Morphism,
        gen_map: Mapping[str, Element],
        name: str = "",
    ):
        p = presentation
        if companion.source is not p or companion.target is not p:
            raise AlgebraError(f"{name}: companion must be an endomorphism of {p.name}")
        self.presentation = p
        self.companion = companion
        self.gen_map = dict(gen_map)
        self.name = name
        for gid in self.gen_map:
            p.info(gid)
        for gid, g in p.generators.items():
            if gid not in self.gen_map:
                raise UnknownGenerator(f"{name}: no image given for generator {gid!r}")
            img = self.gen_map[gid]
            if img.is_zero():
                continue
            p._check_element(img)
            want = (g.src, companion.vertex_map[g.tgt])
            if (img.src, img.tgt) != want:
                raise EndpointError(f"{name}: image of {gid} runs {img.src}->{img.tgt}, expected {want}")
            if p.degree(img) != g.degree - 1:
                raise DegreeError(f"{name}: image of {gid} must have degree {g.degree - 1}")

    def __repr__(self):
        return f"TwistedDerivation({self.name!r} on {self.presentation.name})"

    def __call__(self, x: Element) -> Element:
        return apply_twisted_derivation(self, x)


def apply_twisted_derivation(k: TwistedDerivation, x: Element) -> Element:
    """K(x1..xm) = sum_i (-1)^{|x1..x(i-1)|} x1..x(i-1) · K(xi) · f(x(i+1)..xm)."""
    p = k.presentation
    f = k.companion
    total = Element.zero()
    for word, coeff in x.items():
        if not word:
            continue
        m = len(word)
        # suffix_img[i] = f(word[i:]), None meaning the idempotent
        suffix_img: list = [None] * (m + 1)
        for i in range(m - 1, 0, -1):
            img = f.image_of_word(word[i : i + 1], None)
            suffix_img[i] = img if suffix_img[i + 1] is None else img * suffix_img[i + 1]
        sign_deg = 0
        for i, gid in enumerate(word):
            try:
                kx = k.gen_map[gid]
            except KeyError:
                raise UnknownGenerator(f"{k.name}: unknown generator {gid!r}") from None
            tail = suffix_img[i + 1]
            if kx and (tail is None or tail):
                term = kx
                if i > 0:
                    term = p.word(*word[:i]) * term
                if tail is not None:
                    term = term * tail
                c = -coeff if sign_deg % 2 else coeff
                total = total + term.scale(c)
            sign_deg += p.generators[gid].degree
    return total
