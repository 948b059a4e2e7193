"""Elements of free graded path algebras and semifree dg presentations.

Paths compose left to right: the word ``x y`` needs ``tgt(x) == src(y)``.
Grading is cohomological and the differential has degree +1, extended by

    d(x y) = d(x) y + (-1)^{|x|} x d(y).

A word is a tuple of generator ids. The empty tuple is the idempotent path at
the element's (single) vertex, so elements always carry their endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .fields import QQ, Field

Word = tuple  # tuple[str, ...]


class AlgebraError(ValueError):
    pass


class EndpointError(AlgebraError):
    """Two elements (or a generator image) have incompatible endpoints."""


class DegreeError(AlgebraError):
    """An element that should be homogeneous is not, or has the wrong degree."""


class UnknownGenerator(AlgebraError, KeyError):
    def __str__(self):
        return ValueError.__str__(self)


def word_key(word: Word):
    return (len(word), word)


class Element:
    """A finite linear combination of words sharing one pair of endpoints.

    Zero coefficients are never stored and terms are kept in canonical order
    (shorter words first, then lexicographic on generator ids). The zero
    element has ``src = tgt = None`` and composes with anything.
    """

    __slots__ = ("src", "tgt", "_terms", "_hash")

    def __init__(self, src, tgt, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for w, c in items:
            w = tuple(w)
            acc[w] = acc[w] + c if w in acc else c
        kept = {w: acc[w] for w in sorted(acc, key=word_key) if acc[w] != 0}
        if kept:
            if src is None or tgt is None:
                raise EndpointError("a nonzero element needs endpoints")
            self.src, self.tgt = src, tgt
        else:
            self.src = self.tgt = None
        self._terms = kept
        self._hash = None

    @classmethod
    def zero(cls) -> "Element":
        return cls(None, None)

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def items(self):
        return self._terms.items()

    def words(self):
        return self._terms.keys()

    def coefficient(self, word) -> object:
        return self._terms.get(tuple(word), 0)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, Element):
            if other == 0:
                return self.is_zero()
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        return (self.src, self.tgt) == (other.src, other.tgt) and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.src, self.tgt, frozenset(self._terms.items())))
        return self._hash

    # -- arithmetic ----------------------------------------------------------

    def _endpoints_with(self, other: "Element"):
        if self.is_zero():
            return other.src, other.tgt
        if other.is_zero():
            return self.src, self.tgt
        if (self.src, self.tgt) != (other.src, other.tgt):
            raise EndpointError(
                f"cannot add elements {self.src}->{self.tgt} and {other.src}->{other.tgt}"
            )
        return self.src, self.tgt

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        src, tgt = self._endpoints_with(other)
        return Element(src, tgt, [*self.items(), *other.items()])

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Element(self.src, self.tgt, {w: -c for w, c in self.items()})

    def scale(self, c) -> "Element":
        if c == 0:
            return Element.zero()
        return Element(self.src, self.tgt, {w: c * v for w, v in self.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            return concat(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        if isinstance(other, Element):
            return concat(other, self)
        return self.scale(other)

    def __repr__(self):
        return f"Element({self})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for w, c in self.items():
            mono = "·".join(w) if w else f"e[{self.src}]"
            parts.append(f"{c}*{mono}")
        return " + ".join(parts)


def concat(a: Element, b: Element) -> Element:
    """Product in the path algebra: bilinear extension of word concatenation."""
    if a.is_zero() or b.is_zero():
        return Element.zero()
    if a.tgt != b.src:
        raise EndpointError(f"cannot compose {a.src}->{a.tgt} with {b.src}->{b.tgt}")
    acc: dict = {}
    for w1, c1 in a.items():
        for w2, c2 in b.items():
            w = w1 + w2
            c = c1 * c2
            acc[w] = acc[w] + c if w in acc else c
    return Element(a.src, b.tgt, acc)


def normalize(x: Element) -> Element:
    return Element(x.src, x.tgt, x.items())


def element_sum(elements: Iterable[Element]) -> Element:
    total = Element.zero()
    for e in elements:
        total = total + e
    return total


@dataclass(frozen=True)
class GeneratorInfo:
    id: str
    src: str
    tgt: str
    degree: int


class DifferentialError(AlgebraError):
    """A presentation's differential does not square to zero."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class Presentation:
    """A semifree graded path algebra: vertices, graded generators, differential.

    ``differential`` maps generator ids to elements; ids missing from it are
    closed. Construction checks endpoints and degrees of the differential and,
    unless ``check=False``, that d squares to zero on every generator.
    """

    def __init__(
        self,
        vertices: Iterable[str],
        generators: Iterable[GeneratorInfo],
        differential: Mapping[str, Element] | None = None,
        *,
        field: Field = QQ,
        name: str = "",
        check: bool = True,
    ):
        self.vertices = tuple(vertices)
        self.field = field
        self.name = name
        self.generators: dict[str, GeneratorInfo] = {}
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise AlgebraError(f"{name}: duplicate vertex")
        for g in generators:
            if g.id in self.generators:
                raise AlgebraError(f"{name}: duplicate generator {g.id!r}")
            if g.src not in vset or g.tgt not in vset:
                raise EndpointError(f"{name}: generator {g.id!r} has an undeclared endpoint")
            self.generators[g.id] = g
        self._vset = vset
        differential = dict(differential or {})
        for gid in differential:
            if gid not in self.generators:
                raise UnknownGenerator(f"{name}: differential given for unknown generator {gid!r}")
        self.differential: dict[str, Element] = {}
        for gid, g in self.generators.items():
            dx = differential.get(gid, Element.zero())
            self._check_element(dx)
            if not dx.is_zero():
                if (dx.src, dx.tgt) != (g.src, g.tgt):
                    raise EndpointError(
                        f"{name}: d({gid}) runs {dx.src}->{dx.tgt}, expected {g.src}->{g.tgt}"
                    )
                if self.degree(dx) != g.degree + 1:
                    raise DegreeError(f"{name}: d({gid}) does not have degree {g.degree + 1}")
            self.differential[gid] = dx
        if check:
            from .checks import check_d_squared

            report = check_d_squared(self)
            if not report.passed:
                raise DifferentialError(f"{name}: d^2 != 0 on {report.failing_ids()}", report)

    def __repr__(self):
        return (
            f"Presentation({self.name!r}, {len(self.vertices)} vertices, "
            f"{len(self.generators)} generators)"
        )

    # -- element constructors -----------------------------------------------

    def one(self):
        return self.field.one

    def gen(self, gid: str) -> Element:
        g = self.info(gid)
        return Element(g.src, g.tgt, {(gid,): self.field.one})

    def idem(self, v: str) -> Element:
        if v not in self._vset:
            raise AlgebraError(f"{self.name}: unknown vertex {v!r}")
        return Element(v, v, {(): self.field.one})

    def word(self, *gids: str) -> Element:
        if not gids:
            raise AlgebraError("use idem(v) for the empty word")
        self.check_word(gids)
        return Element(self.info(gids[0]).src, self.info(gids[-1]).tgt, {tuple(gids): self.field.one})

    def element(self, src, tgt, terms) -> Element:
        """Build an element from ``{word: coeff}``, coercing coefficients into the field."""
        x = Element(src, tgt, {tuple(w): self.field(c) for w, c in dict(terms).items()})
        self._check_element(x)
        return x

    # -- queries --------------------------------------------------------------

    def info(self, gid: str) -> GeneratorInfo:
        try:
            return self.generators[gid]
        except KeyError:
            raise UnknownGenerator(f"{self.name}: unknown generator {gid!r}") from None

    def d_of(self, gid: str) -> Element:
        self.info(gid)
        return self.differential[gid]

    def check_word(self, word: Word, src=None, tgt=None) -> None:
        if not word:
            if src != tgt or (src is not None and src not in self._vset):
                raise EndpointError(f"{self.name}: idempotent needs a single known vertex")
            return
        infos = [self.info(g) for g in word]
        for x, y in zip(infos, infos[1:]):
            if x.tgt != y.src:
                raise EndpointError(f"{self.name}: {x.id} then {y.id} is not composable")
        if src is not None and (infos[0].src, infos[-1].tgt) != (src, tgt):
            raise EndpointError(f"{self.name}: word {word} does not run {src}->{tgt}")

    def _check_element(self, x: Element) -> None:
        for w in x.words():
            self.check_word(w, x.src, x.tgt)

    def word_degree(self, word: Word) -> int:
        gens = self.generators
        try:
            return sum(gens[g].degree for g in word)
        except KeyError as exc:
            raise UnknownGenerator(f"{self.name}: unknown generator {exc.args[0]!r}") from None

    def degree(self, x: Element):
        """Uniform degree of ``x``; None for zero. Raises DegreeError if inhomogeneous."""
        degrees = {self.word_degree(w) for w in x.words()}
        if not degrees:
            return None
        if len(degrees) > 1:
            raise DegreeError(f"{self.name}: element {x} is not homogeneous")
        return degrees.pop()

    def is_closed_under(self, gids) -> list[str]:
        """Generators in ``gids`` whose differential leaves the span of words in ``gids``."""
        allowed = set(gids)
        return [
            g for g in gids if any(not set(w) <= allowed for w in self.differential[g].words())
        ]

    # -- differential ---------------------------------------------------------

    def d(self, x: Element) -> Element:
        return differentiate(self, x)

    # -- serialization -------------------------------------------------------

    def to_document(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "generators": [
                {"id": g.id, "src": g.src, "tgt": g.tgt, "degree": g.degree}
                for g in self.generators.values()
            ],
            "differential": {
                gid: element_to_json(dx) for gid, dx in self.differential.items()
            },
        }

    @classmethod
    def from_document(cls, doc: dict, *, field: Field = QQ, name: str = "", check=True):
        gens = [GeneratorInfo(g["id"], g["src"], g["tgt"], int(g["degree"])) for g in doc["generators"]]
        by_id = {g.id: g for g in gens}
        diff = {}
        for gid, terms in doc.get("differential", {}).items():
            g = by_id.get(gid)
            if g is None:
                raise UnknownGenerator(f"differential given for unknown generator {gid!r}")
            diff[gid] = element_from_json(terms, g.src, g.tgt, field)
        return cls(doc["vertices"], gens, diff, field=field, name=name, check=check)


def differentiate(p: Presentation, x: Element) -> Element:
    """Leibniz extension: d(x1..xk) = sum_i (-1)^{|x1..x(i-1)|} x1..d(xi)..xk."""
    if x.is_zero():
        return x
    gens = p.generators
    diff = p.differential
    acc: dict = {}
    for word, coeff in x.items():
        sign_deg = 0
        for i, gid in enumerate(word):
            try:
                dx = diff[gid]
            except KeyError:
                raise UnknownGenerator(f"{p.name}: unknown generator {gid!r}") from None
            if dx:
                c0 = -coeff if sign_deg % 2 else coeff
                prefix, suffix = word[:i], word[i + 1 :]
                for w, c in dx.items():
                    nw = prefix + w + suffix
                    v = c0 * c
                    acc[nw] = acc[nw] + v if nw in acc else v
            sign_deg += gens[gid].degree
    return Element(x.src, x.tgt, acc)


# -- JSON element format ----------------------------------------------------


def element_to_json(x: Element) -> list:
    out = []
    for w, c in x.items():
        word = list(w) if w else {"idempotent": x.src}
        out.append({"coeff": str(c), "word": word})
    return out


def element_from_json(terms: list, src, tgt, field: Field = QQ) -> Element:
    acc = {}
    for t in terms:
        w = t["word"]
        if isinstance(w, dict):
            if w.get("idempotent") != src or src != tgt:
                raise EndpointError(f"idempotent term {w} does not match endpoints {src}->{tgt}")
            w = ()
        acc[tuple(w)] = field.parse(t["coeff"])
    return Element(src, tgt, acc)
