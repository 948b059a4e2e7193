"""Quivers with a frozen subquiver, and the subdivided incidence graph.

A quiver document is JSON of the form::

    {"vertices": ["v", "w"],
     "arrows": [{"id": "g", "src": "v", "tgt": "w", "frozen": false}],
     "frozen_vertices": []}

``frozen`` defaults to false and ``frozen_vertices`` to the empty list.
Loops and parallel arrows are allowed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Literal

TAIL = "tail"
HEAD = "head"
Role = Literal["tail", "head"]


class QuiverError(ValueError):
    """Raised for an invalid quiver document. ``code`` names the failure kind."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class Arrow:
    id: str
    src: str
    tgt: str
    frozen: bool = False

    @property
    def is_loop(self) -> bool:
        return self.src == self.tgt


@dataclass(frozen=True)
class HalfEdge:
    """One end of an arrow: the tail sits at ``arrow.src``, the head at ``arrow.tgt``."""

    arrow: Arrow
    role: Role

    @property
    def vertex(self) -> str:
        return self.arrow.src if self.role == TAIL else self.arrow.tgt

    @property
    def frozen(self) -> bool:
        return self.arrow.frozen


@dataclass(frozen=True)
class QuiverWithFrozen:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    frozen_vertices: frozenset[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arrows", tuple(self.arrows))
        object.__setattr__(self, "frozen_vertices", frozenset(self.frozen_vertices))
        validate(self)

    # -- views -------------------------------------------------------------

    def is_frozen(self, v: str) -> bool:
        return v in self.frozen_vertices

    @property
    def nonfrozen_vertices(self) -> tuple[str, ...]:
        return tuple(v for v in self.vertices if v not in self.frozen_vertices)

    @property
    def frozen_vertex_list(self) -> tuple[str, ...]:
        """Frozen vertices in declaration order."""
        return tuple(v for v in self.vertices if v in self.frozen_vertices)

    @property
    def frozen_arrows(self) -> tuple[Arrow, ...]:
        return tuple(a for a in self.arrows if a.frozen)

    @property
    def nonfrozen_arrows(self) -> tuple[Arrow, ...]:
        return tuple(a for a in self.arrows if not a.frozen)

    def half_edges(self) -> Iterator[HalfEdge]:
        for a in self.arrows:
            yield HalfEdge(a, TAIL)
            yield HalfEdge(a, HEAD)

    def half_edges_at(self, v: str) -> list[HalfEdge]:
        """Half-edges incident to ``v``; a loop at ``v`` contributes two."""
        return [h for h in self.half_edges() if h.vertex == v]

    def frozen_subquiver(self) -> "QuiverWithFrozen":
        """F as a quiver in its own right, with nothing frozen inside it."""
        return QuiverWithFrozen(
            self.frozen_vertex_list,
            tuple(Arrow(a.id, a.src, a.tgt, False) for a in self.frozen_arrows),
        )

    def unfrozen(self) -> "QuiverWithFrozen":
        return QuiverWithFrozen(
            self.vertices, tuple(Arrow(a.id, a.src, a.tgt, False) for a in self.arrows)
        )

    def to_document(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [
                {"id": a.id, "src": a.src, "tgt": a.tgt, "frozen": a.frozen}
                for a in self.arrows
            ],
            "frozen_vertices": list(self.frozen_vertex_list),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_document())


def validate(q: QuiverWithFrozen) -> None:
    seen: set[str] = set()
    for v in q.vertices:
        if not isinstance(v, str):
            raise QuiverError("malformed", f"vertex id {v!r} is not a string")
        if v in seen:
            raise QuiverError("duplicate_vertex", f"duplicate vertex id {v!r}")
        seen.add(v)
    arrow_ids: set[str] = set()
    for a in q.arrows:
        if a.id in arrow_ids:
            raise QuiverError("duplicate_arrow", f"duplicate arrow id {a.id!r}")
        arrow_ids.add(a.id)
        for end in (a.src, a.tgt):
            if end not in seen:
                raise QuiverError(
                    "dangling_endpoint", f"arrow {a.id!r} has undeclared endpoint {end!r}"
                )
    for v in q.frozen_vertices:
        if v not in seen:
            raise QuiverError("dangling_endpoint", f"frozen vertex {v!r} is not declared")
    for a in q.arrows:
        if not a.frozen:
            continue
        for end in (a.src, a.tgt):
            if end not in q.frozen_vertices:
                raise QuiverError(
                    "frozen_subquiver",
                    f"frozen arrow {a.id!r} has non-frozen endpoint {end!r}",
                )


def _string_list(doc: dict, key: str, default=None) -> list[str]:
    value = doc.get(key, default)
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise QuiverError("malformed", f"{key!r} must be an array of strings")
    return value


def quiver_from_document(doc) -> QuiverWithFrozen:
    if not isinstance(doc, dict):
        raise QuiverError("malformed", "quiver document must be a JSON object")
    if "vertices" not in doc:
        raise QuiverError("malformed", "missing key 'vertices'")
    vertices = _string_list(doc, "vertices")
    raw_arrows = doc.get("arrows", [])
    if not isinstance(raw_arrows, list):
        raise QuiverError("malformed", "'arrows' must be an array")
    arrows = []
    for raw in raw_arrows:
        if not isinstance(raw, dict) or not all(k in raw for k in ("id", "src", "tgt")):
            raise QuiverError("malformed", f"arrow record {raw!r} needs id, src, tgt")
        if not all(isinstance(raw[k], str) for k in ("id", "src", "tgt")):
            raise QuiverError("malformed", f"arrow record {raw!r}: id/src/tgt must be strings")
        frozen = raw.get("frozen", False)
        if not isinstance(frozen, bool):
            raise QuiverError("malformed", f"arrow {raw['id']!r}: 'frozen' must be a boolean")
        arrows.append(Arrow(raw["id"], raw["src"], raw["tgt"], frozen))
    frozen_vertices = _string_list(doc, "frozen_vertices", [])
    return QuiverWithFrozen(tuple(vertices), tuple(arrows), frozenset(frozen_vertices))


def parse_quiver(text: str) -> QuiverWithFrozen:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise QuiverError("malformed", f"not valid JSON: {exc}") from exc
    return quiver_from_document(doc)


# -- subdivided graph ------------------------------------------------------


@dataclass(frozen=True)
class CEdge:
    arrow: str
    role: Role
    vertex: str
    frozen: bool


@dataclass(frozen=True)
class IncidenceGraphC:
    """The graph obtained by putting an extra vertex in the middle of every arrow.

    Quiver vertices split into non-frozen ``V`` and frozen ``F0``; edge vertices
    (one per arrow) into ``E`` and ``F1``. Each arrow gives two half-edges, so a
    loop yields two distinct C-edges at the same vertex.
    """

    V: tuple[str, ...]
    F0: tuple[str, ...]
    E: tuple[str, ...]
    F1: tuple[str, ...]
    c_edges: tuple[CEdge, ...]

    @property
    def edge_vertices(self) -> tuple[str, ...]:
        return self.E + self.F1


def subdivide(q: QuiverWithFrozen) -> IncidenceGraphC:
    c_edges = tuple(CEdge(h.arrow.id, h.role, h.vertex, h.frozen) for h in q.half_edges())
    return IncidenceGraphC(
        V=q.nonfrozen_vertices,
        F0=q.frozen_vertex_list,
        E=tuple(a.id for a in q.nonfrozen_arrows),
        F1=tuple(a.id for a in q.frozen_arrows),
        c_edges=c_edges,
    )


def recover_quiver(c: IncidenceGraphC, vertex_order=None) -> QuiverWithFrozen:
    """Rebuild the quiver from C; arrows come back in C-edge order."""
    ends: dict[str, dict[str, str]] = {}
    frozen: dict[str, bool] = {}
    for ce in c.c_edges:
        ends.setdefault(ce.arrow, {})[ce.role] = ce.vertex
        frozen[ce.arrow] = ce.frozen
    arrows = tuple(Arrow(a, e[TAIL], e[HEAD], frozen[a]) for a, e in ends.items())
    vertices = tuple(vertex_order) if vertex_order is not None else c.V + c.F0
    return QuiverWithFrozen(vertices, arrows, frozenset(c.F0))
