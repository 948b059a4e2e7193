"""Counting composable words by degree and length."""

from __future__ import annotations

from collections import Counter

from .algebra import Presentation


def graded_dimension(p: Presentation, degree: int, max_len: int) -> int:
    """Number of composable words of total ``degree`` and length <= ``max_len``.

    Idempotents count as words of length 0 and degree 0. Counts are propagated
    per (end vertex, partial degree), so nothing is enumerated explicitly.
    """
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    gens = list(p.generators.values())
    out_of: dict[str, list] = {v: [] for v in p.vertices}
    for g in gens:
        out_of[g.src].append(g)
    # Degrees only ever decrease when no generator is positive, so partial
    # words already below the target can be dropped.
    prune = all(g.degree <= 0 for g in gens)

    total = len(p.vertices) if degree == 0 else 0
    layer: Counter = Counter()
    for g in gens:
        if not (prune and g.degree < degree):
            layer[(g.tgt, g.degree)] += 1
    for _ in range(max_len):
        total += sum(n for (_, deg), n in layer.items() if deg == degree)
        nxt: Counter = Counter()
        for (v, deg), n in layer.items():
            for g in out_of[v]:
                nd = deg + g.degree
                if prune and nd < degree:
                    continue
                nxt[(g.tgt, nd)] += n
        layer = nxt
    return total
