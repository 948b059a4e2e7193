"""Random homogeneous elements and independent reference implementations."""

from __future__ import annotations

import random
from collections import defaultdict

from relginz.dg_core import QQ, Element, Presentation, concat
from relginz.quiver import quiver_from_document
from relginz.verifier import construct

# non-frozen arrow, frozen arrow, non-frozen loop: every generator family appears
MIXED_DOC = {
    "vertices": ["v", "w", "u"],
    "arrows": [
        {"id": "g", "src": "v", "tgt": "w"},
        {"id": "f", "src": "w", "tgt": "u", "frozen": True},
        {"id": "l", "src": "v", "tgt": "v"},
    ],
    "frozen_vertices": ["w", "u"],
}
MIXED = quiver_from_document(MIXED_DOC)


def all_words(p: Presentation, max_len: int):
    """Yield (src, tgt, word) for every composable word up to ``max_len``."""
    out = defaultdict(list)
    for g in p.generators.values():
        out[g.src].append(g)
    for v in p.vertices:
        yield v, v, ()
    stack = [(g.src, g.tgt, (g.id,)) for g in p.generators.values()]
    while stack:
        src, tgt, w = stack.pop()
        yield src, tgt, w
        if len(w) < max_len:
            for g in out[tgt]:
                stack.append((src, g.tgt, w + (g.id,)))


class WordBuckets:
    """Words of a presentation grouped by (src, tgt, degree)."""

    def __init__(self, p: Presentation, max_len: int = 3):
        self.p = p
        self.buckets = defaultdict(list)
        for src, tgt, w in all_words(p, max_len):
            self.buckets[(src, tgt, p.word_degree(w))].append(w)
        self.keys = sorted(self.buckets)
        self.by_src = defaultdict(list)
        for k in self.keys:
            self.by_src[k[0]].append(k)

    def element(self, rng: random.Random, src=None, max_terms: int = 3, coeffs=(-2, -1, 1, 2)):
        keys = self.keys if src is None else self.by_src[src]
        key = rng.choice(keys)
        words = self.buckets[key]
        terms = [(rng.choice(words), self.p.field(rng.choice(coeffs))) for _ in range(rng.randint(1, max_terms))]
        return Element(key[0], key[1], terms), key


def composable_chain(buckets: WordBuckets, rng: random.Random, length: int):
    """``length`` random homogeneous elements, each composable with the next."""
    out = []
    src = None
    for _ in range(length):
        x, key = buckets.element(rng, src)
        out.append((x, key[2]))
        src = key[1]
    return out


# -- reference implementations, written recursively on purpose ------------------


def word_element(p: Presentation, word, src) -> Element:
    return p.idem(src) if not word else p.word(*word)


def leibniz_reference(p: Presentation, x: Element) -> Element:
    """d(x1 w) = d(x1) w + (-1)^{|x1|} x1 d(w), by recursion on the word."""
    total = Element.zero()
    for word, c in x.items():
        total = total + _d_word(p, word, x.src).scale(c)
    return total


def _d_word(p, word, src):
    if not word:
        return Element.zero()
    head, rest = word[0], word[1:]
    if not rest:
        return p.differential[head]
    rest_el = word_element(p, rest, p.info(head).tgt)
    first = concat(p.differential[head], rest_el)
    sign = -1 if p.info(head).degree % 2 else 1
    second = concat(p.gen(head), _d_word(p, rest, p.info(head).tgt)).scale(sign)
    return first + second


def twisted_reference(k, x: Element) -> Element:
    """K(x1 w) = K(x1) f(w) + (-1)^{|x1|} x1 K(w)."""
    total = Element.zero()
    for word, c in x.items():
        total = total + _k_word(k, word).scale(c)
    return total


def _k_word(k, word):
    p, f = k.presentation, k.companion
    if not word:
        return Element.zero()
    head, rest = word[0], word[1:]
    if not rest:
        return k.gen_map[head]
    f_rest = f(word_element(p, rest, p.info(head).tgt))
    first = concat(k.gen_map[head], f_rest)
    sign = -1 if p.info(head).degree % 2 else 1
    second = concat(p.gen(head), _k_word(k, rest)).scale(sign)
    return first + second


_cache = {}


def mixed_setup(n: int, field=QQ):
    """(construction, buckets on A, buckets on G_n(Q,F)) for the mixed quiver."""
    key = (n, repr(field))
    if key not in _cache:
        c = construct(MIXED, n, field=field)
        _cache[key] = (c, WordBuckets(c.a, 3), WordBuckets(c.gz, 3))
    return _cache[key]

