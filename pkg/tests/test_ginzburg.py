import random

import pytest

from relginz.dg_core import check_chain_map, check_d_squared, graded_dimension
from relginz.ginzburg import (
    build_frozen_ginzburg,
    build_ginzburg,
    build_inclusion_G,
    build_relative_ginzburg,
)
from relginz.quiver import quiver_from_document
from relginz.verifier import random_quiver

from corpus import CORPUS


def degrees(p):
    return {g.id: g.degree for g in p.generators.values()}


def test_one_arrow_n5():
    p = build_relative_ginzburg(CORPUS["one_arrow"], 5)
    assert degrees(p) == {"g[g]": 0, "g*[g]": -3, "h[v]": -4, "h[w]": -4}
    assert p.info("g*[g]").src == "w" and p.info("g*[g]").tgt == "v"
    assert p.differential["h[v]"] == p.word("g[g]", "g*[g]")
    assert p.differential["h[w]"] == -p.word("g*[g]", "g[g]")
    assert p.differential["g[g]"].is_zero() and p.differential["g*[g]"].is_zero()


def test_all_frozen_has_only_arrows():
    p = build_relative_ginzburg(CORPUS["one_frozen_arrow"], 5)
    assert list(p.generators) == ["g[g]"]
    assert all(dx.is_zero() for dx in p.differential.values())


def test_parallel_arrows():
    p = build_relative_ginzburg(CORPUS["kronecker"], 4)
    assert p.differential["h[v]"] == p.word("g[g1]", "g*[g1]") + p.word("g[g2]", "g*[g2]")


def test_ginzburg_single_vertex():
    for n in (2, 4, 7):
        p = build_ginzburg(CORPUS["one_vertex"], n)
        assert list(p.generators) == ["h[v]"]
        assert p.differential["h[v]"].is_zero()


def test_ginzburg_kronecker():
    p = build_ginzburg(CORPUS["kronecker"], 4)
    assert p.differential["h[v]"] == p.word("g[g1]", "g*[g1]") + p.word("g[g2]", "g*[g2]")
    assert p.differential["h[w]"] == -p.word("g*[g1]", "g[g1]") - p.word("g*[g2]", "g[g2]")


def test_ginzburg_loop_contributes_both_terms():
    p = build_ginzburg(CORPUS["loop"], 5)
    assert p.differential["h[v]"] == p.word("g[g]", "g*[g]") - p.word("g*[g]", "g[g]")


def test_ginzburg_ignores_frozen_markings():
    p = build_ginzburg(CORPUS["frozen_loop"], 5)
    assert p.differential["h[v]"] == p.word("g[g]", "g*[g]") - p.word("g*[g]", "g[g]")


def test_relative_equals_plain_when_nothing_frozen():
    for name in ("one_arrow", "kronecker", "loop", "one_vertex", "empty"):
        q = CORPUS[name]
        for n in (4, 5):
            assert build_relative_ginzburg(q, n).to_document() == build_ginzburg(q, n).to_document()


def test_rejects_small_n():
    with pytest.raises(ValueError):
        build_relative_ginzburg(CORPUS["one_arrow"], 1)


def test_G_empty_frozen_part():
    G = build_inclusion_G(CORPUS["one_arrow"], 5)
    assert G.source.vertices == () and G.gen_map == {}
    assert check_chain_map(G).passed


def test_G_all_frozen():
    G = build_inclusion_G(CORPUS["one_frozen_arrow"], 5)
    assert G.gen_map["F:h[v]"].is_zero()
    assert G.gen_map["F:g[g]"] == G.target.gen("g[g]")
    assert G.gen_map["F:g*[g]"].is_zero()


def test_G_on_frozen_vertex_with_live_arrow():
    q = quiver_from_document({
        "vertices": ["v", "w"],
        "arrows": [{"id": "g", "src": "v", "tgt": "w"}],
        "frozen_vertices": ["v"],
    })
    G = build_inclusion_G(q, 5)
    assert G.gen_map["F:h[v]"] == G.target.word("g[g]", "g*[g]")
    assert check_chain_map(G).passed


def test_frozen_ginzburg_degrees():
    gf = build_frozen_ginzburg(CORPUS["star"], 6)
    # parameter n-1 = 5: duals in degree 3-n, loops in 2-n
    assert gf.info("F:g*[s1]").degree == -3
    assert gf.info("F:h[o]").degree == -4
    assert set(gf.vertices) == {"o", "l1", "l2"}


def test_random_instances():
    rng = random.Random(11)
    for _ in range(60):
        q = random_quiver(rng)
        for n in (4, 5, 6, 7):
            p = build_relative_ginzburg(q, n)
            assert check_d_squared(p).passed
            assert {g.degree for g in p.generators.values()} <= {0, 2 - n, 1 - n}
            assert graded_dimension(p, 1, 3) == 0
            for v in q.nonfrozen_vertices:
                dh = p.differential[f"h[{v}]"]
                assert dh.is_zero() or (dh.src, dh.tgt) == (v, v)
            assert check_chain_map(build_inclusion_G(q, n)).passed
            if not q.frozen_vertices and not q.frozen_arrows:
                assert p.to_document() == build_ginzburg(q, n).to_document()
