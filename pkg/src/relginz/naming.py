"""Generator ids shared by every construction.

Per-vertex and per-arrow ids look like ``a[v]``; per-half-edge ids append the
role, as in ``b[g]@tail``. The suffix keeps the two families disjoint even when
vertex and arrow ids collide.
"""

from __future__ import annotations

from .quiver import HalfEdge

# Ginzburg side
def g(arrow: str) -> str:
    return f"g[{arrow}]"


def g_star(arrow: str) -> str:
    return f"g*[{arrow}]"


def h_loop(v: str) -> str:
    return f"h[{v}]"


# CE side
def a_v(v: str) -> str:
    return f"a[{v}]"


def b_v(v: str) -> str:
    return f"b[{v}]"


def _half(prefix: str, he: HalfEdge) -> str:
    return f"{prefix}[{he.arrow.id}]@{he.role}"


def a_e(he: HalfEdge) -> str:
    return _half("a", he)


def b_e(he: HalfEdge) -> str:
    return _half("b", he)


def d_e(he: HalfEdge) -> str:
    return _half("d", he)


def a_prime(he: HalfEdge) -> str:
    return _half("a'", he)


def h_e(arrow: str) -> str:
    return f"h[{arrow}]"


def h_star(arrow: str) -> str:
    return f"h*[{arrow}]"


def c_e(arrow: str) -> str:
    return f"c[{arrow}]"


# namespace for G*_{n-1}(F)
FROZEN_NS = "F:"
