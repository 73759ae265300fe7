"""Vertices of and actions on the Bruhat-Tits tree of PGL2 over GF(2)((pi)).

Matrix entries are exact rational functions in a single variable (y or t);
the local field is its completion at the variable, so valuations and
truncated expansions come from the degree-1 place at 0.

A vertex is the class of the column lattice of [[pi^n, c], [0, 1]] modulo
right units and scalars, stored canonically as (level n, tail c) where the
tail is the finite set of exponents (< n, coefficients in GF(2)) of the
Laurent polynomial c reduced modulo pi^n.  Canonical coordinates make
vertices hashable, which the ball enumerations rely on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .binpoly import ONE, BinaryPoly
from .embeddings import RHO_T, RHO_Y, Matrix2
from .places import PLACE_ZERO, laurent_expand, valuation
from .quaternion import Quaternion
from .rational import RationalFunction


def _val(f: RationalFunction):
    return valuation(f, PLACE_ZERO)


def _tail_function(tail: frozenset[int]) -> RationalFunction:
    """The Laurent polynomial sum of pi^e over the tail, as a rational function."""
    if not tail:
        return RationalFunction(BinaryPoly(0), ONE)
    low = min(min(tail), 0)
    num = 0
    for e in tail:
        num |= 1 << (e - low)
    return RationalFunction(BinaryPoly(num), BinaryPoly(1 << -low))


@dataclass(frozen=True)
class TreeVertex:
    """Canonical coordinates (level, tail) of a tree vertex; `field` is y or t."""

    field: str
    level: int
    tail: frozenset[int]

    def __post_init__(self) -> None:
        if any(e >= self.level for e in self.tail):
            raise ValueError("tail exponents must lie below the level")

    def matrix(self) -> Matrix2:
        pi_n = RationalFunction(BinaryPoly(1 << self.level), ONE) if self.level >= 0 else RationalFunction(ONE, BinaryPoly(1 << -self.level))
        c = _tail_function(self.tail)
        zero = RationalFunction(BinaryPoly(0), ONE)
        one = RationalFunction(ONE, ONE)
        return Matrix2(self.field, pi_n, c, zero, one)

    def neighbors(self) -> tuple[TreeVertex, TreeVertex, TreeVertex]:
        """The three adjacent vertices (valency q+1 = 3 over GF(2))."""
        up_plain = TreeVertex(self.field, self.level + 1, self.tail)
        up_bumped = TreeVertex(self.field, self.level + 1, self.tail ^ {self.level})
        down = TreeVertex(self.field, self.level - 1, frozenset(e for e in self.tail if e < self.level - 1))
        return (up_plain, up_bumped, down)

    def key(self) -> str:
        """Serialization "field:level:tail-hex"; tail bit k is the coefficient
        of pi^(level-1-k), so the encoding terminates and is canonical."""
        value = 0
        for e in self.tail:
            value |= 1 << (self.level - 1 - e)
        return f"{self.field}:{self.level}:{value:x}"

    def __str__(self) -> str:
        return self.key()


def standard_vertex(field: str) -> TreeVertex:
    return TreeVertex(field, 0, frozenset())


def vertex_from_matrix(m: Matrix2) -> TreeVertex:
    """Canonical form of the lattice class spanned by the matrix columns.

    Column-reduces over the valuation ring: pivot on the bottom-row entry of
    minimal valuation, eliminate the other bottom entry, rescale so the
    lattice is [[pi^n, c], [0, 1]] and truncate c below pi^n.
    """
    a, b, c, d = m.e11, m.e12, m.e21, m.e22
    if m.det().is_zero():
        raise ValueError("matrix is singular")
    if _val(d) > _val(c):
        a, b = b, a
        c, d = d, c
    # col1 <- col1 - (c/d) col2 zeroes the bottom-left entry; then divide
    # the lattice by d:  [[(ad+bc)/d^2 * d, b/d], [0, 1]] up to units.
    top = (a * d + b * c) / (d * d)  # = det/d^2, valuation-equal to pi^n
    level = _val(top)
    shift = b / d
    coeffs = laurent_expand(shift, PLACE_ZERO, level)
    tail = frozenset(e for e, bit in coeffs.items() if bit)
    return TreeVertex(m.var, int(level), tail)


def act(m: Matrix2, v: TreeVertex) -> TreeVertex:
    if m.var != v.field:
        raise ValueError("matrix and vertex live over different fields")
    return vertex_from_matrix(m * v.matrix())


def distance(v1: TreeVertex, v2: TreeVertex) -> int:
    """Tree distance via elementary divisors of the transition matrix."""
    if v1.field != v2.field:
        raise ValueError("vertices of different trees")
    g = v1.matrix().adjugate() * v2.matrix()
    min_val = min(_val(e) for e in g.entries if not e.is_zero())
    return int(_val(g.det()) - 2 * min_val)


@dataclass(frozen=True)
class ProductVertex:
    """A vertex of the product of the two trees: horizontal over y, vertical over t."""

    horizontal: TreeVertex
    vertical: TreeVertex

    def __post_init__(self) -> None:
        if self.horizontal.field != "y" or self.vertical.field != "t":
            raise ValueError("product vertices are horizontal-over-y, vertical-over-t")

    def key(self) -> str:
        return f"{self.horizontal.key()}|{self.vertical.key()}"

    def __str__(self) -> str:
        return self.key()


def standard_product_vertex() -> ProductVertex:
    return ProductVertex(standard_vertex("y"), standard_vertex("t"))


def bt_act(g: Quaternion, v: ProductVertex) -> ProductVertex:
    """Act through rho_y on the horizontal factor and rho_t on the vertical one."""
    return ProductVertex(act(RHO_Y(g), v.horizontal), act(RHO_T(g), v.vertical))


def ball_vertex_count(radius: int) -> int:
    """Closed-form number of product-tree vertices within L1 distance `radius`."""
    spheres = [1] + [3 * 2 ** (k - 1) for k in range(1, radius + 1)]
    return sum(spheres[i] * spheres[j] for i in range(radius + 1) for j in range(radius + 1) if i + j <= radius)


def ball_in_tree(center: TreeVertex, radius: int) -> list[set[TreeVertex]]:
    """Spheres of radius 0..radius around the center, by breadth-first search."""
    spheres = [{center}]
    seen = {center}
    for _ in range(radius):
        frontier = set()
        for v in spheres[-1]:
            for n in v.neighbors():
                if n not in seen:
                    seen.add(n)
                    frontier.add(n)
        spheres.append(frontier)
    return spheres
