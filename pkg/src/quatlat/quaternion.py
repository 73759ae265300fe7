"""Quaternion algebras [a,b) in characteristic 2 and their element arithmetic.

The algebra has basis 1, I, J, IJ over the rational function field, with
I^2 = I + a, J^2 = b and JI = IJ + J.  The full basis multiplication table
is derived from those three relations (e.g. IJ*I = aJ, J*IJ = bI + b,
(IJ)^2 = ab) and is locked in by the associativity, Cayley-Hamilton and
matrix-embedding tests rather than trusted on faith.

Conjugation is the K-linear anti-involution with I -> I+1, J -> J, IJ -> IJ;
in coordinates (x0, x1, x2, x3) it is (x0+x1, x1, x2, x3).  The reduced norm
is q*conj(q) (a scalar) and the reduced trace is q + conj(q) = x1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .binpoly import BinaryPoly
from .rational import ONE_RF, ZERO_RF, RationalFunction, parse_rational, rf


class AlgebraMismatchError(ValueError):
    pass


class NotInvertibleError(ZeroDivisionError):
    pass


@dataclass(frozen=True)
class QuaternionAlgebra:
    """The algebra [a,b) over GF(2)(var): I^2 = I + a, J^2 = b, JI = IJ + J."""

    a: RationalFunction
    b: RationalFunction
    var: str = "z"

    def __post_init__(self) -> None:
        if self.b.is_zero():
            raise ValueError("the parameter b must be nonzero")

    def element(self, x0: RationalFunction, x1: RationalFunction, x2: RationalFunction, x3: RationalFunction) -> Quaternion:
        return Quaternion(self, (x0, x1, x2, x3))

    def scalar(self, f: RationalFunction) -> Quaternion:
        return self.element(f, ZERO_RF, ZERO_RF, ZERO_RF)

    def one(self) -> Quaternion:
        return self.scalar(ONE_RF)

    def zero(self) -> Quaternion:
        return self.scalar(ZERO_RF)

    def gen_i(self) -> Quaternion:
        return self.element(ZERO_RF, ONE_RF, ZERO_RF, ZERO_RF)

    def gen_j(self) -> Quaternion:
        return self.element(ZERO_RF, ZERO_RF, ONE_RF, ZERO_RF)

    def gen_ij(self) -> Quaternion:
        return self.element(ZERO_RF, ZERO_RF, ZERO_RF, ONE_RF)


@dataclass(frozen=True)
class Quaternion:
    """An element x0 + x1*I + x2*J + x3*IJ with reduced-fraction coordinates."""

    algebra: QuaternionAlgebra
    coords: tuple[RationalFunction, RationalFunction, RationalFunction, RationalFunction]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def is_scalar(self) -> bool:
        return all(c.is_zero() for c in self.coords[1:])

    def __add__(self, other: Quaternion) -> Quaternion:
        self._same_algebra(other)
        return Quaternion(self.algebra, tuple(p + q for p, q in zip(self.coords, other.coords)))

    __sub__ = __add__

    def __mul__(self, other: Quaternion) -> Quaternion:
        self._same_algebra(other)
        a, b = self.algebra.a, self.algebra.b
        p0, p1, p2, p3 = self.coords
        q0, q1, q2, q3 = other.coords
        z0 = p0 * q0 + a * (p1 * q1) + b * (p2 * q2) + b * (p2 * q3) + a * b * (p3 * q3)
        z1 = p0 * q1 + p1 * q0 + p1 * q1 + b * (p2 * q3) + b * (p3 * q2)
        z2 = p0 * q2 + p2 * q0 + p2 * q1 + a * (p1 * q3) + a * (p3 * q1)
        z3 = p0 * q3 + p3 * q0 + p1 * q2 + p2 * q1 + p1 * q3
        return Quaternion(self.algebra, (z0, z1, z2, z3))

    def scale(self, f: RationalFunction) -> Quaternion:
        return Quaternion(self.algebra, tuple(f * c for c in self.coords))

    def conj(self) -> Quaternion:
        x0, x1, x2, x3 = self.coords
        return Quaternion(self.algebra, (x0 + x1, x1, x2, x3))

    def rnorm(self) -> RationalFunction:
        """Reduced norm q*conj(q); asserts the product really is a scalar."""
        prod = self * self.conj()
        if not prod.is_scalar():
            raise AssertionError("q*conj(q) not scalar: broken multiplication table")
        return prod.coords[0]

    def rtrace(self) -> RationalFunction:
        return self.coords[1]

    def inverse(self) -> Quaternion:
        n = self.rnorm()
        if n.is_zero():
            raise NotInvertibleError("element has reduced norm zero")
        return self.conj().scale(n.inverse())

    def projective_eq(self, other: Quaternion) -> bool:
        """Equality in the projectivization: p = lambda*q for a nonzero scalar."""
        self._same_algebra(other)
        if self.is_zero() and other.is_zero():
            raise ValueError("projective equality undefined for the zero element")
        if self.is_zero() or other.is_zero():
            return False
        p, q = self.coords, other.coords
        for i in range(4):
            for j in range(i + 1, 4):
                if p[i] * q[j] != p[j] * q[i]:
                    return False
        # cross-ratios agree; rule out one side being zero where the other is not
        return all(p[i].is_zero() == q[i].is_zero() for i in range(4))

    def projective_canon(self) -> tuple[RationalFunction, ...]:
        """Canonical representative: scale so the first nonzero coordinate is 1."""
        for c in self.coords:
            if not c.is_zero():
                inv = c.inverse()
                return tuple(inv * x for x in self.coords)
        raise ValueError("zero element has no projective representative")

    def _same_algebra(self, other: Quaternion) -> None:
        if self.algebra != other.algebra:
            raise AlgebraMismatchError("elements of different quaternion algebras")

    def to_string(self) -> str:
        var = self.algebra.var
        parts = []
        for coord, name in zip(self.coords, ("", "I", "J", "IJ")):
            if coord.is_zero():
                continue
            text = coord.to_string(var)
            if not name:
                parts.append(text)
            elif text == "1":
                parts.append(name)
            else:
                if "+" in text or "/" in text:
                    text = f"({text})"
                parts.append(f"{text}*{name}")
        return " + ".join(parts) if parts else "0"

    def __str__(self) -> str:
        return self.to_string()


def parse_quaternion(text: str, algebra: QuaternionAlgebra) -> Quaternion:
    """Parse "x0 + x1*I + x2*J + x3*IJ"; components are rational functions."""
    coords = [ZERO_RF, ZERO_RF, ZERO_RF, ZERO_RF]
    slot = {"": 0, "I": 1, "J": 2, "IJ": 3}
    for part in text.split(" + "):
        part = part.strip()
        if not part or part == "0":
            continue
        name = ""
        if part.endswith("*IJ"):
            name, part = "IJ", part[:-3]
        elif part.endswith("*J"):
            name, part = "J", part[:-2]
        elif part.endswith("*I"):
            name, part = "I", part[:-2]
        elif part == "IJ":
            name, part = "IJ", "1"
        elif part == "J":
            name, part = "J", "1"
        elif part == "I":
            name, part = "I", "1"
        if part.startswith("(") and part.endswith(")"):
            part = part[1:-1]
        coords[slot[name]] = coords[slot[name]] + parse_rational(part, algebra.var)
    return Quaternion(algebra, tuple(coords))


# -- the standard algebra and its distinguished elements ------------------


def standard_algebra() -> QuaternionAlgebra:
    """The algebra [z, 1+z^3) over GF(2)(z)."""
    return QuaternionAlgebra(rf(0b10), rf(0b1001), "z")


@dataclass(frozen=True)
class NamedElements:
    B1: Quaternion
    B2: Quaternion
    C1: Quaternion
    C2: Quaternion
    D: Quaternion


def named_elements(algebra: QuaternionAlgebra | None = None) -> NamedElements:
    """B1 = (1+z)I + J, B2 = z+z^2 + (1+z)I + J + IJ, C1 = 1+z^2 + IJ,
    C2 = z+z^2 + IJ, D = 1+z+z^2 + IJ."""
    alg = algebra or standard_algebra()
    one_z = rf(0b11)  # 1+z
    z_zsq = rf(0b110)  # z+z^2
    return NamedElements(
        B1=alg.element(ZERO_RF, one_z, ONE_RF, ZERO_RF),
        B2=alg.element(z_zsq, one_z, ONE_RF, ONE_RF),
        C1=alg.element(rf(0b101), ZERO_RF, ZERO_RF, ONE_RF),
        C2=alg.element(z_zsq, ZERO_RF, ZERO_RF, ONE_RF),
        D=alg.element(rf(0b111), ZERO_RF, ZERO_RF, ONE_RF),
    )


# Unit groups of the coefficient rings used for integrality tests: the rings
# GF(2)[z, 1/z], GF(2)[z, 1/(z(1+z))] and GF(2)[z, 1/(z(1+z^3))] have unit
# groups generated by the listed irreducibles.
RING_UNITS = {
    "R0": (BinaryPoly(0b10),),
    "R1": (BinaryPoly(0b10), BinaryPoly(0b11)),
    "R": (BinaryPoly(0b10), BinaryPoly(0b11), BinaryPoly(0b111)),
}


def is_ring_unit(f: RationalFunction, ring: str) -> bool:
    """True iff f is a unit of the named ring (numerator and denominator
    factor entirely into the ring's inverted irreducibles)."""
    if f.is_zero():
        return False
    gens = RING_UNITS[ring]
    for part in (f.num, f.den):
        p = part
        for g in gens:
            while True:
                q, r = divmod(p, g)
                if r.bits:
                    break
                p = q
        if not p.is_one():
            return False
    return True


def invertible_over(q: Quaternion, ring: str) -> bool:
    """True iff the element lies in the unit group of the order over the ring."""
    return is_ring_unit(q.rnorm(), ring)
