"""Classical SL(2)-invariants of binary quartics and the desk-scale
isomorphism test for homogeneous binary singularities.

The invariant pair (I, J) of a quartic is realized twice: by the closed
formulas in the binomial coordinates and through transvectants; the test
suite pins the proportionality constants between the two realizations.
The comparison point for two smooth quartics F, G is the projective pair
[I(A(F))^3 : J(A(F))^2] built from the associated form of the Milnor
algebra; equal degrees make the pair a point of the GIT quotient, constant
on GL(2)-orbits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .inverse_system import milnor_associated_form
from .poly import Polynomial, partial


def _mixed_partial(f: Polynomial, a: int, b: int) -> Polynomial:
    out = f
    for _ in range(a):
        out = partial(out, 0)
    for _ in range(b):
        out = partial(out, 1)
    return out


def transvectant(f: Polynomial, g: Polynomial, r: int) -> Polynomial:
    """The r-th transvectant of two binary forms, classically normalized.

    ((p-r)!(q-r)!/(p!q!)) * sum over i of (-1)^i C(r,i)
    d^r f/dz1^{r-i} dz2^i * d^r g/dz1^i dz2^{r-i},  with p, q the degrees.
    """
    if f.nvars != 2 or g.nvars != 2:
        raise ValueError("transvectants are defined for binary forms")
    if f.is_zero() or g.is_zero() or not (f.is_homogeneous() and g.is_homogeneous()):
        raise ValueError("transvectants need nonzero homogeneous forms")
    p, q = f.degree(), g.degree()
    if r > min(p, q):
        raise ValueError(f"transvectant order {r} exceeds min degree {min(p, q)}")
    total = Polynomial.zero(2, f.space)
    for i in range(r + 1):
        term = _mixed_partial(f, r - i, i) * _mixed_partial(g, i, r - i)
        coeff = math.comb(r, i)
        total = total + term * (coeff if i % 2 == 0 else -coeff)
    scale = Fraction(math.factorial(p - r) * math.factorial(q - r),
                     math.factorial(p) * math.factorial(q))
    return total * scale


def quartic_invariants(f: Polynomial) -> tuple[Fraction, Fraction]:
    """The degree-2 and degree-3 invariants of a binary quartic.

    With f = a z1^4 + 4b z1^3 z2 + 6c z1^2 z2^2 + 4d z1 z2^3 + e z2^4:
    I = ae - 4bd + 3c^2 and J = ace + 2bcd - ad^2 - b^2 e - c^3.
    """
    if f.nvars != 2 or f.is_zero() or not f.is_homogeneous(4):
        raise ValueError("expected a nonzero binary quartic")
    a = f.coeff((4, 0))
    b = f.coeff((3, 1)) / 4
    c = f.coeff((2, 2)) / 6
    d = f.coeff((1, 3)) / 4
    e = f.coeff((0, 4))
    inv_i = a * e - 4 * b * d + 3 * c * c
    inv_j = a * c * e + 2 * b * c * d - a * d * d - b * b * e - c ** 3
    return inv_i, inv_j


@dataclass(frozen=True)
class GITPoint:
    """Projective tuple with the first nonzero coordinate scaled to 1."""

    coordinates: tuple[Fraction, ...]

    @classmethod
    def from_raw(cls, coords) -> GITPoint:
        coords = tuple(Fraction(c) for c in coords)
        lead = next((c for c in coords if c != 0), None)
        if lead is not None:
            coords = tuple(c / lead for c in coords)
        return cls(coords)


def points_equal(p: GITPoint, q: GITPoint) -> bool:
    """Projective equality of two normalized points."""
    if len(p.coordinates) != len(q.coordinates):
        raise ValueError("points of different arity")
    if not any(p.coordinates) and not any(q.coordinates):
        raise ValueError("both points vanish; upstream input was not semistable")
    return p.coordinates == q.coordinates


def mather_yau_point(F: Polynomial) -> GITPoint:
    """The invariant point [I(A(F))^3 : J(A(F))^2] of a smooth binary quartic.

    Two smooth quartics define isomorphic singularities exactly when their
    points coincide; equal coordinate degrees (six in the quartic) make the
    pair well defined on GL(2)-orbits.
    """
    if F.nvars != 2 or F.is_zero() or not F.is_homogeneous(4):
        raise ValueError("expected a nonzero binary quartic")
    assoc = milnor_associated_form(F)  # raises SingularHypersurface if not smooth
    inv_i, inv_j = quartic_invariants(assoc.form)
    return GITPoint.from_raw((inv_i ** 3, inv_j ** 2))
