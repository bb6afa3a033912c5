"""Associated forms and Macaulay inverse systems of balanced complete intersections.

For a regular sequence g_1..g_n of degree-d forms, the quotient algebra is
Gorenstein Artin with socle degree nu = n(d-1).  Its top graded piece is a
line spanned by the image of det Jac(g_1..g_n), so there is a unique
functional omega on S_nu killing I_nu with omega(det Jac) = 1.  The
associated form is

    A(g_1..g_n) = sum over |a| = nu of (nu!/a!) omega(x^a) z^a,

the expansion of omega((x_1 z_1 + ... + x_n z_n)^nu).  It is a Macaulay
inverse system of the quotient: the apolar ideal of A recovers I in every
degree.  Both normalizations the literature uses are kept consistent here:
omega(det Jac) = 1 by construction, and the pairing of det Jac against the
form equals nu!, asserted at construction time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .ideals import GradedIdeal, coeff_vector, is_regular_sequence
from .linalg import (QMatrix, from_rows, identity, kernel_basis,
                     row_space_basis, transpose)
from .poly import (Mono, Polynomial, Space, apolar_apply, jacobian_det,
                   mono_factorial, monomials_of_degree, pairing)


class NotRegularSequence(ValueError):
    """The given forms do not cut out a balanced complete intersection."""


class SingularHypersurface(ValueError):
    """The gradient of the given form is not a regular sequence."""


@dataclass(frozen=True)
class HilbertPointFunctional:
    """The functional on S_nu vanishing on I_nu, normalized on det Jac.

    values holds the nonzero evaluations on degree-nu monomials.
    """

    nvars: int
    degree: int
    values: dict[Mono, Fraction]

    def __call__(self, f: Polynomial) -> Fraction:
        if f.nvars != self.nvars or not f.is_homogeneous(self.degree):
            raise ValueError(f"functional expects a degree-{self.degree} form")
        return sum((c * self.values[m] for m, c in f.terms.items()
                    if m in self.values), Fraction(0))


@dataclass(frozen=True)
class AssociatedForm:
    """The dual form A(g_1..g_n) together with its normalizing functional."""

    form: Polynomial
    source: tuple[Polynomial, ...]
    omega: HilbertPointFunctional

    @property
    def nu(self) -> int:
        return self.omega.degree


def _require_regular(gs) -> tuple[int, int]:
    gs = list(gs)
    if not is_regular_sequence(gs):
        raise NotRegularSequence(
            "the forms have a non-trivial common zero (not a regular sequence)")
    return gs[0].nvars, gs[0].degree()


def hilbert_point_functional(gs) -> HilbertPointFunctional:
    """Solve for the unique functional killing I_nu with omega(det Jac) = 1."""
    gs = list(gs)
    n, d = _require_regular(gs)
    nu = n * (d - 1)
    ideal = GradedIdeal(n, d, gs)
    basis = ideal.graded_piece(nu)
    kernel = kernel_basis(basis)
    if len(kernel) != 1:
        raise RuntimeError(
            f"I_nu has codimension {len(kernel)}, expected 1 for a complete intersection")
    raw = kernel[0]
    monos = monomials_of_degree(n, nu)
    jac = jacobian_det(gs)
    scale = Fraction(0)
    for i, m in enumerate(monos):
        c = jac.terms.get(m)
        if c is not None:
            scale += c * raw[i]
    if scale == 0:
        raise RuntimeError("det Jac lies in I_nu; impossible for a regular sequence")
    values = {m: raw[i] / scale for i, m in enumerate(monos) if raw[i] != 0}
    return HilbertPointFunctional(n, nu, values)


def associated_form(gs) -> AssociatedForm:
    """The associated form of a regular sequence, via the multinomial expansion."""
    gs = tuple(gs)
    omega = hilbert_point_functional(gs)
    n, nu = omega.nvars, omega.degree
    nu_fact = math.factorial(nu)
    terms = {m: Fraction(nu_fact, mono_factorial(m)) * v
             for m, v in omega.values.items()}
    form = Polynomial(n, Space.DUAL, terms)
    if form.is_zero():
        raise RuntimeError("associated form vanished; impossible for a regular sequence")
    if pairing(jacobian_det(list(gs)), form) != nu_fact:
        raise RuntimeError("normalization check failed: <det Jac, A> != nu!")
    return AssociatedForm(form, gs, omega)


def perp_piece(f: Polynomial, k: int) -> QMatrix:
    """Canonical basis of the degree-k piece of the apolar ideal of f.

    This is the kernel of the catalecticant map S_k -> D_{nu-k} sending g to
    g acting on f; for k > deg f it is all of S_k.
    """
    if f.is_zero():
        raise ValueError("the zero form has no apolar ideal piece")
    if f.space is not Space.DUAL or not f.is_homogeneous():
        raise ValueError("perp_piece expects a homogeneous dual form")
    if k < 0:
        raise ValueError("degree must be non-negative")
    n = f.nvars
    nu = f.degree()
    src = monomials_of_degree(n, k)
    if k > nu:
        return identity(len(src))
    tgt = monomials_of_degree(n, nu - k)
    rows = []
    for mono in src:
        g = Polynomial.from_monomial(n, Space.PRIMAL, mono)
        rows.append(coeff_vector(apolar_apply(g, f), tgt))
    cat = from_rows(rows, cols=len(tgt))
    kern = kernel_basis(transpose(cat))
    if not kern:
        return QMatrix(0, len(src), ())
    return row_space_basis(from_rows(kern, cols=len(src)))


def macaulay_roundtrip(gs) -> bool:
    """Whether the apolar ideal of A(gs) reproduces (gs) in all degrees <= nu+1."""
    gs = list(gs)
    assoc = associated_form(gs)
    n, d = gs[0].nvars, gs[0].degree()
    ideal = GradedIdeal(n, d, gs)
    nu = assoc.nu
    return all(perp_piece(assoc.form, k) == ideal.graded_piece(k)
               for k in range(nu + 2))


def _lift(f: Polynomial, nvars: int, offset: int) -> Polynomial:
    """Embed a form on a variable block into the full ring."""
    pad_left = (0,) * offset
    pad_right = (0,) * (nvars - offset - f.nvars)
    return Polynomial(nvars, f.space,
                      {pad_left + m + pad_right: c for m, c in f.terms.items()})


def direct_sum_assoc(gs1, gs2) -> AssociatedForm:
    """Associated form of a direct sum via the product formula.

    For blocks of sizes a and n-a in disjoint variables, the associated form
    of the concatenation equals binom(n(d-1), a(d-1)) times the product of
    the block forms; this is returned without ever solving on the big ring.
    """
    gs1, gs2 = list(gs1), list(gs2)
    if not gs1 or not gs2:
        raise ValueError("both blocks must be non-empty")
    a, n = gs1[0].nvars, gs1[0].nvars + gs2[0].nvars
    d = gs1[0].degree()
    if gs2[0].degree() != d:
        raise ValueError("both blocks must have the same generator degree")
    try:
        a1 = associated_form(gs1)
        a2 = associated_form(gs2)
    except NotRegularSequence as exc:
        raise NotRegularSequence(f"block is not a regular sequence: {exc}") from exc
    nu = n * (d - 1)
    scalar = math.comb(nu, a * (d - 1))
    form = scalar * (_lift(a1.form, n, 0) * _lift(a2.form, n, a))
    nu_fact = math.factorial(nu)
    omega = HilbertPointFunctional(
        n, nu, {m: c * mono_factorial(m) / nu_fact for m, c in form.terms.items()})
    source = tuple(_lift(g, n, 0) for g in gs1) + tuple(_lift(g, n, a) for g in gs2)
    return AssociatedForm(form, source, omega)


def milnor_associated_form(F: Polynomial) -> AssociatedForm:
    """Associated form of the Milnor algebra of a smooth hypersurface form."""
    from .poly import partial
    if F.is_zero() or not F.is_homogeneous() or F.degree() < 2:
        raise ValueError("expected a homogeneous form of degree at least 2")
    grads = [partial(F, i) for i in range(F.nvars)]
    if any(g.is_zero() for g in grads):
        raise SingularHypersurface("a partial derivative vanishes identically")
    if not is_regular_sequence(grads):
        raise SingularHypersurface(
            "the gradient has a non-trivial common zero (singular hypersurface)")
    return associated_form(grads)
