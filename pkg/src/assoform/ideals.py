"""Graded pieces of ideals generated in one degree, and the tests built on them.

Everything is degree-by-degree exact linear algebra in the monomial basis
(descending grevlex column order): ideal pieces are canonical RREF row
spaces, Hilbert functions are codimensions, regular sequences are certified
by vanishing of the quotient one degree past the socle, and Koszul
differentials are assembled as explicit graded matrices.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .linalg import (QMatrix, from_rows, in_row_space, kernel_basis, mat_mul,
                     rank, row_space_basis, rref, transpose)
from .poly import (Mono, Polynomial, Space, dim_degree, grevlex_key,
                   monomials_of_degree)

DEGREE_CAP = 24


class DegreeCapError(ValueError):
    """Raised when n(d-1) exceeds the supported desk-scale bound."""


def _check_degree_cap(nvars: int, d: int):
    socle = nvars * (d - 1)
    if socle > DEGREE_CAP:
        raise DegreeCapError(
            f"socle degree {nvars}*({d}-1) = {socle} exceeds the supported bound {DEGREE_CAP}")


def coeff_vector(f: Polynomial, basis: tuple[Mono, ...]) -> list[Fraction]:
    return [f.terms.get(m, Fraction(0)) for m in basis]


def vectors_to_polynomials(m: QMatrix, basis: tuple[Mono, ...], nvars: int,
                           space: Space) -> list[Polynomial]:
    return [Polynomial(nvars, space, dict(zip(basis, row))) for row in m.entries]


class GradedIdeal:
    """Ideal generated by homogeneous degree-d forms, with cached graded pieces."""

    def __init__(self, nvars: int, d: int, generators):
        gens = tuple(generators)
        if d < 1:
            raise ValueError("generator degree must be positive")
        for g in gens:
            if g.nvars != nvars or g.space is not Space.PRIMAL:
                raise ValueError("generators must be primal forms in n variables")
            if g.is_zero() or not g.is_homogeneous(d):
                raise ValueError(f"generators must be nonzero homogeneous of degree {d}")
        _check_degree_cap(nvars, d)
        self.nvars = nvars
        self.d = d
        self.generators = gens
        self._piece_cache: dict[int, tuple[QMatrix, tuple[int, ...]]] = {}
        self._rank_cache: dict[int, int] = {}

    def _piece_with_pivots(self, k: int) -> tuple[QMatrix, tuple[int, ...]]:
        cached = self._piece_cache.get(k)
        if cached is None:
            reduced, pivots = rref(self._product_matrix(k))
            basis = QMatrix(len(pivots), reduced.cols, reduced.entries[:len(pivots)])
            cached = (basis, pivots)
            self._piece_cache[k] = cached
            self._rank_cache[k] = len(pivots)
        return cached

    def _product_matrix(self, k: int) -> QMatrix:
        """Rows spanning I_k: every monomial multiple m*g landing in degree k."""
        target = monomials_of_degree(self.nvars, k)
        rows = []
        if k >= self.d:
            for mono in monomials_of_degree(self.nvars, k - self.d):
                for g in self.generators:
                    product = {tuple(a + b for a, b in zip(mono, gm)): c
                               for gm, c in g.terms.items()}
                    rows.append([product.get(m, Fraction(0)) for m in target])
        return from_rows(rows, cols=len(target))

    def graded_piece(self, k: int) -> QMatrix:
        """Canonical RREF basis of I_k inside S_k; empty for k < d."""
        return self._piece_with_pivots(k)[0]

    def dim_piece(self, k: int) -> int:
        """dim I_k, via a fraction-free rank when no basis is cached yet."""
        if k not in self._rank_cache:
            if k in self._piece_cache:
                self._rank_cache[k] = self._piece_cache[k][0].rows
            else:
                self._rank_cache[k] = rank(self._product_matrix(k))
        return self._rank_cache[k]

    def contains(self, f: Polynomial) -> bool:
        """Membership of a homogeneous polynomial in the ideal."""
        if f.is_zero():
            return True
        if not f.is_homogeneous():
            raise ValueError("membership test expects a homogeneous polynomial")
        k = f.degree()
        basis, pivots = self._piece_with_pivots(k)
        vec = coeff_vector(f, monomials_of_degree(self.nvars, k))
        return in_row_space(basis, pivots, vec)


@dataclass(frozen=True)
class HilbertData:
    """dim (S/I)_k for k = 0..bound."""

    values: tuple[int, ...]


def hilbert_function(ideal: GradedIdeal, bound: int) -> HilbertData:
    values = tuple(dim_degree(ideal.nvars, k) - ideal.dim_piece(k)
                   for k in range(bound + 1))
    return HilbertData(values)


def _validate_balanced(gs, require_square=True) -> tuple[int, int]:
    gs = list(gs)
    if not gs:
        raise ValueError("empty form list")
    n = gs[0].nvars
    if require_square and len(gs) != n:
        raise ValueError(f"need exactly {n} forms in {n} variables, got {len(gs)}")
    degrees = set()
    for g in gs:
        if g.nvars != n or g.space is not Space.PRIMAL:
            raise ValueError("forms must be primal polynomials in n variables")
        if g.is_zero() or not g.is_homogeneous():
            raise ValueError("forms must be nonzero and homogeneous")
        degrees.add(g.degree())
    if len(degrees) != 1:
        raise ValueError("forms must all have the same degree")
    return n, degrees.pop()


def is_regular_sequence(gs) -> bool:
    """Whether n degree-d forms in n variables form a regular sequence.

    Certified by dim (S/I)_{n(d-1)+1} = 0: a standard graded quotient that
    vanishes in one degree vanishes above it, and for n forms in n
    variables Artinian is equivalent to being a regular sequence.
    """
    n, d = _validate_balanced(gs)
    _check_degree_cap(n, d)
    ideal = GradedIdeal(n, d, gs)
    k = n * (d - 1) + 1
    return ideal.dim_piece(k) == dim_degree(n, k)


def min_nonideal_monomial(ideal: GradedIdeal, k: int,
                          restrict: tuple[int, int] | None = None) -> Mono | None:
    """Grevlex-smallest degree-k monomial outside I_k, or None.

    With restrict=(a, N), only monomials of total degree >= N in the last
    n-a variables are considered.
    """
    basis, pivots = ideal._piece_with_pivots(k)
    target = monomials_of_degree(ideal.nvars, k)
    index = {m: i for i, m in enumerate(target)}
    candidates = sorted(target, key=grevlex_key)
    if restrict is not None:
        a, power = restrict
        if not 1 <= a <= ideal.nvars or power < 0:
            raise ValueError("restriction must satisfy 1 <= a <= n and N >= 0")
        candidates = [m for m in candidates if sum(m[a:]) >= power]
    dim_k = len(target)
    unit = [Fraction(0)] * dim_k
    for mono in candidates:
        vec = list(unit)
        vec[index[mono]] = Fraction(1)
        if not in_row_space(basis, pivots, vec):
            return mono
    return None


def _wedges(m: int, j: int) -> tuple[tuple[int, ...], ...]:
    return tuple(itertools.combinations(range(m), j))


def koszul_matrices(gs, j: int, k: int) -> QMatrix:
    """Matrix of the Koszul differential d_j restricted to graded degree k.

    Source basis: (monomial of degree k - j*d) x (e_{i_1} ^ ... ^ e_{i_j});
    target basis: the same with j-1 wedge factors.  Columns index the
    source.  d_j sends e_I to the signed sum of g_{i_r} times e_{I minus i_r}.
    """
    n, d = _validate_balanced(gs, require_square=False)
    gs = list(gs)
    m = len(gs)
    if not 1 <= j <= m:
        raise ValueError(f"homological index {j} out of range 1..{m}")
    src_monos = monomials_of_degree(n, k - j * d)
    tgt_monos = monomials_of_degree(n, k - (j - 1) * d)
    src_wedges = _wedges(m, j)
    tgt_wedges = _wedges(m, j - 1)
    tgt_index = {(w, mono): len(tgt_monos) * wi + mi
                 for wi, w in enumerate(tgt_wedges)
                 for mi, mono in enumerate(tgt_monos)}
    ncols = len(src_wedges) * len(src_monos)
    nrows = len(tgt_wedges) * len(tgt_monos)
    grid = [[Fraction(0)] * ncols for _ in range(nrows)]
    col = 0
    for wedge in src_wedges:
        for mono in src_monos:
            for r, gen_index in enumerate(wedge):
                sign = 1 if r % 2 == 0 else -1
                rest = wedge[:r] + wedge[r + 1:]
                for gm, c in gs[gen_index].terms.items():
                    prod = tuple(a + b for a, b in zip(mono, gm))
                    grid[tgt_index[(rest, prod)]][col] += sign * c
            col += 1
    return QMatrix(nrows, ncols, tuple(tuple(row) for row in grid))


def koszul_exactness_check(gs, k_max: int) -> bool:
    """Exactness of the Koszul complex away from homological degree 0.

    Checks rank d_j + rank d_{j+1} = dim K_j in every graded degree k <= k_max
    and every 1 <= j <= m; true for regular sequences, where the complex is
    a minimal free resolution.
    """
    n, d = _validate_balanced(gs, require_square=False)
    gs = list(gs)
    m = len(gs)
    ranks: dict[tuple[int, int], int] = {}

    def rank_dj(j: int, k: int) -> int:
        if j > m:
            return 0
        key = (j, k)
        if key not in ranks:
            ranks[key] = rank(koszul_matrices(gs, j, k))
        return ranks[key]

    for k in range(k_max + 1):
        for j in range(1, m + 1):
            dim_kj = math.comb(m, j) * dim_degree(n, k - j * d)
            if rank_dj(j, k) + rank_dj(j + 1, k) != dim_kj:
                return False
    return True


def intersect_with_coordinates(basis: QMatrix, keep_cols) -> QMatrix:
    """Canonical basis of (row space of basis) cut to a coordinate subspace.

    keep_cols flags, per column, whether the corresponding coordinate may be
    nonzero; the result is the subspace of row-space vectors supported on
    the kept columns, again in RREF.
    """
    drop = [i for i, keep in enumerate(keep_cols) if not keep]
    if not drop:
        return basis
    projected = from_rows([[row[i] for i in drop] for row in basis.entries],
                          cols=len(drop))
    combos = kernel_basis(transpose(projected))
    if not combos:
        return QMatrix(0, basis.cols, ())
    coeff = from_rows(combos, cols=basis.rows)
    return row_space_basis(mat_mul(coeff, basis))
