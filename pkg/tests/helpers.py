"""Shared generators and independent oracles for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from assoform.ideals import is_regular_sequence
from assoform.linalg import QMatrix, det, from_rows, identity, mat_mul
from assoform.poly import Polynomial, Space, monomials_of_degree


def random_form(rng: random.Random, n: int, d: int, space=Space.PRIMAL,
                lo: int = -3, hi: int = 3) -> Polynomial:
    monos = monomials_of_degree(n, d)
    while True:
        poly = Polynomial(n, space, {m: rng.randint(lo, hi) for m in monos})
        if not poly.is_zero():
            return poly


def random_regular_sequence(rng: random.Random, n: int, d: int) -> list[Polynomial]:
    while True:
        gs = [random_form(rng, n, d) for _ in range(n)]
        if is_regular_sequence(gs):
            return gs


def random_unimodular(rng: random.Random, n: int, nops: int = 6) -> QMatrix:
    """Product of integer shear matrices; determinant exactly 1."""
    m = identity(n)
    for _ in range(nops):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        rows = [[Fraction(1 if r == c else 0) for c in range(n)] for r in range(n)]
        rows[i][j] = Fraction(rng.randint(-2, 2))
        m = mat_mul(m, from_rows(rows))
    assert det(m) == 1
    return m


def random_invertible(rng: random.Random, n: int) -> QMatrix:
    while True:
        m = from_rows([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        if det(m) != 0:
            return m


def series_hilbert(n: int, d: int, bound: int) -> list[int]:
    """Oracle: coefficients of ((1 - t^d)/(1 - t))^n = (1 + t + ... + t^{d-1})^n."""
    coeffs = [1]
    block = [1] * d
    for _ in range(n):
        out = [0] * (len(coeffs) + len(block) - 1)
        for i, a in enumerate(coeffs):
            for j, b in enumerate(block):
                out[i + j] += a * b
        coeffs = out
    coeffs = coeffs + [0] * (bound + 1)
    return coeffs[: bound + 1]


def power_gens(n: int, degrees) -> list[Polynomial]:
    """The monomial generators x_i^{d_i}."""
    gens = []
    for i, d in enumerate(degrees):
        mono = tuple(d if j == i else 0 for j in range(n))
        gens.append(Polynomial.from_monomial(n, Space.PRIMAL, mono))
    return gens


def lift_block(g: Polynomial, nvars: int, offset: int) -> Polynomial:
    """Embed a small-ring form into n variables starting at offset."""
    pad = (0,) * offset
    tail = (0,) * (nvars - offset - g.nvars)
    return Polynomial(nvars, g.space, {pad + m + tail: c for m, c in g.terms.items()})


def restrict_block(g: Polynomial, start: int, size: int) -> Polynomial:
    """Inverse of lift_block for forms supported on one variable block."""
    terms = {}
    for m, c in g.terms.items():
        assert sum(m[:start]) == 0 and sum(m[start + size:]) == 0
        terms[m[start:start + size]] = c
    return Polynomial(size, g.space, terms)


def mixed_direct_sum(rng: random.Random, n: int, b: int, d: int):
    """A direct-sum regular sequence (split after b) with a scrambled basis.

    Returns (split_generators, mixed_generators); both generate the same
    ideal.
    """
    while True:
        first = [random_form(rng, b, d) for _ in range(b)]
        second = [random_form(rng, n - b, d) for _ in range(n - b)]
        lifted = [lift_block(g, n, 0) for g in first] + \
            [lift_block(g, n, b) for g in second]
        if not is_regular_sequence(lifted):
            continue
        mix = random_invertible(rng, n)
        mixed = [sum((Polynomial.constant(n, Space.PRIMAL, mix.entries[i][j]) * lifted[j]
                      for j in range(n)), Polynomial.zero(n, Space.PRIMAL))
                 for i in range(n)]
        return lifted, mixed
