"""Finite-field transforms between coefficient and evaluation form.

The evaluation points are the n = 2^m - 1 powers of alpha, so a length-n
value vector is the spectrum of a polynomial of degree < n.  n is odd,
which makes n * x = x in characteristic 2; the inverse transform therefore
needs no 1/n scaling.  Both directions are direct O(n^2) loops on purpose:
at these block lengths the bookkeeping of a fast transform costs more than
it saves, and the schoolbook loops give exact, easily audited operation
counts.
"""

from __future__ import annotations

from collections.abc import Sequence

from .galois import Field
from .polynomial import Poly, xn_minus_one


def evaluate_all(p: Poly, n: int) -> tuple[int, ...]:
    """Evaluate p at every power of alpha: out[i] = p(alpha^i).

    Requires degree(p) < n and n = 2^m - 1 for the polynomial's field.
    """
    field = p.field
    if n != field.n:
        raise ValueError(f"n must be {field.n} for GF(2^{field.m}), got {n}")
    if len(p.coeffs) > n:
        raise ValueError(f"degree {p.degree} is not below n = {n}")
    return tuple(p.evaluate(field.alpha_pow(i)) for i in range(n))


def interpolate_all(field: Field, values: Sequence[int]) -> Poly:
    """The unique polynomial of degree < n with p(alpha^i) = values[i].

    Inverse of evaluate_all.  Coefficient j comes out as V(alpha^-j) where
    V is the polynomial whose coefficients are the values themselves.
    """
    n = field.n
    if len(values) != n:
        raise ValueError(f"expected {n} values, got {len(values)}")
    vpoly = Poly(field, values)
    return Poly._make(
        field, [vpoly.evaluate(field.alpha_pow(-j)) for j in range(n)])


def interpolate_subset(field: Field, points: Sequence[tuple[int, int]]) -> Poly:
    """Lagrange interpolation through (alpha^pos, value) pairs.

    points holds (position, value) pairs with distinct positions in
    [0, n).  The result is the unique polynomial of degree < len(points)
    through them.
    """
    n = field.n
    if not points:
        raise ValueError("at least one interpolation point is required")
    seen = set()
    for pos, _ in points:
        if not 0 <= pos < n:
            raise ValueError(f"position {pos} is outside [0, {n})")
        if pos in seen:
            raise ValueError(f"duplicate position {pos}")
        seen.add(pos)

    xs = [field.alpha_pow(pos) for pos, _ in points]
    master = Poly.one(field)
    for x in xs:
        master = master * Poly._make(field, [x, 1])

    acc = Poly.zero(field)
    fmul = field.mul
    for x, (_, y) in zip(xs, points):
        basis, _ = divmod(master, Poly._make(field, [x, 1]))
        denom = basis.evaluate(x)
        acc = acc + basis.scale(fmul(y, field.inv(denom)))
    return acc


def cyclotomic_quotient(erasure_locator: Poly, n: int) -> Poly:
    """Exact quotient (x^n - 1) / locator.

    Every root of the locator must be an n-th root of unity; a nonzero
    remainder means it was not built from distinct alpha powers.
    """
    field = erasure_locator.field
    if n != field.n:
        raise ValueError(f"n must be {field.n} for GF(2^{field.m}), got {n}")
    quot, rem = divmod(xn_minus_one(field, n), erasure_locator)
    if not rem.is_zero:
        raise ValueError("locator does not divide x^n - 1")
    return quot
