"""Dense univariate polynomials over GF(2^m).

coeffs[i] is the coefficient of x^i.  Every Poly is normalized: the last
stored coefficient is nonzero, and the zero polynomial stores nothing at
all.  Its degree is the MINUS_INF sentinel rather than any integer, so a
degree comparison can never confuse the zero polynomial with a constant.
"""

from __future__ import annotations

from collections.abc import Iterable

from .galois import Field

MINUS_INF = float("-inf")


class Poly:
    """Immutable polynomial bound to one field context."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        order = field.order
        for c in cs:
            if not isinstance(c, int) or isinstance(c, bool) or not 0 <= c < order:
                raise ValueError(f"coefficient {c!r} is outside GF(2^{field.m})")
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def _make(cls, field: Field, coeffs: list[int]) -> Poly:
        # internal fast path: coefficients already known to be valid elements
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        p = object.__new__(cls)
        p.field = field
        p.coeffs = tuple(coeffs)
        return p

    @classmethod
    def zero(cls, field: Field) -> Poly:
        return cls._make(field, [])

    @classmethod
    def one(cls, field: Field) -> Poly:
        return cls._make(field, [1])

    @property
    def degree(self) -> int | float:
        """Degree of the polynomial; MINUS_INF for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        """Leading coefficient; 0 for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else 0

    def _compat(self, other: Poly) -> None:
        a, b = self.field, other.field
        if a.m != b.m or a.prim_poly != b.prim_poly:
            raise ValueError(f"mixed field contexts: {a!r} vs {b!r}")

    def __add__(self, other: Poly) -> Poly:
        if not isinstance(other, Poly):
            return NotImplemented
        self._compat(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] ^= c
        return Poly._make(self.field, out)

    __sub__ = __add__  # characteristic 2

    def __mul__(self, other: Poly) -> Poly:
        if not isinstance(other, Poly):
            return NotImplemented
        self._compat(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._make(self.field, [])
        fmul = self.field.mul
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                out[i + j] ^= fmul(ai, bj)
        return Poly._make(self.field, out)

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        """Quotient and remainder; degree(remainder) < degree(other)."""
        if not isinstance(other, Poly):
            return NotImplemented
        self._compat(other)
        if other.is_zero:
            raise ValueError("polynomial division by zero")
        dn = len(self.coeffs) - 1
        dd = len(other.coeffs) - 1
        if self.is_zero or dn < dd:
            return Poly._make(self.field, []), self
        f = self.field
        fmul = f.mul
        rem = list(self.coeffs)
        den = other.coeffs
        inv_lead = None if den[-1] == 1 else f.inv(den[-1])
        quot = [0] * (dn - dd + 1)
        for shift in range(dn - dd, -1, -1):
            cur = rem[shift + dd]
            factor = cur if inv_lead is None else fmul(cur, inv_lead)
            quot[shift] = factor
            for j in range(dd):
                rem[shift + j] ^= fmul(factor, den[j])
            rem[shift + dd] = 0
        return Poly._make(f, quot), Poly._make(f, rem[:dd])

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def scale(self, c: int) -> Poly:
        """Product with the scalar c."""
        fmul = self.field.mul
        return Poly._make(self.field, [fmul(c, a) for a in self.coeffs])

    def evaluate(self, at: int) -> int:
        """Value of the polynomial at a point, by Horner's rule."""
        fmul = self.field.mul
        acc = 0
        for c in reversed(self.coeffs):
            acc = fmul(acc, at) ^ c
        return acc

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return (self.coeffs == other.coeffs
                and self.field.m == other.field.m
                and self.field.prim_poly == other.field.prim_poly)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __str__(self) -> str:
        # textual form: coefficients low-to-high, space separated
        return " ".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    def __repr__(self) -> str:
        return f"Poly(GF(2^{self.field.m}), {list(self.coeffs)})"


def xn_minus_one(field: Field, n: int) -> Poly:
    """x^n - 1, which in characteristic 2 is x^n + 1."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return Poly._make(field, [1] + [0] * (n - 1) + [1])
