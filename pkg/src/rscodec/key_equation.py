"""Partial extended Euclidean solver for decoder key equations.

Every decoding pipeline in this package reduces to the same problem: given
a modulus and a known polynomial, find the lowest-degree monic locator W
and combination P with

    W(x) * known(x) = P(x)  (mod modulus(x))

The classical trick is to run the extended Euclidean algorithm on
(modulus, known) and stop at the first remainder whose degree drops below
a threshold chosen by the caller; that remainder is P and its cofactor
against known is W.  Only the remainders and the known-side cofactors are
tracked, which is all the congruence needs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polynomial import Poly


@dataclass(frozen=True)
class KeyEquationProblem:
    """One instance of the congruence to solve.

    stop_degree is exclusive: iteration ends at the first remainder with
    degree(remainder) < stop_degree.
    """

    modulus: Poly
    known: Poly
    stop_degree: int

    def __post_init__(self) -> None:
        self.known._compat(self.modulus)
        if self.known.degree >= self.modulus.degree:
            raise ValueError(
                f"known degree {self.known.degree} must be below "
                f"modulus degree {self.modulus.degree}")
        if not 0 < self.stop_degree <= self.modulus.degree:
            raise ValueError(
                f"stop_degree {self.stop_degree} is outside "
                f"(0, {self.modulus.degree}]")


@dataclass(frozen=True)
class KeyEquationSolution:
    """Monic locator, matching combination, and the iteration count."""

    locator: Poly
    combination: Poly
    iterations: int


def solve(problem: KeyEquationProblem) -> KeyEquationSolution:
    """Run the partial extended Euclidean algorithm on one problem.

    Returns the pair scaled so the locator is monic.  A zero known
    polynomial yields (1, 0) in zero iterations.  The result satisfies
    locator * known = combination (mod modulus) with
    degree(combination) < stop_degree.
    """
    field = problem.modulus.field
    r_prev, r_cur = problem.modulus, problem.known
    v_prev, v_cur = Poly.zero(field), Poly.one(field)
    stop = problem.stop_degree

    iterations = 0
    while r_cur.degree >= stop:
        quot, r_next = divmod(r_prev, r_cur)
        r_prev, r_cur = r_cur, r_next
        v_prev, v_cur = v_cur, v_prev + quot * v_cur
        iterations += 1

    lead = v_cur.lead
    if lead != 1:
        factor = field.inv(lead)
        v_cur = v_cur.scale(factor)
        r_cur = r_cur.scale(factor)
    return KeyEquationSolution(locator=v_cur, combination=r_cur,
                               iterations=iterations)
