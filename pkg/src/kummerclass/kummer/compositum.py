"""The sextic Q of cbrt(alpha) and the degree-12 polynomial of cbrt(alpha) - j."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, isqrt

from .polynomial import (
    IntegerPolynomial,
    factor_degrees_mod,
    is_squarefree,
    is_squarefree_mod,
)
from .search import KummerCandidate, icbrt


class DegenerateCompositum(ArithmeticError):
    """The resultant is not a squarefree degree-12 polynomial."""


def build_sextic(c: KummerCandidate) -> IntegerPolynomial:
    """``x^6 - T x^3 + N``."""
    return IntegerPolynomial([c.N, 0, 0, -c.T, 0, 0, 1])


def sextic_parameters(Q: IntegerPolynomial) -> tuple[int, int]:
    """``(T, N)`` for ``Q = x^6 - T x^3 + N``; raises on any other shape."""
    cs = Q.coefficients
    if Q.degree != 6 or not Q.is_monic() or any(cs[k] for k in (1, 2, 4, 5)):
        raise ValueError(f"{Q} is not of the form x^6 - T x^3 + N")
    return -cs[3], cs[0]


def sextic_is_irreducible(Q: IntegerPolynomial) -> bool:
    """Exact irreducibility test over Q for ``x^6 - T x^3 + N``.

    Q = (x^3 - alpha)(x^3 - conj(alpha)); it is reducible iff alpha is rational
    or a cube in its quadratic field.
    """
    T, N = sextic_parameters(Q)
    disc = T * T - 4 * N
    if disc >= 0 and isqrt(disc) ** 2 == disc:
        return False
    if N <= 0:
        return True
    c = icbrt(N)
    if c**3 != N:
        return True
    bound = 2 * isqrt(c) + 2
    return not any(t**3 - 3 * c * t == T for t in range(-bound, bound + 1))


# Z[j] with j^2 = -1 - j; elements are pairs (u, v) = u + v j.


def _zj_mul(x, y):
    u1, v1 = x
    u2, v2 = y
    vv = v1 * v2
    return (u1 * u2 - vv, u1 * v2 + u2 * v1 - vv)


def _shift_by_j(Q: IntegerPolynomial) -> list[tuple[int, int]]:
    """Coefficients of ``Q(x + j)`` in Z[j], lowest degree first."""
    n = Q.degree
    jpow = [(1, 0)]
    for _ in range(n):
        jpow.append(_zj_mul(jpow[-1], (0, 1)))
    out = [(0, 0)] * (n + 1)
    for k, c in enumerate(Q.coefficients):
        if not c:
            continue
        for i in range(k + 1):
            # c * binom(k, i) * x^i * j^(k-i)
            w = c * comb(k, i)
            u, v = jpow[k - i]
            cu, cv = out[i]
            out[i] = (cu + w * u, cv + w * v)
    return out


def compositum(Q: IntegerPolynomial) -> IntegerPolynomial:
    """``Res_y(y^2 + y + 1, Q(x + y)) = Q(x + j) Q(x + j^2)``.

    This is the characteristic polynomial of ``beta - j`` with ``Q(beta) = 0``
    and ``j`` a primitive cube root of unity, computed as the norm from
    Z[j][x] to Z[x].
    """
    sextic_parameters(Q)
    f = _shift_by_j(Q)
    # conjugation j -> j^2 = -1 - j sends u + v j to (u - v) - v j
    g = [(u - v, -v) for u, v in f]
    prod = [(0, 0)] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        for k, y in enumerate(g):
            pu, pv = _zj_mul(x, y)
            cu, cv = prod[i + k]
            prod[i + k] = (cu + pu, cv + pv)
    if any(v for _, v in prod):
        raise ArithmeticError("norm from Z[j] left a non-rational coefficient")
    P = IntegerPolynomial([u for u, _ in prod])
    if P.degree != 12 or not P.is_monic():
        raise DegenerateCompositum(f"resultant has degree {P.degree}")
    if not is_squarefree(P):
        raise DegenerateCompositum("resultant is not squarefree")
    return P


SMALL_PRIMES = (5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79)


@dataclass
class PlausibilityReport:
    squarefree: bool
    universal_coefficients: bool
    patterns: dict[int, list[int]] = field(default_factory=dict)
    root_free_prime: int | None = None
    possible_factor_degrees: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.squarefree and self.universal_coefficients and self.root_free_prime is not None

    def failures(self) -> list[str]:
        out = []
        if not self.squarefree:
            out.append("not squarefree")
        if not self.universal_coefficients:
            out.append("coefficients of x^11, x^10 are not -6, 21")
        if self.squarefree and self.root_free_prime is None:
            out.append("has a root modulo every tested prime")
        return out


def _subset_sums(degrees: list[int]) -> set[int]:
    sums = {0}
    for k in degrees:
        sums |= {s + k for s in sums}
    return sums


def plausibility_check(P: IntegerPolynomial, primes=SMALL_PRIMES) -> PlausibilityReport:
    """Heuristic sanity checks on a compositum output; no irreducibility proof.

    ``possible_factor_degrees`` lists degrees in 1..11 that a rational factor
    could still have given every tested factorization pattern; an empty list
    would certify irreducibility.
    """
    if P.degree != 12 or not P.is_monic():
        raise ValueError("expected a monic polynomial of degree 12")
    report = PlausibilityReport(
        squarefree=is_squarefree(P),
        universal_coefficients=(P.coeff(11), P.coeff(10)) == (-6, 21),
    )
    if not report.squarefree:
        return report
    possible = set(range(1, 12))
    for p in primes:
        if not is_squarefree_mod(P, p):
            continue
        pattern = factor_degrees_mod(P, p)
        report.patterns[p] = pattern
        if report.root_free_prime is None and 1 not in pattern:
            report.root_free_prime = p
        possible &= _subset_sums(pattern)
    report.possible_factor_degrees = sorted(possible)
    return report
