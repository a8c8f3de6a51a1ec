"""Fundamental units of real quadratic orders and the 3-primary test."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

from .arith import is_square


@dataclass(frozen=True)
class FundamentalUnit:
    """``eps = (x + y sqrt(D)) / 2`` if ``half`` else ``x + y sqrt(D)``."""

    x: int
    y: int
    half: bool
    norm_sign: int

    @classmethod
    def from_halves(cls, t: int, u: int, D: int) -> FundamentalUnit:
        """Build from ``eps = (t + u sqrt(D)) / 2``, preferring integral coordinates."""
        norm4 = t * t - D * u * u
        if norm4 not in (4, -4):
            raise ValueError(f"({t} + {u} sqrt({D}))/2 is not a unit")
        sign = norm4 // 4
        if t % 2 == 0 and u % 2 == 0:
            return cls(t // 2, u // 2, False, sign)
        return cls(t, u, True, sign)

    def halves(self) -> tuple[int, int]:
        """``(t, u)`` with ``eps = (t + u sqrt(D)) / 2``."""
        return (self.x, self.y) if self.half else (2 * self.x, 2 * self.y)

    def norm_identity_holds(self, D: int) -> bool:
        lhs = self.x * self.x - D * self.y * self.y
        return lhs == (4 if self.half else 1) * self.norm_sign

    def basis_coordinates(self, D: int) -> tuple[int, int]:
        """Coordinates ``(u, v)`` with ``eps = u + v w``, ``w = (D + sqrt(D))/2``."""
        t, s = self.halves()
        return (t - s * D) // 2, s

    def __str__(self) -> str:
        core = f"{self.x} + {self.y}*sqrt(D)"
        return f"({core})/2" if self.half else core


@lru_cache(maxsize=4096)
def fundamental_unit(D: int) -> FundamentalUnit:
    """Smallest unit > 1 of the order of discriminant ``D > 0``.

    Expands ``(P0 + sqrt(D))/2`` (``P0 = D mod 2``) as a continued fraction:
    with ``xi = (P + sqrt(D))/Q`` the first convergent ``p/q`` after which
    ``Q = 2`` recurs gives the unit ``p - q * conj(xi_0)``, i.e. ``t = 2p - q P0``, ``u = q``.
    """
    if D <= 0 or D % 4 not in (0, 1):
        raise ValueError(f"{D} is not a positive discriminant")
    if is_square(D):
        raise ValueError(f"{D} is a square")
    r = isqrt(D)
    p0 = D % 2
    P, Q = p0, 2
    p_prev, p_cur = 0, 1
    q_prev, q_cur = 1, 0
    while True:
        a = (P + r) // Q
        p_prev, p_cur = p_cur, a * p_cur + p_prev
        q_prev, q_cur = q_cur, a * q_cur + q_prev
        P = a * Q - P
        Q = (D - P * P) // Q
        if Q == 2:
            t, u = 2 * p_cur - q_cur * p0, q_cur
            return FundamentalUnit.from_halves(t, u, D)


class _QuadraticResidues:
    """The ring O/mO with O = Z[w], w = (D + sqrt(D))/2, as pairs (u, v)."""

    def __init__(self, D: int, m: int):
        self.D, self.m = D, m
        # w^2 = D w - (D^2 - D)/4
        self.wsq = (D % m, (-(D * D - D) // 4) % m)

    def mul(self, x, y):
        m = self.m
        u1, v1 = x
        u2, v2 = y
        vv = v1 * v2
        # (u1 + v1 w)(u2 + v2 w) = u1u2 + (u1v2 + u2v1) w + v1v2 (D w - c)
        return (
            (u1 * u2 + vv * self.wsq[1]) % m,
            (u1 * v2 + u2 * v1 + vv * self.wsq[0]) % m,
        )

    def norm(self, x) -> int:
        u, v = x
        # N(u + v w) = u^2 + D u v + (D^2 - D)/4 v^2
        return u * u + self.D * u * v + (self.D * self.D - self.D) // 4 * v * v

    def units(self):
        m = self.m
        return [(u, v) for u in range(m) for v in range(m) if gcd(self.norm((u, v)), m) == 1]

    def cube(self, x):
        return self.mul(self.mul(x, x), x)


@lru_cache(maxsize=256)
def _cubes_mod_9(D_mod: int) -> frozenset:
    # the ring O/9O only depends on D modulo 36 (w^2 coefficients mod 9)
    ring = _QuadraticResidues(D_mod, 9)
    return frozenset(ring.cube(z) for z in ring.units())


def unit_group_mod_9(D: int) -> list[tuple[int, int]]:
    return _QuadraticResidues(D % 36, 9).units()


def cube_subgroup_mod_9(D: int) -> frozenset:
    """The subgroup of cubes in ``(O/9O)^x`` as ``(u, v)`` residue pairs."""
    return _cubes_mod_9(D % 36)


def residue_mod_9(eps: FundamentalUnit, D: int) -> tuple[int, int]:
    u, v = eps.basis_coordinates(D)
    return u % 9, v % 9


def is_3_primary(eps: FundamentalUnit, D: int) -> bool:
    """True iff the residue of ``eps`` in ``(O/9O)^x`` is a cube."""
    ring = _QuadraticResidues(D % 36, 9)
    res = residue_mod_9(eps, D)
    if gcd(ring.norm(res), 3) != 1:
        raise ValueError("element is not prime to 3; not a unit of the order")
    return res in cube_subgroup_mod_9(D)
