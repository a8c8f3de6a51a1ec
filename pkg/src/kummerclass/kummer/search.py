"""Kummer generators alpha in Q(sqrt(-d)) whose norm is a rational cube."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

import mpmath

# Working precision (bits) of the legacy GP loop: 38 decimal digits.
LEGACY_PRECISION_BITS = 128


def icbrt(n: int) -> int:
    """Floor of the real cube root of ``n >= 0``."""
    if n < 0:
        raise ValueError("icbrt expects n >= 0")
    if n < 2:
        return n
    c = 1 << ((n.bit_length() + 2) // 3)
    while True:
        nxt = (2 * c + n // (c * c)) // 3
        if nxt >= c:
            break
        c = nxt
    while c * c * c > n:
        c -= 1
    while (c + 1) ** 3 <= n:
        c += 1
    return c


def legacy_cube_test(n: int, precision: int = LEGACY_PRECISION_BITS) -> bool:
    """``floor(n^(1/3))^3 == n`` with the cube root taken in floating point.

    The root is ``exp(log(n)/3)`` at ``precision`` bits, as in the GP search
    loop whose output tables this package reproduces.  True cubes whose
    computed root falls just below the integer are rejected, so this accepts
    a subset of the exact cubes.
    """
    with mpmath.workprec(precision):
        root = mpmath.exp(mpmath.log(mpmath.mpf(n)) / 3)
        return int(mpmath.floor(root)) ** 3 == n


@dataclass(frozen=True)
class KummerCandidate:
    """alpha = a + b sqrt(-d), or (a + b sqrt(-d))/2 when ``half``."""

    d: int
    a: int
    b: int
    half: bool
    T: int
    N: int
    cube_root: int

    @classmethod
    def from_ab(cls, d: int, a: int, b: int) -> KummerCandidate:
        half = (-d) % 4 == 1 and (a * b) % 2 == 1
        if half:
            T, N = a, (a * a + d * b * b) // 4
        else:
            T, N = 2 * a, a * a + d * b * b
        c = icbrt(N)
        if c**3 != N:
            raise ValueError(f"norm {N} of alpha for (a, b) = ({a}, {b}) is not a cube")
        return cls(d, a, b, half, T, N, c)

    def is_valid(self) -> bool:
        if gcd(self.a, self.b) != 1 or self.cube_root**3 != self.N:
            return False
        expect_half = (-self.d) % 4 == 1 and (self.a * self.b) % 2 == 1
        if self.half != expect_half:
            return False
        if self.half:
            return self.T == self.a and 4 * self.N == self.a**2 + self.d * self.b**2
        return self.T == 2 * self.a and self.N == self.a**2 + self.d * self.b**2

    def passes_legacy_cube_test(self) -> bool:
        return legacy_cube_test(self.N)

    def alpha_cube_root_trace(self) -> int | None:
        """Trace t of some beta in Q(sqrt(-d)) with beta^3 = alpha, if one exists.

        beta has norm ``cube_root`` and ``Tr(beta^3) = t^3 - 3 c t``, so t is an
        integer root of ``t^3 - 3ct - T``; such a root forces beta^3 to be alpha
        or its conjugate.
        """
        c = self.cube_root
        bound = 2 * isqrt(c) + 2
        for t in range(-bound, bound + 1):
            if t**3 - 3 * c * t == self.T:
                return t
        return None

    def alpha_is_cube(self) -> bool:
        return self.alpha_cube_root_trace() is not None

    def ideal_is_principal(self) -> bool:
        """Whether the ideal a with (alpha) = a^3 is principal.

        Units of Q(sqrt(-d)) for d > 3 are +-1, both cubes, so a = (beta)
        exactly when alpha is a cube.
        """
        return self.alpha_is_cube()

    def has_rational_divisor(self) -> bool:
        """Some rational prime divides alpha in the ring of integers."""
        if self.half:
            # (a + b sqrt(-d))/2 with a, b odd: an odd q divides it iff q | a, b
            return gcd(self.a, self.b) > 1
        g = gcd(self.a, self.b)
        if g > 1:
            return True
        # 2 | a + b sqrt(-d) in Z[(1 + sqrt(-d))/2] iff a = b (mod 2)
        return (-self.d) % 4 == 1 and (self.a - self.b) % 2 == 0

    def alpha_str(self) -> str:
        core = f"{self.a} + {self.b}*sqrt(-{self.d})"
        return f"({core})/2" if self.half else core


CUBE_TESTS = ("legacy", "exact")


def _hits_for_b(d: int, b: int, a_max: int) -> list[int]:
    """All a <= a_max with N(alpha) an exact cube, for the given b."""
    db2 = d * b * b
    half_possible = (-d) % 4 == 1 and b % 2 == 1
    found = set()
    # integral formula N = a^2 + d b^2; applies unless a and b are both odd (half case)
    lo, hi = db2 + 1, a_max * a_max + db2
    for c in range(icbrt(lo - 1) + 1, icbrt(hi) + 1):
        sq = c**3 - db2
        a = isqrt(sq)
        if a * a == sq and 1 <= a <= a_max and not (half_possible and a % 2 == 1):
            found.add(a)
    if half_possible:
        for c in range(icbrt((db2 + 1) // 4), icbrt(hi // 4) + 1):
            sq = 4 * c**3 - db2
            if sq <= 0:
                continue
            a = isqrt(sq)
            if a * a == sq and 1 <= a <= a_max and a % 2 == 1:
                found.add(a)
    return sorted(a for a in found if gcd(a, b) == 1)


def search_alpha(
    d: int,
    a_max: int = 1000,
    b_max: int = 100,
    *,
    cube_test: str = "legacy",
    strict: bool = False,
) -> list[KummerCandidate]:
    """Candidates with gcd(a, b) = 1 and cube norm, b outer and a inner ascending.

    ``cube_test="exact"`` keeps every exact cube; ``"legacy"`` keeps only those
    the floating-point loop accepts.  ``strict`` drops candidates whose ideal
    a is principal.  The first element is the canonical candidate.
    """
    if cube_test not in CUBE_TESTS:
        raise ValueError(f"cube_test must be one of {CUBE_TESTS}")
    if d < 1:
        raise ValueError("d must be positive")
    out = []
    for b in range(1, b_max + 1):
        for a in _hits_for_b(d, b, a_max):
            cand = KummerCandidate.from_ab(d, a, b)
            if cube_test == "legacy" and not cand.passes_legacy_cube_test():
                continue
            if strict and cand.ideal_is_principal():
                continue
            out.append(cand)
    return out


def first_candidate(d: int, a_max: int = 1000, b_max: int = 100, **kwargs) -> KummerCandidate | None:
    hits = search_alpha(d, a_max, b_max, **kwargs)
    return hits[0] if hits else None
