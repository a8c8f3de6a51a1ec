"""Integer helpers shared by the quadratic-field code."""

from __future__ import annotations

from math import isqrt

DEFAULT_DISCRIMINANT_BOUND = 10**7


def is_squarefree(n: int) -> bool:
    """True iff no prime square divides ``n`` (trial division up to sqrt(n))."""
    if n < 1:
        raise ValueError(f"is_squarefree needs n >= 1, got {n}")
    if n % 4 == 0:
        return False
    if n % 2 == 0:
        n //= 2
    q = 3
    while q * q <= n:
        if n % q == 0:
            n //= q
            if n % q == 0:
                return False
        q += 2
    return True


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def is_discriminant(D: int) -> bool:
    return D % 4 in (0, 1) and not is_square(D)


def is_fundamental_discriminant(D: int) -> bool:
    if not is_discriminant(D):
        return False
    if D % 4 == 1:
        return is_squarefree(abs(D))
    m = D // 4
    return m % 4 in (2, 3) and is_squarefree(abs(m))


def field_discriminant(m: int) -> int:
    """Discriminant of Q(sqrt(m)) for squarefree ``m != 1``."""
    return m if m % 4 == 1 else 4 * m


def discriminants(d: int) -> tuple[int, int]:
    """Discriminants of Q(sqrt(-d)) and Q(sqrt(3d))."""
    if d < 1 or not is_squarefree(d):
        raise ValueError(f"d={d} must be a squarefree positive integer")
    if d % 3 == 0:
        raise ValueError(f"d={d} is divisible by 3")
    return field_discriminant(-d), field_discriminant(3 * d)


def check_discriminant(D: int, bound: int = DEFAULT_DISCRIMINANT_BOUND) -> None:
    if not is_discriminant(D):
        raise ValueError(f"{D} is not a non-square discriminant (0 or 1 mod 4)")
    if abs(D) > bound:
        raise ValueError(f"|D|={abs(D)} exceeds the configured bound {bound}")
