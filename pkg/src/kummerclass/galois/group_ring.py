"""Arithmetic in Z[sigma]/(1 + sigma + ... + sigma^(p-1)).

Elements are stored in the power basis ``1, sigma, ..., sigma^(p-2)``.  The
quotient is the ring of integers of the p-th cyclotomic field, so it is a
domain and multiplication by a non-zero element is injective.
"""

from __future__ import annotations

from dataclasses import dataclass


def _check_prime(p: int) -> None:
    if p < 3 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
        raise ValueError(f"p must be an odd prime, got {p}")


@dataclass(frozen=True)
class GroupRingElement:
    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.p - 1:
            raise ValueError(f"expected {self.p - 1} coefficients, got {len(self.coeffs)}")

    @classmethod
    def from_cyclic(cls, p: int, coeffs) -> GroupRingElement:
        """Reduce a coefficient vector on ``1, sigma, ..., sigma^k`` (any k)."""
        acc = [0] * p
        for i, c in enumerate(coeffs):
            acc[i % p] += c
        # sigma^(p-1) = -(1 + sigma + ... + sigma^(p-2))
        top = acc[p - 1]
        return cls(p, tuple(c - top for c in acc[: p - 1]))

    @classmethod
    def scalar(cls, p: int, n: int) -> GroupRingElement:
        _check_prime(p)
        return cls(p, (n,) + (0,) * (p - 2))

    @classmethod
    def one(cls, p: int) -> GroupRingElement:
        return cls.scalar(p, 1)

    @classmethod
    def sigma(cls, p: int) -> GroupRingElement:
        _check_prime(p)
        return cls.from_cyclic(p, [0, 1])

    @classmethod
    def omega(cls, p: int) -> GroupRingElement:
        """sigma * (sigma - 1)."""
        _check_prime(p)
        return cls.from_cyclic(p, [0, -1, 1])

    @classmethod
    def nu(cls, p: int) -> GroupRingElement:
        """1 + sigma + ... + sigma^(p-1), which is zero in this quotient."""
        _check_prime(p)
        return cls.from_cyclic(p, [1] * p)

    def _same(self, other: GroupRingElement) -> None:
        if self.p != other.p:
            raise ValueError("elements live in different rings")

    def __add__(self, other):
        self._same(other)
        return GroupRingElement(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return GroupRingElement(self.p, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElement(self.p, tuple(other * a for a in self.coeffs))
        self._same(other)
        prod = [0] * (2 * self.p - 3)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return GroupRingElement.from_cyclic(self.p, prod)

    __rmul__ = __mul__

    def __pow__(self, m: int):
        if m < 0:
            raise ValueError("negative powers are not supported")
        result = GroupRingElement.one(self.p)
        base = self
        while m:
            if m & 1:
                result = result * base
            base = base * base
            m >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def multiplication_matrix(self) -> list[list[int]]:
        """Matrix of ``x -> self * x``; column i is ``self * sigma^i``."""
        p = self.p
        cols = []
        for i in range(p - 1):
            basis = GroupRingElement(p, tuple(int(k == i) for k in range(p - 1)))
            cols.append((self * basis).coeffs)
        return [[cols[j][i] for j in range(p - 1)] for i in range(p - 1)]

    def mod(self, q: int) -> tuple[int, ...]:
        return tuple(c % q for c in self.coeffs)


def omega_power(p: int, m: int) -> GroupRingElement:
    """Canonical representative of ``omega^m`` with ``omega = sigma(sigma - 1)``."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return GroupRingElement.omega(p) ** m


def sigma_minus_one_power(p: int, m: int) -> GroupRingElement:
    return (GroupRingElement.sigma(p) - GroupRingElement.one(p)) ** m
