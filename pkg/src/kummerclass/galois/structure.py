"""Finite abelian groups described by their elementary divisors."""

from __future__ import annotations

from dataclasses import dataclass
from math import prod


def factor(n: int) -> dict[int, int]:
    """Trial-division factorization of a positive integer."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    q = 2
    while q * q <= n:
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
        q += 1 if q == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _prime_base(q: int) -> int | None:
    f = factor(q)
    return next(iter(f)) if len(f) == 1 else None


@dataclass(frozen=True)
class AbelianStructure:
    """Elementary divisors of a finite abelian group, largest first.

    Trivial factors are dropped, so the trivial group has ``divisors == ()``;
    ``AbelianStructure([1])`` normalizes to it.
    """

    divisors: tuple[int, ...] = ()

    def __init__(self, divisors=()):
        ds = []
        for q in divisors:
            q = int(q)
            if q < 1:
                raise ValueError(f"invalid divisor {q}")
            if q == 1:
                continue
            if _prime_base(q) is None:
                raise ValueError(f"{q} is not a prime power; use from_invariants")
            ds.append(q)
        object.__setattr__(self, "divisors", tuple(sorted(ds, reverse=True)))

    @classmethod
    def from_invariants(cls, cyclic_orders) -> AbelianStructure:
        """Split arbitrary cyclic orders (e.g. ``[24, 4, 4, 2]``) into prime powers."""
        ds = []
        for c in cyclic_orders:
            c = int(c)
            if c == 0:
                raise ValueError("infinite cyclic factor")
            if c > 1:
                ds.extend(p**e for p, e in factor(c).items())
        return cls(ds)

    @classmethod
    def p_group(cls, p: int, exponents) -> AbelianStructure:
        return cls([p**e for e in exponents])

    @property
    def order(self) -> int:
        return prod(self.divisors)

    def primes(self) -> list[int]:
        return sorted({_prime_base(q) for q in self.divisors})

    def p_part(self, p: int) -> AbelianStructure:
        return AbelianStructure([q for q in self.divisors if q % p == 0])

    def exponents(self, p: int) -> list[int]:
        """Exponents of the p-primary factors, largest first."""
        return [valuation(q, p) for q in self.divisors if q % p == 0]

    def rank(self, p: int) -> int:
        """p-rank: dimension of G/G^p over F_p."""
        return sum(1 for q in self.divisors if q % p == 0)

    def is_p_group(self, p: int) -> bool:
        return all(q % p == 0 for q in self.divisors)

    def invariant_factors(self) -> list[int]:
        """Cyclic decomposition ``c_1, ..., c_l`` with ``c_{i+1} | c_i``."""
        by_prime = {p: [q for q in self.divisors if q % p == 0] for p in self.primes()}
        length = max((len(v) for v in by_prime.values()), default=0)
        return [
            prod(v[i] for v in by_prime.values() if i < len(v)) for i in range(length)
        ]

    def as_list(self) -> list[int]:
        return list(self.divisors) or [1]

    def __str__(self) -> str:
        return str(self.as_list())
