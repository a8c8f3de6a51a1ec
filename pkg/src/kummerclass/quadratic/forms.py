"""Binary quadratic forms: reduction, composition, class numbers.

Definite forms (D < 0) are handled in the usual Gauss-reduced normalization;
indefinite forms (D > 0) through cycles of reduced forms under the rho
operator.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from ..galois.structure import AbelianStructure, factor
from .arith import DEFAULT_DISCRIMINANT_BOUND, check_discriminant


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


@dataclass(frozen=True)
class QuadraticForm:
    """The form ``A x^2 + B x y + C y^2``."""

    A: int
    B: int
    C: int

    @property
    def discriminant(self) -> int:
        return self.B * self.B - 4 * self.A * self.C

    def is_primitive(self) -> bool:
        return gcd(gcd(self.A, self.B), self.C) == 1

    @classmethod
    def principal(cls, D: int) -> QuadraticForm:
        k = D % 2
        return cls(1, k, (k - D) // 4)

    def inverse(self) -> QuadraticForm:
        return QuadraticForm(self.A, -self.B, self.C)

    # -- definite forms --------------------------------------------------

    def is_reduced(self) -> bool:
        D = self.discriminant
        A, B, C = self.A, self.B, self.C
        if D > 0:
            return _indefinite_reduced(A, B, D)
        if A <= 0 or not abs(B) <= A <= C:
            return False
        return not ((abs(B) == A or A == C) and B < 0)

    def reduce(self) -> QuadraticForm:
        """Reduced representative of the proper equivalence class (D < 0)."""
        A, B, C = self.A, self.B, self.C
        if A * C * 4 <= B * B:
            raise ValueError("reduce() is for positive definite forms")
        if A < 0:
            raise ValueError("negative definite form")
        while True:
            # normalize -A < B <= A
            r = (A - B) // (2 * A)
            B, C = B + 2 * r * A, A * r * r + B * r + C
            if A > C or (A == C and B < 0):
                A, B, C = C, -B, A
                continue
            return QuadraticForm(A, B, C)

    def compose(self, other: QuadraticForm) -> QuadraticForm:
        """Dirichlet composition followed by reduction (D < 0)."""
        a1, b1, c1 = self.A, self.B, self.C
        a2, b2, c2 = other.A, other.B, other.C
        D = self.discriminant
        if other.discriminant != D:
            raise ValueError("forms of different discriminants")
        if a1 > a2:
            a1, b1, c1, a2, b2, c2 = a2, b2, c2, a1, b1, c1
        s = (b1 + b2) // 2
        n = b2 - s
        if a2 % a1 == 0:
            y1, d = 0, a1
        else:
            d, u, _ = _xgcd(a2, a1)
            y1 = u
        if s % d == 0:
            y2, x2, d1 = -1, 0, d
        else:
            d1, x2, v = _xgcd(s, d)
            y2 = -v
        v1 = a1 // d1
        v2 = a2 // d1
        r = (y1 * y2 * n - x2 * c2) % v1
        b3 = b2 + 2 * v2 * r
        a3 = v1 * v2
        c3 = (b3 * b3 - D) // (4 * a3)
        return QuadraticForm(a3, b3, c3).reduce()

    def __mul__(self, other: QuadraticForm) -> QuadraticForm:
        return self.compose(other)

    def __pow__(self, n: int) -> QuadraticForm:
        if n < 0:
            return self.inverse().reduce() ** (-n)
        result = QuadraticForm.principal(self.discriminant)
        base = self.reduce()
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- indefinite forms ------------------------------------------------

    def rho(self) -> QuadraticForm:
        """One reduction step ``(A, B, C) -> (C, B', A')`` for D > 0."""
        D = self.discriminant
        r = isqrt(D)
        c2 = 2 * abs(self.C)
        b = -self.B
        b += ((r - b) // c2) * c2  # r - 2|C| < b <= r, so sqrt(D) - 2|C| < b < sqrt(D)
        return QuadraticForm(self.C, b, (b * b - D) // (4 * self.C))


def _indefinite_reduced(A: int, B: int, D: int) -> bool:
    # exact form of 0 < B < sqrt(D) and sqrt(D) - B < 2|A| < sqrt(D) + B
    if B <= 0 or B * B >= D:
        return False
    t = 2 * abs(A)
    return (t + B) ** 2 > D and (t <= B or (t - B) ** 2 < D)


def reduced_forms(D: int, bound: int = DEFAULT_DISCRIMINANT_BOUND) -> list[QuadraticForm]:
    """All primitive reduced positive definite forms of discriminant ``D < 0``."""
    check_discriminant(D, bound)
    if D >= 0:
        raise ValueError("reduced_forms expects D < 0")
    out = []
    A = 1
    while 3 * A * A <= -D:
        for B in range(-A + 1, A + 1):
            num = B * B - D
            if num % (4 * A):
                continue
            C = num // (4 * A)
            if C < A or (C == A and B < 0):
                continue
            if gcd(gcd(A, B), C) == 1:
                out.append(QuadraticForm(A, B, C))
        A += 1
    return out


def reduced_indefinite_forms(
    D: int, bound: int = DEFAULT_DISCRIMINANT_BOUND
) -> list[QuadraticForm]:
    """All primitive reduced indefinite forms of discriminant ``D > 0``."""
    check_discriminant(D, bound)
    if D <= 0:
        raise ValueError("reduced_indefinite_forms expects D > 0")
    r = isqrt(D)
    out = []
    for B in range(2 - D % 2, r + 1, 2):
        n = (D - B * B) // 4  # = -A*C > 0
        for A in range(1, r + 1):
            if n % A:
                continue
            for a in (A, -A):
                c = -n // a
                if _indefinite_reduced(a, B, D) and gcd(gcd(a, B), c) == 1:
                    out.append(QuadraticForm(a, B, c))
    return out


def form_cycles(D: int, bound: int = DEFAULT_DISCRIMINANT_BOUND) -> list[list[QuadraticForm]]:
    """Partition the reduced indefinite forms into rho-cycles (narrow classes)."""
    pending = set(reduced_indefinite_forms(D, bound))
    cycles = []
    for f in sorted(pending, key=lambda q: (q.B, abs(q.A), q.A)):
        if f not in pending:
            continue
        cycle = [f]
        pending.discard(f)
        g = f.rho()
        while g != f:
            if g not in pending:
                raise ArithmeticError(f"rho left the reduced set at {g}")
            pending.discard(g)
            cycle.append(g)
            g = g.rho()
        cycles.append(cycle)
    return cycles


def principal_cycle_has_negative_one(D: int, bound: int = DEFAULT_DISCRIMINANT_BOUND) -> bool:
    """Whether -1 is a norm from the order: the principal cycle contains an A = -1 form."""
    for cycle in form_cycles(D, bound):
        if any(f.A == 1 for f in cycle):
            return any(f.A == -1 for f in cycle)
    raise ArithmeticError("no principal cycle found")


def narrow_class_number(D: int, bound: int = DEFAULT_DISCRIMINANT_BOUND) -> int:
    if D < 0:
        return class_number(D, bound)
    return len(form_cycles(D, bound))


def class_number(D: int, bound: int = DEFAULT_DISCRIMINANT_BOUND) -> int:
    """Ordinary (wide) class number of the quadratic order of discriminant D.

    For D > 0 the number of cycles counts narrow classes; when the fundamental
    unit has norm +1 each wide class splits into two narrow ones.
    """
    check_discriminant(D, bound)
    if D < 0:
        return len(reduced_forms(D, bound))
    cycles = form_cycles(D, bound)
    principal = next(c for c in cycles if any(f.A == 1 for f in c))
    if any(f.A == -1 for f in principal):
        return len(cycles)
    return len(cycles) // 2


def _count_killed(elements: list[QuadraticForm], k: int) -> int:
    identity = QuadraticForm.principal(elements[0].discriminant)
    return sum(1 for f in elements if f**k == identity)


def class_group_structure(D: int, bound: int = DEFAULT_DISCRIMINANT_BOUND) -> AbelianStructure:
    """Elementary divisors of the form class group of discriminant ``D < 0``.

    For each prime p dividing h, the counts ``#{x : x^(p^k) = 1} = p^(sum min(e_i, k))``
    determine the exponents ``e_i`` of the p-primary part.
    """
    forms = reduced_forms(D, bound)
    h = len(forms)
    divisors = []
    for p, v in factor(h).items() if h > 1 else ():
        # s_k = sum_i min(e_i, k); the number of e_i >= k is s_k - s_{k-1}
        s = [0]
        k = 1
        while s[-1] < v:
            n_k = _count_killed(forms, p**k)
            s.append(_log(n_k, p))
            k += 1
        at_least = [s[k] - s[k - 1] for k in range(1, len(s))] + [0]
        for k in range(1, len(s)):
            divisors.extend([p**k] * (at_least[k - 1] - at_least[k]))
    return AbelianStructure(divisors)


def _log(n: int, p: int) -> int:
    e = 0
    while n > 1:
        if n % p:
            raise ArithmeticError(f"{n} is not a power of {p}")
        n //= p
        e += 1
    return e
