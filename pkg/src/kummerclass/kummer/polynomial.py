"""Dense integer polynomials and a few exact/modular algorithms on them."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction


def _trim(cs) -> tuple[int, ...]:
    cs = list(cs)
    while len(cs) > 1 and cs[-1] == 0:
        cs.pop()
    return tuple(cs) if cs else (0,)


@dataclass(frozen=True)
class IntegerPolynomial:
    """Coefficients lowest degree first."""

    coefficients: tuple[int, ...]

    def __init__(self, coefficients):
        object.__setattr__(self, "coefficients", _trim(int(c) for c in coefficients))

    @classmethod
    def from_high(cls, coeffs) -> IntegerPolynomial:
        return cls(list(coeffs)[::-1])

    def high_first(self) -> list[int]:
        return list(self.coefficients[::-1])

    @property
    def degree(self) -> int:
        return -1 if self.coefficients == (0,) else len(self.coefficients) - 1

    @property
    def leading(self) -> int:
        return self.coefficients[-1]

    def is_monic(self) -> bool:
        return self.leading == 1

    def coeff(self, k: int) -> int:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __mul__(self, other: IntegerPolynomial) -> IntegerPolynomial:
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return IntegerPolynomial(out)

    def derivative(self) -> IntegerPolynomial:
        return IntegerPolynomial([k * c for k, c in enumerate(self.coefficients)][1:] or [0])

    def __str__(self) -> str:
        """GP-style rendering, e.g. ``x^6 - 17*x^3 + 125``."""
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    @classmethod
    def parse(cls, text: str) -> IntegerPolynomial:
        """Inverse of ``str``; also accepts implicit multiplication (``6x^11``)."""
        s = text.replace(" ", "").replace("\\,", "").replace("{", "").replace("}", "")
        if not s:
            raise ValueError("empty polynomial")
        if s[0] not in "+-":
            s = "+" + s
        coeffs: dict[int, int] = {}
        for sign, num, var, exp in re.findall(r"([+-])(\d*)\*?(x?)(?:\^(\d+))?", s):
            if not num and not var:
                raise ValueError(f"cannot parse polynomial {text!r}")
            c = int(num) if num else 1
            k = (int(exp) if exp else 1) if var else 0
            coeffs[k] = coeffs.get(k, 0) + (-c if sign == "-" else c)
        rebuilt = "".join(m.group(0) for m in re.finditer(r"[+-]\d*\*?x?(?:\^\d+)?", s))
        if rebuilt != s:
            raise ValueError(f"cannot parse polynomial {text!r}")
        top = max(coeffs)
        return cls([coeffs.get(k, 0) for k in range(top + 1)])


# -- exact gcd over Q -------------------------------------------------------


def _qdivmod(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    while len(a) >= len(b) and any(a):
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def rational_gcd_degree(f: IntegerPolynomial, g: IntegerPolynomial) -> int:
    """Degree of ``gcd(f, g)`` in Q[x]."""
    a = [Fraction(c) for c in f.coefficients]
    b = [Fraction(c) for c in g.coefficients]
    while b and any(b):
        a, b = b, _qdivmod(a, b)
    while a and a[-1] == 0:
        a.pop()
    return len(a) - 1


def is_squarefree(f: IntegerPolynomial) -> bool:
    return rational_gcd_degree(f, f.derivative()) == 0


# -- resultants --------------------------------------------------------------


def bareiss_determinant(m: list[list[int]]) -> int:
    """Fraction-free determinant of a square integer matrix."""
    a = [list(row) for row in m]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def sylvester_matrix(f: list[int], g: list[int]) -> list[list[int]]:
    """Sylvester matrix of ``f`` and ``g`` (coefficients highest degree first)."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + list(f) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(g) + [0] * (size - n - 1 - i))
    return rows


def resultant(f: IntegerPolynomial, g: IntegerPolynomial) -> int:
    return bareiss_determinant(sylvester_matrix(f.high_first(), g.high_first()))


# -- arithmetic modulo a prime ------------------------------------------------


def _pnorm(a: list[int], p: int) -> list[int]:
    a = [c % p for c in a]
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], b: list[int], p: int) -> list[int]:
    a = _pnorm(a, p)
    inv = pow(b[-1], -1, p)
    while len(a) >= len(b):
        f = a[-1] * inv % p
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - f * c) % p
        a = _pnorm(a, p)
    return a


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _pnorm(a, p), _pnorm(b, p)
    while b:
        a, b = b, _pmod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _pmulmod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pmod(out, m, p)


def _ppowmod(base: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(base, m, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, m, p)
        base = _pmulmod(base, base, m, p)
        e >>= 1
    return result


def _pdiv(a: list[int], b: list[int], p: int) -> list[int]:
    a = _pnorm(a, p)
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        f = a[-1] * inv % p
        shift = len(a) - len(b)
        q[shift] = f
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - f * c) % p
        a = _pnorm(a, p)
    return q


def is_squarefree_mod(f: IntegerPolynomial, p: int) -> bool:
    a = _pnorm(list(f.coefficients), p)
    if len(a) - 1 != f.degree:
        return False
    return len(_pgcd(a, _pnorm(list(f.derivative().coefficients), p), p)) == 1


def factor_degrees_mod(f: IntegerPolynomial, p: int) -> list[int]:
    """Degrees of the irreducible factors of ``f`` mod ``p`` (f squarefree mod p).

    Distinct-degree factorization; irreducible factors of equal degree k are
    counted from the degree of their product.
    """
    if not is_squarefree_mod(f, p):
        raise ValueError(f"polynomial is not squarefree modulo {p}")
    g = _pnorm(list(f.coefficients), p)
    degrees = []
    h = [0, 1]
    k = 0
    while len(g) - 1 >= 2 * (k + 1):
        k += 1
        h = _ppowmod(h, p, g, p)
        hx = list(h) + [0] * max(0, 2 - len(h))
        hx[1] = (hx[1] - 1) % p
        d = _pgcd(g, _pnorm(hx, p), p)
        if len(d) > 1:
            degrees.extend([k] * ((len(d) - 1) // k))
            g = _pdiv(g, d, p)
            h = _pmod(h, g, p)
    if len(g) > 1:
        degrees.append(len(g) - 1)
    return sorted(degrees)
