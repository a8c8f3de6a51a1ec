"""Structure of the cyclic modules R/(omega^n), R = Z_p[sigma]/(nu).

All modules handled here have p-power order, so working over Z instead of Z_p
changes nothing: the Smith invariants of the relation matrix are exact powers
of p.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .group_ring import GroupRingElement, omega_power
from .snf import integer_kernel, invariant_factors, lattice_basis
from .structure import AbelianStructure, valuation


@dataclass(frozen=True)
class ModulePresentation:
    """``R/(omega^n)``; the module has order ``p^n``."""

    p: int
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be non-negative")
        GroupRingElement.one(self.p)  # validates p

    @property
    def order(self) -> int:
        return self.p**self.n

    def relations(self) -> list[list[int]]:
        return omega_power(self.p, self.n).multiplication_matrix()

    def structure(self) -> AbelianStructure:
        return cyclic_module_structure(self.p, self.n)


def split_exponent(p: int, n: int) -> tuple[int, int]:
    """Write ``n = a(p-1) + b`` with ``0 <= b <= p-2``."""
    return divmod(n, p - 1)


def closed_form_structure(p: int, n: int) -> AbelianStructure:
    a, b = split_exponent(p, n)
    return AbelianStructure([p ** (a + 1)] * b + [p**a] * (p - 1 - b))


def _structure_of(relations: list[list[int]]) -> AbelianStructure:
    return AbelianStructure.from_invariants(invariant_factors(relations))


def cyclic_module_structure(p: int, n: int) -> AbelianStructure:
    """Elementary divisors of ``R/(omega^n)`` from the Smith form of its relations."""
    return _structure_of(ModulePresentation(p, n).relations())


def _solve(b: list[list[int]], x: list[int]) -> list[Fraction]:
    """Solve ``b y = x`` exactly for square non-singular ``b``."""
    n = len(b)
    aug = [[Fraction(v) for v in row] + [Fraction(x[i])] for i, row in enumerate(b)]
    for c in range(n):
        piv = next(r for r in range(c, n) if aug[r][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c] / aug[c][c]
                aug[r] = [u - f * w for u, w in zip(aug[r], aug[c])]
    return [aug[i][n] / aug[i][i] for i in range(n)]


def element_order(relations: list[list[int]], x: list[int]) -> int:
    """Order of the class of ``x`` in ``Z^k / relations Z^k``."""
    return lcm(*(q.denominator for q in _solve(relations, x)))


def _columns(m: list[list[int]]) -> list[list[int]]:
    return [[row[j] for row in m] for j in range(len(m[0]))]


def submodule_structure(p: int, n: int, i: int) -> AbelianStructure:
    """Structure of ``M_i = {h in M : h^(omega^i) = 1}`` inside ``M = R/(omega^n)``.

    Computed directly as the kernel of multiplication by ``omega^i`` on the
    finite module, without using the isomorphism ``M_i = R/(omega^i)``.
    """
    k = p - 1
    big = omega_power(p, n).multiplication_matrix()
    act = omega_power(p, i).multiplication_matrix()
    # x in M_i  <=>  act x = big y for some y  <=>  (x, y) in ker [act | -big]
    stacked = [act[r] + [-v for v in big[r]] for r in range(k)]
    kernel = integer_kernel(stacked)
    basis = lattice_basis([vec[:k] for vec in kernel], k)
    if len(basis) != k:
        raise ArithmeticError("kernel lattice is not of full rank")
    basis_matrix = [[basis[j][r] for j in range(k)] for r in range(k)]
    coords = []
    for col in _columns(big):
        y = _solve(basis_matrix, col)
        if any(q.denominator != 1 for q in y):
            raise ArithmeticError("relation lattice not contained in kernel lattice")
        coords.append([int(q) for q in y])
    rel = [[coords[j][r] for j in range(k)] for r in range(k)]
    return _structure_of(rel)


@dataclass(frozen=True)
class FiltrationStep:
    index: int
    structure: AbelianStructure
    next_quotient_order: int


def filtration_report(p: int, n: int) -> list[FiltrationStep]:
    """The chain ``M_0 = 1 ⊂ M_1 ⊂ ... ⊂ M_n = M`` for ``M = R/(omega^n)``.

    ``next_quotient_order`` is ``#(M_{i+1}/M_i)``; it is 1 at ``i = n`` since the
    chain is stationary from there on.
    """
    orders = []
    steps = []
    for i in range(n + 2):
        s = submodule_structure(p, n, i)
        orders.append(s.order)
        steps.append(s)
    return [
        FiltrationStep(i, steps[i], orders[i + 1] // orders[i]) for i in range(n + 1)
    ]


def decomposition_orders(m: int) -> tuple[int, int, int]:
    """For p = 3: orders of the images of 1 and omega in ``R/(omega^m)``,
    and the order of the subgroup they generate."""
    p = 3
    rel = omega_power(p, m).multiplication_matrix()
    one = GroupRingElement.one(p).coeffs
    om = GroupRingElement.omega(p).coeffs
    o1 = element_order(rel, list(one))
    o2 = element_order(rel, list(om))
    gens = [list(one), list(om)] + _columns(rel)
    sub = lattice_basis(gens, p - 1)
    index = abs(_det([[sub[j][r] for j in range(p - 1)] for r in range(p - 1)]))
    total = ModulePresentation(p, m).order
    return o1, o2, total // index


def _det(m: list[list[int]]) -> int:
    n = len(m)
    a = [[Fraction(v) for v in row] for row in m]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            a[r] = [u - f * w for u, w in zip(a[r], a[c])]
    return int(det)


def subquotient_fixed_order(
    h_k: int, prod_e: int, deg: int, norm_image_order: int, lambda_index: int
) -> int:
    """``#(M_{i+1}/M_i)^G = h_k * prod(e_v) / ([K:k] * #N(M_i) * (Lambda_i : Lambda_i ∩ N))``.

    Raises ``ArithmeticError`` when the quotient is not a positive integer.
    """
    args = (h_k, prod_e, deg, norm_image_order, lambda_index)
    if any(not isinstance(v, int) or v < 1 for v in args):
        raise ValueError(f"all inputs must be positive integers, got {args}")
    num = h_k * prod_e
    den = deg * norm_image_order * lambda_index
    if num % den:
        raise ArithmeticError(f"{num}/{den} is not integral")
    return num // den


def module_exponent_for(s: AbelianStructure, p: int) -> int | None:
    """The n with ``#s = p^n``, or None if s is not a p-group."""
    if not s.is_p_group(p):
        return None
    return valuation(s.order, p) if s.order > 1 else 0


def is_module_realizable(s: AbelianStructure, p: int) -> bool:
    """True iff ``s`` is the structure of ``R/(omega^n)`` for some n."""
    n = module_exponent_for(s, p)
    return n is not None and closed_form_structure(p, n) == s


def is_theorem_admissible(s: AbelianStructure) -> bool:
    """True iff ``s = Z/3^(a+1) x Z/3^a`` for some ``a >= 0``."""
    if not s.divisors or not s.is_p_group(3):
        return False
    e = s.exponents(3)
    if len(e) == 1:
        return e[0] == 1
    return len(e) == 2 and e[0] == e[1] + 1


def admissible_exponent(s: AbelianStructure) -> int | None:
    """The a in ``Z/3^(a+1) x Z/3^a``, if ``s`` has that shape."""
    if not is_theorem_admissible(s):
        return None
    return s.exponents(3)[0] - 1


def riemann_hurwitz_holds(r_minus: int, R_minus: int, p: int) -> bool:
    """The p-rank analogue ``R^- - 1 = p (r^- - 1)`` of Kida's formula."""
    if r_minus < 0 or R_minus < 0:
        raise ValueError("ranks must be non-negative")
    return R_minus - 1 == p * (r_minus - 1)
