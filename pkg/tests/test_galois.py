import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kummerclass.galois import (
    AbelianStructure,
    GroupRingElement,
    ModulePresentation,
    closed_form_structure,
    cyclic_module_structure,
    decomposition_orders,
    filtration_report,
    invariant_factors,
    is_module_realizable,
    is_theorem_admissible,
    omega_power,
    riemann_hurwitz_holds,
    smith_normal_form,
    split_exponent,
    subquotient_fixed_order,
    submodule_structure,
)

from oracles import determinantal_invariants

PRIMES = (3, 5, 7)


def _matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


@pytest.mark.parametrize("m, coeffs", [(0, (1, 0)), (1, (-1, -2)), (2, (-3, 0)), (5, (-9, -18))])
def test_omega_power_p3(m, coeffs):
    assert omega_power(3, m).coeffs == coeffs


def test_omega_power_p3_closed_form():
    w = GroupRingElement.omega(3)
    for e in range(8):
        assert omega_power(3, 2 * e) == GroupRingElement.scalar(3, (-3) ** e)
        assert omega_power(3, 2 * e + 1) == GroupRingElement.scalar(3, (-3) ** e) * w


def test_nu_is_zero():
    for p in PRIMES:
        assert GroupRingElement.nu(p).is_zero()
        s = GroupRingElement.sigma(p)
        assert s**p == GroupRingElement.one(p)


@pytest.mark.parametrize("p", PRIMES)
def test_omega_to_p_minus_one_is_p_times_unit(p):
    w = omega_power(p, p - 1)
    assert all(c % p == 0 for c in w.coeffs)
    u = GroupRingElement(p, tuple(c // p for c in w.coeffs))
    # u is a unit of Z_p[sigma]/(nu) iff its reduction mod (p, sigma - 1) is non-zero
    assert sum(u.coeffs) % p != 0


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(PRIMES), st.data())
def test_ring_axioms(p, data):
    vec = st.lists(st.integers(-20, 20), min_size=p - 1, max_size=p - 1)
    a, b, c = (GroupRingElement(p, tuple(data.draw(vec))) for _ in range(3))
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.integers(1, 5), st.data())
def test_snf_against_determinantal_divisors(rows, cols, data):
    m = [[data.draw(st.integers(-30, 30)) for _ in range(cols)] for _ in range(rows)]
    S, U, _, V = smith_normal_form(m)
    assert _matmul(_matmul(U, m), V) == S
    assert invariant_factors(m) == [abs(x) for x in determinantal_invariants(m)]


@pytest.mark.parametrize("p", PRIMES)
def test_cyclic_structure_equals_closed_form(p):
    for n in range(21):
        a, b = split_exponent(p, n)
        assert n == a * (p - 1) + b and 0 <= b <= p - 2
        expected = AbelianStructure([p ** (a + 1)] * b + [p**a] * (p - 1 - b))
        assert cyclic_module_structure(p, n) == expected == closed_form_structure(p, n)
        assert ModulePresentation(p, n).order == p**n


def test_cyclic_structure_against_determinantal_divisors():
    for p in (3, 5):
        for n in range(0, 9):
            m = omega_power(p, n).multiplication_matrix()
            divisors = [x for x in determinantal_invariants(m) if abs(x) != 1]
            assert AbelianStructure.from_invariants([abs(x) for x in divisors]) == cyclic_module_structure(p, n)


@pytest.mark.parametrize("p, n, expected", [(3, 3, [9, 3]), (3, 7, [81, 27]), (5, 6, [25, 25, 5, 5]), (3, 0, [1])])
def test_cyclic_structure_examples(p, n, expected):
    assert cyclic_module_structure(p, n).as_list() == expected


@pytest.mark.parametrize("p", PRIMES)
def test_filtration(p):
    for n in range(0, 13):
        steps = filtration_report(p, n)
        assert [s.index for s in steps] == list(range(n + 1))
        for s in steps:
            assert s.structure == cyclic_module_structure(p, s.index)
            assert submodule_structure(p, n, s.index) == s.structure
        assert all(s.next_quotient_order == p for s in steps[:-1])
        assert steps[-1].next_quotient_order == 1


def test_filtration_examples():
    assert [s.structure.as_list() for s in filtration_report(3, 3)] == [[1], [3], [3, 3], [9, 3]]
    assert [s.structure.as_list() for s in filtration_report(3, 1)] == [[1], [3]]
    assert filtration_report(3, 9)[-1].structure.as_list() == [3**5, 3**4]


def test_filtration_even_odd_cases():
    for m in range(1, 13):
        e = m // 2
        expected = [3**e, 3**e] if m % 2 == 0 else [3 ** (e + 1), 3**e] if e else [3]
        assert filtration_report(3, m)[-1].structure.as_list() == expected


def test_decomposition_direct_sum():
    for m in range(1, 13):
        o1, ow, gen = decomposition_orders(m)
        assert o1 * ow == 3**m
        assert gen == 3**m


@pytest.mark.parametrize(
    "args, expected", [((3, 3, 3, 1, 1), 3), ((3, 3, 3, 3, 1), 1)]
)
def test_subquotient_fixed_order(args, expected):
    assert subquotient_fixed_order(*args) == expected


def test_subquotient_fixed_order_rejects():
    with pytest.raises(ArithmeticError):
        subquotient_fixed_order(1, 3, 3, 1, 2)
    with pytest.raises(ValueError):
        subquotient_fixed_order(0, 3, 3, 1, 1)


def _pair(e1, e2):
    return AbelianStructure([3**e1, 3**e2])


def test_realizable_and_admissible_exhaustive():
    for e1 in range(11):
        for e2 in range(e1 + 1):
            s = _pair(e1, e2)
            assert is_module_realizable(s, 3) == (e1 - e2 in (0, 1)), (e1, e2)
            assert is_theorem_admissible(s) == (e1 - e2 == 1), (e1, e2)
            if is_theorem_admissible(s):
                assert is_module_realizable(s, 3)


@pytest.mark.parametrize(
    "divisors, admissible, realizable",
    [([9, 3], True, True), ([9, 9], False, True), ([9, 3, 3], False, False), ([27, 3], False, False), ([3], True, True), ([1], False, True)],
)
def test_classifier_examples(divisors, admissible, realizable):
    s = AbelianStructure(divisors)
    assert is_theorem_admissible(s) is admissible
    assert is_module_realizable(s, 3) is realizable


def test_realizable_rejects_non_p_groups():
    assert not is_module_realizable(AbelianStructure.from_invariants([6, 3]), 3)
    assert not is_theorem_admissible(AbelianStructure([5]))


@pytest.mark.parametrize("r, R, p, holds", [(1, 2, 3, False), (1, 1, 3, True), (2, 4, 3, True)])
def test_riemann_hurwitz_examples(r, R, p, holds):
    assert riemann_hurwitz_holds(r, R, p) is holds


def test_riemann_hurwitz_rank_one_iff():
    for p in PRIMES:
        for R in range(0, 12):
            assert riemann_hurwitz_holds(1, R, p) == (R == 1)
    with pytest.raises(ValueError):
        riemann_hurwitz_holds(-1, 0, 3)


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(1, 400), min_size=0, max_size=5))
def test_abelian_structure_invariants(cyclics):
    s = AbelianStructure.from_invariants(cyclics)
    order = 1
    for c in cyclics:
        order *= c
    assert s.order == order
    assert AbelianStructure.from_invariants(s.invariant_factors()) == s
    assert all(s.p_part(p).order * (order // s.p_part(p).order) == order for p in (2, 3, 5))


def test_abelian_structure_basic():
    s = AbelianStructure.from_invariants([1134, 27])
    assert s.p_part(3).as_list() == [81, 27]
    assert s.rank(3) == 2 and s.exponents(3) == [4, 3]
    assert AbelianStructure([]).as_list() == [1]
    assert str(AbelianStructure([9, 3])) == str(AbelianStructure([3, 9]))
