import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kummerclass.kummer import (
    DegenerateCompositum,
    IntegerPolynomial,
    KummerCandidate,
    build_sextic,
    compositum,
    first_candidate,
    plausibility_check,
    search_alpha,
    sextic_is_irreducible,
)
from kummerclass.kummer.polynomial import factor_degrees_mod, is_squarefree_mod, resultant
from kummerclass.kummer.search import icbrt, legacy_cube_test
from kummerclass.pipeline import read_fixtures

from oracles import exact_cube, naive_search, sympy_compositum, sympy_irreducible

P211 = [1, -6, 21, -84, 243, -432, 1037, -1896, -204, -966, 5949, 4905, 11881]


@pytest.mark.parametrize(
    "d, a, b, half, T, N, c",
    [
        (211, 17, 1, True, 17, 125, 5),
        (1759, 37, 20, False, 74, 704969, 89),
        (86942, 557, 3, False, 1114, 1092727, 103),
        (31, 1, 1, True, 1, 8, 2),
        (2047, 332, 11, False, 664, 357911, 71),
    ],
)
def test_first_hits(d, a, b, half, T, N, c):
    cand = first_candidate(d)
    assert (cand.a, cand.b, cand.half, cand.T, cand.N, cand.cube_root) == (a, b, half, T, N, c)
    assert cand.is_valid()


def test_no_candidate_is_empty_list():
    assert search_alpha(211, a_max=5, b_max=0) == []


@pytest.mark.parametrize("n", [0, 1, 7, 8, 26, 27, 10**30, 10**30 + 1, (10**12 + 39) ** 3 - 1])
def test_icbrt(n):
    c = icbrt(n)
    assert c**3 <= n < (c + 1) ** 3


def test_legacy_cube_test_accepts_subset_of_cubes():
    for n in range(1, 3000):
        if legacy_cube_test(n):
            assert exact_cube(n)
    assert legacy_cube_test(125) and not legacy_cube_test(124)


@pytest.mark.parametrize("d", [31, 61, 211, 214, 913, 1141, 1759])
def test_exact_search_matches_naive_loop(d):
    fast = [(c.a, c.b) for c in search_alpha(d, 300, 12, cube_test="exact")]
    assert fast == naive_search(d, 300, 12, exact_cube)


@pytest.mark.parametrize("d", [913, 970, 4531])
def test_legacy_search_matches_naive_loop(d):
    fast = [(c.a, c.b) for c in search_alpha(d, 1000, 8)]
    assert fast == naive_search(d, 1000, 8, legacy_cube_test)


def test_search_prefix_stable():
    small = search_alpha(211, 200, 10)
    assert small == [c for c in search_alpha(211, 1000, 30) if c.a <= 200 and c.b <= 10]
    # growing only b_max appends
    assert search_alpha(211, 1000, 30)[: len(search_alpha(211, 1000, 10))] == search_alpha(211, 1000, 10)


def test_search_rejects_bad_mode():
    with pytest.raises(ValueError):
        search_alpha(211, cube_test="float")


def test_strict_drops_cubes():
    # (3 + sqrt(-26))^3 = -207 + sqrt(-26), up to sign and conjugation
    hits = search_alpha(26, 300, 5, cube_test="exact")
    strict = search_alpha(26, 300, 5, cube_test="exact", strict=True)
    assert [(c.a, c.b) for c in hits] == [(1, 1), (207, 1), (25, 2)]
    assert [(c.a, c.b) for c in strict] == [(1, 1), (25, 2)]


def test_alpha_cube_detection():
    # (1 + 2 sqrt(-5))^3 = -59 - 34 sqrt(-5)
    cand = KummerCandidate.from_ab(5, 59, 34)
    assert cand.alpha_is_cube() and cand.ideal_is_principal()
    assert not first_candidate(211).alpha_is_cube()


def test_from_ab_rejects_non_cube():
    with pytest.raises(ValueError):
        KummerCandidate.from_ab(211, 16, 1)


@pytest.mark.parametrize(
    "d, a, b, high",
    [
        (211, 17, 1, [1, 0, 0, -17, 0, 0, 125]),
        (31, 1, 1, [1, 0, 0, -1, 0, 0, 8]),
        (2047, 332, 11, [1, 0, 0, -664, 0, 0, 357911]),
    ],
)
def test_build_sextic(d, a, b, high):
    Q = build_sextic(KummerCandidate.from_ab(d, a, b))
    assert Q.high_first() == high and Q.is_monic() and Q.degree == 6


def test_compositum_211():
    Q = IntegerPolynomial.from_high([1, 0, 0, -17, 0, 0, 125])
    assert compositum(Q).high_first() == P211


def test_compositum_31_leading_terms():
    P = compositum(IntegerPolynomial.from_high([1, 0, 0, -1, 0, 0, 8]))
    assert P.high_first()[:4] == [1, -6, 21, -52] and P.coeff(0) == 64


def test_compositum_against_sympy_resultant():
    for rec in read_fixtures():
        c = rec.candidate
        assert compositum(build_sextic(c)).high_first() == sympy_compositum(c.T, c.N), rec.d


@settings(max_examples=25, deadline=None)
@given(st.integers(-200, 200), st.integers(1, 5000))
def test_compositum_resultant_identity(T, N):
    Q = IntegerPolynomial.from_high([1, 0, 0, -T, 0, 0, N])
    try:
        P = compositum(Q)
    except DegenerateCompositum:
        return
    assert P.coeff(0) == (1 - T + N) ** 2
    assert (P.coeff(11), P.coeff(10)) == (-6, 21)
    # P(x0) = Res_y(y^2 + y + 1, Q(x0 + y)) at a sample point
    x0 = 3
    shifted = [0] * 7
    from math import comb

    for k, qk in enumerate(Q.coefficients):
        for i in range(k + 1):
            shifted[i] += qk * comb(k, i) * x0 ** (k - i)
    assert P(x0) == resultant(IntegerPolynomial([1, 1, 1]), IntegerPolynomial(shifted))


def test_compositum_rejects_wrong_shape():
    with pytest.raises(ValueError):
        compositum(IntegerPolynomial.from_high([1, 0, -2]))


def test_compositum_degenerate_on_repeated_roots():
    with pytest.raises(DegenerateCompositum):
        compositum(IntegerPolynomial.from_high([1, 0, 0, -2, 0, 0, 1]))


def test_sextic_irreducibility_against_sympy():
    for T in range(-12, 13):
        for N in (1, 8, 27, 64, 125, 7, 12, 30):
            Q = IntegerPolynomial.from_high([1, 0, 0, -T, 0, 0, N])
            assert sextic_is_irreducible(Q) == sympy_irreducible(Q.high_first()), (T, N)


def test_plausibility_passes_on_fixtures():
    for rec in read_fixtures():
        if rec.P is not None:
            rep = plausibility_check(rec.P)
            assert rep.ok, (rec.d, rep.failures())


def test_plausibility_fails_on_square():
    Q = IntegerPolynomial.from_high([1, 0, 0, -1, 0, 0, 8])
    rep = plausibility_check(Q * Q)
    assert not rep.squarefree and "not squarefree" in rep.failures()


def test_plausibility_flags_bad_coefficients():
    bad = IntegerPolynomial.from_high([1, -5] + P211[2:])
    assert not plausibility_check(bad).universal_coefficients


def test_fixture_polynomials_irreducible_per_sympy():
    for rec in read_fixtures():
        if rec.P is not None and rec.d in (31, 211, 12058):
            assert sympy_irreducible(rec.P.high_first())


def test_factor_degrees_mod_sum_to_degree():
    P = IntegerPolynomial.from_high(P211)
    tested = 0
    for p in (5, 7, 11, 13, 17, 19, 23):
        if is_squarefree_mod(P, p):
            assert sum(factor_degrees_mod(P, p)) == 12
            tested += 1
    assert tested


def test_polynomial_parse_roundtrip():
    P = IntegerPolynomial.from_high(P211)
    assert IntegerPolynomial.parse(str(P)) == P
    latex = r"x^{12} - 6\,x^{11} + 21\,x^{10} - 84\,x^9 + 243\,x^8 - 432\,x^7 + 1037\,x^6 - 1896\,x^5 - 204\,x^4 - 966\,x^3 + 5949\,x^2 + 4905\,x + 11881"
    assert IntegerPolynomial.parse(latex) == P
