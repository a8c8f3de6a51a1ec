import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kummerclass.galois import AbelianStructure
from kummerclass.kummer import IntegerPolynomial
from kummerclass.pipeline import (
    ClassGroupData,
    FixtureFormatError,
    ScanRecord,
    chevalley_fixed_points,
    d_values,
    emit_oracle_script,
    format_fixture_line,
    format_report,
    parse_class_group,
    parse_fixture_line,
    parse_fixtures,
    parse_report,
    read_fixtures,
    scan,
    three_exactly_divides,
    three_part_is,
    verify_fixture,
    write_fixtures,
)


@pytest.fixture(scope="module")
def fixtures():
    return {r.d: r for r in read_fixtures()}


@pytest.fixture(scope="module")
def reports(fixtures):
    return {d: verify_fixture(r) for d, r in fixtures.items()}


@pytest.mark.parametrize("args, expected", [((1, 3, 3, 1), 1), ((3, 3, 3, 1), 3), ((9, 3, 3, 3), 3)])
def test_chevalley(args, expected):
    assert chevalley_fixed_points(*args) == expected


def test_chevalley_rejects():
    with pytest.raises(ArithmeticError):
        chevalley_fixed_points(1, 1, 3, 1)
    with pytest.raises(ValueError):
        chevalley_fixed_points(0, 3, 3, 1)


@settings(max_examples=100)
@given(st.integers(1, 50), st.integers(1, 27), st.integers(1, 6), st.integers(1, 6))
def test_chevalley_product_identity(h, e, n, i):
    try:
        x = chevalley_fixed_points(h, e, n, i)
    except ArithmeticError:
        assert (h * e) % (n * i)
        return
    assert x * n * i == h * e


def test_d_values():
    assert list(d_values(1, 20)) == [1, 4, 7, 10, 13, 16, 19]
    assert list(d_values(4, 4)) == [4]
    assert list(d_values(5, 4)) == []


def test_scan_small_range():
    recs = scan(5, 250)
    got = {r.d: (r.a, r.b) for r in recs}
    for d, ab in {31: (1, 1), 61: (8, 1), 211: (17, 1), 214: (89, 6)}.items():
        assert got[d] == ab
    assert [r.d for r in recs] == sorted(got)
    assert all(r.d % 3 == 1 for r in recs)
    assert all(r.class_group is None for r in recs)


def test_scan_913():
    rec = {r.d: r for r in scan(900, 1000)}[913]
    assert (rec.a, rec.b, rec.h_minus, rec.h_plus) == (321, 4, 12, 8)


def test_scan_empty_range():
    assert scan(300, 250) == []
    assert scan(2, 3) == []


def test_scan_prefix_stable():
    long = scan(5, 400)
    assert scan(5, 250) == [r for r in long if r.d <= 250]


def test_scan_parallel_matches_serial():
    assert [r.key() for r in scan(5, 300, workers=2)] == [r.key() for r in scan(5, 300)]


def test_scan_structure_filter_needs_class_data(fixtures):
    cg = {d: r.class_group for d, r in fixtures.items() if r.class_group is not None}
    plain = scan(5, 250, structure_filter=three_exactly_divides)
    assert {31, 211} <= {r.d for r in plain}
    filtered = scan(5, 250, structure_filter=three_exactly_divides, class_groups=cg)
    ds = {r.d for r in filtered}
    assert 31 in ds and 61 in ds and 211 not in ds and 214 not in ds
    nine_three = scan(5, 250, structure_filter=three_part_is([9, 3]), class_groups=cg)
    assert {211, 214} <= {r.d for r in nine_three} and 31 not in {r.d for r in nine_three}


def test_fixture_set_hypotheses(fixtures, reports):
    assert len(fixtures) == 20
    for d, rep in reports.items():
        assert rep.ok, rep.summary()
    outside_v = {d for d, r in fixtures.items() if "outside-v" in r.flags}
    assert outside_v == {1579, 1759, 2047}


def test_verify_211(reports):
    rep = reports[211]
    assert rep.admissible and rep.n == 3 and (rep.a, rep.b) == (1, 1)
    assert (rep.r_minus, rep.R_minus) == (1, 2) and rep.rh_holds is False


def test_verify_31(reports):
    rep = reports[31]
    assert rep.admissible and rep.n == 1 and rep.rh_holds and rep.ambiguous_only


def test_verify_12058(fixtures, reports):
    assert fixtures[12058].class_group.three_part.as_list() == [81, 27]
    assert reports[12058].admissible and reports[12058].a == 3


def test_verify_requires_class_group(fixtures):
    rec = parse_fixture_line("d=31 a=1 b=1")
    with pytest.raises(ValueError):
        verify_fixture(rec)


def test_verify_reports_wrong_polynomial(fixtures):
    good = fixtures[211]
    coeffs = good.P.high_first()
    coeffs[-1] += 1
    bad = parse_fixture_line(format_fixture_line(good).replace(
        "P=" + ",".join(map(str, good.P.high_first())), "P=" + ",".join(map(str, coeffs))))
    rep = verify_fixture(bad)
    assert not rep.ok and [c.name for c in rep.failing()] == ["polynomial"]


def test_verify_reports_wrong_structure(fixtures):
    bad = parse_fixture_line(format_fixture_line(fixtures[211]).replace("class=27:9,3", "class=81:9,9"))
    # [9, 9] is R/(omega^4): realizable, excluded only by admissibility
    assert {c.name for c in verify_fixture(bad).failing()} == {"admissible", "bucket"}
    bad = parse_fixture_line(format_fixture_line(fixtures[211]).replace("class=27:9,3", "class=81:27,3"))
    assert {"admissible", "module-structure"} <= {c.name for c in verify_fixture(bad).failing()}


def test_verify_reports_bad_order(fixtures):
    bad = parse_fixture_line(format_fixture_line(fixtures[61]).replace("class=12:6,2", "class=13:6,2"))
    assert "class-number-product" in {c.name for c in verify_fixture(bad).failing()}


def test_verify_flags_three_part_disagreement():
    rec = parse_fixture_line("d=211 a=17 b=1 hm=3 h=1 class=27:9,3 class3=27")
    assert "three-part-statements-agree" in {c.name for c in verify_fixture(rec).failing()}


def test_fixture_roundtrip(fixtures):
    text = write_fixtures(fixtures.values())
    again = parse_fixtures(text)
    assert [r.key() for r in again] == [fixtures[d].key() for d in sorted(fixtures)]


@pytest.mark.parametrize(
    "line", ["d=31 a=1", "d=31 a=1 b=1 zz=3", "d=31 a=1 b=1 a=2", "d=31 a=x b=1", "d=31 a=1 b=1 class=3"]
)
def test_fixture_parse_errors(line):
    with pytest.raises(FixtureFormatError):
        parse_fixture_line(line)


def test_class_group_line():
    cg = parse_class_group("[18711, [2079, 9]]")
    assert cg.order == 18711 and cg.cyclic == (2079, 9) and cg.order_consistent()
    assert cg.bracket() == "[18711, [2079, 9]]"
    assert cg.three_part == AbelianStructure([27, 9])
    with pytest.raises(FixtureFormatError):
        parse_class_group("18711, 2079")


def test_report_rows(fixtures):
    text = format_report(fixtures.values())
    assert "a= 8, b= 1, #Cl_{k⁻}=6, #Cl_{k⁺}=2" in text
    assert "class group : [18711, [2079, 9]]" in text
    assert text.index(" d= 31") < text.index(" d= 61") < text.index(" d= 86942")


def test_report_empty_is_header_only():
    text = format_report([])
    assert len(text.strip().splitlines()) == 1 and text.startswith("#")


def test_report_roundtrip(fixtures):
    back = parse_report(format_report(reversed(list(fixtures.values()))))
    assert [r.key() for r in back] == [fixtures[d].key() for d in sorted(fixtures)]


def test_report_roundtrip_scan_output():
    recs = scan(5, 250)
    assert [r.key() for r in parse_report(format_report(recs))] == [r.key() for r in recs]


def test_oracle_script(fixtures, tmp_path):
    rec = fixtures[211]
    out = tmp_path / "k211.gp"
    text = emit_oracle_script(rec, out)
    assert out.read_text() == text == emit_oracle_script(rec)
    assert f"P = {rec.P};" in text
    assert "x^12 - 6*x^11 + 21*x^10 - 84*x^9" in text
    assert "bnrinit" in text and "print([H.no, H.cyc]);" in text


def test_oracle_script_86942(fixtures):
    text = emit_oracle_script(fixtures[86942])
    assert "1191621124996;" in text


def test_oracle_script_without_polynomial(fixtures):
    with pytest.raises(ValueError):
        emit_oracle_script(fixtures[1759])


def test_oracle_script_embeds_parsable_polynomial(fixtures):
    for rec in fixtures.values():
        if rec.P is None:
            continue
        line = next(l for l in emit_oracle_script(rec).splitlines() if l.startswith("P = "))
        assert IntegerPolynomial.parse(line[4:].rstrip(";")) == rec.P


def test_scan_record_key_includes_polynomial():
    a = ScanRecord(31, 1, 1)
    b = ScanRecord(31, 1, 1, P=IntegerPolynomial([1]))
    assert a.key() != b.key() and a.Q.high_first() == [1, 0, 0, -1, 0, 0, 8]


def test_class_group_data_validation():
    with pytest.raises(ValueError):
        ClassGroupData(3, None)
    with pytest.raises(ValueError):
        ClassGroupData()
