"""JSON conventions: rational strings, matrix arrays, canonical dumps, and
the strict flag parsers."""

import json
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tracelattice.a3_factory import scan_family
from tracelattice.conic_points import ConicPoint
from tracelattice.cyclotomic_ideals import cyc_field, inv, power
from tracelattice.exact_linalg import Matrix
from tracelattice.quadratic_a2 import normal_a2
from tracelattice.serialize import (
    dumps_canonical,
    hnf_json,
    lattice_json,
    matrix_json,
    member_json,
    parse_generator,
    parse_gram,
    parse_rational,
    point_json,
    rational_str,
)

rationals = st.fractions(
    min_value=F(-(10**6)), max_value=F(10**6), max_denominator=10**4
)


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def test_rational_str_forms():
    assert rational_str(F(1, 2)) == "1/2"
    assert rational_str(F(3)) == "3"
    assert rational_str(F(-5, 7)) == "-5/7"
    assert rational_str(0) == "0"
    assert rational_str(F(4, 2)) == "2"


@given(rationals)
def test_rational_round_trip(x):
    assert parse_rational(rational_str(x)) == x


def test_matrix_json_row_major():
    m = Matrix([[F(1, 2), 3], [-1, F(0)]])
    assert matrix_json(m) == [["1/2", "3"], ["-1", "0"]]


def test_point_json():
    assert point_json(ConicPoint("5/2", "-3/2")) == {"x": "5/2", "y": "-3/2"}


def test_lattice_json_type_field_optional():
    L = normal_a2()
    doc = lattice_json(L)
    assert doc["type"] == "A2"
    assert doc["ambient"] == {"kind": "quad", "d": 3, "sign": -1}
    assert doc["gram"] == [["2", "-1"], ["-1", "2"]]
    bare = lattice_json(L.__class__(L.ambient, L.basis))
    assert "type" not in bare


def test_hnf_json_matches_canonical_key():
    L = normal_a2()
    doc = hnf_json(L)
    assert doc["scale"] == 2
    assert doc["rows"] == [[1, 1], [0, 2]]


def test_member_json_fields_and_slope_inf():
    scan = scan_family(F(1), 3)
    docs = [member_json(m) for m in scan.members]
    assert {"ambient", "basis", "gram", "hnf", "lambda", "point", "slope", "type"} == set(
        docs[0]
    )
    slopes = [d["slope"] for d in docs]
    assert "inf" in slopes
    finite = [s for s in slopes if s != "inf"]
    assert all(parse_rational(s) is not None for s in finite)


def test_dumps_canonical_is_sorted_and_compact():
    payload = dumps_canonical({"b": 1, "a": [2, 3]})
    assert payload == '{"a":[2,3],"b":1}\n'
    assert dumps_canonical({"a": [2, 3], "b": 1}) == payload


# ---------------------------------------------------------------------------
# parse_rational
# ---------------------------------------------------------------------------

def test_parse_rational_accepts_flag_forms():
    assert parse_rational("3") == 3
    assert parse_rational("-4/5") == F(-4, 5)
    assert parse_rational("+7/2") == F(7, 2)


@pytest.mark.parametrize(
    "text,pos",
    [("q", 0), ("", 0), (" 1", 0), ("1.5", 1), ("1/2/3", 3), ("3x", 1), ("1/-2", 1)],
)
def test_parse_rational_position_accurate_errors(text, pos):
    with pytest.raises(ValueError, match=f"position {pos}"):
        parse_rational(text)


def test_parse_rational_zero_denominator():
    with pytest.raises(ValueError, match="zero denominator"):
        parse_rational("2/0")


# ---------------------------------------------------------------------------
# parse_gram
# ---------------------------------------------------------------------------

def test_parse_gram_int_and_string_entries():
    m = parse_gram('[[2,1],[1,2]]')
    assert m.data == ((F(2), F(1)), (F(1), F(2)))
    m = parse_gram('[["1/2","0"],["0","1/2"]]')
    assert m.data == ((F(1, 2), F(0)), (F(0), F(1, 2)))


@pytest.mark.parametrize(
    "text,needle",
    [
        ("nonsense", "invalid gram"),
        ("[[2,1],[1]]", "row 1"),
        ("[]", "non-empty"),
        ("[[2.5]]", "entry (0,0)"),
        ("[[true]]", "entry (0,0)"),
        ('[["1/x"]]', "entry (0,0)"),
        ('{"a":1}', "array of rows"),
    ],
)
def test_parse_gram_rejections(text, needle):
    with pytest.raises(ValueError, match=None) as err:
        parse_gram(text)
    assert needle in str(err.value)


# ---------------------------------------------------------------------------
# generator expressions
# ---------------------------------------------------------------------------

def test_generator_atoms_and_sums():
    k = cyc_field(5)
    assert parse_generator(k, "1") == k.one()
    assert parse_generator(k, "z") == k.zeta()
    one, z = k.one(), k.zeta()
    assert parse_generator(k, "1-z") == tuple(a - b for a, b in zip(one, z))
    assert parse_generator(k, "-z") == tuple(-c for c in z)
    assert parse_generator(k, "2*z") == k.mul_coords(
        (F(2), F(0), F(0), F(0)), z
    )


def test_generator_powers_both_spellings():
    k = cyc_field(7)
    z = k.zeta()
    z2 = k.mul_coords(z, z)
    assert parse_generator(k, "z^2") == z2
    assert parse_generator(k, "z**2") == z2
    assert parse_generator(k, "z^0") == k.one()


def test_generator_negative_power_is_field_inverse():
    k = cyc_field(5)
    one_minus_z = tuple(a - b for a, b in zip(k.one(), k.zeta()))
    assert parse_generator(k, "(1-z)^-1") == inv(k, one_minus_z)
    assert parse_generator(k, "(1-z)^-2") == power(k, one_minus_z, -2)
    assert parse_generator(k, "1/(1-z)") == inv(k, one_minus_z)


def test_generator_parenthesized_arithmetic():
    k = cyc_field(5)
    lhs = parse_generator(k, "(1+z)*(1-z)")
    rhs = parse_generator(k, "1-z^2")
    assert lhs == rhs


@pytest.mark.parametrize(
    "text",
    ["q", "1+", "(1-z", "z^", "z^x", "1//z", "1/0", "0^-1", "z)"],
)
def test_generator_rejections(text):
    k = cyc_field(5)
    with pytest.raises(ValueError, match="position"):
        parse_generator(k, text)


def test_generator_error_names_position():
    k = cyc_field(5)
    with pytest.raises(ValueError, match="position 2"):
        parse_generator(k, "1+q")


def test_dumps_are_valid_json():
    scan = scan_family(F(1), 2)
    for m in scan.members:
        doc = member_json(m)
        assert json.loads(dumps_canonical(doc)) == doc
