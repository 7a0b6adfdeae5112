"""Wire formats: canonical JSON, decoding validation, text and LaTeX output."""
import json
from fractions import Fraction
from pathlib import Path

import jsonschema
import pytest

from qcoha import MPoly, QLaurent, product, structure_table
from qcoha.serialization import (
    element_from_json,
    element_to_json,
    graded_to_json,
    mpoly_from_json,
    mpoly_to_json,
    qlaurent_from_json,
    qlaurent_to_json,
    rational_from_json,
    rational_to_json,
    render_element_latex,
    render_element_text,
    render_graded_text,
    render_mpoly_text,
    render_qlaurent_latex,
    render_qlaurent_text,
    render_specialized_text,
    render_symmetric_latex,
    render_symmetric_text,
    specialized_to_json,
    symmetric_to_json,
    table_to_json,
)
from qcoha.shuffle_algebra import SymmetricElement, to_symmetric_element

SCHEMAS = Path(__file__).resolve().parent.parent / "docs" / "schemas"


def validate(payload, schema_name):
    with open(SCHEMAS / ("%s.schema.json" % schema_name)) as fh:
        jsonschema.validate(payload, json.load(fh))


def QL(offset, *coeffs):
    return QLaurent(offset, list(coeffs))


# -- rationals --------------------------------------------------------------------


def test_rational_strings():
    assert rational_to_json(5) == "5"
    assert rational_to_json(-3) == "-3"
    assert rational_to_json(Fraction(1, 2)) == "1/2"
    assert rational_to_json(Fraction(4, 2)) == "2"
    assert rational_from_json("5") == 5
    assert rational_from_json("-7/3") == Fraction(-7, 3)
    assert rational_from_json("6/3") == 2


@pytest.mark.parametrize("bad", ["", "x", "1/0", "1/2/3", "1.5", 3, None])
def test_rational_rejects(bad):
    with pytest.raises(ValueError):
        rational_from_json(bad)


# -- QLaurent ---------------------------------------------------------------------


def test_qlaurent_json_round_trip():
    f = QL(-2, 1, 0, Fraction(3, 4))
    j = qlaurent_to_json(f)
    assert j == {"offset": -2, "coeffs": ["1", "0", "3/4"]}
    assert qlaurent_from_json(j) == f


def test_qlaurent_zero_is_canonical():
    assert qlaurent_to_json(QLaurent(0, [])) == {"offset": 0, "coeffs": []}
    assert qlaurent_from_json({"offset": 7, "coeffs": ["0"]}) == QLaurent(0, [])


@pytest.mark.parametrize(
    "bad",
    [
        {"offset": 0},
        {"coeffs": []},
        {"offset": 0, "coeffs": [], "extra": 1},
        {"offset": True, "coeffs": []},
        {"offset": 0, "coeffs": "1"},
        [],
    ],
)
def test_qlaurent_rejects(bad):
    with pytest.raises(ValueError):
        qlaurent_from_json(bad)


# -- MPoly ------------------------------------------------------------------------


def test_mpoly_json_round_trip_and_order():
    p = MPoly(2, {(1, 0): QL(1, -1), (0, 1): QL(0, 1)})
    j = mpoly_to_json(p)
    assert [t["exp"] for t in j["terms"]] == [[0, 1], [1, 0]]
    assert mpoly_from_json(j) == p
    validate(j, "mpoly")


def test_mpoly_rejects_negative_exponent():
    with pytest.raises(ValueError):
        mpoly_from_json(
            {"arity": 1, "terms": [{"exp": [-1], "coeff": {"offset": 0, "coeffs": ["1"]}}]}
        )


# -- elements ---------------------------------------------------------------------


def test_element_json_round_trip_and_order():
    e = product((0, 2), (1,), 4)
    j = element_to_json(e, 4)
    keys = [tuple(t["partition"]) for t in j["terms"]]
    assert keys == sorted(keys, key=lambda k: (len(k), k))
    d, back = element_from_json(j)
    assert d == 4 and back == e
    validate(j, "element")


def test_element_decode_prunes_zero_and_rejects_duplicates():
    base = {"offset": 0, "coeffs": ["1"]}
    zero = {"offset": 0, "coeffs": []}
    d, e = element_from_json(
        {"d": 2, "terms": [{"partition": [1], "coeff": zero}]}
    )
    assert e == {}
    with pytest.raises(ValueError):
        element_from_json(
            {
                "d": 2,
                "terms": [
                    {"partition": [1], "coeff": base},
                    {"partition": [1], "coeff": base},
                ],
            }
        )
    with pytest.raises(ValueError):
        element_from_json({"d": 2, "terms": [{"partition": [2, 1], "coeff": base}]})
    with pytest.raises(ValueError):
        element_from_json({"d": 0, "terms": []})


def test_specialized_json():
    j = specialized_to_json({(0, 2, 7): 1}, 4, 0)
    assert j == {"d": 4, "at_q": "0", "terms": [{"partition": [0, 2, 7], "value": "1"}]}
    validate(j, "specialized")


def test_symmetric_and_graded_json():
    ge = to_symmetric_element(product((0, 2), (1,), 4))
    j = graded_to_json(ge)
    assert [c["arity"] for c in j["components"]] == [3]
    validate(j, "graded")
    validate(symmetric_to_json(ge[3]), "symmetric")


def test_table_json_sorted():
    j = table_to_json(structure_table(1, 1, 2))
    assert j["entries"] == [
        {"a": [0], "b": [1], "coeff": {"offset": 0, "coeffs": ["1"]}},
        {"a": [1], "b": [0], "coeff": {"offset": 1, "coeffs": ["-1"]}},
    ]
    validate(j, "table")


# -- renderers ---------------------------------------------------------------------


def test_qlaurent_render_basics():
    assert render_qlaurent_text(QLaurent(0, [])) == "0"
    assert render_qlaurent_text(QL(0, 1)) == "1"
    assert render_qlaurent_text(QL(0, -1)) == "-1"
    assert render_qlaurent_text(QL(1, 1)) == "q"
    assert render_qlaurent_text(QL(1, -1)) == "-q"
    assert render_qlaurent_text(QL(-1, 1)) == "q^-1"
    assert render_qlaurent_text(QL(0, 1, -1)) == "-q+1"
    assert render_qlaurent_text(QL(2, Fraction(3, 2))) == "3/2q^2"
    assert render_qlaurent_latex(QL(-1, 1)) == "q^{-1}"
    assert render_qlaurent_latex(QL(2, 3, 0, 1)) == "q^{4}+3q^{2}"
    assert render_qlaurent_latex(QL(0, Fraction(-1, 3))) == "-\\frac{1}{3}"


def test_element_render_golden():
    e = product((0, 2), (1,), 4)
    assert render_element_latex(e) == (
        "(0, 2, 7) - 3q\\cdot (0, 3, 6) + (-q^{3}+3q^{2})\\cdot (0, 4, 5)"
        " - 3q\\cdot (1, 2, 6) + (q^{6}+3q^{4}+9q^{2})\\cdot (1, 3, 5)"
        " - 9q^{3}\\cdot (1, 4, 4) + (-3q^{5}+3q^{2})\\cdot (2, 2, 5)"
        " + (-3q^{5}+9q^{4}-10q^{3})\\cdot (2, 3, 4) + 3q^{4}\\cdot (3, 3, 3)"
    )
    assert render_element_text(product((0,), (0,), 2)) == "(-q+1)·(0, 1)"
    assert render_element_text({}) == "0"
    assert render_element_text(product((), (), 3)) == "()"


def test_symmetric_render():
    se = SymmetricElement(2, {(0, 1): QL(0, 1, -1), (1, 1): QL(0, 2)})
    assert render_symmetric_text(se) == "(-q+1)·m(0, 1) + 2·m(1, 1)"
    assert render_symmetric_latex(se) == "(-q+1)\\cdot m_{(0, 1)} + 2\\cdot m_{(1, 1)}"


def test_graded_and_specialized_render():
    ge = to_symmetric_element({(1,): QL(0, 1), (0, 1): QL(0, -1)})
    assert render_graded_text(ge) == "arity 1: m(1)\narity 2: -m(0, 1)"
    assert render_specialized_text({(0, 1): Fraction(1, 2), (1, 1): -2}) == (
        "1/2·(0, 1) - 2·(1, 1)"
    )
    assert render_mpoly_text(MPoly(2, {(0, 1): QL(0, 1), (1, 0): QL(1, -1)})) == (
        "x^(0, 1) - q·x^(1, 0)"
    )
