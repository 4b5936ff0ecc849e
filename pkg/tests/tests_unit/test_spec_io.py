"""Unit tests for code-spec JSON and the message/codeword text formats."""

import json

import pytest

from lrc.Catalog.catalog import build_example, lrc_9_4_2, product_9_4_rs
from lrc.Cli.spec_io import (code_to_spec, dump_spec, format_message, format_symbols, load_spec,
                             parse_message, parse_symbols, spec_to_code)
from lrc.errors import ParameterError
from lrc.Field.gf import FieldSpec

F13 = FieldSpec(13)


# ---------------------------------------------------------------------------
# Spec contents
# ---------------------------------------------------------------------------

def test_spec_of_9_4_2():
    """The spec names field, parameters, locations, partition and g."""
    spec = code_to_spec(lrc_9_4_2())
    assert spec["version"] == 1
    assert spec["construction"] == "lrc"
    assert spec["params"] == {"n": 9, "k": 4, "r": 2}
    assert spec["position_locations"] == [1, 3, 9, 2, 6, 5, 4, 12, 10]
    assert spec["partition"] == [[1, 3, 9], [2, 6, 5], [4, 12, 10]]
    assert spec["g"] == [0, 0, 0, 1]
    assert spec["basis"] == [[1], [0, 1], [0, 0, 0, 1], [0, 0, 0, 0, 1]]


def test_product_spec_nests_components():
    """Product specs carry both component specs."""
    spec = code_to_spec(product_9_4_rs())
    assert spec["params"] == {"n": 9, "k": 4}
    assert spec["product"]["c1"]["construction"] == "rs"
    assert "basis" not in spec


@pytest.mark.parametrize("name", [
    "lrc_9_4_2", "systematic_9_4_2", "lrc_12_6_3_gf16", "multi_12_4_2_3", "product_9_4_rs",
    "arbitrary_11_5_3", "crt_8_4", "local_mds_12_4_2_3", "rs_9_4",
])
def test_spec_rebuilds_same_code(name):
    """Loading a dumped spec gives the same construction, locations and encoder."""
    code = build_example(name)
    again = load_spec(dump_spec(code))
    assert again.construction == code.construction
    assert (again.n, again.k) == (code.n, code.k)
    message = list(range(1, code.k + 1))
    assert again.encode(message) == code.encode(message)


# ---------------------------------------------------------------------------
# Spec validation
# ---------------------------------------------------------------------------

def test_tampered_basis_rejected():
    """A hand-edited basis does not silently change the code."""
    spec = code_to_spec(lrc_9_4_2())
    spec["basis"][1] = [0, 2]
    with pytest.raises(ParameterError, match="basis"):
        spec_to_code(spec)


def test_tampered_locations_rejected():
    """Locations must match the partition order."""
    spec = code_to_spec(lrc_9_4_2())
    spec["position_locations"] = spec["position_locations"][::-1]
    with pytest.raises(ParameterError, match="locations"):
        spec_to_code(spec)


def test_wrong_g_rejected():
    """g must be constant on the stored partition."""
    spec = code_to_spec(lrc_9_4_2())
    spec["g"] = [0, 0, 1]
    with pytest.raises(ParameterError):
        spec_to_code(spec)


@pytest.mark.parametrize("text, match", [
    ("not json", "JSON"),
    ("[1, 2]", "object"),
    ('{"construction": "lrc"}', "missing"),
])
def test_malformed_specs(text, match):
    """Bad JSON and missing keys are parameter errors."""
    with pytest.raises(ParameterError, match=match):
        load_spec(text)


def test_unsupported_version():
    """Only version 1 is understood."""
    spec = code_to_spec(lrc_9_4_2())
    spec["version"] = 2
    with pytest.raises(ParameterError, match="version"):
        load_spec(json.dumps(spec))


# ---------------------------------------------------------------------------
# Text formats
# ---------------------------------------------------------------------------

def test_parse_and_format_message():
    """Messages are whitespace separated."""
    message = parse_message("1 1\n1 1\n", F13)
    assert message == [F13(1)] * 4
    assert format_message(message) == "1 1 1 1\n"


def test_parse_symbols_with_erasures():
    """'?' marks an erased symbol."""
    assert parse_symbols("4\n?\n7\n", F13) == [F13(4), None, F13(7)]


@pytest.mark.parametrize("text", ["13", "-1", "x"])
def test_parse_symbols_rejects_bad_tokens(text):
    """Symbols are canonical integers in [0, q)."""
    with pytest.raises(ParameterError):
        parse_symbols(text, F13)


def test_format_symbols():
    """One per line, or grid rows when a width is given."""
    assert format_symbols([F13(1), None]) == "1\n?\n"
    assert format_symbols([1, None, 3, 4], width=2) == "1 ?\n3 4\n"
