"""Document round trips and schema diagnostics."""

from fractions import Fraction as F

import pytest

from l2transform import SchemaError, algebra, lpoly
from l2transform.serialization import (
    dumps, loads, parse_document, rational_from_string, rational_to_string,
    render_json,
)
from l2transform.transform import pole

CORPUS = [
    '{"kind":"gexpr","terms":[]}',
    '{"kind":"gexpr","terms":[{"c":"1","k":0,"a":"1/2"}]}',
    '{"kind":"gexpr","terms":[{"c":"-3/7","k":2,"a":"-1"},{"c":"5","k":0,"a":"0"}]}',
    '{"kind":"sexpr","terms":[{"c":"1/2","a":"0","m":1}]}',
    '{"kind":"sexpr","terms":[{"c":"2","a":"0","m":0},{"c":"-1/3","a":"1/2","m":2}]}',
    '{"kind":"lpoly","terms":[{"degree":0,"c":"1"},{"degree":3,"c":"-2/5"}]}',
]


class TestRoundTrip:
    def test_single_gaussian(self):
        e = loads('{"kind":"gexpr","terms":[{"c":"1","k":0,"a":"1/2"}]}')
        assert e == algebra.gaussian("1/2")

    @pytest.mark.parametrize("doc", CORPUS)
    def test_serialize_after_parse_is_identity(self, doc):
        assert dumps(loads(doc)) == doc

    def test_parse_after_serialize_is_identity(self):
        for obj in (algebra.gaussian("1/2", c=F(-2, 3), k=1),
                    pole(F(1, 2), F(1, 2), 1) + pole(3, 0, 0),
                    lpoly({0: 1, 2: F(7, 9)})):
            assert loads(dumps(obj)) == obj

    def test_non_canonical_input_canonicalizes(self):
        e = loads('{"kind":"gexpr","terms":[{"c":"1","k":0,"a":"0"},{"c":"2","k":0,"a":"0"}]}')
        assert e == algebra.constant(3)


class TestSchemaErrors:
    def test_zero_denominator(self):
        with pytest.raises(SchemaError) as exc:
            loads('{"kind":"gexpr","terms":[{"c":"1/0","k":0,"a":"0"}]}')
        assert exc.value.path == "$.terms[0].c"

    def test_float_rational_rejected(self):
        with pytest.raises(SchemaError):
            loads('{"kind":"gexpr","terms":[{"c":"0.5","k":0,"a":"0"}]}')

    def test_numeric_rational_rejected(self):
        with pytest.raises(SchemaError):
            loads('{"kind":"gexpr","terms":[{"c":1,"k":0,"a":"0"}]}')

    def test_unknown_kind(self):
        with pytest.raises(SchemaError) as exc:
            loads('{"kind":"wexpr","terms":[]}')
        assert exc.value.path == "$.kind"

    def test_missing_field(self):
        with pytest.raises(SchemaError) as exc:
            loads('{"kind":"gexpr","terms":[{"c":"1","k":0}]}')
        assert "a" in str(exc.value)

    def test_unknown_field(self):
        with pytest.raises(SchemaError):
            loads('{"kind":"gexpr","terms":[{"c":"1","k":0,"a":"0","b":"1"}]}')

    def test_negative_multiplicity(self):
        with pytest.raises(SchemaError):
            loads('{"kind":"sexpr","terms":[{"c":"1","a":"0","m":-1}]}')

    def test_boolean_is_not_an_integer(self):
        with pytest.raises(SchemaError):
            loads('{"kind":"gexpr","terms":[{"c":"1","k":true,"a":"0"}]}')

    def test_invalid_json(self):
        with pytest.raises(SchemaError):
            parse_document("{not json")

    def test_non_object_top_level(self):
        with pytest.raises(SchemaError):
            parse_document("[1,2]")


class TestRationalStrings:
    def test_round_trip(self):
        for text in ("0", "-7", "3/4", "-22/7"):
            assert rational_to_string(rational_from_string(text)) == text

    def test_reduction_on_output(self):
        assert rational_to_string(F(2, 4)) == "1/2"

    def test_rejects_whitespace(self):
        with pytest.raises(SchemaError):
            rational_from_string(" 1/2")


class TestRenderJson:
    def test_floats_use_17_significant_digits(self):
        assert render_json(1 / 3) == "0.33333333333333331"
        assert render_json(0.5) == "0.5"

    def test_nested_structures(self):
        doc = {"a": [1, 2.5], "b": {"c": None, "d": True}}
        assert render_json(doc) == '{"a":[1,2.5],"b":{"c":null,"d":true}}'

    def test_deterministic(self):
        doc = {"x": 0.1, "y": [1e-17, 3.0]}
        assert render_json(doc) == render_json(doc)
