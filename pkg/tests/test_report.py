"""CSV cell formatting and schema guard tests."""

import pytest

from sdnmanet.report import format_value, parse_metrics_csv


def test_six_significant_digit_formatting():
    assert format_value(0.25) == "0.25"
    assert format_value(101700.0) == "101700"
    assert format_value(1234567.0) == "1.23457e+06"
    assert format_value(0.0001234567) == "0.000123457"
    assert format_value(29.880478087) == "29.8805"


def test_bool_and_int_formatting():
    assert format_value(True) == "true"
    assert format_value(False) == "false"
    assert format_value(42) == "42"
    assert format_value("sdn") == "sdn"


def test_parse_rejects_foreign_header():
    with pytest.raises(ValueError, match="unexpected metrics header"):
        parse_metrics_csv("a,b,c\r\n1,2,3\r\n")
