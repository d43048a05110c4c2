"""Unit tests for CSV and JSON-lines emission"""

import json

import pytest

from weightdirac.core.errors import ConfigError
from weightdirac.core.reports import csv_header, emit_report
from weightdirac.schemas.records import CheckRecord, CohomologyRecord, DiracRecord, VerifyRecord


class TestJsonLines:
    """Tests for the jsonl format"""

    def test_one_object_per_line(self):
        """Test that each record is one compact JSON object in field order"""
        records = [
            DiracRecord(weight=["-1"], dim_plus=1, dim_minus=0),
            DiracRecord(weight=["1"], dim_plus=0, dim_minus=1),
        ]
        payload = emit_report(records, "jsonl", DiracRecord, 1).decode()
        lines = payload.splitlines()
        assert len(lines) == 2
        assert lines[0] == '{"weight":["-1"],"dim_plus":1,"dim_minus":0}'
        assert json.loads(lines[1])["dim_minus"] == 1
        assert payload.endswith("\n")

    def test_no_records(self):
        """Test that an empty result emits nothing"""
        assert emit_report([], "jsonl", DiracRecord, 1) == b""


class TestCsv:
    """Tests for the csv format"""

    def test_header_expands_weight(self):
        """Test that the weight column becomes w1..wr"""
        assert csv_header(CohomologyRecord, 2) == ["w1", "w2", "direction", "dims"]
        assert csv_header(CheckRecord, 2) == ["check", "status", "detail"]

    def test_cells(self):
        """Test list joins with ';' and one column per coordinate"""
        record = CohomologyRecord(weight=["0", "1/2"], direction="u-cohomology", dims=[1, 0, 2])
        payload = emit_report([record], "csv", CohomologyRecord, 2).decode()
        assert payload == "w1,w2,direction,dims\n0,1/2,u-cohomology,1;0;2\n"

    def test_booleans_and_missing_values(self):
        """Test true/false spelling and empty cells for missing values"""
        records = [
            VerifyRecord(first="M", second="L", ep=1, index_pair=1, equal=True, method="induced-collapse"),
            VerifyRecord(first="F", second="M", ep=0, method="theorem-based"),
        ]
        lines = emit_report(records, "csv", VerifyRecord, 1).decode().splitlines()
        assert lines[0] == "first,second,ep,index_pair,equal,method"
        assert lines[1] == "M,L,1,1,true,induced-collapse"
        assert lines[2] == "F,M,0,,,theorem-based"

    def test_header_without_records(self):
        """Test that the header is written even when nothing else is"""
        assert emit_report([], "csv", DiracRecord, 2) == b"w1,w2,dim_plus,dim_minus\n"


class TestFormats:
    """Tests for format selection"""

    def test_unknown_format(self):
        """Test that an unknown format is a configuration error"""
        with pytest.raises(ConfigError, match="unknown output format"):
            emit_report([], "xml", DiracRecord, 1)

    def test_output_is_deterministic(self):
        """Test that emitting twice gives identical bytes"""
        records = [DiracRecord(weight=["0", "0"], dim_plus=2, dim_minus=1)]
        assert emit_report(records, "csv", DiracRecord, 2) == emit_report(records, "csv", DiracRecord, 2)
