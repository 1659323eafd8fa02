"""
Tests for src/posparam/tsv.py
"""

from fractions import Fraction

import pytest

from src.exceptions import SerializationException
from src.posparam import (
    RegionAssignment,
    format_plucker_tsv,
    format_regions_tsv,
    parse_plucker_tsv,
    phi2,
    region_values,
)
from src.posparam.tsv import read_text


class TestPluckerTsv:
    def test_format(self):
        d = phi2(RegionAssignment.from_inner_vector(2, 4, [Fraction(7, 3)]))
        assert format_plucker_tsv(d) == (
            "1,2\t1\n1,3\t1\n1,4\t1\n2,3\t1\n2,4\t10/3\n3,4\t7/3\n"
        )

    def test_parse(self):
        text = "# Gr(2,4)\n1,2\t2\n\n1,3\t1/2\n3,4\t3\n"
        d = parse_plucker_tsv(text)
        assert (d.k, d.n) == (2, 4)
        assert d[(1, 3)] == Fraction(1, 2)

    def test_parse_concatenated_subsets(self):
        d = parse_plucker_tsv("12\t1\n13\t2\n24\t5\n")
        assert (d.k, d.n) == (2, 4)
        assert d[(2, 4)] == 5

    def test_parse_formatted(self):
        d = phi2(RegionAssignment.from_inner_vector(3, 6, [1, 2, 3, Fraction(1, 4)]))
        assert parse_plucker_tsv(format_plucker_tsv(d)) == d

    @pytest.mark.parametrize(
        "text,fragment",
        [
            ("1,2 5\n", "line 1"),
            ("1,2\t5\n1,x\t1\n", "line 2"),
            ("1,2\tabc\n", "line 1"),
            ("", "no entries"),
            ("# only a comment\n", "no entries"),
        ],
    )
    def test_malformed(self, text, fragment):
        with pytest.raises(SerializationException) as exc_info:
            parse_plucker_tsv(text, source="bad.tsv")

        assert fragment in str(exc_info.value)
        assert exc_info.value.details["path"] == "bad.tsv"

    def test_non_positive(self):
        with pytest.raises(SerializationException) as exc_info:
            parse_plucker_tsv("1,2\t1\n1,3\t-2\n")

        assert "Invalid Plücker vector" in str(exc_info.value)


class TestRegionTsv:
    def test_region_values(self):
        assert region_values("1,4\t5/2\n") == {(1, 4): Fraction(5, 2)}

    def test_region_shorthand(self):
        assert region_values("14\t3\n") == {(1, 4): 3}

    def test_region_index_must_be_pair(self):
        with pytest.raises(SerializationException):
            region_values("1,4,2\t1\n")

    def test_format_regions(self):
        x = RegionAssignment.from_inner_vector(2, 5, [2, Fraction(1, 2)])
        assert format_regions_tsv(x) == "1,4\t2\n1,5\t1/2\n"


class TestReadText:
    def test_missing_file(self, tmp_path):
        with pytest.raises(SerializationException):
            read_text(tmp_path / "missing.tsv")

    def test_reads_file(self, tmp_path):
        path = tmp_path / "x.tsv"
        path.write_text("1,4\t1\n", encoding="utf-8")
        assert read_text(path) == "1,4\t1\n"
