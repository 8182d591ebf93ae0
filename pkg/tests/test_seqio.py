import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lineometer.seqio import (
    looks_like_lengths,
    parse_lengths,
    read_lengths,
    read_text,
    write_lengths,
)


class TestParse:
    def test_tokens_across_lines(self):
        arr = parse_lengths("1 2 3\n4 5\n")
        assert arr.tolist() == [1, 2, 3, 4, 5]
        assert arr.dtype == np.int64

    def test_comments_and_blanks_skipped(self):
        arr = parse_lengths("# header\n\n1 2\n  # indented comment\n3\n")
        assert arr.tolist() == [1, 2, 3]

    def test_non_integer_names_line_and_token(self):
        with pytest.raises(ValueError, match=r"input:2: 'two'"):
            parse_lengths("1\ntwo 3\n", origin="input")

    def test_nonpositive_rejected(self):
        with pytest.raises(ValueError, match=">= 1"):
            parse_lengths("1 0 2\n")

    def test_empty_rejected(self):
        with pytest.raises(ValueError, match="no syllable counts"):
            parse_lengths("# only a comment\n")


class TestRoundTrip:
    def test_write_then_read(self, tmp_path):
        path = tmp_path / "seq.lens"
        lengths = np.array([1, 2, 3, 1, 1, 4])
        write_lengths(path, lengths, header={"kind": "test", "q": 0.5})
        content = path.read_text(encoding="utf-8")
        assert content.startswith("# kind=test\n# q=0.5\n")
        assert np.array_equal(read_lengths(path), lengths)

    def test_line_wrapping(self, tmp_path):
        path = tmp_path / "seq.lens"
        write_lengths(path, [1] * 45, per_line=20)
        data_lines = [l for l in path.read_text().splitlines() if not l.startswith("#")]
        assert [len(l.split()) for l in data_lines] == [20, 20, 5]

    @given(lengths=st.lists(st.integers(min_value=1, max_value=30), min_size=1, max_size=200))
    @settings(max_examples=30)
    def test_round_trip_any_sequence(self, tmp_path_factory, lengths):
        path = tmp_path_factory.mktemp("io") / "seq.lens"
        write_lengths(path, lengths)
        assert read_lengths(path).tolist() == lengths

    def test_write_validates(self, tmp_path):
        with pytest.raises(ValueError):
            write_lengths(tmp_path / "bad.lens", [1, 0])


class TestReadText:
    def test_utf8_error_reports_byte_offset(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_bytes(b"fine until \xff here")
        with pytest.raises(ValueError, match=r"byte 11"):
            read_text(path)

    def test_reads_unicode(self, tmp_path):
        path = tmp_path / "ok.txt"
        path.write_text("café ’tis", encoding="utf-8")
        assert "café" in read_text(path)


class TestSniffer:
    @pytest.mark.parametrize(
        "content,expected",
        [
            ("1 2 3\n", True),
            ("# note\n4 4 4\n", True),
            ("1 two 3\n", False),
            ("0 1\n", False),
            ("", False),
            ("# only comments\n", False),
            ("hello world\n", False),
            ("12 345\n", True),
        ],
    )
    def test_cases(self, content, expected):
        assert looks_like_lengths(content) is expected
