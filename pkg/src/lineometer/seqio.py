"""Reading and writing length-sequence files.

A length-sequence file is UTF-8 text: ``#`` starts a comment line, every
other whitespace-separated token is a positive integer syllable count.
"""

from __future__ import annotations

import numpy as np

from ._validation import check_length_sequence

__all__ = ["read_text", "read_lengths", "parse_lengths", "write_lengths", "looks_like_lengths"]


def read_text(path) -> str:
    """Read a UTF-8 file, reporting the byte offset of any encoding error."""
    with open(path, "rb") as fh:
        raw = fh.read()
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ValueError(
            f"{path}: not valid UTF-8 (byte {exc.start}: {exc.reason})"
        ) from exc


def _data_lines(content: str):
    for lineno, line in enumerate(content.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, stripped


def parse_lengths(content: str, origin: str = "<lengths>") -> np.ndarray:
    values: list[int] = []
    for lineno, line in _data_lines(content):
        for token in line.split():
            try:
                value = int(token)
            except ValueError:
                raise ValueError(
                    f"{origin}:{lineno}: {token!r} is not an integer syllable count"
                ) from None
            if value < 1:
                raise ValueError(f"{origin}:{lineno}: syllable counts must be >= 1, got {value}")
            values.append(value)
    if not values:
        raise ValueError(f"{origin}: no syllable counts found")
    return np.asarray(values, dtype=np.int64)


def read_lengths(path) -> np.ndarray:
    return parse_lengths(read_text(path), origin=str(path))


def write_lengths(path, lengths, header: dict | None = None, per_line: int = 20) -> None:
    arr = check_length_sequence(lengths)
    lines = []
    if header:
        for key, value in header.items():
            lines.append(f"# {key}={value}")
    for start in range(0, arr.size, per_line):
        lines.append(" ".join(str(v) for v in arr[start : start + per_line]))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def looks_like_lengths(content: str) -> bool:
    """True when every non-comment token parses as a positive integer."""
    seen = False
    for _, line in _data_lines(content):
        for token in line.split():
            if not token.isdigit() or int(token) < 1:
                return False
            seen = True
    return seen
