from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA


@pytest.fixture(scope="session")
def gold_words() -> dict[str, int]:
    """The hand-counted word list: normalized word -> syllable count."""
    from lineometer import load_lexicon

    return load_lexicon(DATA / "gold_syllables.tsv")


@pytest.fixture(scope="session")
def fragment_text() -> str:
    return (DATA / "fragment.txt").read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def fragment_gold() -> list[tuple[int, str, int]]:
    """Hand-tokenized reading of the fragment: (position, surface, syllables)."""
    rows = []
    for line in (DATA / "fragment_gold.tsv").read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        position, surface, count = line.split("\t")
        rows.append((int(position), surface, int(count)))
    return rows
