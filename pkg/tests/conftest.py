import pathlib

import pytest

from speech_clarity.lexicon import load_lexicon

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures():
    return FIXTURES


@pytest.fixture(scope="session")
def lex():
    return load_lexicon(FIXTURES / "lexicon.dict")
