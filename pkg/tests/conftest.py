import random

import pytest

from nomlang.names import Letter, Name

NAMES = [Name("n"), Name("m"), Name("k")]
LETTERS = [Letter("a"), Letter("b")]


@pytest.fixture
def rng():
    return random.Random(20260823)
