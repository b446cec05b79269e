import random

import pytest

from mengerwords.words import LETTERS, Word
from mengerwords.graph import base_vertex, neighbor, path_to_base


def random_word(rng: random.Random, max_len: int = 24, partial_ok: bool = False) -> Word:
    letters = tuple(rng.choice(LETTERS) for _ in range(rng.randrange(max_len)))
    partial = partial_ok and bool(letters) and rng.random() < 0.3
    return Word(letters, partial)


def random_loop(rng: random.Random, level: int, max_walk: int = 20) -> Word:
    v = base_vertex(level)
    letters = []
    for _ in range(rng.randrange(max_walk)):
        a = rng.choice(LETTERS)
        letters.append(a)
        v = neighbor(v, a)
    return Word(tuple(letters) + path_to_base(v).letters)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240901)
