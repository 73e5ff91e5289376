import itertools

import pytest


def words_up_to(n: int, sigma: str = "ab"):
    """All words over sigma of length <= n, shortest first."""
    out = [""]
    for length in range(1, n + 1):
        out.extend("".join(t) for t in itertools.product(sigma, repeat=length))
    return out


@pytest.fixture(scope="session")
def small_words():
    return words_up_to(4)
