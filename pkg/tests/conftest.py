import sys
import random

import pytest
from hypothesis import strategies as st

from sympcp.words import BINARY, PcpInstance, symmetric_closure


def random_words(rng, alphabet, max_len, min_len=0):
    return "".join(rng.choice(alphabet) for _ in range(rng.randint(min_len, max_len)))


def random_instance(rng, k_max=3, max_len=3, alphabet="01"):
    """Distinct non-trivial pairs, at least one pair."""
    k = rng.randint(1, k_max)
    pairs = []
    while len(pairs) < k:
        u, v = random_words(rng, alphabet, max_len), random_words(rng, alphabet, max_len)
        if u != v and (u, v) not in pairs:
            pairs.append((u, v))
    return PcpInstance.parse(pairs, tuple(alphabet))


def random_symmetric(rng, k_max=4, max_len=3, alphabet="01"):
    # closure of up to k_max//2 base pairs keeps k <= k_max
    base = random_instance(rng, max(k_max // 2, 1), max_len, alphabet)
    return symmetric_closure(base)


binary_words = st.text(alphabet="01", max_size=12)
quaternary_words = st.text(alphabet="0123", max_size=12)


@pytest.fixture
def rng():
    return random.Random(1234)


@pytest.fixture
def counterexample():
    return PcpInstance.parse([("00", "0")])


@pytest.fixture
def closure():
    return PcpInstance.parse([("00", "0"), ("0", "00")], BINARY)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.report_lines():
        terminalreporter.write_line(line)
