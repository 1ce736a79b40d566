import itertools
import random

import pytest

from sympcp.floyd import (
    Derivation, MalformedSolution, Presentation, build_pcp, build_sympcp, check_derivation,
    derivation_to_solution, pad_derivation, search_derivation, solution_to_derivation,
)
from sympcp.search import SearchLimits, solve
from sympcp.words import PcpSolution, binary_code, check_solution, is_symmetric, swap_index


@pytest.fixture
def comm():
    return Presentation.parse(["a", "b"], [("ab", "ba")])


def test_presentation_closes_relations(comm):
    assert [(str(l), str(r)) for l, r in comm.relations] == [("ab", "ba"), ("ba", "ab")]
    with pytest.raises(ValueError):
        Presentation.parse(["a"], [("a", "a")])
    with pytest.raises(ValueError):
        Presentation.parse(["a"], [("a", "")])
    with pytest.raises(ValueError):
        Presentation.parse(["o", "a"])


def test_pair_counts(comm):
    x, y = comm.word("aab"), comm.word("aba")
    # 2|B| + 2 copy pairs, 2|R| relation pairs, 2 boundary pairs
    assert build_pcp(comm, x, y).k == 2 * 2 + 2 + 2 * 2 + 2
    sp = build_sympcp(comm, x, y)
    assert sp.k == build_pcp(comm, x, y).k + 2
    assert is_symmetric(sp)
    assert all(u != v for u, v in sp.pairs)


def test_build_pcp_pairs_single_letter():
    pres = Presentation.parse(["a"])
    inst = build_pcp(pres, pres.word("a"), pres.word("a"))
    got = [(" ".join(u.tokens), " ".join(v.tokens)) for u, v in inst.pairs]
    assert got == [
        ("a", "a~"), ("o", "o~"), ("a~", "a"), ("o~", "o"),
        ("< a o", "<"), (">", "o~ a >"),
    ]


def test_check_derivation(comm):
    d = Derivation.infer(comm, [comm.word("aab"), comm.word("aba")])
    assert d.witnesses == ((1, 0),)
    assert check_derivation(comm, d)
    bad = Derivation((comm.word("aab"), comm.word("baa")), ((0, 0),))
    assert not check_derivation(comm, bad)
    with pytest.raises(ValueError):
        Derivation.infer(comm, [comm.word("aab"), comm.word("bba")])


def test_pad_derivation(comm):
    d = pad_derivation(Derivation.infer(comm, [comm.word("aab"), comm.word("aba")]))
    assert len(d.steps) == 3 and d.witnesses[-1] is None
    d2 = pad_derivation(d)
    assert d2 == d


def test_round_trip_and_solver(comm):
    x, y = comm.word("aab"), comm.word("aba")
    d = Derivation.infer(comm, [x, y])
    sol = derivation_to_solution(comm, d)
    sp = build_sympcp(comm, x, y)
    assert check_solution(sp, sol)
    back = solution_to_derivation(comm, x, y, sol)
    assert check_derivation(comm, back) and back.source == x and back.target == y

    out = solve(sp, SearchLimits(40, 64, 200_000))
    assert out.found
    found = solution_to_derivation(comm, x, y, out.witness)
    assert check_derivation(comm, found)

    # mirrored solution starts with the swapped boundary pair
    mirrored = PcpSolution(tuple(swap_index(sp, i) for i in sol))
    assert check_solution(sp, mirrored)
    assert check_derivation(comm, solution_to_derivation(comm, x, y, mirrored))


def test_malformed_solution(comm):
    x, y = comm.word("aab"), comm.word("aba")
    with pytest.raises(MalformedSolution):
        solution_to_derivation(comm, x, y, PcpSolution((0, 1)))


def test_binary_coding_preserves_solution(comm):
    x, y = comm.word("aab"), comm.word("aba")
    sp = build_sympcp(comm, x, y)
    limits = SearchLimits(40, 64, 200_000)
    a = solve(sp, limits)
    b = solve(binary_code(sp), limits.scaled(4))
    assert a.witness == b.witness


def _length_preserving_cases(seed, n):
    rng = random.Random(seed)
    words2 = ["".join(p) for p in itertools.product("ab", repeat=2)]
    for _ in range(n):
        l, r = rng.sample(words2, 2)
        pres = Presentation.parse(["a", "b"], [(l, r)])
        x = "".join(rng.choice("ab") for _ in range(3))
        y = "".join(rng.choice("ab") for _ in range(3))
        yield pres, pres.word(x), pres.word(y)


def test_completeness_desk_scale():
    # length-preserving relations make the reachable set finite, so the oracle is exhaustive
    for pres, x, y in _length_preserving_cases(11, 60):
        d = search_derivation(pres, x, y, max_length=3, max_depth=16)
        out = solve(build_sympcp(pres, x, y), SearchLimits(40, 64, 100_000))
        assert out.found == (d is not None), (pres.relations, x, y)
        if out.found:
            back = solution_to_derivation(pres, x, y, out.witness)
            assert check_derivation(pres, back)
        if d is not None:
            assert check_solution(build_sympcp(pres, x, y), derivation_to_solution(pres, d))
