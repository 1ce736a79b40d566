"""Bounded PCP solving by breadth-first search over overhang configurations.

A configuration is the unmatched suffix of whichever concatenated side is
ahead, tagged with that side.  Two partial tile sequences with the same
configuration have identical futures, so the search keeps one
representative per configuration: the canonical (shortest, then
lexicographically least) index sequence reaching it.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any

from .words import PcpInstance, PcpSolution, check_solution

SOLUTION = "solution"
UNSOLVABLE = "unsolvable"
EXHAUSTED = "exhausted"

LENGTH_MONOTONE = "length-monotone"
NO_START = "no-start"
STATE_EXHAUSTED = "state-exhausted"


@dataclass(frozen=True)
class SearchLimits:
    max_tiles: int = 40
    max_overhang: int = 64
    max_states: int = 200_000

    def __post_init__(self):
        for name in ("max_tiles", "max_overhang", "max_states"):
            if int(getattr(self, name)) <= 0:
                raise ValueError(f"{name} must be positive")

    def scaled(self, factor: int) -> "SearchLimits":
        """Limits for a block-recoded instance: overhangs grow by the block width."""
        return SearchLimits(self.max_tiles, self.max_overhang * factor, self.max_states)


@dataclass(frozen=True)
class SearchOutcome:
    status: str
    witness: Any = None
    reason: str | None = None
    states: int = 0

    @property
    def found(self) -> bool:
        return self.status == SOLUTION


# side: +1 when the u-side is ahead, -1 when the v-side is ahead, 0 when balanced
Config = tuple[int, tuple[int, ...]]
BALANCED: Config = (0, ())


def step(config: Config, u: tuple[int, ...], v: tuple[int, ...]) -> Config | None:
    side, over = config
    if side >= 0:
        top, bottom = over + u, v
    else:
        top, bottom = u, over + v
    n = len(bottom)
    if top[:n] == bottom:
        rest = top[n:]
        return (1, rest) if rest else BALANCED
    n = len(top)
    if bottom[:n] == top:
        return (-1, bottom[n:])
    return None


def unsolvability_reason(inst: PcpInstance) -> str | None:
    """A cheap, sound certificate that no solution exists, if one applies."""
    diffs = [len(u) - len(v) for u, v in inst.pairs]
    if all(d > 0 for d in diffs) or all(d < 0 for d in diffs):
        return LENGTH_MONOTONE
    if all(step(BALANCED, u, v) is None for u, v in _raw(inst)):
        return NO_START
    return None


def _raw(inst: PcpInstance) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    return [(u.symbols, v.symbols) for u, v in inst.pairs]


def _expand(chunk, pairs):
    out = []
    for config, path in chunk:
        for i, (u, v) in enumerate(pairs):
            succ = step(config, u, v)
            if succ is not None:
                out.append((succ, path + (i,)))
    return out


def solve(inst: PcpInstance, limits: SearchLimits | None = None, workers: int = 1) -> SearchOutcome:
    """Search for the canonical-minimal solution within ``limits``.

    Returns ``unsolvable`` only on a sound criterion: a length-monotone or
    no-start instance, or a configuration graph explored to exhaustion
    without any configuration being dropped by a limit.  Layer expansion may
    use ``workers`` threads; results are merged in layer order, so the
    outcome does not depend on the worker count.
    """
    limits = limits or SearchLimits()
    reason = unsolvability_reason(inst)
    if reason:
        return SearchOutcome(UNSOLVABLE, reason=reason)

    pairs = _raw(inst)
    layer: list[tuple[Config, tuple[int, ...]]] = [(BALANCED, ())]
    visited: set[Config] = set()
    truncated = False
    pool = ThreadPoolExecutor(workers) if workers > 1 else None
    try:
        for _ in range(limits.max_tiles):
            if pool is not None and len(layer) > workers:
                size = -(-len(layer) // workers)
                chunks = [layer[i:i + size] for i in range(0, len(layer), size)]
                expanded = itertools.chain.from_iterable(pool.map(_expand, chunks, itertools.repeat(pairs)))
            else:
                expanded = _expand(layer, pairs)
            nxt = []
            for config, path in expanded:
                if config == BALANCED:
                    sol = PcpSolution(path)
                    assert check_solution(inst, sol)
                    return SearchOutcome(SOLUTION, sol, states=len(visited))
                if len(config[1]) > limits.max_overhang:
                    truncated = True
                    continue
                if config in visited:
                    continue
                if len(visited) >= limits.max_states:
                    truncated = True
                    continue
                visited.add(config)
                nxt.append((config, path))
            layer = nxt
            if not layer:
                break
    finally:
        if pool is not None:
            pool.shutdown()
    if not layer and not truncated:
        return SearchOutcome(UNSOLVABLE, reason=STATE_EXHAUSTED, states=len(visited))
    return SearchOutcome(EXHAUSTED, states=len(visited))


def enumerate_solutions(inst: PcpInstance, max_tiles: int) -> list[PcpSolution]:
    """Every index sequence of length <= max_tiles that solves inst, shortest first."""
    found = []
    for n in range(1, max_tiles + 1):
        for seq in itertools.product(range(inst.k), repeat=n):
            if check_solution(inst, seq):
                found.append(PcpSolution(seq))
    return found
