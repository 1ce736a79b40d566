"""Relations among the string-pair generators that encode a binary PCP instance.

The generating set is

    (ε,2),  (u_i, 2 i),  (u_i, 2 i 3),  (v_i, i 2),  (v_i, i 3)

with ``i`` the fixed-width binary code of the pair index.  A solution of
the instance yields a relation; conversely a relation factors into matched
2-2 / 2-3 blocks whose first coordinates chain into a solution of the
instance's symmetric closure.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Sequence

from .matrices import EPS2, StringPair, Tag, build_matrices, mat_product, pair_product, table_pairs
from .search import EXHAUSTED, SOLUTION, STATE_EXHAUSTED, UNSOLVABLE, SearchLimits, SearchOutcome
from .words import PcpInstance, PcpSolution, check_solution, is_symmetric, swap_index, symmetric_closure


class MalformedRelation(ValueError):
    """A relation that does not factor into matched blocks."""


@dataclass(frozen=True)
class GammaGenerator:
    tag: Tag
    pair: StringPair

    def __str__(self) -> str:
        return str(self.pair)


@dataclass(frozen=True)
class GammaRelation:
    p: tuple[GammaGenerator, ...]
    q: tuple[GammaGenerator, ...]

    def __post_init__(self):
        object.__setattr__(self, "p", tuple(self.p))
        object.__setattr__(self, "q", tuple(self.q))

    @property
    def products(self) -> tuple[StringPair, StringPair]:
        return product(self.p), product(self.q)

    def __str__(self) -> str:
        return "".join(map(str, self.p)) + " = " + "".join(map(str, self.q))


def product(seq: Sequence[GammaGenerator]) -> StringPair:
    return pair_product([g.pair for g in seq])


def build_gamma(inst: PcpInstance) -> list[GammaGenerator]:
    return [GammaGenerator(tag, pair) for tag, pair in table_pairs(inst).items()]


def build_gamma_reduced(inst: PcpInstance) -> list[GammaGenerator]:
    return [g for g in build_gamma(inst) if g.tag.kind in ("eps2", "u", "v")]


def generator_lookup(inst: PcpInstance) -> dict[Tag, GammaGenerator]:
    return {g.tag: g for g in build_gamma(inst)}


def verify_relation(gens: Sequence[GammaGenerator], rel: GammaRelation) -> bool:
    allowed = set(gens)
    for g in rel.p + rel.q:
        if g not in allowed:
            raise ValueError(f"generator {g.tag} {g} is not in the generating set")
    if not rel.p or not rel.q or rel.p == rel.q:
        return False
    if rel.p[0] == rel.q[0] or rel.p[-1] == rel.q[-1]:
        return False
    return product(rel.p) == product(rel.q)


def relation_from_solution(inst: PcpInstance, sol: PcpSolution) -> GammaRelation:
    """U_j1 ... U_j(n-1) Ubar_jn  =  L V_j1 ... V_j(n-1) Vbar_jn, as string pairs."""
    if not check_solution(inst, sol):
        raise ValueError(f"{sol} is not a solution of {inst}")
    g = generator_lookup(inst)
    *head, last = sol.indices
    p = [g[Tag("u", j)] for j in head] + [g[Tag("ubar", last)]]
    q = [g[EPS2]] + [g[Tag("v", j)] for j in head] + [g[Tag("vbar", last)]]
    rel = GammaRelation(tuple(p), tuple(q))
    assert product(rel.p) == product(rel.q)
    return rel


def relation_from_solution_symmetric(inst: PcpInstance, sol: PcpSolution) -> GammaRelation:
    """The letter-3-free relation, ending in L L V_j' on one side and U_j' L on the other."""
    if not is_symmetric(inst):
        raise ValueError("instance is not symmetric")
    if not check_solution(inst, sol):
        raise ValueError(f"{sol} is not a solution of {inst}")
    *head, last = sol.indices
    mirror = swap_index(inst, last)
    if mirror is None or mirror == last:
        raise ValueError(f"pair {last} has no distinct swapped partner")
    g = generator_lookup(inst)
    p = [g[Tag("u", j)] for j in head] + [g[EPS2], g[EPS2], g[Tag("v", mirror)]]
    q = [g[EPS2]] + [g[Tag("v", j)] for j in head] + [g[Tag("u", mirror)], g[EPS2]]
    rel = GammaRelation(tuple(p), tuple(q))
    assert product(rel.p) == product(rel.q)
    return rel


def matrix_relation_check(inst: PcpInstance, rel: GammaRelation) -> bool:
    mats = build_matrices(inst)
    left = mat_product([mats.by_tag(g.tag) for g in rel.p])
    right = mat_product([mats.by_tag(g.tag) for g in rel.q])
    return left == right


@dataclass(frozen=True)
class Block:
    """One matched block: the P-side and Q-side generator runs with their shared index sequence.

    ``u_on_p`` tells which side carries the u-chain.  Kind "2-2" or "2-3"
    names the terminator letter of the common second coordinate; "common"
    marks identical generators cancelled at a fully balanced point.
    """

    p: tuple[GammaGenerator, ...]
    q: tuple[GammaGenerator, ...]
    kind: str
    indices: tuple[int, ...]
    u_on_p: bool = True


@dataclass(frozen=True)
class BlockFactorization:
    instance: PcpInstance
    blocks: tuple[Block, ...]


def _scan_block(x: Sequence[GammaGenerator], y: Sequence[GammaGenerator], i: int, j: int):
    """Consume one block with the u-chain on side x (from i) and the v-chain on side y (from j).

    Returns (x_end, y_end, kind, indices).
    """

    def at(seq, pos):
        if pos >= len(seq):
            raise MalformedRelation("relation ends inside a block")
        return seq[pos].tag

    first = at(x, i)
    if at(y, j) != EPS2 or first.kind not in ("u", "ubar"):
        raise MalformedRelation("block must open with (ε,2) against a u-generator")
    indices = []
    j += 1
    while True:
        head = at(x, i)
        partner = at(y, j)
        if partner.index != head.index or partner.kind not in ("v", "vbar"):
            raise MalformedRelation(f"{head} cannot be matched by {partner}")
        indices.append(head.index)
        if head.kind == "ubar":
            if partner.kind != "vbar":
                raise MalformedRelation(f"letter 3 of {head} is unmatched")
            return i + 1, j + 1, "2-3", tuple(indices)
        if partner.kind == "vbar":
            # the 3 ending the v-side would have to open the next u-side generator
            raise MalformedRelation(f"letter 3 of {partner} is unmatched")
        i, j = i + 1, j + 1
        nxt = at(x, i)
        if nxt == EPS2:
            return i + 1, j, "2-2", tuple(indices)
        if nxt.kind not in ("u", "ubar"):
            raise MalformedRelation(f"{nxt} cannot continue a block")


def factor_blocks(inst: PcpInstance, rel: GammaRelation) -> BlockFactorization:
    """Split a verified relation into matched blocks by scanning both sides left to right."""
    P, Q = rel.p, rel.q
    i = j = 0
    blocks = []
    balanced = True
    while i < len(P) or j < len(Q):
        if i < len(P) and j < len(Q) and P[i] == Q[j] and (balanced or P[i].tag == EPS2):
            kind = "common" if balanced else "2-2"
            blocks.append(Block((P[i],), (Q[j],), kind, ()))
            i, j = i + 1, j + 1
            continue
        if j < len(Q) and Q[j].tag == EPS2:
            i2, j2, kind, idx = _scan_block(P, Q, i, j)
            blocks.append(Block(P[i:i2], Q[j:j2], kind, idx, True))
        elif i < len(P) and P[i].tag == EPS2:
            j2, i2, kind, idx = _scan_block(Q, P, j, i)
            blocks.append(Block(P[i:i2], Q[j:j2], kind, idx, False))
        else:
            raise MalformedRelation("neither side opens the next block with (ε,2)")
        i, j = i2, j2
        balanced = product(P[:i]) == product(Q[:j])
    return BlockFactorization(inst, tuple(blocks))


def _block_pcp_indices(fact: BlockFactorization) -> list[int]:
    closure = symmetric_closure(fact.instance)
    out = []
    for b in fact.blocks:
        for j in b.indices:
            out.append(j if b.u_on_p else swap_index(closure, j))
    return out


def extract_pcp_solution(fact: BlockFactorization) -> PcpSolution:
    """The index sequence read off the blocks, in the symmetric closure's indexing.

    Blocks whose u-chain sits on the Q side contribute the swapped pair.
    """
    return PcpSolution(tuple(_block_pcp_indices(fact)))


def check_factorization(fact: BlockFactorization) -> bool:
    """Matched second coordinates per block and prefix-comparable first coordinates at every boundary."""
    inst = fact.instance
    p_first, q_first = [], []
    for b in fact.blocks:
        bp, bq = product(b.p), product(b.q)
        if bp.J != bq.J:
            return False
        if b.kind != "common":
            u_side, v_side = (bp, bq) if b.u_on_p else (bq, bp)
            us = [s for j in b.indices for s in inst.pairs[j][0].symbols]
            vs = [s for j in b.indices for s in inst.pairs[j][1].symbols]
            if list(u_side.w.symbols) != us or list(v_side.w.symbols) != vs:
                return False
            last = bp.J.symbols[-1] if bp.J.symbols else None
            if b.kind != {2: "2-2", 3: "2-3"}.get(last):
                return False
        p_first += bp.w.symbols
        q_first += bq.w.symbols
        n = min(len(p_first), len(q_first))
        if p_first[:n] != q_first[:n]:
            return False
    return p_first == q_first


def find_relation(gens: Sequence[GammaGenerator], limits: SearchLimits | None = None,
                  max_length: int | None = None) -> SearchOutcome:
    """Search for a canonical-minimal relation among ``gens``.

    A search state records, per coordinate, which side is ahead and by what
    suffix, plus the last generator on each side.  The side with the shorter
    total product is always extended next (P on ties), so each relation is
    reached along exactly one move sequence.  States are expanded in order of
    product length, ties broken lexicographically on the move sequence
    (generator positions in ``gens``).  ``limits.max_tiles`` bounds |P|+|Q|,
    ``limits.max_overhang`` each coordinate's overhang, and ``max_length``
    the total length of the common product.
    """
    limits = limits or SearchLimits()
    gens = list(gens)
    raw = [(g.pair.w.symbols, g.pair.J.symbols) for g in gens]
    weight = [len(w) + len(J) for w, J in raw]

    def diff(side, over, word):
        # one coordinate's overhang after appending ``word`` on ``side`` (+1 = P, -1 = Q)
        s, o = over
        if s == 0 or s == side:
            return (side, o + word) if o or word else (0, ())
        n = len(word)
        if o[:n] == word:
            rest = o[n:]
            return (s, rest) if rest else (0, ())
        if word[:len(o)] == o:
            rest = word[len(o):]
            return (side, rest) if rest else (0, ())
        return None

    def push_move(state, g, side):
        c1, c2, _, _ = state
        w, J = raw[g]
        n1 = diff(side, c1, w)
        if n1 is None:
            return None
        n2 = diff(side, c2, J)
        if n2 is None:
            return None
        last_p, last_q = state[2], state[3]
        if side == 1:
            last_p = g
        else:
            last_q = g
        return (n1, n2, last_p, last_q)

    def lead(state):
        # total length of P minus total length of Q
        return sum(s * len(o) for s, o in state[:2])

    heap = []
    truncated = False
    start = ((0, ()), (0, ()), None, None)
    for a in range(len(gens)):
        for b in range(len(gens)):
            if a == b:
                continue
            s = push_move(start, a, 1)
            s = s and push_move(s, b, -1)
            if s is not None:
                heapq.heappush(heap, (max(weight[a], weight[b]), (a, b), s, (a,), (b,)))

    closed = set()
    while heap:
        cost, moves, state, P, Q = heapq.heappop(heap)
        if state in closed:
            continue
        if not state[0][1] and not state[1][1]:
            if P[-1] != Q[-1]:
                rel = GammaRelation(tuple(gens[i] for i in P), tuple(gens[i] for i in Q))
                return SearchOutcome(SOLUTION, rel, states=len(closed))
            continue
        if len(closed) >= limits.max_states:
            truncated = True
            break
        closed.add(state)
        side = 1 if lead(state) <= 0 else -1
        for g in range(len(gens)):
            nxt = push_move(state, g, side)
            if nxt is None:
                continue
            if any(len(o) > limits.max_overhang for _, o in nxt[:2]):
                truncated = True
                continue
            if len(P) + len(Q) + 1 > limits.max_tiles:
                truncated = True
                continue
            np_, nq = (P + (g,), Q) if side == 1 else (P, Q + (g,))
            ncost = max(sum(weight[i] for i in np_), sum(weight[i] for i in nq))
            if max_length is not None and ncost > max_length:
                truncated = True
                continue
            if nxt not in closed:
                heapq.heappush(heap, (ncost, moves + (g,), nxt, np_, nq))
    if not truncated and not heap:
        return SearchOutcome(UNSOLVABLE, reason=STATE_EXHAUSTED, states=len(closed))
    return SearchOutcome(EXHAUSTED, states=len(closed))
