"""Floyd's reduction from semigroup word problems to (symmetric) PCP.

The PCP alphabet is {<, >, o, o~} plus the letters B and their overlined
copies; the overline of a token is rendered by a trailing ``~``.  A
solution spells  < x1 o ~x2 o~ x3 o ... o~ xn >  in both coordinates, where
consecutive blocks are one-step rewrites.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .words import Alphabet, PcpInstance, PcpSolution, Word, check_solution

LEFT, RIGHT, RING, BAR = "<", ">", "o", "~"
RESERVED = {LEFT, RIGHT, RING}

Witness = Optional[tuple[int, int]]


class MalformedSolution(ValueError):
    pass


@dataclass(frozen=True)
class Presentation:
    """A finite semigroup presentation <B | R>, with R closed under swapping."""

    letters: Alphabet
    relations: tuple[tuple[Word, Word], ...] = ()
    _lookup: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        for b in self.letters.symbols:
            if b in RESERVED or b.endswith(BAR):
                raise ValueError(f"letter {b!r} clashes with the reduction's reserved tokens")
        rels = []
        for lhs, rhs in self.relations:
            if lhs.alphabet != self.letters or rhs.alphabet != self.letters:
                raise ValueError("relation is not over the presentation letters")
            if not lhs or not rhs:
                raise ValueError("relation sides must be non-empty words")
            if lhs == rhs:
                raise ValueError(f"trivial relation {lhs} = {rhs}")
            if (lhs, rhs) not in rels:
                rels.append((lhs, rhs))
        rels += [(r, l) for l, r in rels if (r, l) not in rels]
        object.__setattr__(self, "relations", tuple(rels))
        object.__setattr__(self, "_lookup", {rel: i for i, rel in enumerate(rels)})

    @classmethod
    def parse(cls, letters: Sequence[str], relations: Sequence[tuple] = ()) -> "Presentation":
        alphabet = Alphabet(tuple(letters))
        return cls(alphabet, tuple((alphabet.word(l), alphabet.word(r)) for l, r in relations))

    def word(self, spec) -> Word:
        return self.letters.word(spec)

    def relation_index(self, lhs: Word, rhs: Word) -> int | None:
        return self._lookup.get((lhs, rhs))


@dataclass(frozen=True)
class Derivation:
    """Words x_1..x_n with, per step, (position, relation index) or None for a copy step."""

    steps: tuple[Word, ...]
    witnesses: tuple[Witness, ...] = ()

    def __post_init__(self):
        steps = tuple(self.steps)
        if not steps:
            raise ValueError("a derivation has at least one word")
        witnesses = tuple(None if w is None else (int(w[0]), int(w[1])) for w in self.witnesses)
        if len(witnesses) != len(steps) - 1:
            raise ValueError("need exactly one witness per step")
        object.__setattr__(self, "steps", steps)
        object.__setattr__(self, "witnesses", witnesses)

    @classmethod
    def infer(cls, pres: Presentation, steps: Sequence[Word]) -> "Derivation":
        """Attach witnesses by locating a single rewrite between each pair of consecutive words."""
        witnesses = []
        for a, b in zip(steps, steps[1:]):
            if a == b:
                witnesses.append(None)
                continue
            for w in _rewrites(pres, a):
                if w[0] == b:
                    witnesses.append(w[1])
                    break
            else:
                raise ValueError(f"{b} is not a one-step rewrite of {a}")
        return cls(tuple(steps), tuple(witnesses))

    @property
    def source(self) -> Word:
        return self.steps[0]

    @property
    def target(self) -> Word:
        return self.steps[-1]


def _rewrites(pres: Presentation, word: Word):
    s = word.symbols
    for r, (lhs, rhs) in enumerate(pres.relations):
        n = len(lhs)
        for pos in range(len(s) - n + 1):
            if s[pos:pos + n] == lhs.symbols:
                yield Word(word.alphabet, s[:pos] + rhs.symbols + s[pos + n:]), (pos, r)


def apply_witness(pres: Presentation, word: Word, witness: Witness) -> Word:
    if witness is None:
        return word
    pos, r = witness
    if not 0 <= r < len(pres.relations):
        raise ValueError(f"relation index {r} out of range")
    lhs, rhs = pres.relations[r]
    if not 0 <= pos <= len(word) - len(lhs):
        raise ValueError(f"position {pos} out of range for {word}")
    s = word.symbols
    if s[pos:pos + len(lhs)] != lhs.symbols:
        return None
    return Word(word.alphabet, s[:pos] + rhs.symbols + s[pos + len(lhs):])


def check_derivation(pres: Presentation, d: Derivation) -> bool:
    for word in d.steps:
        if word.alphabet != pres.letters or not word:
            return False
    for a, b, w in zip(d.steps, d.steps[1:], d.witnesses):
        if apply_witness(pres, a, w) != b:
            return False
    return True


def search_derivation(pres: Presentation, x: Word, y: Word, max_length: int, max_depth: int) -> Derivation | None:
    """Breadth-first search for a shortest derivation, over words of bounded length."""
    parent = {x: None}
    queue = deque([(x, 0)])
    while queue:
        word, depth = queue.popleft()
        if word == y:
            chain = []
            while word is not None:
                chain.append(word)
                word = parent[word] and parent[word][0]
            return Derivation.infer(pres, chain[::-1])
        if depth == max_depth:
            continue
        for nxt, w in _rewrites(pres, word):
            if len(nxt) <= max_length and nxt not in parent:
                parent[nxt] = (word, w)
                queue.append((nxt, depth + 1))
    return None


@dataclass(frozen=True)
class FloydAlphabet:
    letters: Alphabet
    alphabet: Alphabet

    @classmethod
    def of(cls, letters: Alphabet) -> "FloydAlphabet":
        plain = list(letters.symbols)
        return cls(letters, Alphabet((LEFT, RIGHT, RING, RING + BAR) + tuple(plain) + tuple(b + BAR for b in plain)))

    def bar(self, token: str) -> str:
        if token.endswith(BAR):
            return token[: -len(BAR)]
        if token == RING or token in self.letters:
            return token + BAR
        raise ValueError(f"overline undefined on {token!r}")

    def lift(self, word: Word, overlined: bool = False) -> list[str]:
        tokens = word.tokens
        return [self.bar(t) for t in tokens] if overlined else tokens

    def word(self, tokens: Sequence[str]) -> Word:
        return self.alphabet.word(list(tokens))


def _boundary_pairs(fa: FloydAlphabet, x: Word, y: Word):
    start = (fa.word([LEFT, *fa.lift(x), RING]), fa.word([LEFT]))
    end = (fa.word([RIGHT]), fa.word([RING + BAR, *fa.lift(y), RIGHT]))
    return start, end


def build_pcp(pres: Presentation, x: Word, y: Word) -> PcpInstance:
    x, y = pres.word(x), pres.word(y)
    if not x or not y:
        raise ValueError("x and y must be non-empty words")
    fa = FloydAlphabet.of(pres.letters)
    copy = list(pres.letters.symbols) + [RING]
    pairs = [(fa.word([b]), fa.word([fa.bar(b)])) for b in copy]
    pairs += [(fa.word([fa.bar(b)]), fa.word([b])) for b in copy]
    pairs += [(fa.word(fa.lift(u)), fa.word(fa.lift(v, True))) for u, v in pres.relations]
    pairs += [(fa.word(fa.lift(u, True)), fa.word(fa.lift(v))) for u, v in pres.relations]
    pairs += list(_boundary_pairs(fa, x, y))
    return PcpInstance(fa.alphabet, tuple(pairs))


def build_sympcp(pres: Presentation, x: Word, y: Word) -> PcpInstance:
    base = build_pcp(pres, x, y)
    start, end = base.pairs[-2], base.pairs[-1]
    return PcpInstance(base.alphabet, base.pairs + ((start[1], start[0]), (end[1], end[0])))


def pad_derivation(d: Derivation) -> Derivation:
    """Append copy steps until the number of words is odd and at least 3."""
    steps, witnesses = list(d.steps), list(d.witnesses)
    while len(steps) < 3 or len(steps) % 2 == 0:
        steps.append(steps[-1])
        witnesses.append(None)
    return Derivation(tuple(steps), tuple(witnesses))


def derivation_to_solution(pres: Presentation, d: Derivation) -> PcpSolution:
    """Translate a derivation x_1 -> ... -> x_n into a solution of build_sympcp(pres, x_1, x_n)."""
    if not check_derivation(pres, d):
        raise ValueError("invalid derivation")
    d = pad_derivation(d)
    x, y = d.source, d.target
    inst = build_sympcp(pres, x, y)
    fa = FloydAlphabet.of(pres.letters)
    lookup = {(tuple(u.tokens), tuple(v.tokens)): i for i, (u, v) in enumerate(inst.pairs)}

    def tile(top, bottom) -> int:
        return lookup[(tuple(top), tuple(bottom))]

    indices = [tile([LEFT, *fa.lift(x), RING], [LEFT])]
    n = len(d.steps)
    for t in range(n - 1):
        old, new, witness = d.steps[t], d.steps[t + 1], d.witnesses[t]
        # odd steps (t even here) write the new word overlined on top
        new_bar = t % 2 == 0
        pieces = []
        if witness is None:
            pieces = [([b], [b]) for b in old.tokens]
        else:
            pos, r = witness
            lhs, rhs = pres.relations[r]
            toks = old.tokens
            pieces += [([b], [b]) for b in toks[:pos]]
            pieces.append((rhs.tokens, lhs.tokens))
            pieces += [([b], [b]) for b in toks[pos + len(lhs):]]
        for top, bottom in pieces:
            top = [fa.bar(b) for b in top] if new_bar else top
            bottom = bottom if new_bar else [fa.bar(b) for b in bottom]
            indices.append(tile(top, bottom))
        if t == n - 2:
            indices.append(tile([RIGHT], [RING + BAR, *fa.lift(y), RIGHT]))
        elif new_bar:
            indices.append(tile([RING + BAR], [RING]))
        else:
            indices.append(tile([RING], [RING + BAR]))
    sol = PcpSolution(tuple(indices))
    assert check_solution(inst, sol)
    return sol


def solution_to_derivation(pres: Presentation, x: Word, y: Word, sol: PcpSolution) -> Derivation:
    """Parse a solution of build_sympcp(pres, x, y) back into a derivation from x to y.

    Only the shortest balanced prefix of the solution is read.  A solution
    opening with (<, <xo) is first mirrored by swapping coordinates of every
    tile.  Segments between ring separators alternate between reading a
    plain word and writing an overlined one and vice versa; each segment is
    one parallel rewrite, unfolded here into single-relation steps.
    """
    x, y = pres.word(x), pres.word(y)
    inst = build_sympcp(pres, x, y)
    if not isinstance(sol, PcpSolution):
        sol = PcpSolution(tuple(sol))
    if not check_solution(inst, sol):
        raise MalformedSolution("not a solution of the symmetric reduction instance")
    fa = FloydAlphabet.of(pres.letters)
    tiles = [(inst.pairs[j][0].tokens, inst.pairs[j][1].tokens) for j in sol]
    start = ([LEFT, *fa.lift(x), RING], [LEFT])
    if tiles[0] == (start[1], start[0]):
        tiles = [(b, a) for a, b in tiles]
    elif tiles[0] != start:
        raise MalformedSolution("solution does not open with a boundary pair")

    top = bottom = 0
    for m, (a, b) in enumerate(tiles):
        top, bottom = top + len(a), bottom + len(b)
        if top == bottom:
            break
    tiles = tiles[1:m + 1]

    closing = ([RIGHT], [RING + BAR, *fa.lift(y), RIGHT])
    separators = {True: ([RING + BAR], [RING]), False: ([RING], [RING + BAR])}
    letters = set(pres.letters.symbols)
    steps, witnesses = [x], []
    writes_bar, segment = True, []
    for pos, t in enumerate(tiles):
        if t == separators[writes_bar] or t == closing:
            if t == closing and (writes_bar or pos != len(tiles) - 1):
                raise MalformedSolution("closing pair in an unexpected position")
            _unfold_segment(pres, fa, segment, writes_bar, steps, witnesses)
            writes_bar, segment = not writes_bar, []
            continue
        a, b = t
        new, old = (a, b)
        if writes_bar:
            ok = all(s.endswith(BAR) and fa.bar(s) in letters for s in new) and all(s in letters for s in old)
        else:
            ok = all(s in letters for s in new) and all(s.endswith(BAR) and fa.bar(s) in letters for s in old)
        if not ok or not new or not old:
            raise MalformedSolution(f"unexpected tile {t} inside a segment")
        segment.append(t)
    if segment or steps[-1] != y:
        raise MalformedSolution("solution does not end by closing on y")
    d = Derivation(tuple(steps), tuple(witnesses))
    assert check_derivation(pres, d)
    return d


def _unfold_segment(pres, fa, segment, writes_bar, steps, witnesses):
    unbar = (lambda ts: [fa.bar(t) for t in ts])
    old_tokens, new_tokens, rewrites = [], [], []
    for new, old in segment:
        if writes_bar:
            new = unbar(new)
        else:
            old = unbar(old)
        if new != old:
            rewrites.append((len(old_tokens), pres.word(old), pres.word(new)))
        old_tokens += old
        new_tokens += new
    current = steps[-1]
    if pres.word(old_tokens) != current:
        raise MalformedSolution(f"segment reads {old_tokens}, expected {current}")
    if not rewrites:
        steps.append(current)
        witnesses.append(None)
        return
    shift = 0
    for offset, lhs, rhs in rewrites:
        r = pres.relation_index(lhs, rhs)
        if r is None:
            raise MalformedSolution(f"{lhs} -> {rhs} is not a relation")
        witness = (offset + shift, r)
        current = apply_witness(pres, current, witness)
        steps.append(current)
        witnesses.append(witness)
        shift += len(rhs) - len(lhs)
