"""Alphabets, words, PCP instances and the symbol recodings shared by every module."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

EPSILON = "ε"


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        symbols = tuple(self.symbols)
        if not symbols:
            raise ValueError("alphabet must contain at least one symbol")
        for s in symbols:
            if not isinstance(s, str) or not s or any(c.isspace() for c in s):
                raise ValueError(f"bad symbol token {s!r}")
        if len(set(symbols)) != len(symbols):
            raise ValueError(f"duplicate symbols in alphabet {symbols}")
        object.__setattr__(self, "symbols", symbols)
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(symbols)})

    def __len__(self) -> int:
        return len(self.symbols)

    def __contains__(self, token) -> bool:
        return token in self._index

    def index(self, token: str) -> int:
        try:
            return self._index[token]
        except KeyError:
            raise ValueError(f"symbol {token!r} not in alphabet {self.symbols}") from None

    @property
    def single_char(self) -> bool:
        return all(len(s) == 1 for s in self.symbols)

    def tokenize(self, text: str) -> list[str]:
        """Split text into tokens: whitespace-separated, or greedy longest match."""
        text = text.strip()
        if text in ("", EPSILON) and EPSILON not in self._index:
            return []
        if any(c.isspace() for c in text):
            return text.split()
        longest = max(len(s) for s in self.symbols)
        tokens, pos = [], 0
        while pos < len(text):
            for size in range(min(longest, len(text) - pos), 0, -1):
                if text[pos:pos + size] in self._index:
                    tokens.append(text[pos:pos + size])
                    pos += size
                    break
            else:
                raise ValueError(f"cannot tokenize {text!r} over {self.symbols}")
        return tokens

    def word(self, spec: Union[str, Sequence[str], "Word"] = ()) -> "Word":
        """Build a word from a string, a token list, or another word over this alphabet."""
        if isinstance(spec, Word):
            if spec.alphabet != self:
                raise ValueError("word belongs to a different alphabet")
            return spec
        tokens = self.tokenize(spec) if isinstance(spec, str) else list(spec)
        return Word(self, tuple(self.index(t) for t in tokens))


@dataclass(frozen=True, repr=False)
class Word:
    alphabet: Alphabet
    symbols: tuple[int, ...] = ()

    def __post_init__(self):
        symbols = tuple(self.symbols)
        n = len(self.alphabet)
        for s in symbols:
            if not 0 <= s < n:
                raise ValueError(f"symbol index {s} out of range for alphabet of size {n}")
        object.__setattr__(self, "symbols", symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.alphabet, self.symbols[item])
        return self.symbols[item]

    def __add__(self, other: "Word") -> "Word":
        return concat(self, other)

    @property
    def tokens(self) -> list[str]:
        return [self.alphabet.symbols[s] for s in self.symbols]

    def is_prefix_of(self, other: "Word") -> bool:
        _same_alphabet(self, other)
        return other.symbols[: len(self.symbols)] == self.symbols

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def __str__(self) -> str:
        if not self.symbols:
            return EPSILON
        sep = "" if self.alphabet.single_char else " "
        return sep.join(self.tokens)


BINARY = Alphabet(("0", "1"))
QUATERNARY = Alphabet(("0", "1", "2", "3"))


def _same_alphabet(u: Word, v: Word) -> None:
    if u.alphabet != v.alphabet:
        raise ValueError("words are over different alphabets")


def concat(u: Word, v: Word) -> Word:
    _same_alphabet(u, v)
    return Word(u.alphabet, u.symbols + v.symbols)


def prefix_comparable(u: Word, v: Word) -> bool:
    _same_alphabet(u, v)
    n = min(len(u), len(v))
    return u.symbols[:n] == v.symbols[:n]


@dataclass(frozen=True)
class PcpSolution:
    indices: tuple[int, ...]

    def __post_init__(self):
        indices = tuple(int(i) for i in self.indices)
        if not indices:
            raise ValueError("a PCP solution is a non-empty index sequence")
        if min(indices) < 0:
            raise ValueError("negative pair index")
        object.__setattr__(self, "indices", indices)

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.indices)) + ")"


@dataclass(frozen=True)
class PcpInstance:
    """An ordered list of distinct, non-trivial pairs (u_i, v_i) over one alphabet."""

    alphabet: Alphabet
    pairs: tuple[tuple[Word, Word], ...]

    def __post_init__(self):
        pairs = tuple((u, v) for u, v in self.pairs)
        if not pairs:
            raise ValueError("a PCP instance needs at least one pair")
        seen = set()
        for i, (u, v) in enumerate(pairs):
            if u.alphabet != self.alphabet or v.alphabet != self.alphabet:
                raise ValueError(f"pair {i} is not over the instance alphabet")
            if u == v:
                raise ValueError(f"pair {i} is trivial (u = v = {u})")
            if (u, v) in seen:
                raise ValueError(f"pair {i} ({u}, {v}) is duplicated")
            seen.add((u, v))
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def parse(cls, pairs: Iterable[tuple], alphabet: Union[Alphabet, Sequence[str]] = BINARY) -> "PcpInstance":
        if not isinstance(alphabet, Alphabet):
            alphabet = Alphabet(tuple(alphabet))
        return cls(alphabet, tuple((alphabet.word(u), alphabet.word(v)) for u, v in pairs))

    @property
    def k(self) -> int:
        return len(self.pairs)

    def index_of(self, u: Word, v: Word) -> int | None:
        for i, pair in enumerate(self.pairs):
            if pair == (u, v):
                return i
        return None

    def sides(self, sol: PcpSolution | Sequence[int]) -> tuple[Word, Word]:
        """The u-concatenation and v-concatenation along an index sequence."""
        top, bottom = [], []
        for j in sol:
            if not 0 <= j < self.k:
                raise IndexError(f"pair index {j} out of range for k={self.k}")
            top.extend(self.pairs[j][0].symbols)
            bottom.extend(self.pairs[j][1].symbols)
        return Word(self.alphabet, tuple(top)), Word(self.alphabet, tuple(bottom))

    def __str__(self) -> str:
        return "{" + ", ".join(f"({u},{v})" for u, v in self.pairs) + "}"


def check_solution(inst: PcpInstance, sol: PcpSolution | Sequence[int]) -> bool:
    if not isinstance(sol, PcpSolution):
        sol = PcpSolution(tuple(sol))
    top, bottom = inst.sides(sol)
    return top == bottom


def is_symmetric(inst: PcpInstance) -> bool:
    pairs = set(inst.pairs)
    return all((v, u) in pairs for u, v in inst.pairs)


def symmetric_closure(inst: PcpInstance) -> PcpInstance:
    present = set(inst.pairs)
    extra = [(v, u) for u, v in inst.pairs if (v, u) not in present]
    return PcpInstance(inst.alphabet, inst.pairs + tuple(extra))


def swap_index(inst: PcpInstance, i: int) -> int | None:
    """Index of the coordinate-swapped pair of pair i, if present."""
    u, v = inst.pairs[i]
    return inst.index_of(v, u)


def code_length(alphabet_size: int) -> int:
    # ceil(log2(n)) for n >= 2
    return (alphabet_size - 1).bit_length()


def binary_code(inst: PcpInstance) -> PcpInstance:
    """Recode every symbol as the fixed-width binary numeral of its table position."""
    n = len(inst.alphabet)
    if n < 2:
        raise ValueError("binary coding needs an alphabet of size at least 2")
    width = code_length(n)
    blocks = [tuple(int(b) for b in format(p, f"0{width}b")) for p in range(n)]

    def code(w: Word) -> Word:
        return Word(BINARY, tuple(bit for s in w.symbols for bit in blocks[s]))

    return PcpInstance(BINARY, tuple((code(u), code(v)) for u, v in inst.pairs))


_TWO_BITS = {0: (0, 0), 1: (0, 1), 2: (1, 0), 3: (1, 1)}


def recode_4_to_2(w: Word) -> Word:
    if w.alphabet != QUATERNARY:
        raise ValueError("expected a word over {0,1,2,3}")
    return Word(BINARY, tuple(b for d in w.symbols for b in _TWO_BITS[d]))
