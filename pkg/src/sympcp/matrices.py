"""3x3 natural-number matrices encoding string pairs in {0,1}* x {0,1,2,3}*.

A pair (w, J) is represented by

    [[2^|w|, beta(w), 0],
     [0,     1,       0],
     [0,     phi4(J), 4^|J|]]

and matrix multiplication concatenates pairs coordinatewise.  Both
valuations read the leftmost digit as least significant; with that reading
the product identities hold exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .words import BINARY, QUATERNARY, PcpInstance, Word, code_length


class NotInImage(ValueError):
    """The matrix is not the image of any string pair."""


def _valuation(digits: Sequence[int], base: int) -> int:
    total = 0
    for d in reversed(digits):
        total = total * base + d
    return total


def beta(w: Word) -> int:
    if w.alphabet != BINARY:
        raise ValueError("beta expects a binary word")
    return _valuation(w.symbols, 2)


def phi4(J: Word) -> int:
    if J.alphabet not in (QUATERNARY, BINARY):
        raise ValueError("phi4 expects a word over {0,1,2,3}")
    return _valuation(J.symbols, 4)


def _digits(value: int, base: int, length: int) -> tuple[int, ...]:
    out = []
    for _ in range(length):
        value, d = divmod(value, base)
        out.append(d)
    return tuple(out)


@dataclass(frozen=True)
class Mat3:
    rows: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("Mat3 needs a 3x3 grid")
        if any(x < 0 for r in rows for x in r):
            raise ValueError("entries must be natural numbers")
        object.__setattr__(self, "rows", rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: "Mat3") -> "Mat3":
        return mat_mul(self, other)

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ",".join(map(str, r)) + "]" for r in self.rows) + "]"


IDENTITY = Mat3(((1, 0, 0), (0, 1, 0), (0, 0, 1)))
L = Mat3(((1, 0, 0), (0, 1, 0), (0, 2, 4)))


def mat_mul(a: Mat3, b: Mat3) -> Mat3:
    A, B = a.rows, b.rows
    return Mat3(tuple(
        tuple(A[i][0] * B[0][j] + A[i][1] * B[1][j] + A[i][2] * B[2][j] for j in range(3))
        for i in range(3)
    ))


def mat_product(mats: Sequence[Mat3]) -> Mat3:
    out = IDENTITY
    for m in mats:
        out = mat_mul(out, m)
    return out


@dataclass(frozen=True)
class StringPair:
    w: Word = Word(BINARY)
    J: Word = Word(QUATERNARY)

    def __post_init__(self):
        if self.w.alphabet != BINARY:
            raise ValueError("first coordinate must be binary")
        J = self.J
        if J.alphabet == BINARY:
            J = Word(QUATERNARY, J.symbols)
        if J.alphabet != QUATERNARY:
            raise ValueError("second coordinate must be over {0,1,2,3}")
        object.__setattr__(self, "J", J)

    @classmethod
    def parse(cls, w: str, J: str) -> "StringPair":
        return cls(BINARY.word(w), QUATERNARY.word(J))

    def __add__(self, other: "StringPair") -> "StringPair":
        return StringPair(self.w + other.w, self.J + other.J)

    def __len__(self) -> int:
        return len(self.w) + len(self.J)

    def __str__(self) -> str:
        return f"({self.w},{self.J})"


def pair_product(pairs: Sequence[StringPair]) -> StringPair:
    out = StringPair()
    for p in pairs:
        out = out + p
    return out


def pair_to_matrix(p: StringPair) -> Mat3:
    return Mat3((
        (2 ** len(p.w), beta(p.w), 0),
        (0, 1, 0),
        (0, phi4(p.J), 4 ** len(p.J)),
    ))


def _log_exact(value: int, bits: int) -> int | None:
    # exponent e with value == 2**(bits*e), else None
    if value <= 0 or value & (value - 1):
        return None
    e2 = value.bit_length() - 1
    return e2 // bits if e2 % bits == 0 else None


def matrix_to_pair(m: Mat3) -> StringPair:
    r = m.rows
    if (r[0][2], r[1][0], r[1][1], r[1][2], r[2][0]) != (0, 0, 1, 0, 0):
        raise NotInImage(f"zero/one pattern violated in {m}")
    n_w = _log_exact(r[0][0], 1)
    if n_w is None:
        raise NotInImage(f"entry (1,1) = {r[0][0]} is not a power of 2")
    n_J = _log_exact(r[2][2], 2)
    if n_J is None:
        raise NotInImage(f"entry (3,3) = {r[2][2]} is not a power of 4")
    if r[0][1] >= r[0][0]:
        raise NotInImage(f"entry (1,2) = {r[0][1]} needs more than {n_w} binary digits")
    if r[2][1] >= r[2][2]:
        raise NotInImage(f"entry (3,2) = {r[2][1]} needs more than {n_J} base-4 digits")
    return StringPair(Word(BINARY, _digits(r[0][1], 2, n_w)), Word(QUATERNARY, _digits(r[2][1], 4, n_J)))


@dataclass(frozen=True)
class EncodingParams:
    k: int
    h: int
    index_codes: tuple[Word, ...]

    @classmethod
    def for_pairs(cls, k: int) -> "EncodingParams":
        if k < 1:
            raise ValueError("need at least one pair")
        h = max(code_length(k), 1)
        codes = tuple(BINARY.word(format(i, f"0{h}b")) for i in range(k))
        return cls(k, h, codes)


def index_code(i: int, params: EncodingParams) -> Word:
    if not 0 <= i < params.k:
        raise IndexError(f"pair index {i} out of range for k={params.k}")
    return params.index_codes[i]


class Tag(NamedTuple):
    """Names one generator: eps2, or u/ubar/v/vbar with a pair index."""

    kind: str
    index: int | None = None

    def __str__(self) -> str:
        return self.kind if self.index is None else f"{self.kind}:{self.index}"

    @classmethod
    def parse(cls, text: str) -> "Tag":
        text = text.strip().lower()
        if text == "eps2":
            return EPS2
        kind, _, idx = text.partition(":")
        if kind not in ("u", "ubar", "v", "vbar") or not idx.isdigit():
            raise ValueError(f"bad generator tag {text!r}")
        return cls(kind, int(idx))


EPS2 = Tag("eps2")
KINDS = ("u", "ubar", "v", "vbar")


def _binary_instance(inst: PcpInstance) -> None:
    if inst.alphabet != BINARY:
        raise ValueError("matrix encoding needs an instance over {0,1}")


def table_pairs(inst: PcpInstance) -> dict[Tag, StringPair]:
    """Generator tag -> encoded string pair, in canonical order (eps2, then u, ubar, v, vbar per pair)."""
    _binary_instance(inst)
    params = EncodingParams.for_pairs(inst.k)
    two, three = QUATERNARY.word("2"), QUATERNARY.word("3")
    out = {EPS2: StringPair(J=two)}
    for i, (u, v) in enumerate(inst.pairs):
        code = Word(QUATERNARY, params.index_codes[i].symbols)
        out[Tag("u", i)] = StringPair(u, two + code)
        out[Tag("ubar", i)] = StringPair(u, two + code + three)
        out[Tag("v", i)] = StringPair(v, code + two)
        out[Tag("vbar", i)] = StringPair(v, code + three)
    return out


@dataclass(frozen=True)
class EncodedMatrices:
    params: EncodingParams
    L: Mat3
    U: tuple[Mat3, ...]
    Ubar: tuple[Mat3, ...]
    V: tuple[Mat3, ...]
    Vbar: tuple[Mat3, ...]
    _by_tag: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        table = {EPS2: self.L}
        for i in range(self.params.k):
            table[Tag("u", i)] = self.U[i]
            table[Tag("ubar", i)] = self.Ubar[i]
            table[Tag("v", i)] = self.V[i]
            table[Tag("vbar", i)] = self.Vbar[i]
        object.__setattr__(self, "_by_tag", table)

    def by_tag(self, tag: Tag) -> Mat3:
        try:
            return self._by_tag[tag]
        except KeyError:
            raise ValueError(f"no matrix for generator {tag}") from None

    def items(self):
        return self._by_tag.items()


def build_matrices(inst: PcpInstance) -> EncodedMatrices:
    _binary_instance(inst)
    params = EncodingParams.for_pairs(inst.k)
    h = params.h
    U, Ubar, V, Vbar = [], [], [], []
    for i, (u, v) in enumerate(inst.pairs):
        c = phi4(params.index_codes[i])
        top_u = (2 ** len(u), beta(u), 0)
        top_v = (2 ** len(v), beta(v), 0)
        mid = (0, 1, 0)
        U.append(Mat3((top_u, mid, (0, 2 + c * 4, 4 ** (h + 1)))))
        Ubar.append(Mat3((top_u, mid, (0, 2 + c * 4 + 3 * 4 ** (h + 1), 4 ** (h + 2)))))
        V.append(Mat3((top_v, mid, (0, c + 2 * 4 ** h, 4 ** (h + 1)))))
        Vbar.append(Mat3((top_v, mid, (0, c + 3 * 4 ** h, 4 ** (h + 1)))))
    return EncodedMatrices(params, L, tuple(U), tuple(Ubar), tuple(V), tuple(Vbar))


@dataclass
class EmbeddingReport:
    trials: int
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_embedding(inst: PcpInstance, trials: int = 200, max_len: int = 8, seed: int = 0) -> EmbeddingReport:
    """Multiply random generator sequences and check the product decodes to the concatenated pairs."""
    mats = build_matrices(inst)
    pairs = table_pairs(inst)
    tags = list(pairs)
    rng = random.Random(seed)
    report = EmbeddingReport(trials)
    for _ in range(trials):
        seq = [rng.choice(tags) for _ in range(rng.randint(1, max_len))]
        expected = pair_product([pairs[t] for t in seq])
        try:
            got = matrix_to_pair(mat_product([mats.by_tag(t) for t in seq]))
        except NotInImage:
            got = None
        if got != expected:
            report.failures.append([str(t) for t in seq])
    return report
