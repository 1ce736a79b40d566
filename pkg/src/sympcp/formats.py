"""JSON readers and writers for instances, presentations, derivations, matrices and relations.

Words over single-character alphabets are written as plain strings and
otherwise as token lists; readers accept either.  Matrix entries are
decimal strings because they outgrow 64-bit integers quickly.
"""

from __future__ import annotations

import json
from pathlib import Path

from .floyd import Derivation, Presentation
from .freeness import BlockFactorization, GammaRelation, generator_lookup
from .matrices import Mat3, StringPair, Tag
from .search import SearchOutcome
from .words import Alphabet, PcpInstance, Word


def load(path) -> dict:
    return json.loads(Path(path).read_text())


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def word_to_json(w: Word):
    if w.alphabet.single_char:
        return "".join(w.tokens)
    return w.tokens


def word_from_json(alphabet: Alphabet, obj) -> Word:
    if isinstance(obj, str):
        return alphabet.word(obj)
    if isinstance(obj, list):
        return alphabet.word([str(t) for t in obj])
    raise ValueError(f"a word is a string or a list of tokens, got {obj!r}")


def instance_to_json(inst: PcpInstance) -> dict:
    return {
        "alphabet": list(inst.alphabet.symbols),
        "pairs": [[word_to_json(u), word_to_json(v)] for u, v in inst.pairs],
    }


def instance_from_json(obj: dict) -> PcpInstance:
    alphabet = Alphabet(tuple(str(s) for s in obj["alphabet"]))
    pairs = []
    for pair in obj["pairs"]:
        if len(pair) != 2:
            raise ValueError(f"a pair has two words, got {pair!r}")
        pairs.append((word_from_json(alphabet, pair[0]), word_from_json(alphabet, pair[1])))
    return PcpInstance(alphabet, tuple(pairs))


def presentation_to_json(pres: Presentation) -> dict:
    return {
        "letters": list(pres.letters.symbols),
        "relations": [[word_to_json(l), word_to_json(r)] for l, r in pres.relations],
    }


def presentation_from_json(obj: dict) -> Presentation:
    letters = Alphabet(tuple(str(s) for s in obj["letters"]))
    rels = tuple((word_from_json(letters, l), word_from_json(letters, r)) for l, r in obj.get("relations", []))
    return Presentation(letters, rels)


def derivation_to_json(d: Derivation) -> dict:
    return {
        "steps": [word_to_json(w) for w in d.steps],
        "witnesses": [None if w is None else list(w) for w in d.witnesses],
    }


def derivation_from_json(pres: Presentation, obj: dict) -> Derivation:
    steps = tuple(word_from_json(pres.letters, w) for w in obj["steps"])
    if obj.get("witnesses") is None:
        return Derivation.infer(pres, steps)
    return Derivation(steps, tuple(obj["witnesses"]))


def matrix_to_json(m: Mat3) -> dict:
    return {"rows": [[str(x) for x in r] for r in m.rows]}


def matrix_from_json(obj: dict) -> Mat3:
    return Mat3(tuple(tuple(int(x) for x in r) for r in obj["rows"]))


def pair_to_json(p: StringPair) -> dict:
    return {"w": "".join(p.w.tokens), "J": "".join(p.J.tokens)}


def relation_to_json(rel: GammaRelation) -> dict:
    return {"p": [str(g.tag) for g in rel.p], "q": [str(g.tag) for g in rel.q]}


def relation_from_json(inst: PcpInstance, obj: dict) -> GammaRelation:
    gens = generator_lookup(inst)

    def side(tags):
        out = []
        for t in tags:
            tag = Tag.parse(t)
            if tag not in gens:
                raise ValueError(f"generator {tag} does not exist for a {inst.k}-pair instance")
            out.append(gens[tag])
        return tuple(out)

    return GammaRelation(side(obj["p"]), side(obj["q"]))


def factorization_to_json(fact: BlockFactorization) -> dict:
    return {
        "blocks": [
            {
                "kind": b.kind,
                "indices": list(b.indices),
                "u_side": "p" if b.u_on_p else "q",
                "p": [str(g.tag) for g in b.p],
                "q": [str(g.tag) for g in b.q],
            }
            for b in fact.blocks
        ]
    }


def outcome_to_json(outcome: SearchOutcome) -> dict:
    out = {"outcome": outcome.status, "reason": outcome.reason, "states": outcome.states}
    w = outcome.witness
    if isinstance(w, GammaRelation):
        out.update(relation_to_json(w))
    else:
        out["indices"] = list(w.indices) if w is not None else []
    return out
