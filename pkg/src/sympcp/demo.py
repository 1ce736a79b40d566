"""The {(00,0)} counter-example: relations exist although the PCP has no solution."""

from __future__ import annotations

from .freeness import (
    GammaRelation, build_gamma, check_factorization, extract_pcp_solution, factor_blocks,
    find_relation, generator_lookup, product, verify_relation,
)
from .matrices import Tag
from .search import SearchLimits, solve
from .words import PcpInstance, check_solution, symmetric_closure

COUNTEREXAMPLE = PcpInstance.parse([("00", "0")])

# the three relations displayed for <Γ> of {(00,0)}
EXAMPLE_RELATIONS = {
    "R1": (["u:0", "eps2", "eps2", "vbar:0"], ["eps2", "v:0", "ubar:0"]),
    "R2": (["u:0", "eps2", "eps2", "v:0"], ["eps2", "v:0", "u:0", "eps2"]),
    "R3": (["u:0", "ubar:0", "eps2", "v:0", "vbar:0"], ["eps2", "v:0", "vbar:0", "u:0", "ubar:0"]),
}


def example_relation(name: str, inst: PcpInstance = COUNTEREXAMPLE) -> GammaRelation:
    g = generator_lookup(inst)
    p, q = EXAMPLE_RELATIONS[name]
    return GammaRelation(tuple(g[Tag.parse(t)] for t in p), tuple(g[Tag.parse(t)] for t in q))


def counterexample_report(limits: SearchLimits | None = None, max_length: int = 12) -> dict:
    inst = COUNTEREXAMPLE
    closure = symmetric_closure(inst)
    gens = build_gamma(inst)
    report = {"instance": str(inst), "gamma": [str(g) for g in gens], "relations": {}}
    all_ok = True
    for name in EXAMPLE_RELATIONS:
        rel = example_relation(name)
        ok = verify_relation(gens, rel)
        sol = extract_pcp_solution(factor_blocks(inst, rel))
        report["relations"][name] = {
            "relation": str(rel),
            "product": str(product(rel.p)),
            "verified": ok,
            "solution": list(sol.indices),
            "solves_closure": check_solution(closure, sol),
        }
        all_ok &= ok and check_solution(closure, sol)

    outcome = solve(inst, limits)
    report["solve"] = {"outcome": outcome.status, "reason": outcome.reason}
    found = find_relation(gens, limits, max_length=max_length)
    report["find_relation"] = {"outcome": found.status}
    if found.found:
        fact = factor_blocks(inst, found.witness)
        sol = extract_pcp_solution(fact)
        report["find_relation"].update(
            relation=str(found.witness),
            verified=verify_relation(gens, found.witness),
            blocks=[b.kind for b in fact.blocks],
            well_formed=check_factorization(fact),
            solution=list(sol.indices),
            solves_closure=check_solution(closure, sol),
        )
        all_ok &= report["find_relation"]["verified"] and report["find_relation"]["solves_closure"]
    report["all_verified"] = bool(all_ok and not outcome.found and found.found)
    return report
