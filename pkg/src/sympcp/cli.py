"""Command-line front end.

Exit codes: 0 affirmative (found / verified), 1 negative (proved unsolvable,
verification failed), 2 usage or format error, 3 limits exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import formats
from .floyd import (
    MalformedSolution, Presentation, build_pcp, build_sympcp, check_derivation,
    derivation_to_solution, solution_to_derivation,
)
from .freeness import (
    MalformedRelation, build_gamma, build_gamma_reduced, check_factorization, extract_pcp_solution,
    factor_blocks, find_relation, matrix_relation_check, relation_from_solution,
    relation_from_solution_symmetric, verify_relation,
)
from .matrices import NotInImage, StringPair, build_matrices, matrix_to_pair, pair_to_matrix, verify_embedding
from .search import EXHAUSTED, SOLUTION, SearchLimits, enumerate_solutions, solve
from .words import (
    PcpInstance, PcpSolution, binary_code, check_solution, code_length, is_symmetric, symmetric_closure,
)

OK, NEGATIVE, USAGE, INDETERMINATE = 0, 1, 2, 3
DEFAULT_SEED = 20240101


class UsageError(Exception):
    pass


def _outcome_code(outcome) -> int:
    if outcome.status == SOLUTION:
        return OK
    return INDETERMINATE if outcome.status == EXHAUSTED else NEGATIVE


def _need(args, name):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"--{name.replace('_', '-')} is required for {args.command}")
    return value


def _instance(args) -> PcpInstance:
    return formats.instance_from_json(formats.load(_need(args, "input")))


def _presentation(args) -> Presentation:
    return formats.presentation_from_json(formats.load(_need(args, "input")))


def _limits(args, max_tiles=40) -> SearchLimits:
    def pick(value, default):
        return default if value is None else value

    return SearchLimits(
        pick(args.max_tiles, max_tiles),
        pick(args.max_overhang, 64),
        pick(args.max_states, 200_000),
    )


def _indices(text: str) -> PcpSolution:
    try:
        return PcpSolution(tuple(int(t) for t in text.replace(",", " ").split()))
    except ValueError as exc:
        raise UsageError(f"bad index sequence {text!r}: {exc}") from None


def _relation(args, inst):
    return formats.relation_from_json(inst, formats.load(_need(args, "relation")))


def cmd_validate(args):
    inst = _instance(args)
    return OK, {"valid": True, "k": inst.k, "alphabet_size": len(inst.alphabet), "symmetric": is_symmetric(inst)}


def cmd_symmetrize(args):
    return OK, formats.instance_to_json(symmetric_closure(_instance(args)))


def cmd_solve(args):
    outcome = solve(_instance(args), _limits(args), workers=args.threads)
    return _outcome_code(outcome), formats.outcome_to_json(outcome)


def cmd_enumerate(args):
    sols = enumerate_solutions(_instance(args), 6 if args.max_tiles is None else args.max_tiles)
    return (OK if sols else NEGATIVE), {"solutions": [list(s.indices) for s in sols]}


def cmd_reduce(args):
    pres = _presentation(args)
    x, y = pres.word(_need(args, "x")), pres.word(_need(args, "y"))
    inst = build_pcp(pres, x, y) if args.plain else build_sympcp(pres, x, y)
    return OK, formats.instance_to_json(inst)


def cmd_translate(args):
    pres = _presentation(args)
    if args.derivation:
        d = formats.derivation_from_json(pres, formats.load(args.derivation))
        if not check_derivation(pres, d):
            return NEGATIVE, {"error": "invalid derivation"}
        sol = derivation_to_solution(pres, d)
        return OK, {"x": formats.word_to_json(d.source), "y": formats.word_to_json(d.target),
                    "indices": list(sol.indices)}
    x, y = pres.word(_need(args, "x")), pres.word(_need(args, "y"))
    sol = _indices(_need(args, "solution"))
    try:
        d = solution_to_derivation(pres, x, y, sol)
    except (MalformedSolution, IndexError) as exc:
        return NEGATIVE, {"error": str(exc)}
    return OK, formats.derivation_to_json(d)


def cmd_encode_binary(args):
    inst = _instance(args)
    return OK, {"width": code_length(len(inst.alphabet)), **formats.instance_to_json(binary_code(inst))}


def cmd_matrices(args):
    mats = build_matrices(_instance(args))
    return OK, {"h": mats.params.h, "matrices": {str(t): formats.matrix_to_json(m)["rows"] for t, m in mats.items()}}


def cmd_encode_pair(args):
    pair = StringPair.parse(args.w or "", args.j or "")
    return OK, formats.matrix_to_json(pair_to_matrix(pair))


def cmd_decode_matrix(args):
    if args.rows:
        rows = [r.replace(",", " ").split() for r in args.rows.split(";")]
        m = formats.matrix_from_json({"rows": rows})
    else:
        m = formats.matrix_from_json(formats.load(_need(args, "input")))
    try:
        return OK, formats.pair_to_json(matrix_to_pair(m))
    except NotInImage as exc:
        return NEGATIVE, {"error": str(exc)}


def cmd_verify_embedding(args):
    report = verify_embedding(_instance(args), args.trials, args.max_len, args.seed)
    return (OK if report.passed else NEGATIVE), {"trials": report.trials, "failures": report.failures}


def _gens_json(gens):
    return [{"tag": str(g.tag), **formats.pair_to_json(g.pair)} for g in gens]


def cmd_gamma(args):
    return OK, {"generators": _gens_json(build_gamma(_instance(args)))}


def cmd_gamma_reduced(args):
    return OK, {"generators": _gens_json(build_gamma_reduced(_instance(args)))}


def cmd_relation_from_solution(args):
    inst = _instance(args)
    sol = _indices(_need(args, "solution"))
    try:
        build = relation_from_solution_symmetric if args.symmetric else relation_from_solution
        rel = build(inst, sol)
    except (ValueError, IndexError) as exc:
        return NEGATIVE, {"error": str(exc)}
    return OK, formats.relation_to_json(rel)


def cmd_find_relation(args):
    inst = _instance(args)
    gens = build_gamma_reduced(inst) if args.reduced else build_gamma(inst)
    outcome = find_relation(gens, _limits(args), max_length=args.max_length)
    return _outcome_code(outcome), formats.outcome_to_json(outcome)


def cmd_verify_relation(args):
    inst = _instance(args)
    gens = build_gamma_reduced(inst) if args.reduced else build_gamma(inst)
    rel = _relation(args, inst)
    try:
        ok = verify_relation(gens, rel)
    except ValueError as exc:
        return NEGATIVE, {"verified": False, "error": str(exc)}
    return (OK if ok else NEGATIVE), {"verified": ok}


def cmd_factor_blocks(args):
    inst = _instance(args)
    rel = _relation(args, inst)
    try:
        fact = factor_blocks(inst, rel)
    except MalformedRelation as exc:
        return NEGATIVE, {"error": str(exc)}
    sol = extract_pcp_solution(fact)
    closure = symmetric_closure(inst)
    return OK, {
        **formats.factorization_to_json(fact),
        "well_formed": check_factorization(fact),
        "solution": list(sol.indices),
        "solves_closure": check_solution(closure, sol),
    }


def cmd_matrix_relation_check(args):
    inst = _instance(args)
    equal = matrix_relation_check(inst, _relation(args, inst))
    return (OK if equal else NEGATIVE), {"equal": equal}


def cmd_demo_counterexample(args):
    from .demo import counterexample_report

    report = counterexample_report(_limits(args, max_tiles=30))
    return (OK if report["all_verified"] else NEGATIVE), report


COMMANDS = {
    "validate": cmd_validate,
    "symmetrize": cmd_symmetrize,
    "solve": cmd_solve,
    "enumerate": cmd_enumerate,
    "reduce": cmd_reduce,
    "translate": cmd_translate,
    "encode-binary": cmd_encode_binary,
    "matrices": cmd_matrices,
    "encode-pair": cmd_encode_pair,
    "decode-matrix": cmd_decode_matrix,
    "verify-embedding": cmd_verify_embedding,
    "gamma": cmd_gamma,
    "gamma-reduced": cmd_gamma_reduced,
    "relation-from-solution": cmd_relation_from_solution,
    "find-relation": cmd_find_relation,
    "verify-relation": cmd_verify_relation,
    "factor-blocks": cmd_factor_blocks,
    "matrix-relation-check": cmd_matrix_relation_check,
    "demo-counterexample": cmd_demo_counterexample,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="instance / presentation / matrix JSON file")
    common.add_argument("--output", help="write the report here instead of stdout")
    common.add_argument("--max-tiles", type=int)
    common.add_argument("--max-overhang", type=int)
    common.add_argument("--max-states", type=int)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--threads", type=int, default=1)

    parser = argparse.ArgumentParser(prog="sympcp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = {name: sub.add_parser(name, parents=[common]) for name in COMMANDS}

    for name in ("reduce", "translate"):
        p[name].add_argument("--x")
        p[name].add_argument("--y")
    p["reduce"].add_argument("--plain", action="store_true", help="emit the non-symmetric instance")
    p["translate"].add_argument("--derivation", help="derivation JSON to turn into a solution")
    p["translate"].add_argument("--solution", help="comma-separated indices to parse into a derivation")
    p["encode-pair"].add_argument("--w", help="binary first coordinate")
    p["encode-pair"].add_argument("--j", help="second coordinate over 0-3")
    p["decode-matrix"].add_argument("--rows", help='inline matrix, e.g. "8,0,0;0,1,0;0,866,1024"')
    p["verify-embedding"].add_argument("--trials", type=int, default=200)
    p["verify-embedding"].add_argument("--max-len", type=int, default=8)
    p["relation-from-solution"].add_argument("--solution")
    p["relation-from-solution"].add_argument("--symmetric", action="store_true")
    for name in ("find-relation", "verify-relation"):
        p[name].add_argument("--reduced", action="store_true", help="use the generators without letter 3")
    p["find-relation"].add_argument("--max-length", type=int, help="bound on the common product length")
    for name in ("verify-relation", "factor-blocks", "matrix-relation-check"):
        p[name].add_argument("--relation", help="relation JSON file")
    return parser


def _render_text(report, code) -> str:
    lines = []
    for key, value in report.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value, ensure_ascii=False)
        lines.append(f"{key}: {value}")
    lines.append(f"exit: {code}")
    return "\n".join(lines) + "\n"


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        if args.threads < 1:
            raise UsageError("--threads must be positive")
        code, report = COMMANDS[args.command](args)
    except (UsageError, ValueError, KeyError, IndexError, TypeError, OSError, json.JSONDecodeError) as exc:
        print(f"sympcp {args.command}: {exc}", file=sys.stderr)
        return USAGE
    text = formats.dumps(report) if args.format == "json" else _render_text(report, code)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
