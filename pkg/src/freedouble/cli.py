"""Command line front end: ``freedouble <subcommand> ...``.

Exit status is 0 on success, 2 on parse or domain errors and 3 when a
budget runs out (the witness search included); JSON output is still
written in the last case.
"""

import argparse
import json
import os
import random
import sys

from . import derived, witness
from .catalog import default_catalog, filter_by_order
from .doubles import format_element
from .errors import BudgetError
from .presentation import load_catalog, load_presentation
from .stallings import INFINITE
from .words import format_word, parse_word, random_word

ENV_LAMBDA_MAX = "FREEDOUBLE_LAMBDA_MAX"
ENV_NODE_BOUND = "FREEDOUBLE_NODE_BOUND"
ENV_ORDER_BOUND = "FREEDOUBLE_ORDER_BOUND"

_RESULT_SCHEMA = {
    "type": "object",
    "required": ["command", "result"],
    "properties": {"command": {"type": "string"}},
}

WITNESS_SCHEMA = {
    "type": "object",
    "required": ["type", "budget"],
    "properties": {
        "type": {"enum": ["solvable_quotient", "g_lambda_certificate", "exhausted"]},
        "lambda": {"type": "integer", "minimum": 0},
        "group": {"type": "string"},
        "hom": {"type": "object"},
        "image": {},
        "syllable_proofs": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["position", "side", "word", "lambda", "method"],
            },
        },
        "budget": {"type": "object"},
    },
}

NEGATIVE_DEMO_SCHEMA = {
    "type": "object",
    "required": ["command", "witness", "homs_checked", "d_killed_by_all", "mechanism_holds"],
    "properties": {
        "witness": {"type": "string"},
        "homs_checked": {"type": "integer", "minimum": 0},
        "d_killed_by_all": {"type": "boolean"},
        "mechanism_holds": {"type": "boolean"},
        "witness_detail": WITNESS_SCHEMA,
    },
}


def schema_for(command):
    if command == "witness":
        return WITNESS_SCHEMA
    if command == "negative-demo":
        return NEGATIVE_DEMO_SCHEMA
    return _RESULT_SCHEMA


def _env_int(name, default):
    value = os.environ.get(name)
    return int(value) if value else default


def _print(args, command, result, text):
    if args.json:
        print(json.dumps({"command": command, "result": result}, sort_keys=True))
    else:
        print(text)


def _double(args):
    return load_presentation(args.presentation).double()


def cmd_reduce(args):
    w = parse_word(args.word, args.rank)
    _print(args, "reduce", format_word(w), format_word(w))


def cmd_member(args):
    graph = load_presentation(args.presentation).subgroup_graph()
    ok = graph.member(parse_word(args.word, graph.rank))
    _print(args, "member", ok, str(ok).lower())


def cmd_index(args):
    n = load_presentation(args.presentation).subgroup_graph().index()
    value = "infinite" if n == INFINITE else n
    _print(args, "index", value, str(value))


def cmd_basis(args):
    basis = [format_word(b) for b in load_presentation(args.presentation).subgroup_graph().free_basis()]
    _print(args, "basis", basis, "\n".join(basis))


def cmd_in_derived(args):
    w = parse_word(args.word, args.rank)
    ok = derived.in_derived(w, args.lam, max(derived.MAX_LEVEL, args.max_level))
    _print(args, "in-derived", ok, str(ok).lower())


def cmd_fox(args):
    w = parse_word(args.word, args.rank)
    e = derived.fox_derivative(w, args.gen, args.rank)
    terms = [[format_word(u), c] for u, c in e.sorted_terms()]
    _print(args, "fox", terms, str(e))


def cmd_normalize(args):
    D = _double(args)
    x = D.parse_element(args.element)
    _print(args, "normalize", format_element(x), format_element(x))


def cmd_deq(args):
    D = _double(args)
    ok = D.deq(D.parse_element(args.x), D.parse_element(args.y))
    _print(args, "deq", ok, str(ok).lower())


def cmd_retract(args):
    D = _double(args)
    w = format_word(D.retract(D.parse_element(args.element)))
    _print(args, "retract", w, w)


def cmd_kernel_gen(args):
    D = _double(args)
    k = format_element(D.kernel_gen(parse_word(args.word, D.rank)))
    _print(args, "kernel-gen", k, k)


def cmd_ck_check(args):
    D = _double(args)
    if args.samples:
        samples = [parse_word(s, D.rank) for s in args.samples]
    else:
        samples = D.alphabet.generators()
    report = D.check_ck_commutation(samples).to_dict()
    text = "pass" if report["passed"] else "fail\n" + "\n".join(
        f"[{f['c']}, k({f['a']})] = {f['commutator']}" for f in report["failures"]
    )
    _print(args, "ck-check", report, text)


def cmd_abelianize(args):
    D = _double(args)
    ab = witness.abelianization(D)
    torsion, free = ab.invariants()
    result = {"torsion": torsion, "free_rank": free, "description": ab.describe()}
    _print(args, "abelianize", result, ab.describe())


def _budget(args):
    catalog = load_catalog(args.catalog) if args.catalog else default_catalog()
    return witness.Budget(args.lambda_max, catalog, args.node_bound)


def cmd_witness(args):
    D = _double(args)
    x = D.parse_element(args.element)
    budget = _budget(args)
    w = witness.witness_search(D, x, budget)
    out = witness.witness_to_json(w, budget)
    if args.json:
        print(json.dumps(out, sort_keys=True))
    else:
        print(out["type"])
        for k, v in out.items():
            if k != "type":
                print(f"  {k}: {json.dumps(v)}")
    return 3 if isinstance(w, witness.Exhausted) else 0


def cmd_negative_demo(args):
    catalog = load_catalog(args.catalog) if args.catalog else default_catalog()
    report = witness.negative_demo(args.order_bound, catalog=catalog,
                                   lambda_max=args.lambda_max, node_bound=args.node_bound)
    if args.random_elements:
        D = witness.build_perfect_quotient_double()
        groups = filter_by_order(catalog, args.order_bound)
        homs = [h for _, h in witness.enumerate_solvable_homs(D, groups, args.node_bound)]
        rng = random.Random(args.seed)
        killed = 0
        for _ in range(args.random_elements):
            k = D.kernel_gen(random_word(rng, D.rank, rng.randint(1, 4)))
            g = D.normalize([(rng.randint(0, 1), random_word(rng, D.rank, rng.randint(1, 4)))])
            e = D.commutator(k, g)
            killed += all(h.evaluate(e) == 0 for h in homs)
        report["random_elements"] = {"seed": args.seed, "count": args.random_elements, "killed_by_all": killed}
    report["command"] = "negative-demo"
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        for key in ("d", "d_nontrivial", "ab_image_zero", "homs_checked", "d_killed_by_all",
                    "mechanism_holds", "witness"):
            print(f"{key}: {report[key]}")
        if "random_elements" in report:
            print(f"random_elements: {report['random_elements']}")
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="freedouble", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, *, pres=False, rank=False):
        sp = sub.add_parser(name)
        sp.set_defaults(func=func)
        sp.add_argument("--json", action="store_true", help="machine readable output")
        if pres:
            sp.add_argument("-p", "--presentation", required=True, help="presentation file")
        if rank:
            sp.add_argument("--rank", type=int, default=None, help="check letters against this rank")
        return sp

    add("reduce", cmd_reduce, rank=True).add_argument("word")
    add("member", cmd_member, pres=True).add_argument("word")
    add("index", cmd_index, pres=True)
    add("basis", cmd_basis, pres=True)

    sp = add("in-derived", cmd_in_derived, rank=True)
    sp.add_argument("word")
    sp.add_argument("--lambda", dest="lam", type=int, required=True)
    sp.add_argument("--max-level", type=int, default=derived.MAX_LEVEL)

    sp = add("fox", cmd_fox, rank=True)
    sp.add_argument("word")
    sp.add_argument("--gen", type=int, required=True)

    add("normalize", cmd_normalize, pres=True).add_argument("element")
    sp = add("deq", cmd_deq, pres=True)
    sp.add_argument("x")
    sp.add_argument("y")
    add("retract", cmd_retract, pres=True).add_argument("element")
    add("kernel-gen", cmd_kernel_gen, pres=True).add_argument("word")
    add("ck-check", cmd_ck_check, pres=True).add_argument("--samples", nargs="*")
    add("abelianize", cmd_abelianize, pres=True)

    def budget_flags(sp):
        sp.add_argument("--lambda-max", type=int, default=_env_int(ENV_LAMBDA_MAX, 3))
        sp.add_argument("--catalog", help="catalog file of solvable permutation groups")
        sp.add_argument("--node-bound", type=int, default=_env_int(ENV_NODE_BOUND, witness.DEFAULT_NODE_BOUND))

    sp = add("witness", cmd_witness, pres=True)
    sp.add_argument("element")
    budget_flags(sp)

    sp = add("negative-demo", cmd_negative_demo)
    sp.add_argument("--order-bound", type=int, default=_env_int(ENV_ORDER_BOUND, 24))
    sp.add_argument("--random-elements", type=int, default=0)
    sp.add_argument("--seed", type=int, default=0)
    budget_flags(sp)
    return p


def run(argv=None):
    args = build_parser().parse_args(argv)
    try:
        status = args.func(args)
    except BudgetError as e:
        if getattr(args, "json", False):
            print(json.dumps({"command": args.command, "error": "budget", "message": str(e)}))
        print(f"freedouble: budget exhausted: {e}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as e:
        print(f"freedouble: error: {e}", file=sys.stderr)
        return 2
    return status or 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
