"""Command-line front end.

Subcommands: hom, compose, check (alias classify), decompose, chain, tensor,
weakdiv, divisors, factorizations, graph, verify.  Tuples on the command line
are JSON arrays of element encodings and the empty tuple is []; morphisms are
JSON objects with monoid/domain/codomain/map keys and 1-based maps.

Exit codes: 0 ok or true, 1 false or suite failure, 2 parse or validation
error, 3 resource guard exceeded, 4 capability error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import CapabilityError, GuardError, InvalidMorphismError
from .monoids import Monoid, monoid_by_name
from .category import (
    FactorTuple,
    IndexFunction,
    Morphism,
    compose,
    hom_set,
    is_epic,
    is_isomorphism,
    is_monic,
)
from .monoidal import tensor_morphisms
from .weq import decompose_eip, is_weak_equivalence, total_witness
from .divisibility import (
    atomic_chain,
    enumerate_irreducible_factorizations,
    is_weakly_irreducible,
    is_weakly_prime,
    weak_divisor_classes,
    weakly_divides,
)
from .oracle import SUITES, UniverseSpec, all_passed, run_suite, universe_homs, universe_objects
from .encoding import decode_morphism, decode_tuple, encode_morphism, encode_tuple

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_PARSE = 2
EXIT_GUARD = 3
EXIT_CAPABILITY = 4

GRAPH_NODE_GUARD = 1000


def _monoid_arg(args) -> Monoid:
    if not args.monoid:
        raise ValueError("--monoid is required for this command")
    return monoid_by_name(args.monoid)


def _opt_monoid(args) -> Monoid | None:
    return monoid_by_name(args.monoid) if args.monoid else None


def _load_morphism(args, attr="morphism"):
    return decode_morphism(json.loads(getattr(args, attr)), _opt_monoid(args))


def _emit(args, payload: dict, text: str) -> None:
    print(json.dumps(payload) if args.json else text)


def _cmd_hom(args) -> int:
    monoid = _monoid_arg(args)
    domain = decode_tuple(monoid, json.loads(args.domain))
    codomain = decode_tuple(monoid, json.loads(args.codomain))
    morphisms = hom_set(domain, codomain)
    payload = {"count": len(morphisms), "morphisms": [encode_morphism(m) for m in morphisms]}
    lines = [f"count {len(morphisms)}"]
    lines += [f"map {list(m.values)}" for m in morphisms]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _cmd_compose(args) -> int:
    g = _load_morphism(args, "second")
    f = _load_morphism(args, "first")
    out = compose(g, f)
    _emit(args, encode_morphism(out), str(out))
    return EXIT_OK


_CHECKS = ("iso", "epic", "monic", "weq", "wirr", "wprime")


def _cmd_check(args) -> int:
    m = _load_morphism(args)
    kind = next(k for k in _CHECKS if getattr(args, k))
    monoid = m.monoid
    payload: dict = {"check": kind}
    if kind == "iso":
        result = is_isomorphism(m)
        if result:
            xs, ys = m.domain.entries, m.codomain.entries
            units = [None] * len(xs)
            for pos, target in enumerate(m.values):
                units[target - 1] = monoid.encode(monoid.exact_divide(xs[target - 1], ys[pos]))
            payload["units"] = units
    elif kind == "epic":
        result = is_epic(m)
        payload["injective"] = result
    elif kind == "monic":
        result = is_monic(m)
        payload["surjective"] = result
    else:
        r = total_witness(m)
        payload["witness_r"] = monoid.encode(r)
        result = {"weq": is_weak_equivalence, "wirr": is_weakly_irreducible,
                  "wprime": is_weakly_prime}[kind](m)
    payload["result"] = result
    text = f"{kind}: {str(result).lower()}"
    if "witness_r" in payload:
        text += f" (r = {payload['witness_r']})"
    _emit(args, payload, text)
    return EXIT_OK if result else EXIT_FALSE


def _cmd_decompose(args) -> int:
    m = _load_morphism(args)
    d = decompose_eip(m)
    monoid = m.monoid
    payload = {
        "epsilon": encode_morphism(d.epsilon),
        "delta": encode_morphism(d.delta),
        "phi": encode_morphism(d.phi),
        "ratios": [monoid.encode(a) for a in d.ratios],
        "dropped_unit": monoid.encode(d.dropped_unit),
    }
    text = "\n".join(
        [
            f"epsilon {d.epsilon}",
            f"delta   {d.delta}",
            f"phi     {d.phi}",
            f"ratios  {payload['ratios']}",
            f"unit    {payload['dropped_unit']}",
        ]
    )
    _emit(args, payload, text)
    return EXIT_OK


def _cmd_chain(args) -> int:
    m = _load_morphism(args)
    chain = atomic_chain(m)
    payload = {
        "steps": [encode_morphism(s) for s in chain.steps],
        "tags": list(chain.tags),
        "irr_count": chain.irr_count,
    }
    lines = [f"{tag:<19} {step}" for tag, step in zip(chain.tags, chain.steps)]
    lines.append(f"weakly irreducible steps: {chain.irr_count}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _cmd_tensor(args) -> int:
    f = _load_morphism(args, "first")
    g = _load_morphism(args, "second")
    out = tensor_morphisms(f, g)
    _emit(args, encode_morphism(out), str(out))
    return EXIT_OK


def _cmd_weakdiv(args) -> int:
    f = _load_morphism(args, "first")
    g = _load_morphism(args, "second")
    monoid = f.monoid
    divides = weakly_divides(f, g)
    payload = {
        "divides": divides,
        "s": monoid.encode(total_witness(f)),
        "r": monoid.encode(total_witness(g)),
    }
    _emit(args, payload, f"divides: {str(divides).lower()} (s = {payload['s']}, r = {payload['r']})")
    return EXIT_OK if divides else EXIT_FALSE


def _cmd_divisors(args) -> int:
    m = _load_morphism(args)
    monoid = m.monoid
    classes = weak_divisor_classes(m)
    payload = {
        "witness_r": monoid.encode(total_witness(m)),
        "classes": [monoid.encode(d) for d in classes],
        "count": len(classes),
    }
    _emit(args, payload, f"r = {payload['witness_r']}: {payload['count']} classes {payload['classes']}")
    return EXIT_OK


def _cmd_factorizations(args) -> int:
    monoid = _monoid_arg(args)
    element = monoid.decode(json.loads(args.element))
    found = enumerate_irreducible_factorizations(monoid, element, max_count=args.max_count)
    payload = {
        "element": monoid.encode(element),
        "classes": [[monoid.encode(q) for q in cls] for cls in found.classes],
        "truncated": found.truncated,
    }
    text = f"{len(found.classes)} class(es)" + (" [truncated]" if found.truncated else "")
    _emit(args, payload, text + "\n" + "\n".join(str(c) for c in payload["classes"]))
    return EXIT_OK


def _cmd_graph(args) -> int:
    monoid = _monoid_arg(args)
    pool = tuple(monoid.decode(v) for v in json.loads(args.pool))
    node_count = sum(len(pool) ** k for k in range(args.max_len + 1))
    if node_count > GRAPH_NODE_GUARD:
        raise GuardError(f"graph universe has {node_count} nodes; guard is {GRAPH_NODE_GUARD}")
    u = UniverseSpec(monoid=monoid, pool=pool, max_len=args.max_len)
    dot = _render_dot(u)
    if args.out and args.out != "-":
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(dot)
    else:
        print(dot, end="")
    return EXIT_OK


def _dot_id(t: FactorTuple) -> str:
    body = json.dumps(encode_tuple(t)).replace('"', '\\"')
    return f'"{body}"'


def _render_dot(u: UniverseSpec) -> str:
    monoid = u.monoid
    objs = universe_objects(u)
    homs = universe_homs(u)
    lines = ["digraph factorization {", "  rankdir=LR;"]
    for t in objs:
        lines.append(f"  {_dot_id(t)};")
    classify = monoid.is_divisibility
    for a in objs:
        for b in objs:
            fns = homs.get((a, b))
            if not fns:
                continue
            ident = tuple(range(1, len(a) + 1)) if a == b else None
            for values in fns:
                if ident is not None and values == ident:
                    continue
                m = Morphism(a, b, IndexFunction(len(b), len(a), values))
                attrs = [f'label="{list(values)}"']
                if classify:
                    if is_weak_equivalence(m):
                        attrs.append("style=dashed")
                    elif is_weakly_irreducible(m):
                        attrs.append("style=bold")
                lines.append(f"  {_dot_id(a)} -> {_dot_id(b)} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cmd_verify(args) -> int:
    monoid = monoid_by_name(args.monoid or "zx")
    pool = tuple(monoid.decode(v) for v in json.loads(args.pool)) if args.pool else None
    spec_kwargs = {"monoid": monoid, "max_len": args.max_len, "seed": args.seed}
    if pool is not None:
        spec_kwargs["pool"] = pool
    elif monoid.name != "zx":
        raise ValueError("--pool is required for non-default monoids")
    u = UniverseSpec(**spec_kwargs)
    reports = run_suite(u, args.suite or None)
    if args.json:
        print(json.dumps([
            {"suite": r.suite, "cases": r.cases, "failures": r.failures}
            for r in reports
        ]))
    else:
        for r in reports:
            status = "PASS" if r.passed else f"FAIL ({len(r.failures)} counterexamples)"
            print(f"{r.suite}: {r.cases} cases, {status}")
            for failure in r.failures[:3]:
                print(f"  counterexample: {json.dumps(failure)}")
    return EXIT_OK if all_passed(reports) else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="factorcat",
        description="Finite computations in the factorization category of a monoid.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, helptext, aliases=()):
        sp = sub.add_parser(name, help=helptext, aliases=list(aliases))
        sp.add_argument("--monoid", help="monoid name: zx, nat, interval, free:<alphabet>")
        sp.add_argument("--json", action="store_true", help="emit JSON")
        return sp

    sp = add("hom", "enumerate the morphisms between two tuples")
    sp.add_argument("domain", help="JSON array, e.g. '[6,35]'")
    sp.add_argument("codomain", help="JSON array, e.g. '[2,3,5,7]'")
    sp.set_defaults(handler=_cmd_hom)

    sp = add("compose", "compose two morphisms (second applied after first)")
    sp.add_argument("second", help="morphism JSON applied second")
    sp.add_argument("first", help="morphism JSON applied first")
    sp.set_defaults(handler=_cmd_compose)

    sp = add("check", "classify a morphism", aliases=("classify",))
    sp.add_argument("morphism", help="morphism JSON")
    group = sp.add_mutually_exclusive_group(required=True)
    for kind, helptext in (
        ("iso", "isomorphism"),
        ("epic", "epic (injective map)"),
        ("monic", "monic (surjective map)"),
        ("weq", "weak equivalence"),
        ("wirr", "weakly irreducible"),
        ("wprime", "weakly prime"),
    ):
        group.add_argument(f"--{kind}", action="store_true", help=helptext)
    sp.set_defaults(handler=_cmd_check)

    sp = add("decompose", "drop-units / divisibility / refactor decomposition")
    sp.add_argument("morphism", help="morphism JSON")
    sp.set_defaults(handler=_cmd_decompose)

    sp = add("chain", "atomic chain of a morphism")
    sp.add_argument("morphism", help="morphism JSON")
    sp.set_defaults(handler=_cmd_chain)

    sp = add("tensor", "tensor two morphisms")
    sp.add_argument("first", help="morphism JSON")
    sp.add_argument("second", help="morphism JSON")
    sp.set_defaults(handler=_cmd_tensor)

    sp = add("weakdiv", "does the first morphism weakly divide the second?")
    sp.add_argument("first", help="morphism JSON")
    sp.add_argument("second", help="morphism JSON")
    sp.set_defaults(handler=_cmd_weakdiv)

    sp = add("divisors", "weak divisor class representatives of a morphism")
    sp.add_argument("morphism", help="morphism JSON")
    sp.set_defaults(handler=_cmd_divisors)

    sp = add("factorizations", "irreducible factorizations of an element")
    sp.add_argument("element", help="element JSON")
    sp.add_argument("--max-count", type=int, default=1000)
    sp.set_defaults(handler=_cmd_factorizations)

    sp = add("graph", "DOT graph of a bounded universe")
    sp.add_argument("--pool", required=True, help="JSON array of elements")
    sp.add_argument("--max-len", type=int, default=2)
    sp.add_argument("--out", default="-", help="output file, - for stdout")
    sp.set_defaults(handler=_cmd_graph)

    sp = add("verify", "run the law verification suites")
    sp.add_argument("--suite", action="append", choices=sorted(SUITES), help="suite name (repeatable)")
    sp.add_argument("--pool", help="JSON array of elements")
    sp.add_argument("--max-len", type=int, default=3)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except GuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except CapabilityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY
    except (InvalidMorphismError, ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    raise SystemExit(main())
