"""Command-line frontend.

One command per invocation; the result is a single-line JSON record on
stdout, diagnostics go to stderr.  Exit codes: 0 success (equivalent /
zero for decision commands), 1 not equivalent / nonzero, 2 input error,
3 resource ceiling.
"""

from __future__ import annotations

import argparse
import json
import sys
from .atoms import AtomKind
from .automaton import AutomatonError
from .chains import chain_stabilization
from .cogs import build_balance_matrix, narrow_cogs, narrow_specs
from .equivalence import (InvalidAutomatonError, ResourceCeilingError,
                          decide_equiv, decide_zeroness)
from .forms import EqualityForm, OrderedForm, decompose_form
from .formats import (DocumentError, format_atom, format_rational,
                      format_word, parse_atom, parse_nondet, parse_rational,
                      parse_weighted, parse_word)
from .unambiguous import unamb_equiv

EXIT_OK = 0
EXIT_DIFFERENT = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3


def _emit(record: dict) -> None:
    print(json.dumps(record, separators=(", ", ": ")))


def _fail(code: int, message: str, error: str) -> int:
    print(message, file=sys.stderr)
    _emit({"error": error, "message": message})
    return code


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise DocumentError(f"{path}: {exc}") from None


def _witness_fields(decision) -> dict:
    if decision.witness is None:
        return {"witness": None, "witness_word": None}
    rendered = [{"tag": tag, "atom": format_atom(atom)}
                for tag, atom in decision.witness]
    return {"witness": rendered, "witness_word": format_word(decision.witness)}


def _decision_record(decision, extra=None) -> dict:
    record = {
        "decision": decision.verdict,
        **_witness_fields(decision),
        "length_bound": decision.report.to_json(),
        "support": [format_atom(a) for a in decision.support],
        "restricted_states": decision.restricted_states,
        "wall_time_s": round(decision.elapsed_s, 6),
    }
    if extra:
        record.update(extra)
    return record


def _cmd_equiv(args) -> int:
    if args.mode == "unambiguous":
        n1 = parse_nondet(_read(args.fileA))
        n2 = parse_nondet(_read(args.fileB))
        decision = unamb_equiv(n1, n2, args.l, max_states=args.max_states)
        extra = {"mode": "unambiguous", "warnings": list(decision.warnings)}
    else:
        a1 = parse_weighted(_read(args.fileA))
        a2 = parse_weighted(_read(args.fileB))
        decision = decide_equiv(a1, a2, args.l, max_states=args.max_states)
        extra = {"mode": "weighted"}
    _emit(_decision_record(decision, extra))
    return EXIT_OK if decision.equivalent else EXIT_DIFFERENT


def _cmd_zeroness(args) -> int:
    automaton = parse_weighted(_read(args.file))
    decision = decide_zeroness(automaton, args.l, max_states=args.max_states)
    _emit(_decision_record(decision))
    return EXIT_OK if decision.zero else EXIT_DIFFERENT


def _cmd_weight(args) -> int:
    automaton = parse_weighted(_read(args.file))
    word = parse_word(args.word, automaton.kind)
    unknown = [tag for tag, _ in word if tag not in automaton.tags]
    if unknown:
        raise DocumentError(f"word uses unknown tags {unknown!r}")
    value = automaton.oracle_weight(word)
    _emit({"weight": format_rational(value), "word": format_word(word)})
    return EXIT_OK


def _cmd_rank(args) -> int:
    matrix = build_balance_matrix(args.n, args.k)
    rank = matrix.rank()
    _emit({"rank": rank, "nullity": len(matrix.columns) - rank})
    return EXIT_OK


def _cmd_cogs(args) -> int:
    atoms = tuple(parse_atom(part, AtomKind.ORDERED)
                  for part in args.t.split(",") if part.strip())
    specs = narrow_specs(atoms, args.k)
    cogs = narrow_cogs(atoms, args.k)
    from .vectors import matrix_rank
    record = {
        "count": len(cogs),
        "rank": matrix_rank(cogs),
        "cogs": [{
            "alpha": [format_atom(a) for a in spec.alpha],
            "terms": [[[format_atom(a) for a in key], format_rational(c)]
                      for key, c in sorted(cog.items())],
        } for spec, cog in zip(specs, cogs)],
    }
    _emit(record)
    return EXIT_OK


def _cmd_chain(args) -> int:
    automaton = parse_weighted(_read(args.file))
    pool = tuple(parse_atom(part, automaton.kind)
                 for part in args.pool.split(",") if part.strip())
    report = chain_stabilization(automaton, pool, args.max_len)
    _emit(report.to_json())
    return EXIT_OK


def _parse_form(doc: dict, kind: AtomKind):
    if kind is AtomKind.EQUALITY:
        exceptions = doc.get("exceptions", {})
        if not isinstance(exceptions, dict):
            raise DocumentError("exceptions: expected an object atom -> value")
        return EqualityForm(
            default=parse_rational(doc.get("default", 0), "default"),
            exceptions={parse_atom(a, kind): parse_rational(v, f"exceptions[{a!r}]")
                        for a, v in exceptions.items()})
    return OrderedForm(
        breakpoints=[parse_atom(b, kind) for b in doc.get("breakpoints", [])],
        point_values=[parse_rational(v, "point_values")
                      for v in doc.get("point_values", [])],
        interval_values=[parse_rational(v, "interval_values")
                         for v in doc.get("interval_values", [])])


def _cmd_decompose(args) -> int:
    kind = AtomKind.EQUALITY if args.kind == "equality" else AtomKind.ORDERED
    try:
        doc = json.loads(_read(args.form))
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{args.form}: line {exc.lineno}: {exc.msg}") from None
    try:
        form = _parse_form(doc, kind)
    except ValueError as exc:
        raise DocumentError(str(exc)) from None
    combo = decompose_form(kind, form)
    rendered = []
    for key, coeff in sorted(combo.items()):
        if key == ("all",):
            gen = {"generator": "all"}
        elif key[0] == "at":
            gen = {"generator": "at", "atom": format_atom(key[1])}
        else:
            gen = {"generator": "gt", "atom": format_atom(key[1])}
        gen["coefficient"] = format_rational(coeff)
        rendered.append(gen)
    _emit({"combination": rendered})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regwa",
        description="Exact decisions for weighted register automata over atoms.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("equiv", help="decide equivalence of two automata")
    p.add_argument("fileA")
    p.add_argument("fileB")
    p.add_argument("--l", type=int, default=None,
                   help="override the atom budget (sound for nonzero verdicts)")
    p.add_argument("--mode", choices=("weighted", "unambiguous"), default="weighted")
    p.add_argument("--max-states", dest="max_states", type=int, default=200_000)
    p.set_defaults(fn=_cmd_equiv)

    p = sub.add_parser("zeroness", help="decide whether every word has weight 0")
    p.add_argument("file")
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--max-states", dest="max_states", type=int, default=200_000)
    p.set_defaults(fn=_cmd_zeroness)

    p = sub.add_parser("weight", help="evaluate one word by run enumeration")
    p.add_argument("file")
    p.add_argument("--word", required=True, help='letters as "tag:atom,tag:atom"')
    p.set_defaults(fn=_cmd_weight)

    p = sub.add_parser("rank", help="rank/nullity of the balance matrix")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(fn=_cmd_rank)

    p = sub.add_parser("cogs", help="narrow cogs over an ordered atom list")
    p.add_argument("--t", required=True, help='comma-separated atoms, e.g. "1,2,3,4"')
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(fn=_cmd_cogs)

    p = sub.add_parser("chain", help="configuration-span growth over a pool")
    p.add_argument("file")
    p.add_argument("--pool", required=True, help="comma-separated atoms")
    p.add_argument("--max-len", dest="max_len", type=int, default=12)
    p.set_defaults(fn=_cmd_chain)

    p = sub.add_parser("decompose", help="decompose a finitely supported form")
    p.add_argument("--kind", choices=("equality", "ordered"), required=True)
    p.add_argument("--form", required=True, help="JSON form description file")
    p.set_defaults(fn=_cmd_decompose)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ResourceCeilingError as exc:
        return _fail(EXIT_RESOURCE, str(exc), "resource_ceiling")
    except (DocumentError, InvalidAutomatonError, AutomatonError) as exc:
        return _fail(EXIT_INPUT, str(exc), "input")
    except ValueError as exc:
        return _fail(EXIT_INPUT, str(exc), "input")


if __name__ == "__main__":
    sys.exit(main())
