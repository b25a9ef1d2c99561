"""JSON documents for automata, and the word/atom string syntax.

Rationals travel as exact "p/q" or integer strings.  Guards are arrays
[op, x] or [op, x, y] over the variables r1..rk and a; updates map each
target register to "a", "bot" or a source register, with omitted targets
keeping their register.  A document with "accepting" instead of weighted
"final"/"initial" entries parses to a nondeterministic automaton.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Sequence, Tuple, Union

from .atoms import AtomKind, Atom
from .automaton import (FinalRule, Guard, GUARD_OPS, TransitionRule,
                        WeightedRegisterAutomaton)
from .unambiguous import AcceptRule, NondetRegisterAutomaton, NondetTransition


class DocumentError(ValueError):
    """Malformed automaton document; the message is anchored to a JSON path."""


def parse_rational(value, where: str = "value") -> Fraction:
    if isinstance(value, bool):
        raise DocumentError(f"{where}: expected a rational, got a boolean")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise DocumentError(f"{where}: bad rational {value!r}: {exc}") from None
    raise DocumentError(f"{where}: expected a rational string, got {type(value).__name__}")


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


def parse_atom(text: str, kind: AtomKind) -> Atom:
    value = parse_rational(text, "atom")
    if kind is AtomKind.EQUALITY:
        if value.denominator != 1 or value < 0:
            raise DocumentError(f"atom {text!r}: equality atoms are naturals")
        return int(value)
    return value


def format_atom(atom: Atom) -> str:
    return format_rational(Fraction(atom))


def parse_word(text: str, kind: AtomKind) -> Tuple[tuple, ...]:
    """Comma-separated "tag:atom" letters; empty string is the empty word."""
    text = text.strip()
    if not text:
        return ()
    letters = []
    for part in text.split(","):
        tag, sep, atom = part.strip().partition(":")
        if not sep or not tag:
            raise DocumentError(f"bad letter {part!r}: expected tag:atom")
        letters.append((tag, parse_atom(atom, kind)))
    return tuple(letters)


def format_word(word: Sequence[tuple]) -> str:
    return ",".join(f"{tag}:{format_atom(atom)}" for tag, atom in word)


def _parse_kind(doc: dict) -> AtomKind:
    kind = doc.get("atoms")
    if kind == "equality":
        return AtomKind.EQUALITY
    if kind == "ordered":
        return AtomKind.ORDERED
    raise DocumentError(f'atoms: expected "equality" or "ordered", got {kind!r}')


def _parse_guard(raw, where: str) -> Guard:
    if raw is None:
        return Guard()
    if not isinstance(raw, list):
        raise DocumentError(f"{where}: guard must be an array of conjuncts")
    conjuncts = []
    for i, c in enumerate(raw):
        if not (isinstance(c, list) and c and isinstance(c[0], str)):
            raise DocumentError(f"{where}[{i}]: conjunct must be [op, operands...]")
        if c[0] not in GUARD_OPS:
            raise DocumentError(f"{where}[{i}]: unknown op {c[0]!r}")
        conjuncts.append(tuple(c))
    return Guard(tuple(conjuncts))


def _parse_update(raw, k: int, where: str) -> tuple:
    raw = raw or {}
    if not isinstance(raw, dict):
        raise DocumentError(f"{where}: update must be an object")
    known = {f"r{i}" for i in range(1, k + 1)}
    for key in raw:
        if key not in known:
            raise DocumentError(f"{where}: unknown target register {key!r}")
    update = []
    for i in range(1, k + 1):
        entry = raw.get(f"r{i}", f"r{i}")   # omitted targets keep their register
        if entry == "a" or entry == "bot":
            update.append(entry)
        elif isinstance(entry, str) and entry.startswith("r") and entry[1:].isdigit():
            update.append(int(entry[1:]))
        else:
            raise DocumentError(f"{where}.r{i}: bad update source {entry!r}")
    return tuple(update)


def _load(document: Union[str, dict]) -> dict:
    if isinstance(document, dict):
        return document
    try:
        doc = json.loads(document)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise DocumentError("top level: expected a JSON object")
    return doc


def parse_automaton(document: Union[str, dict]):
    """Parse either automaton variant; "accepting" marks the nondeterministic one."""
    doc = _load(document)
    if "accepting" in doc:
        return parse_nondet(doc)
    return parse_weighted(doc)


def _common_header(doc: dict):
    kind = _parse_kind(doc)
    k = doc.get("registers")
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise DocumentError(f"registers: expected a nonnegative integer, got {k!r}")
    tags = doc.get("tags")
    controls = doc.get("controls")
    for name, value in (("tags", tags), ("controls", controls)):
        if not (isinstance(value, list) and all(isinstance(x, str) for x in value)):
            raise DocumentError(f"{name}: expected an array of strings")
    return kind, k, tuple(tags), tuple(controls)


def parse_weighted(document: Union[str, dict]) -> WeightedRegisterAutomaton:
    doc = _load(document)
    kind, k, tags, controls = _common_header(doc)
    initial = []
    for i, entry in enumerate(doc.get("initial", [])):
        where = f"initial[{i}]"
        if not isinstance(entry, dict) or "control" not in entry:
            raise DocumentError(f"{where}: expected {{control, weight}}")
        initial.append((entry["control"],
                        parse_rational(entry.get("weight", 1), f"{where}.weight")))
    transitions = []
    for i, entry in enumerate(doc.get("transitions", [])):
        where = f"transitions[{i}]"
        if not isinstance(entry, dict):
            raise DocumentError(f"{where}: expected an object")
        for field in ("from", "tag", "to"):
            if field not in entry:
                raise DocumentError(f"{where}: missing {field!r}")
        transitions.append(TransitionRule(
            from_control=entry["from"], tag=entry["tag"], to_control=entry["to"],
            guard=_parse_guard(entry.get("guard"), f"{where}.guard"),
            update=_parse_update(entry.get("update"), k, f"{where}.update"),
            weight=parse_rational(entry.get("weight", 1), f"{where}.weight")))
    finals = []
    for i, entry in enumerate(doc.get("final", [])):
        where = f"final[{i}]"
        if not isinstance(entry, dict) or "control" not in entry:
            raise DocumentError(f"{where}: expected {{control, guard?, weight}}")
        finals.append(FinalRule(
            control=entry["control"],
            guard=_parse_guard(entry.get("guard"), f"{where}.guard"),
            weight=parse_rational(entry.get("weight", 1), f"{where}.weight")))
    automaton = WeightedRegisterAutomaton(
        kind=kind, k=k, controls=controls, tags=tags,
        initial=tuple(initial), transitions=tuple(transitions), finals=tuple(finals))
    diags = automaton.validate()
    if diags:
        raise DocumentError("; ".join(diags))
    return automaton


def parse_nondet(document: Union[str, dict]) -> NondetRegisterAutomaton:
    doc = _load(document)
    kind, k, tags, controls = _common_header(doc)
    initial = doc.get("initial", [])
    if not (isinstance(initial, list) and all(isinstance(c, str) for c in initial)):
        raise DocumentError("initial: expected an array of control names")
    transitions = []
    for i, entry in enumerate(doc.get("transitions", [])):
        where = f"transitions[{i}]"
        if not isinstance(entry, dict):
            raise DocumentError(f"{where}: expected an object")
        if "weight" in entry:
            raise DocumentError(f"{where}: nondeterministic rules carry no weights")
        for field in ("from", "tag", "to"):
            if field not in entry:
                raise DocumentError(f"{where}: missing {field!r}")
        transitions.append(NondetTransition(
            from_control=entry["from"], tag=entry["tag"], to_control=entry["to"],
            guard=_parse_guard(entry.get("guard"), f"{where}.guard"),
            update=_parse_update(entry.get("update"), k, f"{where}.update")))
    accepting = []
    for i, entry in enumerate(doc.get("accepting", [])):
        where = f"accepting[{i}]"
        if isinstance(entry, str):
            accepting.append(AcceptRule(control=entry))
        elif isinstance(entry, dict) and "control" in entry:
            accepting.append(AcceptRule(
                control=entry["control"],
                guard=_parse_guard(entry.get("guard"), f"{where}.guard")))
        else:
            raise DocumentError(f"{where}: expected a control name or {{control, guard}}")
    automaton = NondetRegisterAutomaton(
        kind=kind, k=k, controls=controls, tags=tags,
        initial=tuple(initial), transitions=tuple(transitions),
        accepting=tuple(accepting))
    diags = automaton.validate()
    if diags:
        raise DocumentError("; ".join(diags))
    return automaton


def _guard_to_json(guard: Guard) -> list:
    return [list(c) for c in guard.conjuncts]


def _update_to_json(update: tuple) -> dict:
    out = {}
    for i, entry in enumerate(update, start=1):
        out[f"r{i}"] = entry if entry in ("a", "bot") else f"r{entry}"
    return out


def weighted_to_document(a: WeightedRegisterAutomaton) -> dict:
    return {
        "atoms": a.kind.value,
        "registers": a.k,
        "tags": list(a.tags),
        "controls": list(a.controls),
        "initial": [{"control": c, "weight": format_rational(w)}
                    for c, w in a.initial],
        "transitions": [{
            "from": r.from_control, "tag": r.tag, "to": r.to_control,
            "guard": _guard_to_json(r.guard),
            "update": _update_to_json(r.update),
            "weight": format_rational(r.weight),
        } for r in a.transitions],
        "final": [{"control": r.control, "guard": _guard_to_json(r.guard),
                   "weight": format_rational(r.weight)} for r in a.finals],
    }


def nondet_to_document(a: NondetRegisterAutomaton) -> dict:
    return {
        "atoms": a.kind.value,
        "registers": a.k,
        "tags": list(a.tags),
        "controls": list(a.controls),
        "initial": list(a.initial),
        "transitions": [{
            "from": r.from_control, "tag": r.tag, "to": r.to_control,
            "guard": _guard_to_json(r.guard),
            "update": _update_to_json(r.update),
        } for r in a.transitions],
        "accepting": [{"control": r.control, "guard": _guard_to_json(r.guard)}
                      for r in a.accepting],
    }


def automaton_to_document(a) -> dict:
    if isinstance(a, WeightedRegisterAutomaton):
        return weighted_to_document(a)
    if isinstance(a, NondetRegisterAutomaton):
        return nondet_to_document(a)
    raise TypeError(f"not an automaton: {type(a).__name__}")
