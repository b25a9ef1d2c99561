"""Weighted register automata: guards, rules, semantics, restriction.

The model: finitely many control states, k registers holding atoms or the
empty marker, an alphabet of (tag, atom) letters, and transition rules
carrying a guard over the source registers and the input atom, a register
update, and a nonzero rational weight.  Updates only ever move atoms from
source registers or the input into target registers, so the automaton
cannot guess fresh atoms.  Guards contain no atom constants, which makes
every automaton equivariant by construction.

Weight of a word = sum over runs of initial weight x product of rule
weights x final weight, with runs starting at all-empty registers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from .atoms import AtomKind, Atom, BOT, empty_registers, enumerate_valuations
from .vectors import FinVec
from .finite_weighted import FiniteWeightedAutomaton

GUARD_OPS = ("eq", "neq", "lt", "is_bot", "not_bot")
_BINARY_OPS = ("eq", "neq", "lt")
_UNARY_OPS = ("is_bot", "not_bot")

# A concrete state is (control, registers); a letter is (tag, atom).
ConcreteState = Tuple[str, tuple]
Letter = Tuple[str, Atom]


class AutomatonError(ValueError):
    """Raised when an operation receives an ill-formed automaton."""


@dataclass(frozen=True)
class Guard:
    """Conjunction of atomic predicates over registers r1..rk and input a.

    Comparisons involving an empty register are false (including eq of two
    empty registers); only is_bot sees emptiness positively.  Disjunction
    is expressed by listing several rules.
    """

    conjuncts: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "conjuncts", tuple(tuple(c) for c in self.conjuncts))

    def holds(self, regs: tuple, atom=None) -> bool:
        return all(_conjunct_holds(c, regs, atom) for c in self.conjuncts)

    def variables(self):
        for c in self.conjuncts:
            yield from c[1:]


def _resolve(var, regs, atom):
    if var == "a":
        if atom is None:
            raise AutomatonError("guard mentions the input atom outside a transition")
        return atom
    return regs[int(var[1:]) - 1]


def _conjunct_holds(c, regs, atom) -> bool:
    op = c[0]
    x = _resolve(c[1], regs, atom)
    if op == "is_bot":
        return x is BOT
    if op == "not_bot":
        return x is not BOT
    y = _resolve(c[2], regs, atom)
    if x is BOT or y is BOT:
        return False
    if op == "eq":
        return x == y
    if op == "neq":
        return x != y
    if op == "lt":
        return x < y
    raise AutomatonError(f"unknown guard op {op!r}")


@dataclass(frozen=True)
class TransitionRule:
    from_control: str
    tag: str
    to_control: str
    guard: Guard = Guard()
    update: tuple = ()  # per target register: "a" | "bot" | source index 1..k
    weight: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "update", tuple(self.update))
        object.__setattr__(self, "weight", Fraction(self.weight))


@dataclass(frozen=True)
class FinalRule:
    control: str
    guard: Guard = Guard()
    weight: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "weight", Fraction(self.weight))


def _apply_update(update: tuple, regs: tuple, atom) -> tuple:
    out = []
    for entry in update:
        if entry == "a":
            out.append(atom)
        elif entry == "bot":
            out.append(BOT)
        else:
            out.append(regs[entry - 1])
    return tuple(out)


@dataclass(frozen=True)
class WeightedRegisterAutomaton:
    """Register presentation of a weighted automaton over atoms.

    ``initial`` assigns weights to controls, interpreted at the all-empty
    register valuation; that is how "finitely many states with nonzero
    initial weight" is realized syntactically.
    """

    kind: AtomKind
    k: int
    controls: Tuple[str, ...]
    tags: Tuple[str, ...]
    initial: Tuple[Tuple[str, Fraction], ...]
    transitions: Tuple[TransitionRule, ...] = ()
    finals: Tuple[FinalRule, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "controls", tuple(self.controls))
        object.__setattr__(self, "tags", tuple(self.tags))
        init = self.initial.items() if isinstance(self.initial, dict) else self.initial
        norm = tuple(sorted((c, Fraction(w)) for c, w in init if Fraction(w) != 0))
        object.__setattr__(self, "initial", norm)
        object.__setattr__(self, "transitions", tuple(self.transitions))
        object.__setattr__(self, "finals", tuple(self.finals))

    # -- structure ---------------------------------------------------------

    @cached_property
    def _rules_by_source(self) -> Dict[Tuple[str, str], Tuple[TransitionRule, ...]]:
        index: Dict[Tuple[str, str], list] = {}
        for rule in self.transitions:
            index.setdefault((rule.from_control, rule.tag), []).append(rule)
        return {key: tuple(rules) for key, rules in index.items()}

    @cached_property
    def _finals_by_control(self) -> Dict[str, Tuple[FinalRule, ...]]:
        index: Dict[str, list] = {}
        for rule in self.finals:
            index.setdefault(rule.control, []).append(rule)
        return {key: tuple(rules) for key, rules in index.items()}

    def initial_vector(self) -> FinVec:
        bots = empty_registers(self.k)
        return FinVec({(c, bots): w for c, w in self.initial})

    def validate(self) -> List[str]:
        """Well-formedness diagnostics; empty list means all invariants hold."""
        diags = []
        controls = set(self.controls)
        tags = set(self.tags)
        if len(controls) != len(self.controls):
            diags.append("duplicate control names")
        if len(tags) != len(self.tags):
            diags.append("duplicate tag names")
        if self.k < 0:
            diags.append("register count must be nonnegative")
        for c, w in self.initial:
            if c not in controls:
                diags.append(f"initial weight on unknown control {c!r}")
        for i, rule in enumerate(self.transitions):
            where = f"transition {i} ({rule.from_control}--{rule.tag}-->{rule.to_control})"
            if rule.from_control not in controls:
                diags.append(f"{where}: unknown source control")
            if rule.to_control not in controls:
                diags.append(f"{where}: unknown target control")
            if rule.tag not in tags:
                diags.append(f"{where}: unknown tag {rule.tag!r}")
            if rule.weight == 0:
                diags.append(f"{where}: weight must be nonzero")
            if len(rule.update) != self.k:
                diags.append(f"{where}: update must cover all {self.k} registers")
            for entry in rule.update:
                if entry in ("a", "bot"):
                    continue
                if not (isinstance(entry, int) and 1 <= entry <= self.k):
                    diags.append(f"{where}: bad update entry {entry!r} "
                                 "(only source registers, the input atom, or bot)")
            diags.extend(self._guard_diags(rule.guard, where, allow_input=True))
        for i, rule in enumerate(self.finals):
            where = f"final rule {i} ({rule.control})"
            if rule.control not in controls:
                diags.append(f"{where}: unknown control")
            diags.extend(self._guard_diags(rule.guard, where, allow_input=False))
        return diags

    def _guard_diags(self, guard: Guard, where: str, allow_input: bool) -> List[str]:
        diags = []
        for c in guard.conjuncts:
            if not c or c[0] not in GUARD_OPS:
                diags.append(f"{where}: unknown guard op {c!r}")
                continue
            op = c[0]
            expected = 3 if op in _BINARY_OPS else 2
            if len(c) != expected:
                diags.append(f"{where}: guard conjunct {c!r} has wrong arity")
                continue
            if op == "lt" and self.kind is AtomKind.EQUALITY:
                diags.append(f"{where}: lt is not available over equality atoms")
            for var in c[1:]:
                if var == "a":
                    if not allow_input:
                        diags.append(f"{where}: final guard mentions the input atom")
                elif (isinstance(var, str) and var.startswith("r")
                      and var[1:].isdigit() and 1 <= int(var[1:]) <= self.k):
                    pass
                else:
                    diags.append(f"{where}: unknown guard variable {var!r}")
        return diags

    # -- semantics ---------------------------------------------------------

    def step(self, state: ConcreteState, letter: Letter) -> List[Tuple[ConcreteState, Fraction]]:
        """Successors of a concrete state on one letter, weights merged."""
        control, regs = state
        tag, atom = letter
        out: Dict[ConcreteState, Fraction] = {}
        for rule in self._rules_by_source.get((control, tag), ()):
            if rule.guard.holds(regs, atom):
                succ = (rule.to_control, _apply_update(rule.update, regs, atom))
                out[succ] = out.get(succ, Fraction(0)) + rule.weight
        return sorted(((s, w) for s, w in out.items() if w != 0))

    def final_weight(self, state: ConcreteState) -> Fraction:
        control, regs = state
        total = Fraction(0)
        for rule in self._finals_by_control.get(control, ()):
            if rule.guard.holds(regs, None):
                total += rule.weight
        return total

    def oracle_weight(self, word: Sequence[Letter]) -> Fraction:
        """Brute-force run enumeration; the reference for everything else."""
        word = tuple(word)
        bots = empty_registers(self.k)

        def runs_from(state, i):
            if i == len(word):
                return self.final_weight(state)
            total = Fraction(0)
            for succ, w in self.step(state, word[i]):
                total += w * runs_from(succ, i + 1)
            return total

        total = Fraction(0)
        for control, w in self.initial:
            total += w * runs_from((control, bots), 0)
        return total

    def configuration(self, word: Sequence[Letter],
                      pool: Optional[Sequence[Atom]] = None) -> FinVec:
        """Summed pre-weights of runs over ``word``, per ending state."""
        if pool is not None:
            allowed = set(pool)
            for _, atom in word:
                if atom not in allowed:
                    raise AutomatonError(f"word atom {atom!r} outside the pool")
        vec = self.initial_vector()
        for letter in word:
            out: dict = {}
            for state, coeff in vec.items():
                for succ, w in self.step(state, letter):
                    s = out.get(succ, Fraction(0)) + coeff * w
                    if s:
                        out[succ] = s
                    else:
                        out.pop(succ, None)
            vec = FinVec(out)
        return vec

    # -- restriction to a finite support ------------------------------------

    def restrict(self, support: Sequence[Atom]) -> FiniteWeightedAutomaton:
        """Explicit finite automaton over letters tagged with support atoms.

        States are all (control, valuation) pairs over support u {bot}; by
        non-guessing, stepping on support letters never leaves that set, so
        weights of words over the support are preserved exactly.
        """
        support = tuple(support)
        if len(set(support)) != len(support):
            raise AutomatonError("support atoms must be distinct")
        valuations = enumerate_valuations(self.kind, self.k, support, allow_bot=True)
        states = tuple((c, v) for c in self.controls for v in valuations)
        index = {s: i for i, s in enumerate(states)}
        letters = tuple((t, a) for t in self.tags for a in support)

        bots = empty_registers(self.k)
        initial = {index[(c, bots)]: w for c, w in self.initial}
        matrices = {}
        for letter in letters:
            rows: Dict[int, Dict[int, Fraction]] = {}
            for i, state in enumerate(states):
                entries = {index[succ]: w for succ, w in self.step(state, letter)}
                if entries:
                    rows[i] = entries
            matrices[letter] = rows
        final = {}
        for i, state in enumerate(states):
            w = self.final_weight(state)
            if w != 0:
                final[i] = w
        return FiniteWeightedAutomaton(states=states, letters=letters,
                                       initial=initial, matrices=matrices,
                                       final=final)


# -- bulk guard solving ------------------------------------------------------

_UNSET = object()


def atom_candidates(rule: TransitionRule, regs: tuple, atoms: Sequence[Atom]) -> list:
    """Atoms from ``atoms`` on which ``rule`` fires at valuation ``regs``.

    Register-only conjuncts are evaluated once; conjuncts mentioning the
    input atom become a pin, exclusions, or order bounds.  Must agree with
    evaluating Guard.holds atom by atom.
    """
    pin = _UNSET
    lo = None
    hi = None
    excluded = set()
    for c in rule.guard.conjuncts:
        op = c[0]
        uses_input = "a" in c[1:]
        if not uses_input:
            if not _conjunct_holds(c, regs, None):
                return []
            continue
        if op == "is_bot":
            return []    # the input letter always carries a real atom
        if op == "not_bot":
            continue
        x, y = c[1], c[2]
        if x == "a" and y == "a":
            if op in ("neq", "lt"):
                return []
            continue
        other = _resolve(y if x == "a" else x, regs, None)
        if other is BOT:
            return []    # comparisons involving an empty register are false
        if op == "eq":
            if pin is not _UNSET and pin != other:
                return []
            pin = other
        elif op == "neq":
            excluded.add(other)
        else:  # lt
            if x == "a":
                hi = other if hi is None else min(hi, other)
            else:
                lo = other if lo is None else max(lo, other)
    candidates = atoms if pin is _UNSET else [a for a in atoms if a == pin]
    return [a for a in candidates
            if a not in excluded
            and (lo is None or a > lo)
            and (hi is None or a < hi)]


def config_expander(automaton: WeightedRegisterAutomaton, atoms: Sequence[Atom]):
    """Configuration transition driver over the letters tags x atoms.

    Returns (initial vector, letter list, expand, final_of) where
    expand(vec) yields (letter, successor vector) in letter order --
    exactly the letter matrices of restrict() applied without building
    them.  Used when the restricted automaton is too big to materialize.
    """
    atoms = tuple(atoms)
    letters = tuple((t, a) for t in automaton.tags for a in atoms)
    letter_pos = {letter: i for i, letter in enumerate(letters)}
    finals_cache: Dict[ConcreteState, Fraction] = {}

    def expand(vec: FinVec):
        buckets: Dict[Letter, dict] = {}
        for state, coeff in vec.items():
            control, regs = state
            for tag in automaton.tags:
                for rule in automaton._rules_by_source.get((control, tag), ()):
                    contribution = coeff * rule.weight
                    for a in atom_candidates(rule, regs, atoms):
                        succ = (rule.to_control, _apply_update(rule.update, regs, a))
                        bucket = buckets.setdefault((tag, a), {})
                        s = bucket.get(succ, Fraction(0)) + contribution
                        if s:
                            bucket[succ] = s
                        else:
                            bucket.pop(succ, None)
        for letter in sorted(buckets, key=letter_pos.__getitem__):
            vec_out = FinVec(buckets[letter])
            if vec_out:
                yield letter, vec_out

    def final_of(vec: FinVec) -> Fraction:
        total = Fraction(0)
        for state, coeff in vec.items():
            w = finals_cache.get(state)
            if w is None:
                w = automaton.final_weight(state)
                finals_cache[state] = w
            total += coeff * w
        return total

    return automaton.initial_vector(), letters, expand, final_of


# -- combination -------------------------------------------------------------

def _pad_rules(automaton: WeightedRegisterAutomaton, k: int, prefix: str):
    pad = ("bot",) * (k - automaton.k)
    transitions = tuple(
        TransitionRule(prefix + r.from_control, r.tag, prefix + r.to_control,
                       r.guard, r.update + pad, r.weight)
        for r in automaton.transitions)
    finals = tuple(FinalRule(prefix + r.control, r.guard, r.weight)
                   for r in automaton.finals)
    initial = tuple((prefix + c, w) for c, w in automaton.initial)
    controls = tuple(prefix + c for c in automaton.controls)
    return controls, initial, transitions, finals


def difference(a1: WeightedRegisterAutomaton,
               a2: WeightedRegisterAutomaton) -> WeightedRegisterAutomaton:
    """Automaton computing weight(a1, w) - weight(a2, w) for every word.

    Disjoint union with a2's final weights negated; controls get prefixes
    to stay disjoint, tag sets are merged, register counts are padded with
    permanently empty registers.
    """
    if a1.kind is not a2.kind:
        raise AutomatonError("cannot combine automata over different atom kinds")
    k = max(a1.k, a2.k)
    tags = a1.tags + tuple(t for t in a2.tags if t not in a1.tags)
    c1, i1, t1, f1 = _pad_rules(a1, k, "1:")
    c2, i2, t2, f2 = _pad_rules(a2, k, "2:")
    f2 = tuple(FinalRule(r.control, r.guard, -r.weight) for r in f2)
    return WeightedRegisterAutomaton(
        kind=a1.kind, k=k, controls=c1 + c2, tags=tags,
        initial=i1 + i2, transitions=t1 + t2, finals=f1 + f2)
