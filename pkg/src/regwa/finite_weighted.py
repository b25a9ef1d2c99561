"""Explicit finite weighted automata over the rationals.

Zeroness and equivalence run in polynomial time via the forward space:
breadth-first search from the initial vector, keeping a span basis of the
configurations reached so far and extending by each letter matrix until
nothing new appears.  The automaton is zero exactly when the final
functional vanishes on that span.  Minimization is the classical double
reduction (reachability then observability, by reversal).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .vectors import FinVec, SpanBasis


@dataclass
class FiniteWeightedAutomaton:
    """States and letters are opaque labels; matrices are sparse, row-major.

    matrices[letter][row][col] is the transition weight; absent entries
    are zero.  All weights are exact rationals.
    """

    states: tuple
    letters: tuple
    initial: Dict[int, Fraction]
    matrices: Dict[object, Dict[int, Dict[int, Fraction]]]
    final: Dict[int, Fraction]

    def __post_init__(self):
        self.states = tuple(self.states)
        self.letters = tuple(self.letters)
        self.initial = {i: Fraction(w) for i, w in self.initial.items() if w != 0}
        self.final = {i: Fraction(w) for i, w in self.final.items() if w != 0}

    @property
    def size(self) -> int:
        return len(self.states)

    def apply(self, vec: FinVec, letter) -> FinVec:
        rows = self.matrices[letter]
        out: dict = {}
        for i, coeff in vec.items():
            for j, w in rows.get(i, {}).items():
                s = out.get(j, Fraction(0)) + coeff * w
                if s:
                    out[j] = s
                else:
                    out.pop(j, None)
        return FinVec(out)

    def initial_vector(self) -> FinVec:
        return FinVec(self.initial)

    def final_of(self, vec: FinVec) -> Fraction:
        return sum((coeff * self.final[i] for i, coeff in vec.items() if i in self.final),
                   Fraction(0))

    def weight(self, word: Sequence) -> Fraction:
        known = set(self.letters)
        vec = self.initial_vector()
        for letter in word:
            if letter not in known:
                raise ValueError(f"unknown letter {letter!r}")
            vec = self.apply(vec, letter)
        return self.final_of(vec)


def fwa_weight(m: FiniteWeightedAutomaton, word: Sequence) -> Fraction:
    return m.weight(word)


@dataclass
class SpanBfsResult:
    witness: Optional[tuple]      # shortest-found word with nonzero weight
    span: SpanBasis
    dims: List[int]               # span dimension after each word length
    rounds: int
    basis_words: List[tuple] = field(default_factory=list)


def span_bfs(initial_vec: FinVec,
             expand: Callable[[FinVec], Iterable[Tuple[object, FinVec]]],
             final_of: Optional[Callable[[FinVec], Fraction]] = None,
             max_rounds: Optional[int] = None) -> SpanBfsResult:
    """Breadth-first configuration search with span pruning.

    ``expand`` yields (letter, successor vector) pairs in a fixed letter
    order; words are explored by length, and a word is extended only if
    its configuration grew the span.  With ``final_of`` given, the search
    stops at the first explored word with nonzero final value -- a genuine
    witness, since only raw configurations are ever tested.
    """
    span = SpanBasis()
    dims: List[int] = []
    basis_words: List[tuple] = []
    if final_of is not None and final_of(initial_vec) != 0:
        return SpanBfsResult(witness=(), span=span, dims=dims, rounds=0)
    frontier: List[Tuple[tuple, FinVec]] = []
    if span.insert(initial_vec):
        frontier.append(((), initial_vec))
        basis_words.append(())
    dims.append(span.dimension)
    rounds = 0
    while frontier and (max_rounds is None or rounds < max_rounds):
        rounds += 1
        nxt: List[Tuple[tuple, FinVec]] = []
        for word, vec in frontier:
            for letter, succ in expand(vec):
                if final_of is not None and final_of(succ) != 0:
                    return SpanBfsResult(witness=word + (letter,), span=span,
                                         dims=dims, rounds=rounds,
                                         basis_words=basis_words)
                if span.insert(succ):
                    nxt.append((word + (letter,), succ))
                    basis_words.append(word + (letter,))
        dims.append(span.dimension)
        frontier = nxt
    return SpanBfsResult(witness=None, span=span, dims=dims, rounds=rounds,
                         basis_words=basis_words)


def _matrix_expander(m: FiniteWeightedAutomaton):
    def expand(vec: FinVec):
        for letter in m.letters:
            succ = m.apply(vec, letter)
            if succ:
                yield letter, succ
    return expand


def fwa_zeroness(m: FiniteWeightedAutomaton) -> Tuple[bool, Optional[tuple]]:
    """(True, None) if every word has weight zero, else (False, witness).

    The forward-space dimension is at most the state count, so the search
    always terminates within that many rounds.
    """
    result = span_bfs(m.initial_vector(), _matrix_expander(m), final_of=m.final_of)
    return result.witness is None, result.witness


def forward_space(m: FiniteWeightedAutomaton) -> Tuple[int, int]:
    """(dimension, rounds) of the full forward-space search, no final check."""
    result = span_bfs(m.initial_vector(), _matrix_expander(m))
    return result.span.dimension, result.rounds


def _disjoint_union_negated(m1: FiniteWeightedAutomaton,
                            m2: FiniteWeightedAutomaton) -> FiniteWeightedAutomaton:
    if set(m1.letters) != set(m2.letters):
        raise ValueError("automata must share the same letter set")
    off = m1.size
    states = m1.states + m2.states
    initial = dict(m1.initial)
    for i, w in m2.initial.items():
        initial[i + off] = w
    matrices: Dict[object, Dict[int, Dict[int, Fraction]]] = {}
    for letter in m1.letters:
        rows = {i: dict(cols) for i, cols in m1.matrices.get(letter, {}).items()}
        for i, cols in m2.matrices.get(letter, {}).items():
            rows[i + off] = {j + off: w for j, w in cols.items()}
        matrices[letter] = rows
    final = dict(m1.final)
    for i, w in m2.final.items():
        final[i + off] = -w
    return FiniteWeightedAutomaton(states=states, letters=m1.letters,
                                   initial=initial, matrices=matrices, final=final)


def fwa_equiv(m1: FiniteWeightedAutomaton,
              m2: FiniteWeightedAutomaton) -> Tuple[bool, Optional[tuple]]:
    """Equivalence by zeroness of the disjoint union with negated finals."""
    zero, witness = fwa_zeroness(_disjoint_union_negated(m1, m2))
    return zero, witness


# -- minimization -------------------------------------------------------------

def _forward_reduce(m: FiniteWeightedAutomaton) -> FiniteWeightedAutomaton:
    """Conjugate onto a basis of the forward (reachable) space."""
    result = span_bfs(m.initial_vector(), _matrix_expander(m))
    span = result.span
    rows = span.rows
    d = len(rows)
    if d == 0:
        return FiniteWeightedAutomaton(states=(), letters=m.letters,
                                       initial={}, matrices={letter: {} for letter in m.letters},
                                       final={})
    residual, coeffs = span.reduce_with_coefficients(m.initial_vector())
    assert not residual, "initial vector escaped its own span"
    matrices: Dict[object, Dict[int, Dict[int, Fraction]]] = {}
    for letter in m.letters:
        out_rows: Dict[int, Dict[int, Fraction]] = {}
        for i, row in enumerate(rows):
            image = m.apply(row, letter)
            res, cs = span.reduce_with_coefficients(image)
            assert not res, "forward space is not letter-invariant"
            if cs:
                out_rows[i] = cs
        matrices[letter] = out_rows
    final = {}
    for i, row in enumerate(rows):
        w = m.final_of(row)
        if w != 0:
            final[i] = w
    return FiniteWeightedAutomaton(states=tuple(range(d)), letters=m.letters,
                                   initial=coeffs, matrices=matrices, final=final)


def _reverse(m: FiniteWeightedAutomaton) -> FiniteWeightedAutomaton:
    matrices: Dict[object, Dict[int, Dict[int, Fraction]]] = {}
    for letter in m.letters:
        rows: Dict[int, Dict[int, Fraction]] = {}
        for i, cols in m.matrices.get(letter, {}).items():
            for j, w in cols.items():
                rows.setdefault(j, {})[i] = w
        matrices[letter] = rows
    return FiniteWeightedAutomaton(states=m.states, letters=m.letters,
                                   initial=dict(m.final), matrices=matrices,
                                   final=dict(m.initial))


def fwa_minimize(m: FiniteWeightedAutomaton) -> FiniteWeightedAutomaton:
    """Equivalent automaton of minimal dimension (reachable then observable)."""
    reachable = _forward_reduce(m)
    return _reverse(_forward_reduce(_reverse(reachable)))
