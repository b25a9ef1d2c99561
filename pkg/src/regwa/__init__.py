"""Weighted register automata over equality/ordered atoms, exactly.

Decides zeroness and equivalence of weighted register automata, language
equivalence of non-guessing unambiguous register automata by run counting,
and mechanizes the supporting combinatorics: cogs, balanced vectors,
balance-matrix ranks, configuration-chain growth, and spanning
decompositions of finitely supported forms.  All arithmetic is exact.
"""

from .atoms import (AtomKind, Atom, BOT, OrbitType, canonical_pool,
                    count_register_types, empty_registers,
                    enumerate_valuations, orbit_type, same_orbit)
from .vectors import (FinVec, SpanBasis, matrix_rank, null_space_dimension,
                      span_insert, vec_add, vec_scale)
from .automaton import (AutomatonError, FinalRule, Guard, TransitionRule,
                        WeightedRegisterAutomaton, atom_candidates,
                        difference)
from .finite_weighted import (FiniteWeightedAutomaton, forward_space,
                              fwa_equiv, fwa_minimize, fwa_weight,
                              fwa_zeroness)
from .equivalence import (EquivalenceDecision, InvalidAutomatonError,
                          LengthBoundReport, ResourceCeilingError,
                          ZeronessDecision, decide_equiv, decide_zeroness,
                          length_bound, state_orbit_count)
from .unambiguous import (AcceptRule, NondetRegisterAutomaton,
                          NondetTransition, UnambiguousDecision, accepts,
                          check_ambiguity_sampled, count_accepting_runs,
                          to_counting_weighted, unamb_equiv)
from .cogs import (BalanceMatrix, CogExtraction, CogSpec, balance_nullity,
                   balance_rank, build_balance_matrix, extract_cog,
                   is_balanced, make_cog, narrow_cogs, narrow_specs,
                   subset_key)
from .chains import ChainReport, chain_stabilization
from .forms import (EqualityForm, OrderedForm, decompose_form,
                    evaluate_combination, probe_atoms)
from .formats import (DocumentError, automaton_to_document, format_atom,
                      format_rational, format_word, parse_atom,
                      parse_automaton, parse_nondet, parse_rational,
                      parse_weighted, parse_word)

__version__ = "0.1.0"
