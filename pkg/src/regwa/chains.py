"""Growth of the configuration span, length by length, over a finite pool.

The subspace spanned by configurations of words of length at most i grows
with i; the experiment tracks its dimension over words restricted to a
finite atom pool.  Once a level adds nothing, no later level can: every
configuration of a longer pool word is a letter image of spanned ones.
The stall level is therefore the stabilization index of the pooled chain.
It witnesses -- but does not prove -- stabilization of the unrestricted
chain.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .atoms import Atom
from .automaton import WeightedRegisterAutomaton, config_expander
from .finite_weighted import span_bfs


@dataclass
class ChainReport:
    dimensions: Tuple[int, ...]          # span dimension after each length
    stabilization_index: Optional[int]   # first length with no growth

    def to_json(self) -> dict:
        return {"dimensions": list(self.dimensions),
                "stabilization_index": self.stabilization_index}


def chain_stabilization(automaton: WeightedRegisterAutomaton,
                        pool: Sequence[Atom], max_len: int) -> ChainReport:
    """Dimension per word length and the first no-growth length, if reached.

    The dimension sequence is non-decreasing and bounded by the number of
    concrete states over the pool.  None means the chain was still growing
    at max_len.
    """
    initial, letters, expand, _ = config_expander(automaton, tuple(pool))
    result = span_bfs(initial, expand, max_rounds=max_len)
    dims = list(result.dims)
    index = None
    previous = 0
    for i, d in enumerate(dims):
        if d == previous:
            index = i
            break
        previous = d
    return ChainReport(dimensions=tuple(dims), stabilization_index=index)
