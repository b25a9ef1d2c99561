"""Finitely supported vectors over the rationals, and incremental spans.

Vectors map opaque basis keys (any hashable, totally ordered family) to
nonzero exact rationals.  The same machinery serves configuration vectors
keyed by concrete automaton states and combinatorial vectors keyed by
k-subsets of atoms.  No floating point anywhere: zeroness questions are
exact, so all arithmetic is.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple


class FinVec:
    """Immutable sparse vector with exact rational coefficients.

    Zero coefficients are never stored; equality is coefficient-wise.
    """

    __slots__ = ("_e",)

    def __init__(self, entries: Optional[Mapping] = None):
        e = {}
        if entries:
            for key, coeff in entries.items():
                coeff = Fraction(coeff)
                if coeff != 0:
                    e[key] = coeff
        object.__setattr__(self, "_e", e)

    @classmethod
    def unit(cls, key, coeff=1) -> "FinVec":
        return cls({key: coeff})

    @classmethod
    def _wrap(cls, raw: dict) -> "FinVec":
        # raw must already be zero-free with Fraction values; not copied.
        v = cls.__new__(cls)
        object.__setattr__(v, "_e", raw)
        return v

    def __setattr__(self, name, value):
        raise AttributeError("FinVec is immutable")

    def __getitem__(self, key) -> Fraction:
        return self._e.get(key, Fraction(0))

    def get(self, key, default=Fraction(0)):
        return self._e.get(key, default)

    def keys(self):
        return self._e.keys()

    def items(self):
        return self._e.items()

    def __iter__(self):
        return iter(self._e)

    def __len__(self):
        return len(self._e)

    def __bool__(self):
        return bool(self._e)

    def __eq__(self, other):
        if not isinstance(other, FinVec):
            return NotImplemented
        return self._e == other._e

    def __hash__(self):
        return hash(frozenset(self._e.items()))

    def __add__(self, other: "FinVec") -> "FinVec":
        out = dict(self._e)
        for key, coeff in other._e.items():
            s = out.get(key, 0) + coeff
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return FinVec._wrap(out)

    def __sub__(self, other: "FinVec") -> "FinVec":
        out = dict(self._e)
        for key, coeff in other._e.items():
            s = out.get(key, 0) - coeff
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return FinVec._wrap(out)

    def __neg__(self) -> "FinVec":
        return FinVec._wrap({k: -c for k, c in self._e.items()})

    def scaled(self, c) -> "FinVec":
        c = Fraction(c)
        if c == 0:
            return FinVec()
        return FinVec._wrap({k: c * v for k, v in self._e.items()})

    def __rmul__(self, c):
        return self.scaled(c)

    def to_dict(self) -> dict:
        return dict(self._e)

    def __repr__(self):
        inner = ", ".join(f"{k!r}: {v}" for k, v in sorted(self._e.items()))
        return f"FinVec({{{inner}}})"


ZERO_VEC = FinVec()


def vec_add(u: FinVec, v: FinVec) -> FinVec:
    return u + v


def vec_scale(c, v: FinVec) -> FinVec:
    return v.scaled(c)


class SpanBasis:
    """Row span maintained in reduced echelon form.

    Each row's pivot coefficient is 1 and its pivot key is absent from all
    other rows; the pivot of a new row is the smallest key of the reduced
    residual.  Single writer: concurrent reads are fine between mutations.
    """

    def __init__(self):
        self._rows: List[dict] = []
        self._pivot_row: Dict[object, int] = {}
        # key -> set of row indices whose support includes the key; keeps
        # back-substitution proportional to actual fill.
        self._occ: Dict[object, set] = {}

    @property
    def dimension(self) -> int:
        return len(self._rows)

    def __len__(self):
        return len(self._rows)

    @property
    def rows(self) -> Tuple[FinVec, ...]:
        return tuple(FinVec(r) for r in self._rows)

    def pivots(self) -> Tuple[object, ...]:
        return tuple(self._pivot_row.keys())

    def _reduce_raw(self, raw: dict, coeffs: Optional[dict] = None) -> dict:
        # Eliminating a pivot never reintroduces another pivot (rows are in
        # reduced form), so one pass over the pivots present in `raw` is done.
        for key in [k for k in raw if k in self._pivot_row]:
            c = raw.get(key)
            if not c:
                continue
            idx = self._pivot_row[key]
            if coeffs is not None:
                coeffs[idx] = coeffs.get(idx, Fraction(0)) + c
            for rk, rv in self._rows[idx].items():
                s = raw.get(rk, 0) - c * rv
                if s:
                    raw[rk] = s
                else:
                    raw.pop(rk, None)
        return raw

    def reduce(self, v: FinVec) -> FinVec:
        """Residual of ``v`` after eliminating all existing pivots."""
        return FinVec._wrap(self._reduce_raw(v.to_dict()))

    def reduce_with_coefficients(self, v: FinVec):
        """Residual plus the row coefficients used, as (residual, {row_index: c})."""
        coeffs: dict = {}
        residual = FinVec._wrap(self._reduce_raw(v.to_dict(), coeffs))
        return residual, {i: c for i, c in coeffs.items() if c != 0}

    def contains(self, v: FinVec) -> bool:
        return not self.reduce(v)

    def insert(self, v: FinVec) -> bool:
        """Add ``v`` to the span; True iff the dimension grew."""
        raw = self._reduce_raw(v.to_dict())
        if not raw:
            return False
        pivot = min(raw)
        inv = 1 / raw[pivot]
        if inv != 1:
            raw = {k: c * inv for k, c in raw.items()}
        new_idx = len(self._rows)
        self._rows.append(raw)
        self._pivot_row[pivot] = new_idx
        for key in raw:
            self._occ.setdefault(key, set()).add(new_idx)
        # Restore the reduced form: strip the new pivot from older rows.
        for idx in list(self._occ.get(pivot, ())):
            if idx == new_idx:
                continue
            self._axpy(idx, -self._rows[idx][pivot], raw)
        return True

    def _axpy(self, idx: int, c: Fraction, src: dict):
        row = self._rows[idx]
        for key, value in src.items():
            s = row.get(key, 0) + c * value
            if s:
                if key not in row:
                    self._occ.setdefault(key, set()).add(idx)
                row[key] = s
            elif key in row:
                del row[key]
                self._occ[key].discard(idx)


def span_insert(basis: SpanBasis, v: FinVec) -> bool:
    return basis.insert(v)


def matrix_rank(rows: Iterable[FinVec]) -> int:
    """Exact rank over the rationals, by repeated span insertion."""
    basis = SpanBasis()
    for row in rows:
        basis.insert(row)
    return basis.dimension


def null_space_dimension(rows: Sequence[FinVec], column_keys: Sequence) -> int:
    """Columns minus rank, i.e. the rank-nullity complement."""
    columns = set(column_keys)
    if len(columns) != len(tuple(column_keys)):
        raise ValueError("column keys must be distinct")
    for row in rows:
        stray = [k for k in row if k not in columns]
        if stray:
            raise ValueError(f"row uses keys outside the declared columns: {stray!r}")
    return len(columns) - matrix_rank(rows)
