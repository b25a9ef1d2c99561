import itertools
import math
import random
from fractions import Fraction

import pytest

from regwa import (CogSpec, FinVec, balance_nullity, balance_rank,
                   build_balance_matrix, extract_cog, is_balanced, make_cog,
                   matrix_rank, narrow_cogs, narrow_specs, subset_key)

from oracle_utils import dense_rank

F = Fraction


def atoms(*values):
    return tuple(F(v) for v in values)


def test_cog_spec_validation():
    with pytest.raises(ValueError):
        CogSpec((F(1), F(2), F(3)))
    with pytest.raises(ValueError):
        CogSpec((F(2), F(1)))
    with pytest.raises(ValueError):
        CogSpec(())


def test_make_cog_k1():
    cog = make_cog(CogSpec(atoms(1, 2)))
    assert dict(cog.items()) == {(F(1),): 1, (F(2),): -1}


def test_make_cog_k2_signs():
    cog = make_cog(CogSpec(atoms(1, 2, 3, 4)))
    assert dict(cog.items()) == {
        (F(1), F(3)): 1, (F(1), F(4)): -1, (F(2), F(3)): -1, (F(2), F(4)): 1}


@pytest.mark.parametrize("k", [1, 2, 3])
def test_cog_coefficient_sum_zero(k):
    cog = make_cog(CogSpec(atoms(*range(1, 2 * k + 1))))
    assert len(cog) == 2 ** k
    assert sum(c for _, c in cog.items()) == 0
    assert all(c in (1, -1) for _, c in cog.items())


def test_cogs_are_balanced():
    T = atoms(1, 2, 3, 4, 5, 6)
    for spec in narrow_specs(T, 2):
        assert is_balanced(make_cog(spec), T, 2)
    wide = CogSpec(atoms(1, 2, 3, 6))    # pairs (1,2) and (3,6); 4,5 inside T
    assert is_balanced(make_cog(wide), T, 2)


def test_unbalanced_example():
    v = FinVec({subset_key(atoms(1, 3)): 1, subset_key(atoms(1, 5)): -1})
    assert not is_balanced(v, atoms(1, 3, 5), 2)


def test_balanced_trivial_and_support_check():
    assert is_balanced(FinVec(), atoms(1, 2, 3), 2)
    v = FinVec({subset_key(atoms(1, 9)): 1})
    with pytest.raises(ValueError):
        is_balanced(v, atoms(1, 2, 3), 2)


def test_balance_matrix_shape_and_bases():
    m = build_balance_matrix(5, 2)
    assert len(m.rows) == 2 * math.comb(5, 1)
    assert len(m.columns) == math.comb(5, 2)
    assert balance_rank(5, 2) == 7
    for k in range(1, 5):
        assert balance_rank(k, k) == 1       # one column
        assert balance_rank(k + 3, 1) == 1   # one row of ones


def test_balance_rank_closed_form_and_oracle():
    for k in range(1, 4):
        for n in range(k, 8):
            m = build_balance_matrix(n, k)
            rank = m.rank()
            assert rank == math.comb(n, k) - math.comb(n - k, k)
            assert rank == dense_rank(m.rows)
            assert m.nullity() == math.comb(n - k, k)


def test_is_balanced_iff_in_null_space():
    rng = random.Random(12)
    T = atoms(1, 2, 3, 4, 5)
    k = 2
    m = build_balance_matrix(5, k, T)
    keys = list(m.columns)
    for _ in range(60):
        v = FinVec({key: F(rng.randint(-2, 2)) for key in rng.sample(keys, 4)})
        direct = is_balanced(v, T, k)
        in_null = all(
            sum((row[key] * v[key] for key in v.keys()), F(0)) == 0
            for row in m.rows)
        assert direct == in_null


def test_narrow_cog_counts():
    assert len(narrow_cogs(atoms(1, 2, 3, 4), 2)) == 1      # |T| = 2k
    assert len(narrow_cogs(atoms(1, 2, 3, 4), 1)) == 3      # adjacent pairs
    cogs6 = narrow_cogs(atoms(1, 2, 3, 4, 5, 6), 2)
    assert len(cogs6) == 6 and matrix_rank(cogs6) == 6


def test_narrow_cogs_span_null_space():
    for k in range(1, 4):
        for n in range(2 * k, 8):
            T = atoms(*range(1, n + 1))
            cogs = narrow_cogs(T, k)
            assert len(cogs) == math.comb(n - k, k)
            assert matrix_rank(cogs) == balance_nullity(n, k)


def test_extract_single_basis_vector():
    v = FinVec({subset_key(atoms(1, 2)): 1})
    ext = extract_cog(v, atoms(1, 2), 2)
    assert ext.alpha.alpha == (F(1), F(3, 2), F(2), F(5, 2))
    assert ext.vector == make_cog(ext.alpha)


def test_extract_from_cog_keeps_base():
    spec = CogSpec(atoms(1, 2, 3, 4))
    ext = extract_cog(make_cog(spec), atoms(1, 2, 3, 4), 2)
    assert ext.alpha.a_part == spec.a_part
    assert ext.vector == make_cog(ext.alpha)


def test_extract_scaling_invariance():
    v = FinVec({subset_key(atoms(1, 3)): F(2), subset_key(atoms(2, 3)): F(-5)})
    T = atoms(1, 2, 3)
    assert extract_cog(v, T, 2).vector == extract_cog(v.scaled(7), T, 2).vector


def test_extract_rejects_zero():
    with pytest.raises(ValueError):
        extract_cog(FinVec(), atoms(1, 2), 1)


def test_extract_random_properties():
    rng = random.Random(77)
    for _ in range(120):
        n = rng.randint(2, 8)
        k = rng.randint(1, min(3, n))
        T = atoms(*range(1, n + 1))
        keys = [subset_key(c) for c in itertools.combinations(T, k)]
        v = FinVec({key: F(rng.randint(-4, 4)) for key in rng.sample(keys, min(len(keys), rng.randint(1, 5)))})
        if not v:
            continue
        ext = extract_cog(v, T, k)
        assert ext.vector == make_cog(ext.alpha)
        assert len(ext.vector) == 2 ** k
        assert all(c in (1, -1) for _, c in ext.vector.items())
        ambient = sorted(set(T) | set(ext.alpha.alpha))
        assert is_balanced(ext.vector, ambient, k)
