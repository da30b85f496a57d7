import random
from itertools import product
from math import comb

import pytest

from pureres.partitions import (
    check_partition,
    complement_in_rectangle,
    conjugate,
    contains,
    dim_gl,
    dim_skew,
    dim_super,
    is_horizontal_strip,
    pieri_expand,
    trim,
)

from oracles import count_ssyt, random_partition


def all_partitions(max_size, max_len=None):
    out = [()]
    for total in range(1, max_size + 1):
        def build(remaining, bound, prefix):
            if remaining == 0:
                out.append(tuple(prefix))
                return
            for p in range(min(bound, remaining), 0, -1):
                build(remaining - p, p, prefix + [p])
        build(total, total, [])
    if max_len is not None:
        out = [p for p in out if len(p) <= max_len]
    return out


class TestConjugate:
    def test_goldens(self):
        assert conjugate((2,)) == (1, 1)
        assert conjugate(()) == ()
        assert conjugate((5, 2, 0)) == (2, 2, 1, 1, 1)

    def test_involution_fuzz(self):
        rng = random.Random(1)
        for _ in range(1000):
            p = random_partition(rng, 30, 12)
            assert conjugate(conjugate(p)) == p

    def test_column_count(self):
        # independent column-count oracle
        rng = random.Random(2)
        for _ in range(100):
            p = random_partition(rng, 10, 6)
            for j in range(12):
                expect = sum(1 for x in p if x > j)
                got = conjugate(p)[j] if j < len(conjugate(p)) else 0
                assert got == expect


class TestStrips:
    def test_goldens(self):
        assert is_horizontal_strip((5, 2), (2, 2))
        assert not is_horizontal_strip((4, 3), (2, 2))  # a column gains two boxes
        assert is_horizontal_strip((3, 1), (3, 1))

    def test_column_characterization(self):
        rng = random.Random(3)
        for _ in range(300):
            outer = random_partition(rng, 8, 5)
            inner = random_partition(rng, 8, 5)
            expect = contains(outer, inner) and all(
                (conjugate(outer)[j] if j < len(conjugate(outer)) else 0)
                - (conjugate(inner)[j] if j < len(conjugate(inner)) else 0)
                <= 1
                for j in range(outer[0] if outer else 0)
            )
            assert is_horizontal_strip(outer, inner) == expect


class TestPieri:
    def test_goldens(self):
        assert pieri_expand((2, 2), 3, 3) == [(5, 2), (4, 2, 1), (3, 2, 2)]
        assert pieri_expand((1,), 1, 2) == [(2,), (1, 1)]
        # expanding the empty weight by a symmetric power gives one row only
        assert pieri_expand((), 2, 2) == [(2,)]
        assert (5, 1) in pieri_expand((3, 1), 2, 4)
        assert pieri_expand((2, 2), 0, 3) == [(2, 2)]

    def test_too_long_rejected(self):
        with pytest.raises(ValueError):
            pieri_expand((1, 1, 1), 1, 2)

    def test_strip_and_multiplicity_free(self):
        rng = random.Random(4)
        for _ in range(200):
            lam = random_partition(rng, 6, 3)
            m = rng.randint(max(1, len(lam)), 5)
            e = rng.randint(0, 6)
            mus = pieri_expand(lam, e, m)
            assert len(set(mus)) == len(mus)
            assert mus == sorted(mus, reverse=True)
            for mu in mus:
                assert is_horizontal_strip(mu, lam)
                assert sum(mu) - sum(lam) == e
                assert len(mu) <= m

    def test_dimension_sum(self):
        rng = random.Random(5)
        for _ in range(100):
            lam = random_partition(rng, 6, 4)
            m = rng.randint(max(1, len(lam)), 6)
            e = rng.randint(0, 6)
            total = sum(dim_gl(mu, m) for mu in pieri_expand(lam, e, m))
            assert total == dim_gl(lam, m) * comb(m + e - 1, e)


class TestDimGl:
    def test_goldens(self):
        assert dim_gl((2, 2), 3) == 6
        assert dim_gl((0,), 7) == 1
        assert dim_gl((2, 2, 1, 1, 1), 5) == 10
        assert dim_gl((1, 1, 1, 1), 3) == 0

    def test_against_ssyt(self):
        for lam in all_partitions(6, 3):
            for m in (1, 2, 3):
                assert dim_gl(lam, m) == count_ssyt(lam, (), m)
        assert dim_gl((4, 2, 1), 4) == count_ssyt((4, 2, 1), (), 4)

    def test_negative_parts(self):
        # determinant twist invariance
        assert dim_gl((1, 0, -1), 3) == dim_gl((2, 1, 0), 3)


class TestDimSkew:
    def test_goldens(self):
        assert dim_skew((2, 1), (1,), 2) == 4
        assert dim_skew((1,), (1,), 5) == 1
        assert dim_skew((3, 2), (), 3) == dim_gl((3, 2), 3)

    def test_invalid_shape(self):
        with pytest.raises(ValueError):
            dim_skew((1,), (2,), 3)

    def test_against_enumeration_small(self):
        for outer in all_partitions(6):
            inners = {
                trim(mu)
                for mu in product(*(range(p + 1) for p in outer))
                if all(a >= b for a, b in zip(mu, mu[1:]))
            }
            for inner in inners:
                for n in (1, 2, 3):
                    assert dim_skew(outer, inner, n) == count_ssyt(outer, inner, n), (
                        outer,
                        inner,
                        n,
                    )

    def test_against_enumeration_larger(self):
        rng = random.Random(6)
        done = 0
        while done < 25:
            outer = random_partition(rng, 5, 4)
            if not 7 <= sum(outer) <= 8:
                continue
            inner = trim(rng.randint(0, p) for p in outer)
            try:
                inner = check_partition(inner)
            except ValueError:
                continue
            assert dim_skew(outer, inner, 4) == count_ssyt(outer, inner, 4)
            done += 1


class TestDimSuper:
    def test_degree_two_decompositions(self):
        # Sym^2 of a (1,1)-dimensional graded space: even square + mixed
        assert dim_super((2,), 1, 1) == 2
        # its exterior square: mixed + odd square
        assert dim_super((1, 1), 1, 1) == 2
        assert dim_super((3, 3), 1, 1) == 0

    def test_specializations(self):
        rng = random.Random(7)
        for _ in range(50):
            lam = random_partition(rng, 5, 4)
            m = rng.randint(0, 3)
            n = rng.randint(0, 3)
            assert dim_super(lam, m, 0) == dim_gl(lam, m)
            assert dim_super(lam, 0, n) == dim_gl(conjugate(lam), n)

    def test_hook_vanishing_exhaustive(self):
        for lam in all_partitions(8):
            for m in range(4):
                for n in range(4):
                    lam_m1 = lam[m] if m < len(lam) else 0
                    assert (dim_super(lam, m, n) == 0) == (lam_m1 > n), (lam, m, n)


class TestComplement:
    def test_goldens(self):
        assert complement_in_rectangle((2, 2, 0), 7, 3) == (7, 5, 5)
        assert complement_in_rectangle((), 4, 2) == (4, 4)

    def test_involution(self):
        rng = random.Random(8)
        for _ in range(200):
            lam = random_partition(rng, 6, 4)
            width = max([6] + list(lam))
            height = max(4, len(lam))
            twice = complement_in_rectangle(
                complement_in_rectangle(lam, width, height), width, height
            )
            assert twice == lam

    def test_rejects_overflow(self):
        with pytest.raises(ValueError):
            complement_in_rectangle((5,), 4, 2)
        with pytest.raises(ValueError):
            complement_in_rectangle((1, 1, 1), 3, 2)
