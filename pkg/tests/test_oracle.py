import random
from itertools import combinations
from math import comb

import pytest

from spreadborel.errors import GeneratorCapError, LatticeCapError, OracleCapError, ZeroIdealError
from spreadborel.ideals import minimal_generators, veronese_ideal
from spreadborel.monomials import Monomial, SpreadVector
from spreadborel.oracle import (
    koszul_betti,
    lcm_lattice,
    matrix_rank,
    membership,
    minimal_primes,
    taylor_betti,
    taylor_strands,
)

M = Monomial.of

# Six-vertex triangulation of the real projective plane.
RP2_FACETS = ["124", "126", "135", "136", "145", "234", "235", "256", "346", "456"]


def rp2_ideal():
    faces = {frozenset(map(int, f)) for f in RP2_FACETS}
    nonfaces = [c for c in combinations(range(1, 7), 3) if frozenset(c) not in faces]
    return minimal_generators([Monomial(c) for c in nonfaces], 6)


def covers_by_enumeration(I):
    supports = [u.support for u in I.gens]
    covers = [
        frozenset(c)
        for r in range(I.n + 1)
        for c in combinations(range(1, I.n + 1), r)
        if all(s & set(c) for s in supports)
    ]
    return sorted(
        (c for c in covers if not any(o < c for o in covers)),
        key=lambda s: (len(s), sorted(s)),
    )


class TestTaylorBetti:
    def test_example(self):
        I = minimal_generators([M(1, 2), M(1, 3), M(1, 4, 4)], 4)
        assert taylor_betti(I).entries == {
            (0, 0): 1,
            (1, 2): 2, (1, 3): 1,
            (2, 3): 1, (2, 4): 2,
            (3, 5): 1,
        }

    def test_principal(self):
        I = minimal_generators([M(2, 3, 3)], 4)
        assert taylor_betti(I).entries == {(0, 0): 1, (1, 3): 1}

    def test_complete_intersection(self):
        I = minimal_generators([M(1, 2), M(3, 4)], 4)
        assert taylor_betti(I).entries == {(0, 0): 1, (1, 2): 2, (2, 4): 1}

    def test_zero_and_unit(self):
        assert taylor_betti(minimal_generators([], 3)).entries == {(0, 0): 1}
        assert taylor_betti(minimal_generators([Monomial()], 3)).entries == {}

    def test_cap(self):
        V = veronese_ideal(5, 2, SpreadVector((0,)))
        assert len(V) == 15
        with pytest.raises(GeneratorCapError) as err:
            taylor_betti(V)
        assert err.value.cap == 14
        assert taylor_betti(V, cap=15).total(1) == 15

    def test_characteristic_two(self):
        I = rp2_ideal()
        assert len(I) == 10
        over_q = taylor_betti(I, field="QQ")
        over_2 = taylor_betti(I, field="GF2")
        assert over_q.totals() == {0: 1, 1: 10, 2: 15, 3: 6}
        assert over_2.totals() == {0: 1, 1: 10, 2: 15, 3: 7, 4: 1}

    def test_fields_agree_on_borel(self, grid):
        for I, _ in grid[:60]:
            assert taylor_betti(I, field="GF2") == taylor_betti(I, field="QQ")


class TestKoszulBetti:
    def test_agrees_with_taylor(self, grid):
        for I, _ in grid[:80]:
            assert koszul_betti(I) == taylor_betti(I)

    def test_characteristic_two(self):
        I = rp2_ideal()
        assert koszul_betti(I) == taylor_betti(I)
        assert koszul_betti(I, field="GF2") == taylor_betti(I, field="GF2")

    def test_square_of_maximal_ideal(self):
        # beyond the Taylor cap; S/m^2 has beta_i = i * C(n+1, i+1)
        for n in (5, 6):
            V = veronese_ideal(n, 2, SpreadVector((0,)))
            assert koszul_betti(V).totals() == {0: 1, **{i: i * comb(n + 1, i + 1) for i in range(1, n + 1)}}

    def test_zero_and_unit(self):
        assert koszul_betti(minimal_generators([], 3)).entries == {(0, 0): 1}
        assert koszul_betti(minimal_generators([Monomial()], 3)).entries == {}

    def test_lattice(self):
        I = minimal_generators([M(1, 2), M(2, 3)], 3)
        assert lcm_lattice(I) == {(1, 1, 0), (0, 1, 1), (1, 1, 1)}
        V = veronese_ideal(6, 2, SpreadVector((0,)))
        with pytest.raises(LatticeCapError) as err:
            koszul_betti(V, cap=100)
        assert isinstance(err.value, OracleCapError) and err.value.cap == 100


class TestStrands:
    def test_boundary_squares_to_zero(self, grid):
        ideals = [I for I, _ in grid[:60]] + [rp2_ideal()]
        for I in ideals:
            for strand in taylor_strands(I):
                assert strand.composition_is_zero()

    def test_strands_live_on_lcms(self):
        I = minimal_generators([M(1, 2), M(2, 3), M(1, 3, 3)], 3)
        gens = [u.exponents(3) for u in I.gens]
        for strand in taylor_strands(I):
            for masks in strand.chains.values():
                for mask in masks:
                    lcm = [0, 0, 0]
                    for b, g in enumerate(gens):
                        if mask >> b & 1:
                            lcm = [max(x, y) for x, y in zip(lcm, g)]
                    assert tuple(lcm) == strand.multidegree

    def test_rank_independent_of_order(self):
        rng = random.Random(3)
        for _ in range(50):
            rows = [
                {c: rng.choice([-1, 1, 2]) for c in rng.sample(range(8), rng.randint(0, 5))}
                for _ in range(rng.randint(1, 9))
            ]
            base = matrix_rank(rows)
            perm = list(range(8))
            rng.shuffle(perm)
            shuffled = [{perm[c]: v for c, v in r.items()} for r in rows]
            rng.shuffle(shuffled)
            assert matrix_rank(shuffled) == base

    def test_rank_known(self):
        assert matrix_rank([{0: 1, 1: 1}, {0: 1, 1: -1}]) == 2
        assert matrix_rank([{0: 1, 1: 1}, {0: 1, 1: -1}], field="GF2") == 1
        assert matrix_rank([]) == 0


class TestMinimalPrimes:
    def test_examples(self):
        I = minimal_generators([M(1, 2), M(1, 3), M(1, 4, 4)], 4)
        assert minimal_primes(I) == [frozenset({1}), frozenset({2, 3, 4})]
        V = veronese_ideal(3, 2, SpreadVector((1,)))
        assert minimal_primes(V) == [frozenset({1, 2}), frozenset({1, 3}), frozenset({2, 3})]
        P = minimal_generators([M(1, 3, 3)], 4)
        assert minimal_primes(P) == [frozenset({1}), frozenset({3})]

    def test_zero(self):
        with pytest.raises(ZeroIdealError):
            minimal_primes(minimal_generators([], 3))

    def test_against_enumeration(self, grid):
        for I, _ in grid:
            assert minimal_primes(I) == covers_by_enumeration(I)
        assert minimal_primes(rp2_ideal()) == covers_by_enumeration(rp2_ideal())


class TestMembership:
    def test_examples(self):
        assert membership(M(1, 2, 4), minimal_generators([M(1, 2)], 4))
        assert not membership(M(2, 3), minimal_generators([M(1, 2), M(1, 3)], 4))
        I = minimal_generators([M(1, 2), M(1, 3)], 4)
        assert all(membership(u, I) for u in I.gens)

    def test_agrees_with_divisibility(self, grid):
        rng = random.Random(5)
        for I, _ in grid[:50]:
            for _ in range(20):
                w = Monomial(tuple(rng.randint(1, I.n) for _ in range(rng.randint(0, 4))))
                assert membership(w, I) == (w in I)
