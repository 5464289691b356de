import pytest

from spreadborel.cm import cm_report, cm_witness, ideal_height, veronese_betti
from spreadborel.errors import ZeroIdealError
from spreadborel.ideals import borel_closure, minimal_generators, veronese_ideal, veronese_seed
from spreadborel.monomials import Monomial, SpreadVector, count_spread
from spreadborel.oracle import cover_height

M = Monomial.of
T = lambda *e: SpreadVector(e)  # noqa: E731

VERONESE_CASES = [(n, ell, SpreadVector(e)) for n in range(1, 9) for e in [(0,), (1,), (2, 1), (1, 0, 2)] for ell in range(1, len(e) + 2)]
VERONESE_CASES = [c for c in VERONESE_CASES if c[0] >= 1 + c[2].gap_sum(c[1])]


@pytest.fixture
def example():
    t = T(1, 0)
    return minimal_generators([M(1, 2), M(1, 3), M(1, 4, 4)], 4, t), t


class TestHeight:
    def test_examples(self, example):
        assert ideal_height(*example) == 1
        assert ideal_height(veronese_ideal(3, 2, T(1)), T(1)) == 2

    @pytest.mark.parametrize("n,ell,t", VERONESE_CASES)
    def test_veronese(self, n, ell, t):
        V = veronese_ideal(n, ell, t)
        assert ideal_height(V, t) == n - t.gap_sum(ell) == cover_height(V)

    def test_zero(self):
        with pytest.raises(ZeroIdealError):
            ideal_height(minimal_generators([], 3), T(1))

    def test_against_covers(self, grid):
        for I, t in grid:
            assert ideal_height(I, t) == cover_height(I)


class TestReport:
    def test_example(self, example):
        rep = cm_report(*example)
        assert not rep.is_cm and rep.witness is None
        assert (rep.height, rep.dim_quotient, rep.pd_quotient, rep.depth_quotient) == (1, 3, 3, 1)
        assert rep.depth_ideal == 2

    def test_triangle(self):
        rep = cm_report(veronese_ideal(3, 2, T(1)), T(1))
        assert rep.is_cm and rep.witness == M(2, 3)
        assert rep.render().splitlines()[-1] == "CM: true, witness x2*x3"

    @pytest.mark.parametrize("n,ell,t", VERONESE_CASES)
    def test_veronese_is_cm(self, n, ell, t):
        V = veronese_ideal(n, ell, t)
        rep = cm_report(V, t)
        assert rep.is_cm
        assert rep.witness == V.gens[-1] == veronese_seed(n, ell, t)
        assert rep.pd_quotient == n - t.gap_sum(ell)

    def test_unused_variables(self):
        # same ideal in a larger ring: still CM, witness found in the effective ambient
        t = T(1)
        I = minimal_generators(veronese_ideal(3, 2, t).gens, 6, t)
        rep = cm_report(I, t)
        assert rep.effective_n == 3 and rep.is_cm
        assert rep.dim_quotient == rep.depth_quotient == 4
        assert cm_witness(I, t, n=6) is None

    def test_report_invariants(self, grid):
        for I, t in grid:
            rep = cm_report(I, t)
            assert rep.depth_quotient <= rep.dim_quotient
            assert rep.is_cm == (rep.depth_quotient == rep.dim_quotient) == (rep.witness is not None)

    def test_equigenerated_cm_is_veronese(self, grid):
        for I, t in grid:
            if len(I.degrees) == 1 and cm_report(I, t).is_cm:
                assert I.gens == veronese_ideal(I.effective_n, I.degrees[0], t).gens

    def test_adding_witness_makes_cm(self, grid):
        tried = 0
        for I, t in grid:
            top = I.effective_n
            for ell in range(1, t.d + 1):
                if top - t.gap_sum(ell) < 1:
                    break
                w = veronese_seed(top, ell, t)
                if w in I:
                    continue
                J = borel_closure(list(I.gens) + [w], t, I.n)
                assert cm_report(J, t).is_cm
                tried += 1
        assert tried > 50


class TestVeroneseBetti:
    def test_examples(self):
        t = T(1)
        assert [veronese_betti(3, 2, t, i) for i in (1, 2, 3)] == [3, 2, 0]
        for n, ell, t in VERONESE_CASES:
            assert veronese_betti(n, ell, t, 1) == count_spread(n, ell, t)
            if n == 1 + t.gap_sum(ell):
                assert veronese_betti(n, ell, t, 1) == 1

    def test_errors(self):
        with pytest.raises(ZeroIdealError):
            veronese_betti(3, 2, T(3), 1)
        with pytest.raises(ValueError):
            veronese_betti(3, 2, T(1), 0)
