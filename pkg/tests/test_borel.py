import pytest

from borelrange.borel import (
    Mode,
    c_prime,
    conjectured_c_prime,
    grid,
    n_borel,
    n_borel_p,
    verify_conjecture,
    verify_symmetry,
    verify_theorem_slstablerange,
)
from borelrange.combinatorics import Bipartition, PreconditionError, ZeroRepresentation, bipartitions
from borelrange.weyl import apply_perm, is_positive, scaled_rho_plus_mu
from oracles import c_prime_bruteforce

ZERO = Bipartition.of()
ADJ = Bipartition.of((1,), (1,))


class TestCPrime:
    def test_trivial_n2(self):
        assert c_prime(ZERO, 2).value == 0

    def test_adjoint_n4(self):
        assert c_prime(ADJ, 4).value == 1

    def test_trivial_n5(self):
        assert c_prime(ZERO, 5).value == 1

    def test_trivial_n3(self):
        assert c_prime(ZERO, 3).value == 0

    @pytest.mark.parametrize("bp,n,expected", [
        (Bipartition.of((2,)), 5, 1),
        (Bipartition.of((), (2,)), 5, 1),
        (Bipartition.of((3,)), 3, 0),
        (Bipartition.of((3,)), 4, 0),
        (Bipartition.of((3,)), 6, 1),
        (Bipartition.of((2, 1), (1,)), 6, 2),
    ], ids=str)
    def test_frozen_bruteforce_values(self, bp, n, expected):
        assert c_prime(bp, n).value == expected

    @pytest.mark.parametrize(
        "bp,n", [(bp, n) for bp in bipartitions(2) for n in range(max(2, bp.length), 7)], ids=str
    )
    def test_matches_bruteforce(self, bp, n):
        assert c_prime(bp, n).value == c_prime_bruteforce(bp.lam.parts, bp.lam_prime.parts, n)

    def test_preconditions(self):
        with pytest.raises(PreconditionError):
            c_prime(ZERO, 1)
        with pytest.raises(ZeroRepresentation):
            c_prime(Bipartition.of((1, 1, 1)), 2)

    def test_witnesses_fail_and_have_the_right_length(self):
        res = c_prime(Bipartition.of((3,)), 5)
        w = scaled_rho_plus_mu(Bipartition.of((3,)), 5)
        assert 0 not in res.witnesses
        for q, sigma in res.witnesses.items():
            assert sigma.length == q
            assert not is_positive(apply_perm(sigma, w))
        assert set(res.good_lengths) | set(res.witnesses) == set(range(11))

    def test_initial_segment_mode_stops_early(self):
        lit = c_prime(ADJ, 6)
        fast = c_prime(ADJ, 6, Mode.INITIAL_SEGMENT)
        assert fast.value == lit.value
        assert len(fast.scanned_lengths) == lit.value + 2
        assert len(lit.scanned_lengths) == 16


class TestBounds:
    def test_n_borel(self):
        assert n_borel(Bipartition.of((4,), (4,))) == 2
        assert n_borel(ZERO) == 1
        assert n_borel(Bipartition.of((3,))) == 7

    def test_n_borel_p(self):
        assert n_borel_p(Bipartition.of((4,), (4,)), 1) == 4
        assert n_borel_p(ZERO, 0) == 2
        assert n_borel_p(Bipartition.of((3,)), 5) == 12

    @pytest.mark.parametrize("bp", list(bipartitions(4)), ids=str)
    def test_n_borel_positive(self, bp):
        assert n_borel(bp) >= 1
        assert all(n_borel_p(bp, p) >= 2 for p in range(5))


class TestConjecture:
    def test_values(self):
        assert conjectured_c_prime(ZERO, 4) == 1
        assert conjectured_c_prime(ZERO, 2) == 0
        assert conjectured_c_prime(ADJ, 4) == 1

    def test_agrees_below_n_borel(self):
        bp = Bipartition.of((3,))
        for n in range(3, 7):
            assert conjectured_c_prime(bp, n) == c_prime(bp, n).value


class TestSweeps:
    def test_theorem_trivial_grid(self):
        rep = verify_theorem_slstablerange(0, 2)
        assert rep.ok and rep.checked == 1

    def test_theorem_small(self):
        assert verify_theorem_slstablerange(2, 6).ok

    def test_symmetry_pair(self):
        assert c_prime(Bipartition.of((2,)), 5).value == c_prime(Bipartition.of((), (2,)), 5).value
        assert c_prime(ADJ, 5).value == c_prime(ADJ.dual(), 5).value

    def test_symmetry_small(self):
        assert verify_symmetry(2, 6).ok

    def test_conjecture_trivial_rep(self):
        rep = verify_conjecture(0, 4)
        assert rep.mismatches == [] and not rep.asserted

    def test_conjecture_records_cells_below_n_borel(self):
        rep = verify_conjecture(3, 6)
        informative = [c for c in rep.cells if c["bp"] == "3|0"]
        assert [c["n"] for c in informative] == [2, 3, 4, 5, 6]
        assert all(c["below_n_b"] for c in informative)

    def test_parallel_matches_serial(self):
        a = verify_conjecture(2, 6, jobs=1).cells
        b = verify_conjecture(2, 6, jobs=2).cells
        assert a == b

    def test_grid_shape(self):
        cells = grid(1, 3)
        assert cells[0] == (ZERO, 2)
        assert all(n >= max(2, bp.length) for bp, n in cells)


@pytest.mark.slow
def test_extended_grid():
    assert verify_theorem_slstablerange(4, 10).ok
    assert verify_symmetry(4, 10).ok
    assert verify_conjecture(4, 10).mismatches == []
