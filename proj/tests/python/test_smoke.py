from fractions import Fraction

import hasse


def test_hilbert():
    assert hasse.hilbert(-1, -1, "real") == Fraction(1, 2)
    assert hasse.hilbert(-1, -1, "2") == Fraction(1, 2)
    assert hasse.hilbert(-1, -1, "3") == 0
    assert hasse.hilbert(17, 3, "17") == Fraction(1, 2)
    assert hasse.invariant_sum(-5, "7/3") == 0
    table = dict(hasse.hilbert_table(1, 5))
    assert all(v == 0 for v in table.values())


def test_solve():
    assert hasse.solve(2, [1, 1, 1], "real")["verdict"] == "insoluble"
    assert hasse.solve(2, [1, 1, -2], "2")["verdict"] == "soluble"
    rep = hasse.everywhere_soluble(2, [1, 1, 1])
    assert rep["verdict"] == "insoluble"
    assert hasse.conic_soluble(5, 1, -1, "5")
    assert not hasse.conic_soluble(5, 2, 1, "5")


def test_lr_curve():
    assert hasse.lr_local("real") == "soluble"
    assert hasse.lr_local("2") == "soluble"
    assert hasse.lr_local("17") == "soluble"
    rep = hasse.lr_verify(prime_bound=30, level=2)
    assert rep["obstructed"]
    assert rep["sum_set"] == [Fraction(1, 2)]


def test_families():
    assert hasse.count_points(1, 1) == 4
    assert hasse.count_points(2, 1) == 13
    assert hasse.delta(2, 3)["total"] == Fraction(3, 2)
    assert hasse.delta(3, 4)["total"] == 0
    assert abs(hasse.schanuel(1)["coefficient"] - 1.2158542) < 1e-6
    assert hasse.real_density(2, 3)["value"] == Fraction(3, 4)
    recs = hasse.census(2, 3, [10])
    assert recs[0]["N_tot"] == hasse.count_points(2, 10)
    assert 0 < recs[0]["N_loc"] < recs[0]["N_tot"]


def test_residue():
    locus = hasse.ramification_locus(-1, "t")
    assert len(locus) == 2
    assert hasse.ramification_locus(-1, "t*(1+t)^2") == locus
    assert not hasse.reduction_residue(7, "t")["trivial"]
    assert hasse.reduction_residue(7, "t^2")["trivial"]
