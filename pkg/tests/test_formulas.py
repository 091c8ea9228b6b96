from fractions import Fraction

import pytest

from zeta8rank.arith import jacobi
from zeta8rank.errors import DomainError, FormulaInconsistency, NotCovered
from zeta8rank.formulas import (
    ProductFormulaInput,
    crosscheck,
    h2_biquad_sqrt2_minusd,
    h2_Ld_two_primes,
    h2_sqrt2_minusd,
    kuroda_h2,
    parry_rank,
    wada_exponent,
    wada_h2,
)
from zeta8rank.quadforms import h2

from conftest import trial_division_is_prime


def _pairs(c1, c2, bound):
    ps = [p for p in range(3, bound) if trial_division_is_prime(p)]
    return [(p, q) for p in ps if p % 8 == c1 for q in ps if q % 8 == c2 and p * q < bound]


@pytest.mark.parametrize("n,imag,v", [(2, True, 1), (3, True, 5), (2, False, 2), (3, False, 9), (1, True, 0)])
def test_wada_exponent(n, imag, v):
    assert wada_exponent(n, imag) == v


def test_wada_h2():
    assert wada_h2(ProductFormulaInput((1, 2, 2), 1, 2, True)) == 2
    with pytest.raises(FormulaInconsistency):
        wada_h2(ProductFormulaInput((1, 1, 1), 1, 2, True))
    with pytest.raises(DomainError):
        ProductFormulaInput((1, 2), 1, 2, True)
    with pytest.raises(DomainError):
        ProductFormulaInput((1, 2, 0), 1, 2, True)


def test_kuroda_h2():
    assert kuroda_h2(2, 4, 1) == 8
    assert kuroda_h2(2, 4, 2, h2_base=2) == 4
    assert kuroda_h2(1, 4, 1, omega_ratio=Fraction(1, 2)) == 2
    with pytest.raises(FormulaInconsistency):
        kuroda_h2(1, 1, 1, omega_ratio=Fraction(1, 2))


@pytest.mark.parametrize("p,q,value", [(5, 7, 4), (7, 5, 4), (19, 23, 4), (3, 7, 4), (13, 7, 4)])
def test_h2_Ld_two_primes_examples(p, q, value):
    assert h2_Ld_two_primes(p, q) == value


def test_h2_Ld_19_31_divisible_by_16():
    assert h2_Ld_two_primes(19, 31) % 16 == 0


def test_not_covered():
    for p, q in ((5, 13), (3, 5), (7, 7), (17, 7), (9, 7)):
        with pytest.raises(NotCovered):
            h2_Ld_two_primes(p, q)
    with pytest.raises(NotCovered):
        h2_biquad_sqrt2_minusd(3, 7)


def test_biquad_examples():
    assert h2_biquad_sqrt2_minusd(5, 7) == 4
    assert h2_biquad_sqrt2_minusd(13, 7) == h2_Ld_two_primes(13, 7)
    assert h2_sqrt2_minusd(35) == 4


def test_five_seven_family_identity():
    for p, q in _pairs(5, 7, 3000):
        value = h2_Ld_two_primes(p, q)
        assert value == h2_biquad_sqrt2_minusd(p, q), (p, q)
        assert (value == 4) == (jacobi(p, q) == -1), (p, q)
        if jacobi(p, q) == 1:
            assert value % 16 == 0


def test_three_seven_family_relation():
    for p, q in _pairs(3, 7, 3000):
        value = h2_Ld_two_primes(p, q)
        assert 2 * value == h2_sqrt2_minusd(p * q), (p, q)
        assert (value == 4) == (jacobi(p, q) == -1), (p, q)


@pytest.mark.parametrize("m,r", [(65, 2), (130, 3), (21, 1), (5, 0), (3, 0), (10, 1), (-5, 0)])
def test_parry_rank_examples(m, r):
    assert parry_rank(m) == r


def test_parry_rank_domain():
    for m in (0, 1, -1):
        with pytest.raises(DomainError):
            parry_rank(m)


def test_parry_rank_agrees_with_kuroda_parity():
    # Q(sqrt m, i) has even class number iff its 2-rank is positive; Kuroda over Q
    # for this field reads h = Q/2 * h(m) h(-m) h(-1) with Q in {1, 2}
    for m in range(2, 400):
        if any(m % (k * k) == 0 for k in range(2, 20)):
            continue
        prod = h2(m) * h2(-m)
        if parry_rank(m) == 0:
            assert prod <= 2, m
        else:
            assert prod >= 2, m


def test_crosscheck_five_seven():
    rep = crosscheck(35)
    assert rep.ok and rep.h2_exact == 4 and rep.family == "5-7"
    assert rep.to_dict()["ok"] is True


def test_crosscheck_three_seven_large():
    rep = crosscheck(19 * 31)
    assert rep.ok and rep.h2_exact == 64


def test_crosscheck_five_five_bound():
    rep = crosscheck(65)
    assert rep.ok and rep.h2_exact is None and rep.h2_divisor % 8 == 0


@pytest.mark.parametrize("p,value", [(17, 4), (73, 16)])
def test_crosscheck_primes_1_mod_8(p, value):
    rep = crosscheck(p)
    assert rep.ok and rep.h2_exact == value


def test_crosscheck_trivial_and_unit():
    assert crosscheck(3).h2_exact == 1
    assert crosscheck(2).family == "unit"


def test_crosscheck_sweep_ok():
    for d in range(3, 1200, 2):
        try:
            rep = crosscheck(d)
        except ValueError:
            continue
        assert rep.ok, (d, rep.checks)
