import pytest

from zeta8rank.arith import OddSquarefree, jacobi, mod_pow, sum_of_two_squares
from zeta8rank.errors import DomainError
from zeta8rank.fixtures import QUARTIC_FIXTURES
from zeta8rank.symbols import (
    SymbolPair,
    prime_class,
    quartic_2_over_p,
    quartic_p_over_2,
    ramified_count_t,
    splitting_count,
    symbol_pair,
)


def primes_1_mod_8(primes, limit):
    return [p for p in primes if p % 8 == 1 and p < limit]


def test_prime_class_examples():
    assert prime_class(17).value == 1 and prime_class(17).mod16 == 1
    assert prime_class(73).mod16 == 9
    assert prime_class(7).value == 7 and prime_class(7).mod16 is None
    assert prime_class(7).name == "M7"
    with pytest.raises(DomainError):
        prime_class(2)
    with pytest.raises(DomainError):
        prime_class(15)


@pytest.mark.parametrize("p,expected", [(17, -1), (73, 1), (97, -1)])
def test_quartic_2_over_p_examples(p, expected):
    assert quartic_2_over_p(p) == expected


@pytest.mark.parametrize("p,expected", [(17, 1), (73, -1), (113, 1)])
def test_quartic_p_over_2_examples(p, expected):
    assert quartic_p_over_2(p) == expected


def test_quartic_symbols_match_published_values():
    for p, (two4, p4) in QUARTIC_FIXTURES.items():
        assert quartic_2_over_p(p) == two4, p
        assert quartic_p_over_2(p) == p4, p


def test_quartic_domain():
    for bad in (3, 5, 7, 13, 9, 25):
        with pytest.raises(DomainError):
            quartic_2_over_p(bad)
        with pytest.raises(DomainError):
            quartic_p_over_2(bad)


def test_quartic_2_over_p_by_enumeration(primes_below_1e5):
    # 2 is a fourth power mod p iff (2/p)_4 = 1
    for p in primes_1_mod_8(primes_below_1e5, 3000):
        fourth_powers = {pow(x, 4, p) for x in range(1, p)}
        assert quartic_2_over_p(p) == (1 if 2 in fourth_powers else -1), p


def test_euler_criterion_consistency(primes_below_1e5):
    for p in primes_1_mod_8(primes_below_1e5, 10**5):
        assert quartic_2_over_p(p) ** 2 == 1
        assert mod_pow(2, (p - 1) // 2, p) == 1


def test_cornacchia_identity_sample(primes_below_1e5):
    for p in primes_1_mod_8(primes_below_1e5, 5000):
        a, b = sum_of_two_squares(p)
        assert jacobi(2, a + b) == quartic_2_over_p(p) * quartic_p_over_2(p), p


def test_symbol_pair_examples():
    assert symbol_pair(3) == SymbolPair(-1, -1)
    assert symbol_pair(7) == SymbolPair(1, 1)
    assert symbol_pair(5) == SymbolPair(-1, 1)
    assert symbol_pair(17) == SymbolPair(1, -1)
    with pytest.raises(DomainError):
        symbol_pair(2)
    with pytest.raises(DomainError):
        symbol_pair(21)


def test_chi_zeta_tracks_mod_16(primes_below_1e5):
    for p in primes_1_mod_8(primes_below_1e5, 10**5):
        assert (symbol_pair(p).chi_zeta == 1) == (p % 16 == 1)


def test_symbol_pair_depends_only_on_class_and_quartic(primes_below_1e5):
    seen = {}
    for p in primes_below_1e5[1:3000]:
        key = (p % 16, quartic_2_over_p(p) if p % 8 == 1 else None)
        pair = symbol_pair(p)
        assert seen.setdefault(key, pair) == pair
        assert {pair.chi_zeta, pair.chi_eps} <= {-1, 1}


def test_bits_encoding():
    assert symbol_pair(3).bits() == (1, 1)
    assert symbol_pair(5).bits() == (1, 0)
    assert symbol_pair(7).bits() == (0, 0)


@pytest.mark.parametrize("d,t", [(3, 2), (7 * 17, 6), (73 * 89 * 97, 12), (7 * 3 * 113, 8)])
def test_ramified_count(d, t):
    assert ramified_count_t(OddSquarefree.of(d)) == t


def test_product_formula_over_ramified_primes(primes_below_1e5):
    # every rational prime has an even number of primes of K above it, each with the
    # same symbol value, so the product of (alpha, d / P) over P | d is 1
    for p in primes_below_1e5[1:500]:
        pair = symbol_pair(p)
        k = splitting_count(p)
        assert k % 2 == 0
        assert pair.chi_zeta**k == 1 and pair.chi_eps**k == 1
        # multiplicativity in the first argument: (zeta * eps, d / P)
        b0, b1 = pair.bits()
        assert (-1) ** (b0 ^ b1) == pair.chi_zeta * pair.chi_eps
