import math
from fractions import Fraction

import pytest

from zeta8rank.errors import CapacityError, DomainError, NotSquarefree
from zeta8rank.quadforms import (
    MAX_DISC,
    BinaryQuadraticForm,
    class_number,
    fundamental_discriminant,
    fundamental_unit_norm,
    h2,
    prime_discriminant_count,
    reduced_forms_real,
    rho_cycles,
    two_part,
)

from conftest import trial_division_is_prime


def _squarefree(n):
    return all(n % (k * k) for k in range(2, math.isqrt(n) + 1))


def _legendre(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def _kronecker(D, n):
    # (D/n) for a fundamental discriminant D and n >= 1, by trial factorization of n
    out = 1
    k = 2
    while n > 1:
        if k * k > n:
            k = n
        while n % k == 0:
            n //= k
            if k == 2:
                out *= 0 if D % 2 == 0 else (1 if D % 8 in (1, 7) else -1)
            else:
                out *= _legendre(D, k)
        k += 1
    return out


def _imaginary_h_analytic(D):
    w = {-3: 6, -4: 4}.get(D, 2)
    total = sum(_kronecker(D, a) * a for a in range(1, -D))
    h = Fraction(-w * total, 2 * -D)
    assert h.denominator == 1
    return int(h)


def _smallest_unit(m, ylimit):
    """(norm, log eps) of the fundamental unit by brute force search, or None."""
    target = 4 if m % 4 == 1 else 1
    for y in range(1, ylimit):
        for sign in (-1, 1):
            x2 = m * y * y + sign * target
            x = math.isqrt(x2)
            if x * x == x2:
                eps = (x + y * math.sqrt(m)) / (2 if target == 4 else 1)
                return sign, math.log(eps)
    return None


@pytest.mark.parametrize(
    "m,h",
    [(-1, 1), (-2, 1), (-3, 1), (-5, 2), (-23, 3), (-35, 2), (-70, 4), (-161, 16), (35, 2), (79, 3), (82, 4), (226, 8), (5, 1)],
)
def test_class_number_examples(m, h):
    assert class_number(m).h == h


def test_narrow_examples():
    r = class_number(35)
    assert (r.h_narrow, r.unit_norm) == (4, 1)
    r = class_number(82)
    assert r.unit_norm == -1 and r.h_narrow == r.h


@pytest.mark.parametrize("m,expected", [(35, 2), (-35, 2), (70, 2), (-70, 4), (1, 1)])
def test_h2_small_table(m, expected):
    assert h2(m) == expected


def test_imaginary_matches_analytic_formula():
    for n in range(1, 700):
        if not _squarefree(n):
            continue
        m = -n
        D = fundamental_discriminant(m)
        assert class_number(m).h == _imaginary_h_analytic(D), m


def test_real_matches_analytic_formula():
    checked = 0
    for m in range(2, 160):
        if not _squarefree(m):
            continue
        unit = _smallest_unit(m, 20000)
        if unit is None:
            continue
        norm, log_eps = unit
        D = fundamental_discriminant(m)
        s = -0.5 * sum(_kronecker(D, a) * math.log(math.sin(math.pi * a / D)) for a in range(1, D))
        h = s / log_eps
        assert abs(h - round(h)) < 1e-6, m
        res = class_number(m)
        assert res.h == round(h), m
        assert res.unit_norm == norm, m
        checked += 1
    assert checked > 80


def test_unit_norm_by_pell_search():
    for m in range(2, 400):
        if not _squarefree(m):
            continue
        unit = _smallest_unit(m, 5000)
        if unit is not None:
            assert fundamental_unit_norm(m) == unit[0], m


def test_unit_norm_plus_one_when_prime_3_mod_4_divides():
    for m in range(2, 3000):
        if _squarefree(m) and any(p % 4 == 3 and m % p == 0 for p in range(3, m + 1, 2) if trial_division_is_prime(p)):
            assert fundamental_unit_norm(m) == 1, m


def test_genus_bound():
    for n in range(2, 1500):
        if not _squarefree(n):
            continue
        for m in (n, -n):
            res = class_number(m)
            mu = prime_discriminant_count(res.D)
            assert res.h_narrow % 2 ** (mu - 1) == 0, m


def test_reduced_real_forms_are_reduced_and_cycles_partition():
    for D in (5, 8, 12, 13, 140, 328, 904):
        forms = reduced_forms_real(D)
        assert all(f.is_reduced() and f.disc == D for f in forms)
        cycles = rho_cycles(forms)
        assert sum(len(c) for c in cycles) == len(forms)


def test_form_basics():
    f = BinaryQuadraticForm(1, 1, 6)
    assert f.disc == -23 and f.is_reduced() and f.is_primitive()
    assert not BinaryQuadraticForm(2, 2, 2).is_primitive()


def test_two_part():
    assert [two_part(n) for n in (1, 2, 12, 48, 7)] == [1, 2, 4, 16, 1]


def test_bad_inputs():
    with pytest.raises(DomainError):
        class_number(1)
    with pytest.raises(DomainError):
        class_number(0)
    with pytest.raises(NotSquarefree):
        class_number(12)
    with pytest.raises(NotSquarefree):
        class_number(-45)
    with pytest.raises(CapacityError):
        class_number(-2500001)  # |D| = 10000004
