"""Class numbers of quadratic fields from reduced binary quadratic forms.

Imaginary fields: h is the number of primitive reduced positive definite forms
of discriminant D. Real fields: the narrow class number is the number of cycles
of reduced indefinite forms under the reduction operator rho; the norm of the
fundamental unit comes from the period parity of a continued fraction, and the
wide class number follows from the two.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .arith import factor_odd_squarefree, is_prime
from .errors import CapacityError, DomainError, NotSquarefree

MAX_DISC = 10**7
MAX_PERIOD = 10**6


@dataclass(frozen=True)
class BinaryQuadraticForm:
    a: int
    b: int
    c: int

    @property
    def disc(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def is_primitive(self) -> bool:
        return math.gcd(self.a, self.b, self.c) == 1

    def is_reduced(self) -> bool:
        D = self.disc
        a, b, c = self.a, self.b, self.c
        if D < 0:
            if a <= 0 or not (abs(b) <= a <= c):
                return False
            return b >= 0 if (abs(b) == a or a == c) else True
        s = math.isqrt(D)
        if s * s == D:
            return False
        # 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b
        return 0 < b <= s and (2 * abs(a) + b) ** 2 > D and (2 * abs(a) - b <= 0 or (2 * abs(a) - b) ** 2 < D)

    def rho(self) -> "BinaryQuadraticForm":
        """One reduction step on a reduced indefinite form; the image is again reduced."""
        D = self.disc
        s = math.isqrt(D)
        c2 = 2 * abs(self.c)
        b = s - (s + self.b) % c2
        return BinaryQuadraticForm(self.c, b, (b * b - D) // (4 * self.c))


@dataclass(frozen=True)
class ClassNumberResult:
    m: int
    D: int
    h: int
    h_narrow: int
    h2: int
    unit_norm: int | None = None

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "D": self.D,
            "h": self.h,
            "h_narrow": self.h_narrow,
            "h2": self.h2,
            "unit_norm": self.unit_norm,
        }


def two_part(n: int) -> int:
    return n & -n


def _check_squarefree(m: int) -> None:
    if m in (0, 1):
        raise DomainError(f"m = {m} does not define a quadratic field")
    n = abs(m)
    if n % 4 == 0:
        raise NotSquarefree(m, 2)
    n //= 2 if n % 2 == 0 else 1
    if n > 1:
        factor_odd_squarefree(n)


def fundamental_discriminant(m: int) -> int:
    _check_squarefree(m)
    return m if m % 4 == 1 else 4 * m


def prime_discriminant_count(D: int) -> int:
    """Number of prime discriminants in D, i.e. the number of primes dividing D."""
    n = abs(D)
    count = 0
    if n % 2 == 0:
        count += 1
        while n % 2 == 0:
            n //= 2
    if n > 1:
        count += len(factor_odd_squarefree(n))
    return count


def reduced_forms_imaginary(D: int) -> list[BinaryQuadraticForm]:
    if D >= 0 or D % 4 not in (0, 1):
        raise DomainError(f"bad negative discriminant {D}")
    out = []
    for a in range(1, math.isqrt(-D // 3) + 1):
        start = -a + 1
        if (start - D) % 2:
            start += 1
        for b in range(start, a + 1, 2):
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            if math.gcd(a, b, c) == 1:
                out.append(BinaryQuadraticForm(a, b, c))
    return out


def reduced_forms_real(D: int) -> list[BinaryQuadraticForm]:
    s = math.isqrt(D)
    if D <= 0 or D % 4 not in (0, 1) or s * s == D:
        raise DomainError(f"bad positive discriminant {D}")
    out = []
    for b in range(2 - D % 2, s + 1, 2):
        n = (D - b * b) // 4
        # |a| ranges over (sqrt(D) - b) / 2 < |a| < (sqrt(D) + b) / 2
        lo = (s - b) // 2 + 1 if (s - b) >= 0 else 1
        hi = (s + b) // 2
        for a in range(max(lo, 1), hi + 1):
            if n % a:
                continue
            for sa in (a, -a):
                f = BinaryQuadraticForm(sa, b, -n // sa)
                if f.is_reduced() and f.is_primitive():
                    out.append(f)
    return out


def rho_cycles(forms: list[BinaryQuadraticForm]) -> list[list[BinaryQuadraticForm]]:
    pool = set(forms)
    seen: set[BinaryQuadraticForm] = set()
    cycles = []
    for f in forms:
        if f in seen:
            continue
        cycle = [f]
        seen.add(f)
        g = f.rho()
        while g != f:
            if g not in pool or g in seen:
                raise ArithmeticError(f"rho left the reduced set or merged cycles at {g}")
            cycle.append(g)
            seen.add(g)
            g = g.rho()
        cycles.append(cycle)
    return cycles


def cf_period(P: int, Q: int, N: int) -> list[int]:
    """Period of the continued fraction of (P + sqrt(N)) / Q, with Q | N - P^2."""
    if (N - P * P) % Q:
        raise DomainError("Q must divide N - P^2")
    s = math.isqrt(N)
    seen: dict[tuple[int, int], int] = {}
    terms: list[int] = []
    while (P, Q) not in seen:
        if len(terms) > MAX_PERIOD:
            raise CapacityError(f"continued fraction period of sqrt({N}) exceeds {MAX_PERIOD}")
        seen[(P, Q)] = len(terms)
        a = (P + s) // Q
        terms.append(a)
        P = a * Q - P
        Q = (N - P * P) // Q
    return terms[seen[(P, Q)] :]


def fundamental_unit_norm(m: int) -> int:
    """Norm of the fundamental unit of Q(sqrt(m)), m > 1 squarefree: (-1)^period."""
    if m <= 1:
        raise DomainError("real quadratic field needs m > 1")
    _check_squarefree(m)
    if m % 4 == 1:
        period = cf_period(1, 2, m)
    else:
        period = cf_period(0, 1, m)
    return -1 if len(period) % 2 else 1


@lru_cache(maxsize=4096)
def class_number(m: int) -> ClassNumberResult:
    D = fundamental_discriminant(m)
    if abs(D) > MAX_DISC:
        raise CapacityError(f"|D| = {abs(D)} exceeds the enumeration bound {MAX_DISC}")
    if D < 0:
        h = len(reduced_forms_imaginary(D))
        return ClassNumberResult(m, D, h, h, two_part(h))
    h_narrow = len(rho_cycles(reduced_forms_real(D)))
    norm = fundamental_unit_norm(m)
    h = h_narrow if norm == -1 else h_narrow // 2
    return ClassNumberResult(m, D, h, h_narrow, two_part(h), norm)


def h2(m: int) -> int:
    """2-class number of Q(sqrt(m)); Q itself (m = 1) and squares count as 1."""
    if m == 1:
        return 1
    return class_number(m).h2


def _is_odd_prime(p: int) -> bool:
    return p > 2 and is_prime(p)
