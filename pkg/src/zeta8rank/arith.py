"""Exact integer primitives: primality, factorization, Jacobi symbols, two squares.

Everything here works on Python ints, but inputs are capped at 2**62 so that
results stay in the range the rest of the package is validated for.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError, NotSquarefree, RangeError

MAX_INPUT = 1 << 62
TRIAL_LIMIT = 10**6

# Deterministic for every n < 3.3 * 10**24, which covers MAX_INPUT.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _check_range(n: int) -> None:
    if n < 0 or n >= MAX_INPUT:
        raise RangeError(f"{n} outside [0, 2^62)")


def _small_primes(limit: int) -> list[int]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


_PRIMES: list[int] | None = None


def _trial_primes() -> list[int]:
    global _PRIMES
    if _PRIMES is None:
        _PRIMES = _small_primes(TRIAL_LIMIT)
    return _PRIMES


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for 0 <= n < 2**62.

    >>> is_prime(353), is_prime(21)
    (True, False)
    """
    _check_range(n)
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    u, s = n - 1, 0
    while u % 2 == 0:
        u //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, u, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """Return a nontrivial factor of the odd composite n (Brent's variant)."""
    for c in range(1, 200):
        y, r, q, g = 2, 1, 1, 1
        m = 128
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"pollard rho failed on {n}")


def _factor_into(n: int, out: list[int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out.append(n)
        return
    f = _pollard_rho(n)
    _factor_into(f, out)
    _factor_into(n // f, out)


def factor_odd_squarefree(d: int) -> list[int]:
    """Prime factors of the odd squarefree d, increasing.

    Raises NotSquarefree on the first repeated factor found.
    """
    _check_range(d)
    if d <= 1 or d % 2 == 0:
        raise DomainError(f"expected an odd integer > 1, got {d}")
    primes: list[int] = []
    n = d
    for p in _trial_primes():
        if p * p > n:
            break
        if n % p == 0:
            n //= p
            if n % p == 0:
                raise NotSquarefree(d, p)
            primes.append(p)
    if n > 1:
        rest: list[int] = []
        _factor_into(n, rest)
        rest.sort()
        for a, b in zip(rest, rest[1:]):
            if a == b:
                raise NotSquarefree(d, a)
        primes.extend(rest)
    return primes


def jacobi(a: int, n: int) -> int:
    if n <= 0 or n % 2 == 0:
        raise DomainError(f"Jacobi symbol needs a positive odd modulus, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def mod_pow(b: int, e: int, m: int) -> int:
    if m < 2:
        raise DomainError(f"modulus must be >= 2, got {m}")
    if e < 0:
        raise DomainError("negative exponent")
    return pow(b, e, m)


def sum_of_two_squares(p: int) -> tuple[int, int]:
    """Cornacchia for x^2 + y^2 = p, normalized to (odd, even), both positive."""
    if p % 4 != 1 or not is_prime(p):
        raise DomainError(f"{p} is not a prime congruent to 1 mod 4")
    # c^((p-1)/4) is a square root of -1 for any nonresidue c
    c = 2
    while jacobi(c, p) != -1:
        c += 1
    r0, r1 = p, pow(c, (p - 1) // 4, p)
    bound = math.isqrt(p)
    while r1 > bound:
        r0, r1 = r1, r0 % r1
    x = r1
    y = math.isqrt(p - x * x)
    if x * x + y * y != p:
        raise ArithmeticError(f"cornacchia failed for {p}")
    if x % 2 == 0:
        x, y = y, x
    return x, y


@dataclass(frozen=True)
class OddSquarefree:
    """Canonical radicand: odd squarefree d > 1 with L_d equal to the input's field."""

    d: int
    primes: tuple[int, ...]
    input_d: int = field(default=0, compare=False)

    def __post_init__(self):
        if self.d <= 1 or self.d % 2 == 0:
            raise DomainError(f"canonical radicand must be odd and > 1, got {self.d}")
        if math.prod(self.primes) != self.d or list(self.primes) != sorted(set(self.primes)):
            raise DomainError(f"bad factorization {self.primes} for {self.d}")

    @property
    def r(self) -> int:
        return len(self.primes)

    @property
    def q(self) -> int:
        return sum(1 for p in self.primes if p % 8 == 1)

    @classmethod
    def of(cls, d: int) -> "OddSquarefree":
        return cls(d, tuple(factor_odd_squarefree(d)), d)


@dataclass(frozen=True)
class UnitRadicand:
    """d0 in {+-1, +-2}: L_{d0} = Q(zeta_8), which has class number 1."""

    input_d: int
    d: int = 1
    primes: tuple[int, ...] = ()
    outside_paper_hypotheses: bool = True


def normalize_radicand(d0: int) -> OddSquarefree | UnitRadicand:
    """Drop the sign and a factor 2 from d0; both leave Q(zeta_8, sqrt(d0)) unchanged."""
    if d0 == 0:
        raise DomainError("radicand must be nonzero")
    n = abs(d0)
    _check_range(n)
    if n % 2 == 0:
        n //= 2
        if n % 2 == 0:
            raise NotSquarefree(d0, 2)
    if n == 1:
        return UnitRadicand(d0)
    return OddSquarefree(n, tuple(factor_odd_squarefree(n)), d0)
