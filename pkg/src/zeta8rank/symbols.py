"""Quartic residue symbols and the local symbols of zeta_8 and eps_2 = 1 + sqrt(2).

For a rational prime p dividing d, the norm residue symbols (zeta_8, d / P) and
(eps_2, d / P) are the same for every prime P of Q(zeta_8) above p, so they
are tabulated once per rational prime.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import OddSquarefree, is_prime
from .errors import DomainError


@dataclass(frozen=True)
class PrimeClass:
    value: int
    mod16: int | None = None

    @property
    def name(self) -> str:
        return f"M{self.value}"


@dataclass(frozen=True)
class SymbolPair:
    chi_zeta: int
    chi_eps: int

    def bits(self) -> tuple[int, int]:
        """F2 encoding: bit 1 stands for the symbol value -1."""
        return int(self.chi_zeta < 0), int(self.chi_eps < 0)


def _require_odd_prime(p: int) -> None:
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise DomainError(f"{p} is not an odd prime")


def _require_1_mod_8(p: int) -> None:
    if p % 8 != 1:
        raise DomainError(f"{p} is not congruent to 1 mod 8")
    _require_odd_prime(p)


def prime_class(p: int) -> PrimeClass:
    _require_odd_prime(p)
    c = p % 8
    return PrimeClass(c, p % 16 if c == 1 else None)


def quartic_2_over_p(p: int) -> int:
    """(2/p)_4 by Euler's criterion: 2^((p-1)/4) mod p, which is +-1 here."""
    _require_1_mod_8(p)
    x = pow(2, (p - 1) // 4, p)
    if x == 1:
        return 1
    if x == p - 1:
        return -1
    raise ArithmeticError(f"2^((p-1)/4) mod {p} = {x}, not +-1")


def quartic_p_over_2(p: int) -> int:
    """(p/2)_4 = (-1)^((p-1)/8)."""
    _require_1_mod_8(p)
    return 1 if p % 16 == 1 else -1


_TABLE = {3: SymbolPair(-1, -1), 5: SymbolPair(-1, 1), 7: SymbolPair(1, 1)}


def symbol_pair(p: int) -> SymbolPair:
    _require_odd_prime(p)
    c = p % 8
    if c != 1:
        return _TABLE[c]
    p2 = quartic_p_over_2(p)
    return SymbolPair(p2, quartic_2_over_p(p) * p2)


def ramified_count_t(d: OddSquarefree) -> int:
    """Primes of Q(zeta_8) ramified in L_d: 4 above each p = 1 mod 8, 2 above the rest."""
    return 2 * (d.q + d.r)


def splitting_count(p: int) -> int:
    """Number of primes of Q(zeta_8) above the odd prime p."""
    _require_odd_prime(p)
    return 4 if p % 8 == 1 else 2
