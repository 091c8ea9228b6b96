"""The unit norm index e_d, where (E_K : E_K n N(L_d)) = 2^e_d and E_K = <zeta_8, eps_2>.

Two independent routes:

* ``e_via_matrix``: a unit is a norm from L_d iff all of its symbols at the
  ramified primes are trivial, so e_d is the F2 rank of the 2 x r matrix of
  symbol bits (row 0: zeta_8, row 1: eps_2).
* ``e_via_cases``: the closed-form case analysis by residue classes mod 8 and
  mod 16 and the quartic symbols, written out clause by clause.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import OddSquarefree
from .errors import TheoremCheckError
from .symbols import quartic_2_over_p, quartic_p_over_2, symbol_pair


@dataclass(frozen=True)
class SymbolMatrix:
    primes: tuple[int, ...]
    columns: tuple[tuple[int, int], ...]

    def rows(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return tuple(c[0] for c in self.columns), tuple(c[1] for c in self.columns)

    def rank(self) -> int:
        return f2_rank([b0 | (b1 << 1) for b0, b1 in self.columns])


def f2_rank(vectors: list[int]) -> int:
    """Rank over F2 of vectors packed as int bitmasks (Gaussian elimination)."""
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


def symbol_matrix(d: OddSquarefree) -> SymbolMatrix:
    return SymbolMatrix(d.primes, tuple(symbol_pair(p).bits() for p in d.primes))


def e_via_matrix(d: OddSquarefree) -> int:
    return symbol_matrix(d).rank()


@dataclass(frozen=True)
class CaseResult:
    value: int
    rule: str


def _e_one_prime_1mod8(p: int) -> CaseResult:
    same = quartic_2_over_p(p) == quartic_p_over_2(p)
    if p % 16 == 1 and same:
        return CaseResult(0, "Lem-e_p-1")
    if p % 16 == 9 or not same:
        return CaseResult(1, "Lem-e_p-2")
    raise TheoremCheckError(f"no clause of the e_p lemma applies to {p}")


def _e_all_1mod8(primes: tuple[int, ...]) -> CaseResult:
    if len(primes) == 1:
        return _e_one_prime_1mod8(primes[0])

    nine = [p % 16 == 9 for p in primes]
    one = [p % 16 == 1 for p in primes]
    diff = [quartic_2_over_p(p) != quartic_p_over_2(p) for p in primes]
    idx = range(len(primes))

    item1 = all(one[i] and not diff[i] for i in idx)
    item2i = all(one) and any(diff)
    item2ii = any(nine) and not any(diff)
    couples = [(i, j) for i in idx for j in idx if nine[i] and diff[j]]
    item2iii = bool(couples) and all(diff[i] and nine[j] for i, j in couples)
    item3 = any(
        nine[i] and diff[j] and (not diff[i] or one[j])
        for i in idx
        for j in idx
        if i != j
    )

    hits = []
    if item1:
        hits.append(CaseResult(0, "Lem-e_d-1"))
    for flag, tag in ((item2i, "i"), (item2ii, "ii"), (item2iii, "iii")):
        if flag:
            hits.append(CaseResult(1, f"Lem-e_d-2.{tag}"))
    if item3:
        hits.append(CaseResult(2, "Lem-e_d-3"))
    values = {h.value for h in hits}
    if len(values) != 1:
        raise TheoremCheckError(
            f"e_d lemma clauses for {primes} give {[h.rule for h in hits] or 'nothing'}"
        )
    return hits[0]


def e_via_cases(d: OddSquarefree) -> CaseResult:
    """Closed-form e_d by the residue classes of the prime divisors of d."""
    classes = {p % 8 for p in d.primes}

    if classes == {3}:
        return CaseResult(1, "Thm-p-3mod8-1" if d.r == 1 else "Thm-same-coset-3")
    if classes == {5}:
        return CaseResult(1, "Thm-p-3mod8-1" if d.r == 1 else "Thm-same-coset-5")
    if classes == {7}:
        return CaseResult(0, "Thm-p-3mod8-2" if d.r == 1 else "Thm-same-coset-7")
    if classes == {1}:
        return _e_all_1mod8(d.primes)

    ones = [p for p in d.primes if p % 8 == 1]
    if 3 in classes and 5 in classes:
        return CaseResult(2, "Thm-mixed-1")
    if 3 in classes:
        hit = any(quartic_2_over_p(p) == -1 for p in ones)
        return CaseResult(2 if hit else 1, "Thm-mixed-2")
    if 5 in classes:
        hit = any(quartic_2_over_p(p) != quartic_p_over_2(p) for p in ones)
        return CaseResult(2 if hit else 1, "Thm-mixed-3")
    # only classes 1 and 7 remain; the 7s contribute trivial symbols
    inner = _e_all_1mod8(tuple(ones))
    return CaseResult(inner.value, f"Thm-mixed-4/{inner.rule}")
