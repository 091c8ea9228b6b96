"""Range scans over canonical radicands, factored with a segmented sieve."""

from __future__ import annotations

import math
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor

from .arith import MAX_INPUT, OddSquarefree, _small_primes
from .errors import RangeError
from .rank import RankReport, rank2_canonical

BLOCK = 1 << 15


def odd_squarefree_in(lo: int, hi: int) -> Iterator[OddSquarefree]:
    """Every odd squarefree d with max(lo, 3) <= d <= hi, in increasing order."""
    if hi >= MAX_INPUT:
        raise RangeError(f"upper bound {hi} outside [0, 2^62)")
    lo = max(lo, 3)
    primes = _small_primes(math.isqrt(hi) + 1)[1:]
    for start in range(lo, hi + 1, BLOCK):
        stop = min(start + BLOCK, hi + 1)
        rest = list(range(start, stop))
        factors: list[list[int] | None] = [[] for _ in rest]
        for p in primes:
            if p * p > stop:
                break
            first = -start % p
            for i in range(first, len(rest), p):
                if rest[i] % (p * p) == 0:
                    factors[i] = None
                    continue
                if factors[i] is not None:
                    factors[i].append(p)
                    rest[i] //= p
        for i, fs in enumerate(factors):
            d = start + i
            if fs is None or d % 2 == 0:
                continue
            if rest[i] > 1:
                fs.append(rest[i])
            yield OddSquarefree(d, tuple(fs), d)


def _rank_block(ds: list[OddSquarefree]) -> list[RankReport]:
    return [rank2_canonical(d) for d in ds]


def scan(lo: int, hi: int, jobs: int = 1, chunk: int = 2048) -> Iterator[RankReport]:
    if lo > hi:
        raise RangeError(f"empty range [{lo}, {hi}]")
    if jobs <= 1:
        for d in odd_squarefree_in(lo, hi):
            yield rank2_canonical(d)
        return

    def chunks() -> Iterator[list[OddSquarefree]]:
        buf: list[OddSquarefree] = []
        for d in odd_squarefree_in(lo, hi):
            buf.append(d)
            if len(buf) == chunk:
                yield buf
                buf = []
        if buf:
            yield buf

    # executor.map keeps input order, so output stays deterministic
    with ProcessPoolExecutor(jobs) as ex:
        for block in ex.map(_rank_block, chunks()):
            yield from block


def parse_filter(spec: str | None):
    """'kind=Rank2Type22' or 'rank=11' -> predicate on RankReport."""
    if not spec:
        return lambda rep: True
    key, _, value = spec.partition("=")
    key = key.strip()
    value = value.strip()
    if key == "kind":
        return lambda rep: rep.classification.kind.value == value
    if key == "rank":
        target = int(value)
        return lambda rep: rep.rank == target
    raise ValueError(f"unknown filter {spec!r}; use kind=<Kind> or rank=<n>")
