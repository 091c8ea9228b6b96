import pytest

from zeta8rank.arith import factor_odd_squarefree
from zeta8rank.errors import NotSquarefree, RangeError
from zeta8rank.rank import Kind
from zeta8rank.scan import odd_squarefree_in, parse_filter, scan


def _by_factoring(lo, hi):
    out = []
    for n in range(max(lo, 3) | 1, hi + 1, 2):
        try:
            out.append((n, tuple(factor_odd_squarefree(n))))
        except NotSquarefree:
            pass
    return out


@pytest.mark.parametrize("lo,hi", [(1, 5000), (40000, 80000), (10**7 - 3000, 10**7 + 3000)])
def test_sieve_matches_factoring(lo, hi):
    got = [(d.d, d.primes) for d in odd_squarefree_in(lo, hi)]
    assert got == _by_factoring(lo, hi)


def test_small_range():
    reps = list(scan(3, 10))
    assert [(r.d, r.rank) for r in reps] == [(3, 0), (5, 0), (7, 1)]


def test_parallel_scan_same_output():
    one = [r.to_dict() for r in scan(3, 6000)]
    two = [r.to_dict() for r in scan(3, 6000, jobs=2, chunk=500)]
    assert one == two


def test_filters():
    type22 = [r.d for r in scan(3, 50) if parse_filter("kind=Rank2Type22")(r)]
    assert {17, 21, 35} <= set(type22)
    assert all(r.classification.kind is Kind.TYPE22 for r in scan(3, 50) if r.d in type22)
    assert [r.d for r in scan(3, 20) if parse_filter("rank=1")(r)] == [7, 15]
    assert parse_filter(None)(next(scan(3, 3)))
    with pytest.raises(ValueError):
        parse_filter("colour=red")


def test_rank_eleven_window():
    d = 353 * 257 * 113
    hits = [r.d for r in scan(d - 200, d + 200) if parse_filter("rank=11")(r)]
    assert d in hits


def test_range_errors():
    with pytest.raises(RangeError):
        list(scan(10, 3))
    with pytest.raises(RangeError):
        list(odd_squarefree_in(3, 1 << 62))
