"""2-rank of Cl(L_d), L_d = Q(zeta_8, sqrt(d)), and the classification of d by it."""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass
from enum import Enum

from .arith import OddSquarefree, UnitRadicand, jacobi, normalize_radicand
from .errors import TheoremCheckError
from .symbols import (
    quartic_2_over_p,
    quartic_p_over_2,
    ramified_count_t,
    splitting_count,
    symbol_pair,
)
from .unit_index import CaseResult, e_via_cases, e_via_matrix, symbol_matrix

log = logging.getLogger(__name__)


class Kind(str, Enum):
    TRIVIAL = "Trivial"
    CYCLIC = "CyclicNontrivial"
    TYPE22 = "Rank2Type22"
    RANK2_NOT_ELEMENTARY = "Rank2NotElementary"
    RANK_AT_LEAST_3 = "RankAtLeast3"
    OUTSIDE = "OutsidePaper"


@dataclass(frozen=True)
class Classification:
    kind: Kind
    witness: str
    # power of 2 known to divide h2(L_d) when the rank-2 group is not (2,2)
    h2_divisor: int | None = None

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "witness": self.witness, "h2_divisor": self.h2_divisor}


@dataclass(frozen=True)
class PrimeInfo:
    p: int
    mod8: int
    mod16: int | None
    splitting: int
    chi_zeta: int
    chi_eps: int
    quartic_2_over_p: int | None = None
    quartic_p_over_2: int | None = None

    @classmethod
    def of(cls, p: int) -> "PrimeInfo":
        pair = symbol_pair(p)
        extra = {}
        if p % 8 == 1:
            extra = {"quartic_2_over_p": quartic_2_over_p(p), "quartic_p_over_2": quartic_p_over_2(p)}
        return cls(
            p=p,
            mod8=p % 8,
            mod16=p % 16 if p % 8 == 1 else None,
            splitting=splitting_count(p),
            chi_zeta=pair.chi_zeta,
            chi_eps=pair.chi_eps,
            **extra,
        )


@dataclass(frozen=True)
class RankReport:
    input_d: int
    d: int
    primes: tuple[PrimeInfo, ...]
    t: int
    e_matrix: int
    e_cases: int
    rule: str
    rank: int
    classification: Classification
    agreement: bool
    closed_form_rank: int | None = None
    outside_paper_hypotheses: bool = False

    def to_dict(self) -> dict:
        out = asdict(self)
        out["primes"] = [asdict(p) for p in self.primes]
        out["classification"] = self.classification.to_dict()
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "RankReport":
        data = dict(data)
        data["primes"] = tuple(PrimeInfo(**p) for p in data["primes"])
        c = data["classification"]
        data["classification"] = Classification(Kind(c["kind"]), c["witness"], c.get("h2_divisor"))
        return cls(**data)


CSV_COLUMNS = ("input_d", "d", "primes", "t", "e_matrix", "e_cases", "rule", "rank", "kind", "agreement")


def report_csv_row(rep: RankReport) -> list:
    return [
        rep.input_d,
        rep.d,
        "*".join(str(p.p) for p in rep.primes),
        rep.t,
        rep.e_matrix,
        rep.e_cases,
        rep.rule,
        rep.rank,
        rep.classification.kind.value,
        int(rep.agreement),
    ]


def closed_form_rank(d: OddSquarefree, case: CaseResult) -> int:
    """r2(d) as written in whichever closed-form statement covers d."""
    classes = {p % 8 for p in d.primes}
    r = d.r
    if r == 1 and classes <= {3, 5}:
        return 0
    if r == 1 and classes == {7}:
        return 1
    if classes <= {3, 5} and len(classes) == 1:
        return 2 * r - 2
    if classes == {7}:
        return 2 * r - 1
    if classes == {1}:
        return 4 * r - 1 - case.value
    t = 2 * (d.q + r)
    if 3 in classes and 5 in classes:
        return t - 3
    if 3 in classes or 5 in classes:
        return t - 3 if case.value == 2 else t - 2
    return t - 1 - case.value


def _structural_rank_bucket(d: OddSquarefree) -> tuple[int | None, str]:
    """Which rank the trivial/cyclic/rank-2 characterizations assign to d, by shape alone.

    Returns (0, 1 or 2, witness) when one of the characterizations matches and
    (None, "") when d is in none of them (rank >= 3).
    """
    ps = d.primes
    cls = sorted(p % 8 for p in ps)
    if len(ps) == 1:
        p = ps[0]
        if cls[0] in (3, 5):
            return 0, "trivial: d prime, 3 or 5 mod 8"
        if cls[0] == 7:
            return 1, "cyclic-1: d prime, 7 mod 8"
        if p % 16 == 9 or quartic_2_over_p(p) != quartic_p_over_2(p):
            return 2, "rank2-5: d = p = 1 mod 8, p = 9 mod 16 or (2/p)_4 != (p/2)_4"
        return None, ""
    if len(ps) == 2:
        if cls == [3, 5]:
            return 1, "cyclic-2: d = qp, q = 3, p = 5 mod 8"
        forms = {
            (3, 3): "rank2-1: d = q1 q2, both 3 mod 8",
            (5, 5): "rank2-2: d = p1 p2, both 5 mod 8",
            (3, 7): "rank2-3: d = q1 q2, q1 = 3, q2 = 7 mod 8",
            (5, 7): "rank2-4: d = pq, p = 5, q = 7 mod 8",
        }
        if tuple(cls) in forms:
            return 2, forms[tuple(cls)]
    return None, ""


def _split_3or5_7(ps: tuple[int, ...]) -> tuple[int, int]:
    a = next(p for p in ps if p % 8 != 7)
    b = next(p for p in ps if p % 8 == 7)
    return a, b


def _classify(d: OddSquarefree, rank: int) -> tuple[Classification, bool]:
    """Classification by rank, plus whether the shape-based characterization agrees."""
    bucket, witness = _structural_rank_bucket(d)
    consistent = min(rank, 3) == (bucket if bucket is not None else 3)
    if rank == 0:
        return Classification(Kind.TRIVIAL, witness), consistent
    if rank == 1:
        return Classification(Kind.CYCLIC, witness), consistent
    if rank >= 3:
        return Classification(Kind.RANK_AT_LEAST_3, f"rank {rank}"), consistent
    return _classify_rank2(d, witness), consistent


def _classify_rank2(d: OddSquarefree, witness: str) -> Classification:
    ps = d.primes
    cls = tuple(sorted(p % 8 for p in ps))
    if len(ps) == 1:
        p = ps[0]
        if p % 16 == 1 and quartic_2_over_p(p) != quartic_p_over_2(p):
            return Classification(Kind.TYPE22, "type22-1: p = 1 mod 16, (2/p)_4 != (p/2)_4")
        return Classification(Kind.RANK2_NOT_ELEMENTARY, witness + "; 8 | h2", 8)
    if cls in ((3, 7), (5, 7)):
        a, q = _split_3or5_7(ps)
        tag = "type22-3" if cls == (3, 7) else "type22-2"
        if jacobi(a, q) == -1:
            return Classification(Kind.TYPE22, f"{tag}: ({a}/{q}) = -1")
        return Classification(Kind.RANK2_NOT_ELEMENTARY, f"{witness}; ({a}/{q}) = 1, 16 | h2", 16)
    return Classification(Kind.RANK2_NOT_ELEMENTARY, witness + "; 8 | h2", 8)


def rank2(d0: int) -> RankReport:
    """Full 2-rank report for L_{d0}; d0 is normalized first (sign and a factor 2 dropped)."""
    nd = normalize_radicand(d0)
    if isinstance(nd, UnitRadicand):
        return RankReport(
            input_d=d0,
            d=1,
            primes=(),
            t=0,
            e_matrix=0,
            e_cases=0,
            rule="unit-radicand",
            rank=0,
            classification=Classification(Kind.OUTSIDE, "L_d = Q(zeta_8), class number 1"),
            agreement=True,
            closed_form_rank=None,
            outside_paper_hypotheses=True,
        )
    return rank2_canonical(nd)


def rank2_canonical(nd: OddSquarefree) -> RankReport:
    """rank2 for an already normalized and factored radicand."""
    t = ramified_count_t(nd)
    e_m = e_via_matrix(nd)
    try:
        case = e_via_cases(nd)
    except TheoremCheckError as exc:
        log.error("case analysis failed for d = %d: %s", nd.d, exc)
        case = CaseResult(-1, "no-clause")
    rank = t - 1 - e_m
    closed = closed_form_rank(nd, case)
    classification, shape_ok = _classify(nd, rank)
    agreement = e_m == case.value and closed == rank and shape_ok
    if not agreement:
        table = symbol_matrix(nd)
        log.error(
            "theorem check failed for d = %d: e_matrix = %d, e_cases = %d (%s), closed-form rank %d vs %d, "
            "shape characterization ok = %s; symbols %s",
            nd.d, e_m, case.value, case.rule, closed, rank, shape_ok, list(zip(table.primes, table.columns)),
        )
    return RankReport(
        input_d=nd.input_d or nd.d,
        d=nd.d,
        primes=tuple(PrimeInfo.of(p) for p in nd.primes),
        t=t,
        e_matrix=e_m,
        e_cases=case.value,
        rule=case.rule,
        rank=rank,
        classification=classification,
        agreement=agreement,
        closed_form_rank=closed,
    )


def classify(d0: int) -> Classification:
    return rank2(d0).classification


def class_number_even(d0: int) -> bool:
    rep = rank2(d0)
    even = rep.rank >= 1
    if rep.d > 1:
        ps = [p.p for p in rep.primes]
        expected = len(ps) > 1 or ps[0] % 8 in (1, 7)
        if even != expected:
            raise TheoremCheckError(f"parity of h(L_d) for d = {rep.d} contradicts the prime/composite rule")
    return even
