"""Run the published fixtures and the dual-path sweep; used by ``zeta8rank verify-paper``."""

from __future__ import annotations

from dataclasses import dataclass

from .fixtures import CLASSIFICATION_FIXTURES, QUARTIC_FIXTURES, RANK_FIXTURES, even_invariant_count
from .formulas import h2_Ld_two_primes
from .rank import Kind, closed_form_rank, rank2
from .scan import odd_squarefree_in
from .symbols import quartic_2_over_p, quartic_p_over_2, ramified_count_t
from .unit_index import e_via_cases, e_via_matrix


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def sweep_disagreements(limit: int) -> list[int]:
    """Odd squarefree 1 < d < limit where the two e_d routes or the closed-form rank disagree."""
    bad = []
    for d in odd_squarefree_in(3, limit - 1):
        e = e_via_matrix(d)
        case = e_via_cases(d)
        if e != case.value or closed_form_rank(d, case) != ramified_count_t(d) - 1 - e:
            bad.append(d.d)
    return bad


def run_checks(sweep_limit: int = 20000) -> list[CheckResult]:
    out: list[CheckResult] = []
    for fx in RANK_FIXTURES:
        got = rank2(fx.d).rank
        out.append(CheckResult(f"rank d={fx.d}", got == fx.expected_rank, f"expected {fx.expected_rank}, got {got} [{fx.source_anchor}]"))
        if fx.expected_group_type is not None:
            n = even_invariant_count(fx.expected_group_type)
            out.append(CheckResult(f"group type d={fx.d}", n == got, f"{fx.expected_group_type}: {n} even factors vs rank {got}"))
    for fx in CLASSIFICATION_FIXTURES:
        got = rank2(fx.d).classification.kind
        out.append(CheckResult(f"classify d={fx.d}", got == fx.expected_classification, f"expected {fx.expected_classification.value}, got {got.value} [{fx.source_anchor}]"))
        if got is Kind.RANK2_NOT_ELEMENTARY and fx.d == 19 * 31:
            h = h2_Ld_two_primes(19, 31)
            out.append(CheckResult("h2(L_589) divisible by 16", h % 16 == 0, f"h2 = {h}"))
    for p, (two4, p4) in QUARTIC_FIXTURES.items():
        got = (quartic_2_over_p(p), quartic_p_over_2(p))
        out.append(CheckResult(f"quartic symbols p={p}", got == (two4, p4), f"expected {(two4, p4)}, got {got}"))
    h = h2_Ld_two_primes(5, 7)
    out.append(CheckResult("h2(L_35) = 4", h == 4, f"h2 = {h}"))
    bad = sweep_disagreements(sweep_limit)
    out.append(CheckResult(f"dual-path sweep d < {sweep_limit}", not bad, f"disagreements: {bad[:10]}" if bad else "all agree"))
    return out
