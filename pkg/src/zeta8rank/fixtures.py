"""Published worked values: 2-ranks, PARI/GP class group types, and classifications.

The group types are consumed as data only; the package computes 2-ranks, never
full class group structures.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rank import Kind


@dataclass(frozen=True)
class FixtureRecord:
    d: int
    expected_rank: int
    source_anchor: str
    expected_group_type: tuple[int, ...] | None = None
    expected_classification: Kind | None = None

    def __post_init__(self):
        if self.expected_group_type is not None and even_invariant_count(self.expected_group_type) != self.expected_rank:
            raise ValueError(f"fixture {self.d}: group type {self.expected_group_type} has the wrong 2-rank")


def even_invariant_count(group_type: tuple[int, ...]) -> int:
    return sum(1 for n in group_type if n % 2 == 0)


RANK_FIXTURES: tuple[FixtureRecord, ...] = (
    FixtureRecord(3, 0, "prime 3 mod 8: trivial 2-class group"),
    FixtureRecord(5, 0, "prime 5 mod 8: trivial 2-class group"),
    FixtureRecord(13, 0, "prime 5 mod 8: trivial 2-class group"),
    FixtureRecord(7, 1, "prime 7 mod 8: cyclic nontrivial"),
    FixtureRecord(15, 1, "3 * 5: cyclic nontrivial"),
    FixtureRecord(17, 2, "prime 17, type (2,2) example"),
    FixtureRecord(21, 2, "3 * 7, type (2,2) example"),
    FixtureRecord(35, 2, "5 * 7, type (2,2) example"),
    FixtureRecord(7 * 17, 4, "mixed example 7*17, rank 6-1-1", (20, 2, 2, 2)),
    FixtureRecord(7 * 113, 5, "mixed example 7*113, rank 6-1-0", (64, 2, 2, 2, 2)),
    FixtureRecord(7 * 3 * 17, 5, "mixed example 7*3*17, rank 8-3", (12, 2, 2, 2, 2)),
    FixtureRecord(7 * 5 * 17, 5, "mixed example 7*5*17, rank 8-3", (20, 2, 2, 2, 2)),
    FixtureRecord(7 * 3 * 113, 6, "mixed example 7*3*113, rank 8-2", (42, 2, 2, 2, 2, 2)),
    FixtureRecord(7 * 5 * 113, 6, "mixed example 7*5*113, rank 8-2", (42, 6, 2, 2, 2, 2)),
    FixtureRecord(73 * 113, 6, "all 1 mod 8 example 73*113, rank 4*2-2", (912, 2, 2, 2, 2, 2)),
    FixtureRecord(257 * 113, 7, "all 1 mod 8 example 257*113, rank 4*2-1", (4368, 8, 2, 2, 2, 2, 2)),
    FixtureRecord(73 * 89 * 97, 9, "all 1 mod 8 example 73*89*97, rank 4*3-3", (1224, 8, 4, 4, 4, 2, 2, 2, 2)),
    FixtureRecord(73 * 89 * 113, 10, "all 1 mod 8 example 73*89*113, rank 4*3-2", (384, 32, 2, 2, 2, 2, 2, 2, 2, 2)),
    FixtureRecord(353 * 257 * 113, 11, "all 1 mod 8 example 353*257*113, rank 4*3-1", (408, 204, 2, 2, 2, 2, 2, 2, 2, 2, 2)),
)

# the eleven worked examples that come with a PARI/GP group type
WORKED_EXAMPLES = tuple(f for f in RANK_FIXTURES if f.expected_group_type is not None)

CLASSIFICATION_FIXTURES: tuple[FixtureRecord, ...] = (
    FixtureRecord(17, 2, "(2/17)_4 = -(17/2)_4 = -1, type (2,2)", expected_classification=Kind.TYPE22),
    FixtureRecord(21, 2, "Q(sqrt 21, sqrt 2, i) type (2,2)", expected_classification=Kind.TYPE22),
    FixtureRecord(35, 2, "Q(sqrt 35, sqrt 2, i) type (2,2)", expected_classification=Kind.TYPE22),
    FixtureRecord(19 * 23, 2, "(19/23) = -1, type (2,2)", expected_classification=Kind.TYPE22),
    FixtureRecord(19 * 31, 2, "(19/31) = 1, 16 divides h2", expected_classification=Kind.RANK2_NOT_ELEMENTARY),
)

# (2/p)_4 and (p/2)_4 values quoted with the worked examples
QUARTIC_FIXTURES: dict[int, tuple[int, int]] = {
    17: (-1, 1),
    73: (1, -1),
    89: (1, -1),
    97: (-1, 1),
    113: (1, 1),
    257: (1, 1),
    353: (1, 1),
}
