"""Closed vertex sets of zigzag fences.

The fence on m vertices is the alternating path v0 v1 ... v(m-1) drawn
with the even positions on a lower row and the odd positions on an upper
row; every edge is directed from the upper vertex down to its one or two
lower neighbours.  A vertex set is closed when no arrow leaves it: an
upper member forces both of its lower neighbours in.

A set is encoded as a bit string over the zigzag order, '1' marking a
member, so the fence size is the string length.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from ..errors import InstanceTooLarge, InvalidInput

FENCE_MAX_SIZE = 26


@dataclass(frozen=True)
class ClosedSet:
    fence_size: int
    members: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))

    @property
    def size(self) -> int:
        return len(self.members)

    def sort_key(self):
        return self.encode()

    def validate(self) -> None:
        if self.fence_size < 0:
            raise InvalidInput("negative fence size")
        for v in self.members:
            if not 0 <= v < self.fence_size:
                raise InvalidInput(f"vertex {v} outside the fence")
        for v in self.members:
            if v % 2 == 1:  # upper vertex: lower neighbours v-1, v+1 forced in
                if v - 1 not in self.members:
                    raise InvalidInput(f"arrow leaves the set at {v}->{v - 1}")
                if v + 1 < self.fence_size and v + 1 not in self.members:
                    raise InvalidInput(f"arrow leaves the set at {v}->{v + 1}")

    def encode(self) -> str:
        return "".join(
            "1" if i in self.members else "0" for i in range(self.fence_size)
        )

    @classmethod
    def decode(cls, text: str) -> "ClosedSet":
        text = text.strip()
        if any(c not in "01" for c in text):
            raise InvalidInput(f"bad bit string {text!r}")
        return cls(len(text), frozenset(i for i, c in enumerate(text) if c == "1"))


def enum_closed_sets(m: int, size_filter: int | None = None) -> Iterator[ClosedSet]:
    """All closed sets of the fence on m vertices, in bit-string order.

    With size_filter set, only sets of that cardinality are yielded (the
    search still walks the whole tree; closed sets are sparse enough that
    this costs little).
    """
    if m > FENCE_MAX_SIZE:
        raise InstanceTooLarge(f"fence enumeration capped at m <= {FENCE_MAX_SIZE}")
    if m < 0:
        return

    chosen: list[bool] = []

    def rec(pos: int, count: int) -> Iterator[ClosedSet]:
        if pos == m:
            if size_filter is None or count == size_filter:
                yield ClosedSet(m, frozenset(i for i, b in enumerate(chosen) if b))
            return
        for take in (False, True):
            if take and pos % 2 == 1 and not chosen[pos - 1]:
                continue  # upper needs its left lower neighbour in
            if not take and pos % 2 == 0 and pos >= 1 and chosen[pos - 1]:
                continue  # upper member at pos-1 forces this lower vertex in
            chosen.append(take)
            yield from rec(pos + 1, count + (1 if take else 0))
            chosen.pop()

    yield from rec(0, 0)
