"""Ordered 0-1-2 sums in which no 2 is immediately followed by a 0."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from ..errors import InstanceTooLarge, InvalidInput

SUM012_MAX_TERMS = 20


@dataclass(frozen=True)
class Sum012:
    summands: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.summands)

    @property
    def k(self) -> int:
        return sum(self.summands)

    def sort_key(self):
        return self.summands

    def validate(self) -> None:
        for d in self.summands:
            if d not in (0, 1, 2):
                raise InvalidInput(f"summand {d} not in 0..2")
        for a, b in zip(self.summands, self.summands[1:]):
            if a == 2 and b == 0:
                raise InvalidInput("a 2 is immediately followed by a 0")

    def encode(self) -> str:
        return "+".join(str(d) for d in self.summands)

    @classmethod
    def decode(cls, text: str) -> "Sum012":
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(int(t) for t in text.split("+")))
        except ValueError:
            raise InvalidInput(f"bad 0-1-2 sum {text!r}") from None


def enum_012(n: int, k: int) -> Iterator[Sum012]:
    """All valid n-term 0-1-2 sums totalling k, in lexicographic order."""
    if n > SUM012_MAX_TERMS:
        raise InstanceTooLarge(f"0-1-2 sums capped at n <= {SUM012_MAX_TERMS}")
    if n < 0 or k < 0 or k > 2 * n:
        return

    buf: list[int] = []

    def rec(i: int, total: int) -> Iterator[Sum012]:
        if i == n:
            if total == k:
                yield Sum012(tuple(buf))
            return
        rem = n - i - 1
        for d in (0, 1, 2):
            if d == 0 and buf and buf[-1] == 2:
                continue
            t = total + d
            if t > k or t + 2 * rem < k:
                continue
            buf.append(d)
            yield from rec(i + 1, t)
            buf.pop()

    yield from rec(0, 0)
