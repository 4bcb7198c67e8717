"""Lattice paths with steps (1,1), (1,2), (2,1), (2,2)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from ..errors import InstanceTooLarge, InvalidInput

STEPPATH_MAX_SUM = 28

STEPS = ((1, 1), (1, 2), (2, 1), (2, 2))


@dataclass(frozen=True)
class StepPath:
    steps: tuple[tuple[int, int], ...]

    @property
    def target(self) -> tuple[int, int]:
        return sum(dx for dx, _ in self.steps), sum(dy for _, dy in self.steps)

    def sort_key(self):
        return self.steps

    def validate(self) -> None:
        for s in self.steps:
            if s not in STEPS:
                raise InvalidInput(f"bad step {s}")

    def encode(self) -> str:
        return "-".join(f"{dx}{dy}" for dx, dy in self.steps)

    @classmethod
    def decode(cls, text: str) -> "StepPath":
        text = text.strip()
        if not text:
            return cls(())
        steps = []
        for tok in text.split("-"):
            if len(tok) != 2 or not tok.isdigit():
                raise InvalidInput(f"bad step token {tok!r}")
            steps.append((int(tok[0]), int(tok[1])))
        return cls(tuple(steps))


def enum_b_step_paths(k: int, n: int) -> Iterator[StepPath]:
    """All paths from the origin to (k, n), ordered by their step sequence."""
    if k + n > STEPPATH_MAX_SUM:
        raise InstanceTooLarge(f"step paths capped at k+n <= {STEPPATH_MAX_SUM}")
    if k < 0 or n < 0:
        return

    buf: list[tuple[int, int]] = []

    def rec(x: int, y: int) -> Iterator[StepPath]:
        if x == k and y == n:
            yield StepPath(tuple(buf))
            return
        for dx, dy in STEPS:
            if x + dx <= k and y + dy <= n:
                buf.append((dx, dy))
                yield from rec(x + dx, y + dy)
                buf.pop()

    yield from rec(0, 0)
