"""Peakless Motzkin paths.

Steps are U = (1, 1), H = (1, 0), D = (1, -1); "peakless" forbids a U
immediately followed by a D.  Paths start at the origin and may dip below
their start level -- there is no nonnegativity floor in this family.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from ..errors import InstanceTooLarge, InvalidInput

MOTZKIN_MAX_STEPS = 22

_DELTA = {"U": 1, "H": 0, "D": -1}


@dataclass(frozen=True)
class MotzkinPath:
    steps: str

    @property
    def endpoint(self) -> tuple[int, int]:
        return len(self.steps), sum(_DELTA[c] for c in self.steps)

    def heights(self) -> list[int]:
        """Running heights after each step."""
        out, h = [], 0
        for c in self.steps:
            h += _DELTA[c]
            out.append(h)
        return out

    def sort_key(self):
        return self.steps

    def validate(self) -> None:
        for c in self.steps:
            if c not in _DELTA:
                raise InvalidInput(f"bad step {c!r}")
        if "UD" in self.steps:
            raise InvalidInput("path has a peak")

    def encode(self) -> str:
        return self.steps

    @classmethod
    def decode(cls, text: str) -> "MotzkinPath":
        return cls(text.strip())


def enum_peakless(k: int, n_end: int) -> Iterator[MotzkinPath]:
    """All peakless paths of k steps ending at height n_end, lexicographically."""
    if k > MOTZKIN_MAX_STEPS:
        raise InstanceTooLarge(f"path enumeration capped at k <= {MOTZKIN_MAX_STEPS}")
    if k < 0 or abs(n_end) > k:
        return

    buf: list[str] = []

    def rec(i: int, h: int) -> Iterator[MotzkinPath]:
        if i == k:
            if h == n_end:
                yield MotzkinPath("".join(buf))
            return
        remaining = k - i
        for step in ("D", "H", "U"):
            if step == "D" and buf and buf[-1] == "U":
                continue
            nh = h + _DELTA[step]
            if abs(n_end - nh) > remaining - 1:
                continue
            buf.append(step)
            yield from rec(i + 1, nh)
            buf.pop()

    yield from rec(0, 0)
