"""Rotationally symmetric noncrossing chord configurations.

One sector of the symmetric picture carries n points, labelled 1..n as in
the straightened arc diagram.  Inner arcs join two points of the same
sector and may not join neighbouring points; cross arcs join point q of a
sector to point p of the next sector and require p < q (anything else
collides with its own rotated copies).

Validation unrolls the configuration onto a universal cover of three
consecutive sector copies: every chord becomes an interval of cover
positions, two chords are incompatible iff they share a position or their
intervals strictly interleave.  Three copies suffice because no chord
reaches past the adjacent sector.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from ..errors import InstanceTooLarge, InvalidInput

CHORDS_MAX_POINTS = 12

Arc = tuple[int, int]


def _cover_intervals(arc: Arc, kind: str, n: int) -> list[tuple[int, int]]:
    """Cover positions (0-based over 3 copies) spanned by an arc's copies."""
    if kind == "inner":
        i, j = arc
        return [(i - 1 + c * n, j - 1 + c * n) for c in range(3)]
    p, q = arc
    return [(q - 1 + c * n, p - 1 + (c + 1) * n) for c in range(2)]


def _conflict(a: tuple[int, int], b: tuple[int, int]) -> bool:
    if a[0] in b or a[1] in b:
        return True
    lo, hi = min(a, b), max(a, b)
    return lo[0] < hi[0] < lo[1] < hi[1]


@dataclass(frozen=True)
class ChordConfig:
    n: int
    inner: tuple[Arc, ...]
    cross: tuple[Arc, ...]

    def __post_init__(self):
        object.__setattr__(self, "inner", tuple(sorted(self.inner)))
        object.__setattr__(self, "cross", tuple(sorted(self.cross)))

    def sort_key(self):
        return (self.inner, self.cross)

    def validate(self) -> None:
        used: set[int] = set()
        for i, j in self.inner:
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise InvalidInput("inner arc endpoint outside the sector")
            if j - i < 2:
                raise InvalidInput(f"inner arc ({i},{j}) joins neighbouring points")
            for e in (i, j):
                if e in used:
                    raise InvalidInput(f"point {e} used by two chords")
                used.add(e)
        for p, q in self.cross:
            if not (1 <= p <= self.n and 1 <= q <= self.n):
                raise InvalidInput("cross arc endpoint outside the sector")
            if p >= q:
                raise InvalidInput(f"cross arc ({p},{q}) collides with its own copies")
            for e in (p, q):
                if e in used:
                    raise InvalidInput(f"point {e} used by two chords")
                used.add(e)
        spans = [
            iv
            for kind, arcs in (("inner", self.inner), ("cross", self.cross))
            for arc in arcs
            for iv in _cover_intervals(arc, kind, self.n)
        ]
        for a in range(len(spans)):
            for b in range(a + 1, len(spans)):
                if _conflict(spans[a], spans[b]):
                    raise InvalidInput(
                        f"chords {spans[a]} and {spans[b]} cross on the cover"
                    )

    def encode(self) -> str:
        fmt = lambda arcs: ",".join(f"{i}-{j}" for i, j in arcs)
        return f"{self.n}:{fmt(self.inner)}:{fmt(self.cross)}"

    @classmethod
    def decode(cls, text: str) -> "ChordConfig":
        try:
            npart, ipart, cpart = text.strip().split(":")
            n = int(npart)
            parse = lambda part: tuple(
                tuple(int(x) for x in tok.split("-")) for tok in part.split(",") if tok
            )
            return cls(n, parse(ipart), parse(cpart))
        except (ValueError, TypeError):
            raise InvalidInput(f"bad chord configuration {text!r}") from None


def _candidates(n: int) -> list[tuple[str, Arc]]:
    cands: list[tuple[str, Arc]] = []
    cands += [("inner", (i, j)) for i in range(1, n + 1) for j in range(i + 2, n + 1)]
    cands += [("cross", (p, q)) for p in range(1, n + 1) for q in range(p + 1, n + 1)]
    return cands


def _compatible(a: tuple[str, Arc], b: tuple[str, Arc], n: int) -> bool:
    if set(a[1]) & set(b[1]):
        return False
    for iv_a in _cover_intervals(a[1], a[0], n):
        for iv_b in _cover_intervals(b[1], b[0], n):
            if _conflict(iv_a, iv_b):
                return False
    return True


def enum_chords(n: int) -> Iterator[ChordConfig]:
    """All symmetric configurations on n points per sector, in canonical order.

    Arc compatibility is pairwise, so configurations are exactly the
    cliques of the candidate compatibility graph; they are enumerated by
    ordered extension.
    """
    if n > CHORDS_MAX_POINTS:
        raise InstanceTooLarge(f"chord enumeration capped at n <= {CHORDS_MAX_POINTS}")
    if n < 1:
        return
    cands = _candidates(n)
    m = len(cands)
    compat = [[_compatible(cands[a], cands[b], n) for b in range(m)] for a in range(m)]

    found: list[ChordConfig] = []
    picked: list[int] = []

    def emit() -> None:
        inner = tuple(cands[i][1] for i in picked if cands[i][0] == "inner")
        cross = tuple(cands[i][1] for i in picked if cands[i][0] == "cross")
        found.append(ChordConfig(n, inner, cross))

    def rec(allowed: list[int]) -> None:
        emit()
        for idx, c in enumerate(allowed):
            picked.append(c)
            rec([d for d in allowed[idx + 1 :] if compat[c][d]])
            picked.pop()

    rec(list(range(m)))
    found.sort(key=ChordConfig.sort_key)
    yield from found
