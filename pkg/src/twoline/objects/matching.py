"""Noncrossing perfect matchings of points on two parallel lines.

Points are labelled U1..Uk on the upper line and L1..Ln on the lower line,
left to right.  A pair joining points on the same line must join adjacent
labels (anything wider would pass over a third marked point); pairs joining
the two lines must be order preserving, which is exactly the noncrossing
condition for segments between two parallel lines.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from ..errors import InstanceTooLarge, InvalidInput

MATCHING_MAX_SUM = 24

Point = tuple[str, int]  # ("U", i) or ("L", j), 1-based
Pair = tuple[Point, Point]


def point_key(p: Point) -> tuple[int, int]:
    return (0 if p[0] == "U" else 1, p[1])


def encode_point(p: Point) -> str:
    return f"{p[0]}{p[1]}"


def decode_point(text: str) -> Point:
    line, idx = text[:1], text[1:]
    if line not in ("U", "L") or not idx.isdigit():
        raise InvalidInput(f"bad point {text!r}")
    return (line, int(idx))


def _normalize(pairs: Iterable[Pair]) -> tuple[Pair, ...]:
    norm = [tuple(sorted(p, key=point_key)) for p in pairs]
    return tuple(sorted(norm, key=lambda pr: (point_key(pr[0]), point_key(pr[1]))))


@dataclass(frozen=True)
class Matching:
    k: int
    n: int
    pairs: tuple[Pair, ...]

    def __post_init__(self):
        object.__setattr__(self, "pairs", _normalize(self.pairs))

    def sort_key(self):
        return tuple((point_key(a), point_key(b)) for a, b in self.pairs)

    def cross_pairs(self) -> list[tuple[int, int]]:
        """(upper index, lower index) of every pair joining the two lines."""
        out = []
        for a, b in self.pairs:
            if a[0] != b[0]:
                up, lo = (a, b) if a[0] == "U" else (b, a)
                out.append((up[1], lo[1]))
        return sorted(out)

    def line_pairs(self, line: str) -> list[tuple[int, int]]:
        """Index pairs of same-line segments on the given line, sorted."""
        out = []
        for a, b in self.pairs:
            if a[0] == b[0] == line:
                out.append(tuple(sorted((a[1], b[1]))))
        return sorted(out)

    def validate(self) -> None:
        if self.k < 0 or self.n < 0:
            raise InvalidInput("negative point count")
        seen: set[Point] = set()
        for a, b in self.pairs:
            for p in (a, b):
                line, i = p
                bound = self.k if line == "U" else self.n
                if not 1 <= i <= bound:
                    raise InvalidInput(f"point {encode_point(p)} out of range")
                if p in seen:
                    raise InvalidInput(f"point {encode_point(p)} used twice")
                seen.add(p)
            if a == b:
                raise InvalidInput("pair joins a point to itself")
        if len(seen) != self.k + self.n:
            raise InvalidInput("not a perfect matching")
        for a, b in self.pairs:
            if a[0] == b[0] and abs(a[1] - b[1]) != 1:
                raise InvalidInput(
                    f"same-line pair {encode_point(a)}-{encode_point(b)} not adjacent"
                )
        crosses = self.cross_pairs()
        for (u1, l1), (u2, l2) in zip(crosses, crosses[1:]):
            if not (u1 < u2 and l1 < l2):
                raise InvalidInput("crossing segments between the lines")

    def encode(self) -> str:
        return ",".join(f"{encode_point(a)}-{encode_point(b)}" for a, b in self.pairs)

    @classmethod
    def decode(cls, text: str) -> "Matching":
        text = text.strip()
        pairs: list[Pair] = []
        if text:
            for token in text.split(","):
                try:
                    left, right = token.split("-")
                except ValueError:
                    raise InvalidInput(f"bad pair token {token!r}") from None
                pairs.append((decode_point(left), decode_point(right)))
        pts = [p for pr in pairs for p in pr]
        k = sum(1 for p in pts if p[0] == "U")
        n = sum(1 for p in pts if p[0] == "L")
        return cls(k, n, tuple(pairs))


def _line_configs(size: int) -> list[tuple[tuple[tuple[int, int], ...], tuple[int, ...]]]:
    """All ways to lay disjoint adjacent-pair segments on `size` points.

    Returns (segments, free_points) tuples; segments join (i, i+1).
    """
    out = []

    def rec(pos: int, segs: list, free: list) -> None:
        if pos > size:
            out.append((tuple(segs), tuple(free)))
            return
        free.append(pos)
        rec(pos + 1, segs, free)
        free.pop()
        if pos + 1 <= size:
            segs.append((pos, pos + 1))
            rec(pos + 2, segs, free)
            segs.pop()

    rec(1, [], [])
    return out


def enum_matchings(k: int, n: int) -> Iterator[Matching]:
    """All noncrossing matchings of (k, n) points, in canonical order.

    A matching is determined by the same-line segments on each line plus
    the forced left-to-right joining of the leftover points, so we
    enumerate segment layouts per line and keep the pairs with equally
    many leftovers.
    """
    if k + n > MATCHING_MAX_SUM:
        raise InstanceTooLarge(f"matchings capped at k+n <= {MATCHING_MAX_SUM}")
    if k < 0 or n < 0 or (k + n) % 2 == 1:
        return
    lower_by_free: dict[int, list] = {}
    for segs, free in _line_configs(n):
        lower_by_free.setdefault(len(free), []).append((segs, free))
    found = []
    for usegs, ufree in _line_configs(k):
        for lsegs, lfree in lower_by_free.get(len(ufree), []):
            pairs: list[Pair] = [(("U", a), ("U", b)) for a, b in usegs]
            pairs += [(("L", a), ("L", b)) for a, b in lsegs]
            pairs += [(("U", u), ("L", l)) for u, l in zip(ufree, lfree)]
            found.append(Matching(k, n, tuple(pairs)))
    found.sort(key=Matching.sort_key)
    yield from found
