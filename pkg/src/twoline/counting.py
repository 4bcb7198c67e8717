"""Counters for the two-line matching triangle and its relatives.

Naming used throughout (mirrors the canonical text encodings and the CLI):

  a(k, n)   noncrossing matchings of k points on one line, n on the other;
            zero when k + n is odd, symmetric in (k, n)
  b(k, n)   segment/point configurations with equally many objects per line
            (the staircase triangle), with b(0,0) = 1 and b = 0 whenever
            exactly one index is zero
  z(m, k)   k-element closed vertex sets of the zigzag fence on m vertices
  d(k, n)   pairs of 2xk / 2xn domino tilings with equal vertical counts
  m(k, n)   peakless Motzkin paths of k steps ending at height n
  s(n, k)   n-term 0-1-2 sums equal to k with no 2 immediately before a 0
  r(n)      the diagonal a(n, n)

All values are exact Python ints.  Tables are immutable once built and the
single-value counters are memoized pure functions, so everything here can
be shared freely across threads.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping

from .errors import InstanceTooLarge, NonIntegralRecurrenceStep

SIGNED_PATH_MAX_SUM = 24
COMPOSITION_CHECK_MAX = 20

GOLDEN_RATIO = (1 + math.sqrt(5)) / 2


@dataclass(frozen=True)
class TriangleTable:
    """Rectangular store of triangle values.

    kind "a" and "b" hold entries for all k + n <= limit, keyed (k, n);
    kind "z" holds rows 0..limit of the fence triangle, keyed (m, k) with
    0 <= k <= m.  Missing keys read as zero.
    """

    kind: str
    limit: int
    entries: Mapping[tuple[int, int], int]

    def value(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def row(self, r: int) -> tuple[int, ...]:
        """One display row.

        kind "a": entries with k + n = 2r, left to right a(2r,0)..a(0,2r);
        kind "b": entries with k + n = r, left to right b(0,r)..b(r,0);
        kind "z": fence row r, z(r,0)..z(r,r).
        """
        if self.kind == "a":
            return tuple(self.value(2 * r - i, i) for i in range(2 * r + 1))
        if self.kind == "b":
            return tuple(self.value(i, r - i) for i in range(r + 1))
        return tuple(self.value(r, k) for k in range(r + 1))

    def rows(self) -> Iterator[tuple[int, ...]]:
        top = self.limit // 2 if self.kind == "a" else self.limit
        for r in range(top + 1):
            yield self.row(r)


@dataclass(frozen=True)
class AsymptoticEstimate:
    """Log-domain comparison of the leading-term estimate against exact r(n)."""

    n: int
    estimate_log: float
    exact_log: float
    relative_error: float


def a_table(max_sum: int) -> TriangleTable:
    """Triangle of a(k, n) for k + n <= max_sum via the four-term recurrence.

    a(k, n) = a(k-1, n-1) + a(k-2, n) + a(k, n-2) - a(k-2, n-2) for all
    (k, n) != (0, 0), with a = 0 at negative indices and a(0,0) = 1.
    Odd k + n never becomes nonzero.
    """
    t: dict[tuple[int, int], int] = {(0, 0): 1}

    def get(k, n):
        return t.get((k, n), 0)

    for s in range(1, max_sum + 1):
        for k in range(s + 1):
            n = s - k
            t[(k, n)] = (
                get(k - 1, n - 1) + get(k - 2, n) + get(k, n - 2) - get(k - 2, n - 2)
            )
    return TriangleTable("a", max_sum, t)


@lru_cache(maxsize=None)
def a_long(k: int, n: int) -> int:
    """a(k, n) through the one-sided recurrence

        a(k, n) = a(k-2, n) + a(k-1, n-1) + a(k-1, n-3) + a(k-1, n-5) + ...

    Memoized with no eviction; the target index ranges are small.
    """
    if k < 0 or n < 0 or (k + n) % 2 == 1:
        return 0
    if k == 0:
        return 1
    total = a_long(k - 2, n)
    j = n - 1
    while j >= 0:
        total += a_long(k - 1, j)
        j -= 2
    return total


def a_binomial(k: int, n: int) -> int:
    """Closed form: sum over j = parity(k) of C((k+j)/2, j) * C((n+j)/2, j)."""
    if k < 0 or n < 0 or (k + n) % 2 == 1:
        return 0
    total = 0
    for j in range(k % 2, min(k, n) + 1, 2):
        total += math.comb((k + j) // 2, j) * math.comb((n + j) // 2, j)
    return total


def a_diag_binomial(n: int) -> int:
    """Diagonal closed form: sum of C(n-l, l)^2 over 0 <= l <= n//2."""
    return sum(math.comb(n - l, l) ** 2 for l in range(n // 2 + 1))


def b_table(max_sum: int) -> TriangleTable:
    """Triangle of b(k, n) for k + n <= max_sum.

    b(k, n) = b(k-1, n-1) + b(k-1, n-2) + b(k-2, n-1) + b(k-2, n-2) holds
    everywhere except (0, 0); the degenerate convention b(0,0) = 1 and
    b(k, n) = 0 when min(k, n) <= 0 elsewhere falls out of the recurrence.
    """
    t: dict[tuple[int, int], int] = {(0, 0): 1}

    def get(k, n):
        return t.get((k, n), 0)

    for s in range(1, max_sum + 1):
        for k in range(s + 1):
            n = s - k
            t[(k, n)] = (
                get(k - 1, n - 1)
                + get(k - 1, n - 2)
                + get(k - 2, n - 1)
                + get(k - 2, n - 2)
            )
    return TriangleTable("b", max_sum, t)


def z_table(max_row: int) -> TriangleTable:
    """Rows 0..max_row of the fence triangle z(m, k).

    Rows 0 and 1 are (1) and (1, 1); afterwards

        z(2n, k)   = z(2n-1, k)   + z(2n-2, k-2)
        z(2n+1, k) = z(2n,   k-1) + z(2n-1, k).
    """
    t: dict[tuple[int, int], int] = {(0, 0): 1}
    if max_row >= 1:
        t[(1, 0)] = t[(1, 1)] = 1

    def get(m, k):
        return t.get((m, k), 0)

    for m in range(2, max_row + 1):
        for k in range(m + 1):
            if m % 2 == 0:
                t[(m, k)] = get(m - 1, k) + get(m - 2, k - 2)
            else:
                t[(m, k)] = get(m - 1, k - 1) + get(m - 2, k)
    return TriangleTable("z", max_row, t)


@lru_cache(maxsize=None)
def b_value(k: int, n: int) -> int:
    """Single b(k, n) via the memoized recurrence."""
    if k == 0 and n == 0:
        return 1
    if k < 0 or n < 0:
        return 0
    return (
        b_value(k - 1, n - 1)
        + b_value(k - 1, n - 2)
        + b_value(k - 2, n - 1)
        + b_value(k - 2, n - 2)
    )


@lru_cache(maxsize=None)
def z_value(m: int, k: int) -> int:
    """Single z(m, k) via the memoized recurrences."""
    if k < 0 or k > m:
        return 0
    if m <= 1:
        return 1
    if m % 2 == 0:
        return z_value(m - 1, k) + z_value(m - 2, k - 2)
    return z_value(m - 1, k - 1) + z_value(m - 2, k)


_FIB = [0, 1]


def fibonacci(m: int) -> int:
    """F(m) with F(0) = 0, F(1) = F(2) = 1."""
    if m < 0:
        raise ValueError("negative Fibonacci index")
    while len(_FIB) <= m:
        _FIB.append(_FIB[-1] + _FIB[-2])
    return _FIB[m]


_R_DIAG = [1, 1, 2, 5]


def r_diag(n: int) -> int:
    """Diagonal value r(n) = a(n, n) by the holonomic recurrence

        n r(n) = (2n-1) r(n-1) + (n-1) r(n-2) + (2n-3) r(n-3) - (n-2) r(n-4)

    with seeds r(0..3) = 1, 1, 2, 5.  The division by n is asserted exact.
    """
    if n < 0:
        raise ValueError("negative diagonal index")
    r = _R_DIAG
    while len(r) <= n:
        i = len(r)
        num = (
            (2 * i - 1) * r[i - 1]
            + (i - 1) * r[i - 2]
            + (2 * i - 3) * r[i - 3]
            - (i - 2) * r[i - 4]
        )
        if num % i != 0:
            raise NonIntegralRecurrenceStep(f"step {i} not divisible by {i}")
        r.append(num // i)
    return r[n]


def asymptotic_estimate(n: int) -> AsymptoticEstimate:
    """Leading-term estimate phi^(2n+2) / (2 * 5^(1/4) * sqrt(pi n)) vs exact r(n).

    Works entirely in the log domain; math.log on the exact big integer is
    precise to the double's 53 bits regardless of magnitude, so this stays
    accurate for n in the thousands.
    """
    if n < 1:
        raise ValueError("asymptotic estimate needs n >= 1")
    estimate_log = (2 * n + 2) * math.log(GOLDEN_RATIO) - math.log(
        2 * 5**0.25 * math.sqrt(math.pi * n)
    )
    exact_log = math.log(r_diag(n))
    relative_error = abs(math.exp(estimate_log - exact_log) - 1.0)
    return AsymptoticEstimate(n, estimate_log, exact_log, relative_error)


def fib_bound_check(k: int, n: int) -> bool:
    """Exact check of the row-sum bound a(k, n) <= F(k + n).

    The bound is meaningful for k + n >= 1; the lone k + n = 0 entry is
    a(0,0) = 1 and is accepted as its own base case (the phi-form upper
    bound starts at k + n = 2 anyway).
    """
    if k + n == 0:
        return a_long(0, 0) == 1
    return a_long(k, n) <= fibonacci(k + n)


def m_count(k: int, n: int) -> int:
    """Peakless Motzkin paths with k steps ending at height n.

    Uses the last-step recurrence
    m(k, n) = m(k-1, n-1) + m(k-1, n) + m(k-1, n+1) - m(k-2, n).
    """
    if abs(n) > k:
        return 0

    @lru_cache(maxsize=None)
    def rec(i, h):
        if abs(h) > i:
            return 0
        if i == 0:
            return 1 if h == 0 else 0
        return rec(i - 1, h - 1) + rec(i - 1, h) + rec(i - 1, h + 1) - rec(i - 2, h)

    return rec(k, n)


def s_count(n: int, k: int) -> int:
    """0-1-2 sums: n ordered summands totalling k, never 0 right after 2."""
    if n < 0 or k < 0 or k > 2 * n:
        return 0
    # state: (total so far, last summand was 2)
    cur = {(0, False): 1}
    for _ in range(n):
        nxt: dict[tuple[int, bool], int] = {}
        for (t, after2), ways in cur.items():
            for d in (0, 1, 2):
                if d == 0 and after2:
                    continue
                if t + d > k:
                    continue
                key = (t + d, d == 2)
                nxt[key] = nxt.get(key, 0) + ways
        cur = nxt
    return sum(w for (t, _), w in cur.items() if t == k)


def _tilings_by_verticals(width: int) -> dict[int, int]:
    """Number of 2 x width domino tilings, bucketed by vertical-domino count."""
    rows: list[dict[int, int]] = [{0: 1}, {1: 1}]
    while len(rows) <= width:
        w = len(rows)
        acc: dict[int, int] = {}
        for j, c in rows[w - 1].items():  # leftmost column vertical
            acc[j + 1] = acc.get(j + 1, 0) + c
        for j, c in rows[w - 2].items():  # two stacked horizontals
            acc[j] = acc.get(j, 0) + c
        rows.append(acc)
    return rows[width]


def d_count(k: int, n: int) -> int:
    """Pairs of 2xk and 2xn domino tilings with equal numbers of verticals."""
    if k < 0 or n < 0:
        return 0
    left = _tilings_by_verticals(k)
    right = _tilings_by_verticals(n)
    return sum(c * right.get(j, 0) for j, c in left.items())


def signed_step_path_count(k: int, n: int) -> int:
    """Signed lattice-path oracle for a(k, n).

    Exhaustively walks every path from the origin to (k, n) with steps
    (2,0), (0,2), (1,1), (2,2), weighting each path by (-1)^(number of
    (2,2) steps).  Deliberately unmemoized: this is the independent
    brute-force route against which the algebraic counters are checked.
    """
    if k + n > SIGNED_PATH_MAX_SUM:
        raise InstanceTooLarge(f"signed path enumeration capped at k+n <= {SIGNED_PATH_MAX_SUM}")
    if k < 0 or n < 0:
        return 0
    total = 0

    def walk(x: int, y: int, sign: int) -> None:
        nonlocal total
        if x == k and y == n:
            total += sign
            return
        if x + 2 <= k:
            walk(x + 2, y, sign)
        if y + 2 <= n:
            walk(x, y + 2, sign)
        if x + 1 <= k and y + 1 <= n:
            walk(x + 1, y + 1, sign)
        if x + 2 <= k and y + 2 <= n:
            walk(x + 2, y + 2, -sign)

    walk(0, 0, 1)
    return total


def composition_identity_check(n: int, ell: int) -> bool:
    """Brute-force check of the twos-vs-summands composition identity.

    Counts {1,2}-compositions of n with exactly ell twos, and compositions
    of n + 2 into parts >= 2 with exactly ell + 1 summands; both must equal
    C(n - ell, ell).
    """
    if n > COMPOSITION_CHECK_MAX:
        raise InstanceTooLarge(f"composition check capped at n <= {COMPOSITION_CHECK_MAX}")

    def count_s1(total: int, twos: int) -> int:
        if total == 0:
            return 1 if twos == 0 else 0
        acc = count_s1(total - 1, twos)
        if total >= 2 and twos >= 1:
            acc += count_s1(total - 2, twos - 1)
        return acc

    def count_s3(total: int, parts: int) -> int:
        if parts == 0:
            return 1 if total == 0 else 0
        return sum(count_s3(total - p, parts - 1) for p in range(2, total + 1))

    lhs = count_s1(n, ell)
    rhs = count_s3(n + 2, ell + 1)
    expected = math.comb(n - ell, ell) if 0 <= ell <= n - ell else 0
    return lhs == rhs == expected
