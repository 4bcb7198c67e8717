"""Verification suites: the package's identities run as machine checks.

Each suite produces a VerificationReport with one entry per check;
`overall` is the conjunction.  Every check is a pure function of its
parameters, so suites could be sharded freely; they are run sequentially
here because each one is already fast at its default scale.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from . import bijections as bij
from . import counting as cnt
from . import series as ser
from .objects import (
    enum_012,
    enum_b_step_paths,
    enum_chords,
    enum_closed_sets,
    enum_compositions,
    enum_domino_pairs,
    enum_lacings,
    enum_matchings,
    enum_peakless,
    enum_staircases,
    enum_weighted_paths,
)
from .objects.compositions import Composition
from .objects.fence import ClosedSet
from .partsets import ONE_TWO

SUITES = (
    "triangle",
    "bijections",
    "fibonacci",
    "diagonal",
    "asymptotics",
    "bounds",
    "lacing",
    "all",
)


@dataclass(frozen=True)
class Check:
    id: str
    ok: bool
    detail: str


@dataclass
class VerificationReport:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, id: str, ok: bool, detail: str) -> None:
        self.checks.append(Check(id, bool(ok), detail))

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "overall": self.overall,
            "checks": [
                {"id": c.id, "status": "pass" if c.ok else "fail", "detail": c.detail}
                for c in self.checks
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _gf_table(max_sum: int):
    denom = ser.series2(
        {(0, 0): 1, (2, 0): -1, (0, 2): -1, (1, 1): -1, (2, 2): 1}, max_sum, max_sum
    )
    return ser.bivariate_inverse_coeffs(denom, max_sum, max_sum)


def suite_triangle(max_sum: int = 16) -> VerificationReport:
    rep = VerificationReport("triangle")
    table = cnt.a_table(max_sum)
    gf = _gf_table(max_sum)

    bad = [
        (k, n)
        for s in range(max_sum + 1)
        for k in range(s + 1)
        for n in [s - k]
        if not (
            table.value(k, n)
            == cnt.a_long(k, n)
            == cnt.a_binomial(k, n)
            == gf.coeff(k, n)
        )
    ]
    rep.add(
        "four-way-agreement",
        not bad,
        f"recurrence table, long recurrence, binomial sum and series extraction "
        f"agree for k+n <= {max_sum}" + (f"; first mismatch {bad[0]}" if bad else ""),
    )

    signed_max = min(max_sum, 20)
    bad = [
        (k, n)
        for s in range(signed_max + 1)
        for k in range(s + 1)
        for n in [s - k]
        if cnt.signed_step_path_count(k, n) != table.value(k, n)
    ]
    rep.add(
        "signed-path-agreement",
        not bad,
        f"signed lattice-path enumeration agrees for k+n <= {signed_max}"
        + (f"; first mismatch {bad[0]}" if bad else ""),
    )

    sym_ok = all(
        table.value(k, n) == table.value(n, k)
        and (table.value(k, n) == 0 or (k + n) % 2 == 0)
        for s in range(max_sum + 1)
        for k in range(s + 1)
        for n in [s - k]
    )
    rep.add("symmetry-and-parity", sym_ok, "a(k,n) = a(n,k); odd k+n entries vanish")

    uni_ok = True
    for r in range(max_sum // 2 + 1):
        row = table.row(r)
        half = row[: len(row) // 2 + 1]
        if list(half) != sorted(half):
            uni_ok = False
            break
    rep.add("row-unimodality", uni_ok, "rows weakly increase toward their centre")

    mmax = max_sum // 2
    ok = all(
        cnt.m_count(k, n) == cnt.a_long(k - n, k + n)
        for k in range(mmax + 1)
        for n in range(-k, k + 1)
    )
    rep.add("peakless-index-identity", ok, f"m(k,n) = a(k-n,k+n) for k <= {mmax}")

    zt = cnt.z_table(max_sum)
    ok = all(
        zt.value(2 * n, k) == cnt.a_long(2 * n - k, k)
        for n in range(max_sum // 2 + 1)
        for k in range(2 * n + 1)
    )
    rep.add("fence-index-identity", ok, f"z(2n,k) = a(2n-k,k) for 2n <= {max_sum}")

    ok = all(
        cnt.s_count(n, k) == zt.value(2 * n, k)
        for n in range(max_sum // 2 + 1)
        for k in range(2 * n + 1)
    )
    rep.add("sum012-identity", ok, f"s(n,k) = z(2n,k) for 2n <= {max_sum}")

    ok = all(
        cnt.d_count(k, n) == table.value(k, n)
        for s in range(max_sum + 1)
        for k in range(s + 1)
        for n in [s - k]
    )
    rep.add("domino-identity", ok, f"d(k,n) = a(k,n) for k+n <= {max_sum}")

    bt = cnt.b_table(max_sum)
    bgf = ser.bivariate_inverse_coeffs(
        ser.series2(
            {(0, 0): 1, (1, 1): -1, (2, 1): -1, (1, 2): -1, (2, 2): -1},
            max_sum,
            max_sum,
        ),
        max_sum,
        max_sum,
    )
    ok = all(
        bt.value(k, n) == bgf.coeff(k, n)
        for s in range(max_sum + 1)
        for k in range(s + 1)
        for n in [s - k]
    )
    rep.add("b-series-agreement", ok, f"b recurrence matches series extraction for k+n <= {max_sum}")

    ok = all(
        bt.value(n, n) == table.value(n, n) == cnt.r_diag(n)
        for n in range(max_sum // 2 + 1)
    )
    rep.add("diagonal-b-identity", ok, "b(n,n) = a(n,n) = r(n)")
    return rep


def suite_fibonacci(max_m: int = 30) -> VerificationReport:
    rep = VerificationReport("fibonacci")
    table = cnt.a_table(2 * max_m - 2 if max_m >= 1 else 0)
    ok = all(
        sum(table.row(m - 1)) == cnt.fibonacci(2 * m) for m in range(1, max_m + 1)
    )
    rep.add(
        "a-row-sums",
        ok,
        f"row m of the matching triangle sums to F(2m) for m <= {max_m}",
    )
    zt = cnt.z_table(max_m)
    ok = all(sum(zt.row(m)) == cnt.fibonacci(m + 2) for m in range(max_m + 1))
    rep.add("z-row-sums", ok, f"fence row m sums to F(m+2) for m <= {max_m}")
    return rep


def suite_diagonal(max_n: int = 200) -> VerificationReport:
    rep = VerificationReport("diagonal")
    g = ser.inv_sqrt_trunc(ser.series([1, -2, -1, -2, 1]), max_n)
    ok = all(cnt.r_diag(n) == g.coeff(n) for n in range(max_n + 1))
    rep.add("series-route", ok, f"holonomic recurrence matches the inverse square root series up to n = {max_n}")
    ok = all(cnt.r_diag(n) == cnt.a_diag_binomial(n) for n in range(max_n + 1))
    rep.add("binomial-route", ok, f"holonomic recurrence matches the squared-binomial sum up to n = {max_n}")
    amax = min(max_n, 100)
    table = cnt.a_table(2 * amax)
    ok = all(cnt.r_diag(n) == table.value(n, n) for n in range(amax + 1))
    rep.add("table-route", ok, f"diagonal of the recurrence table agrees up to n = {amax}")
    rep.add("anchor-r5", cnt.r_diag(5) == 26, "r(5) = 26")
    return rep


def suite_asymptotics() -> VerificationReport:
    rep = VerificationReport("asymptotics")
    e4 = cnt.asymptotic_estimate(4)
    rep.add(
        "small-n-error",
        e4.relative_error < 0.06,
        f"relative error at n=4 is {e4.relative_error:.4f} (< 0.06)",
    )
    ns = (100, 200, 400, 800, 1600)
    errs = [cnt.asymptotic_estimate(n).relative_error for n in ns]
    rep.add(
        "monotone-decay",
        all(a > b for a, b in zip(errs, errs[1:])),
        "relative error decreases over n = " + ", ".join(map(str, ns)),
    )
    scaled = [n * e for n, e in zip(ns, errs)]
    ratios = [b / a for a, b in zip(scaled, scaled[1:])]
    rep.add(
        "error-scale",
        all(0.8 <= r <= 1.25 for r in ratios),
        "n * relative_error stays bounded (successive ratios "
        + ", ".join(f"{r:.3f}" for r in ratios)
        + ")",
    )
    return rep


def suite_bounds(max_sum: int = 60) -> VerificationReport:
    rep = VerificationReport("bounds")
    ok = all(
        cnt.fib_bound_check(k, n)
        for s in range(max_sum + 1)
        for k in range(s + 1)
        for n in [s - k]
    )
    rep.add("fibonacci-bound", ok, f"a(k,n) <= F(k+n) for k+n <= {max_sum}")
    a4040_t = cnt.a_table(80).value(40, 40)
    a4040_b = cnt.a_binomial(40, 40)
    rep.add(
        "forty-points-bound",
        a4040_t == a4040_b and a4040_t < 3**39,
        f"a(40,40) = {a4040_t} < 3^39 = {3**39} (table and binomial routes agree)",
    )
    return rep


def suite_bijections(max_scale: int = 12) -> VerificationReport:
    rep = VerificationReport("bijections")
    fences = range(0, min(max_scale, 12) + 1, 2)

    def closed_sets():
        for m in fences:
            yield from enum_closed_sets(m)

    r = bij.build_report(
        "closed-to-matching",
        closed_sets(),
        bij.closed_set_to_matching,
        bij.matching_to_closed_set,
    )
    rep.add(r.name, r.passed, f"{r.domain_size} closed sets, {r.roundtrip_failures} roundtrip failures")

    r = bij.build_report(
        "closed-to-012",
        closed_sets(),
        bij.closed_set_to_012,
        bij.sum012_to_closed_set,
    )
    rep.add(r.name, r.passed, f"{r.domain_size} closed sets, {r.roundtrip_failures} roundtrip failures")

    marked = ClosedSet(14, frozenset({4, 5, 6, 8, 9, 10}))
    rep.add(
        "closed-to-012-anchor",
        bij.closed_set_to_012(marked).summands == (0, 0, 2, 1, 2, 1, 0),
        "the marked 14-vertex fence encodes as 0+0+2+1+2+1+0",
    )

    def sums():
        for n in range(min(max_scale // 2, 6) + 1):
            for k in range(2 * n + 1):
                yield from enum_012(n, k)

    r = bij.build_report("012-to-motzkin", sums(), bij.s012_to_motzkin, bij.motzkin_to_s012)
    rep.add(r.name, r.passed, f"{r.domain_size} sums, {r.roundtrip_failures} roundtrip failures")

    def square_matchings():
        for n in range(min(max_scale // 2, 5) + 1):
            yield from enum_matchings(n, n)

    r = bij.build_report(
        "matching-to-weighted",
        square_matchings(),
        bij.matching_to_weighted_path,
        bij.weighted_path_to_matching,
    )
    rep.add(r.name, r.passed, f"{r.domain_size} matchings, {r.roundtrip_failures} roundtrip failures")

    nmax = min(max_scale // 2 + 2, 8)

    def chord_configs():
        for n in range(1, nmax + 1):
            yield from enum_chords(n)

    r = bij.build_report(
        "chords-to-motzkin",
        chord_configs(),
        bij.chords_to_motzkin,
        bij.motzkin_to_chords,
    )
    rep.add(r.name, r.passed, f"{r.domain_size} configurations, {r.roundtrip_failures} roundtrip failures")

    def level_paths():
        for n in range(1, nmax + 1):
            yield from enum_peakless(n, 0)

    r = bij.build_report(
        "motzkin-to-chords",
        level_paths(),
        bij.motzkin_to_chords,
        bij.chords_to_motzkin,
    )
    rep.add(r.name, r.passed, f"{r.domain_size} paths, {r.roundtrip_failures} roundtrip failures")

    ok = True
    count = 0
    for s in range(min(max_scale, 12) + 1):
        for k in range(s + 1):
            for m in enum_matchings(k, s - k):
                up, lo = bij.matching_split_horizontals(m)
                if bij.matching_from_horizontals(m.k, m.n, up, lo) != m:
                    ok = False
                count += 1
    rep.add("split-horizontals", ok, f"{count} matchings rebuilt from their segment layout")

    def s1_comps():
        for n in range(min(max_scale, 10) + 1):
            yield from enum_compositions(ONE_TWO, n)

    r = bij.build_report(
        "s1-to-domino",
        s1_comps(),
        bij.composition_s1_to_domino,
        bij.domino_to_composition_s1,
    )
    rep.add(r.name, r.passed, f"{r.domain_size} compositions, {r.roundtrip_failures} roundtrip failures")

    r = bij.build_report(
        "s1-to-odd", s1_comps(), bij.composition_s1_to_s2, bij.composition_s2_to_s1
    )
    rep.add(r.name, r.passed, f"{r.domain_size} compositions, {r.roundtrip_failures} roundtrip failures")

    anchor = bij.composition_s1_to_s2(Composition((1, 2, 2, 1, 2, 1, 2), ONE_TWO))
    rep.add(
        "s1-to-odd-anchor",
        anchor.parts == (1, 5, 3, 3),
        "1+2+2+1+2+1+2 maps to 1+5+3+3",
    )

    def staircases():
        for s in range(min(max_scale, 10) + 1):
            for k in range(s + 1):
                yield from enum_staircases(k, s - k)

    ok = True
    count = 0
    for st in staircases():
        h, v = bij.staircase_to_composition_pair(st)
        if bij.composition_pair_to_staircase(h, v) != st:
            ok = False
        count += 1
    rep.add("staircase-to-compositions", ok, f"{count} staircases rebuilt from their run pair")
    return rep


def suite_lacing() -> VerificationReport:
    rep = VerificationReport("lacing")
    for n in (2, 3, 4):
        got = sum(1 for _ in enum_lacings(n, n, "right"))
        want = math.factorial(n - 1) ** 2 * cnt.a_long(n, n)
        rep.add(
            f"right-count-{n}x{n}",
            got == want,
            f"brute force found {got}, formula ((n-1)!)^2 a(n,n) gives {want}",
        )
    for n in (2, 3, 4):
        got = sum(1 for _ in enum_lacings(n, n, "non_self_crossing"))
        rep.add(
            f"noncrossing-count-{n}x{n}",
            got == cnt.a_long(n, n),
            f"brute force found {got}, a(n,n) = {cnt.a_long(n, n)}",
        )
    mismatch_swapped = False
    ok_all = True
    for k, n in ((2, 3), (3, 4), (2, 4)):
        b = cnt.b_table(k + n).value(k, n)
        ncross = sum(1 for _ in enum_lacings(k, n, "non_self_crossing"))
        right = sum(1 for _ in enum_lacings(k, n, "right"))
        free = _count_unrestricted_lacings(k, n)
        formula = math.factorial(k - 1) * math.factorial(n - 1) * b
        free_formula = math.factorial(k) * math.factorial(n) * b
        ok = ncross == b and right == formula and free == free_formula
        ok_all = ok_all and ok
        if right != free_formula:
            mismatch_swapped = True
        rep.add(
            f"defective-{k}x{n}",
            ok,
            f"non-crossing {ncross} = b({k},{n}) = {b}; right {right} = "
            f"(k-1)!(n-1)!b = {formula}; unrestricted {free} = k!n!b = {free_formula}",
        )
    rep.add(
        "defective-formula-resolution",
        ok_all and mismatch_swapped,
        "brute force decides the uneven-shoe counts: right lacings number "
        "(k-1)!(n-1)! b(k,n) and unrestricted ones k! n! b(k,n); the swapped "
        "reading (k! n! for right lacings) disagrees with enumeration",
    )
    return rep


def _count_unrestricted_lacings(k: int, n: int) -> int:
    """Lacings free of the topmost-pair rule: start on the left, end on the
    right, every hole once, every hole with an opposite-side lace-neighbour
    (knot edge included)."""
    import itertools

    holes = [("L", i) for i in range(1, k + 1)] + [("R", j) for j in range(1, n + 1)]
    count = 0
    for perm in itertools.permutations(holes):
        if perm[0][0] != "L" or perm[-1][0] != "R":
            continue
        total = len(perm)
        ok = True
        for idx, h in enumerate(perm):
            nbs = []
            if idx > 0:
                nbs.append(perm[idx - 1])
            if idx + 1 < total:
                nbs.append(perm[idx + 1])
            if idx == 0:
                nbs.append(perm[-1])
            if idx == total - 1:
                nbs.append(perm[0])
            if not any(nb[0] != h[0] for nb in nbs):
                ok = False
                break
        count += ok
    return count


def _enum_count(gen) -> int:
    return sum(1 for _ in gen)


def suite_enumeration(max_scale: int = 12) -> VerificationReport:
    """Cardinality agreement between every enumerator and its counter."""
    rep = VerificationReport("enumeration")
    s = min(max_scale, 12)
    ok = all(
        _enum_count(enum_matchings(k, t - k)) == cnt.a_long(k, t - k)
        for t in range(s + 1)
        for k in range(t + 1)
    )
    rep.add("matchings", ok, f"matching enumeration sizes equal a(k,n) for k+n <= {s}")
    ok = all(
        _enum_count(enum_peakless(k, n)) == cnt.m_count(k, n)
        for k in range(min(s, 10) + 1)
        for n in range(-k, k + 1)
    )
    rep.add("peakless-paths", ok, f"path enumeration sizes equal m(k,n) for k <= {min(s, 10)}")
    ok = all(
        _enum_count(enum_domino_pairs(k, n)) == cnt.d_count(k, n)
        for k in range(min(s // 2 + 2, 8) + 1)
        for n in range(min(s // 2 + 2, 8) + 1)
    )
    rep.add("domino-pairs", ok, "tiling-pair enumeration sizes equal d(k,n)")
    zt = cnt.z_table(s)
    ok = all(
        _enum_count(enum_closed_sets(m, size_filter=k)) == zt.value(m, k)
        for m in range(s + 1)
        for k in range(m + 1)
    )
    rep.add("closed-sets", ok, f"closed-set enumeration sizes equal z(m,k) for m <= {s}")
    ok = all(
        _enum_count(enum_012(n, k)) == cnt.s_count(n, k)
        for n in range(min(s // 2 + 2, 8) + 1)
        for k in range(2 * n + 1)
    )
    rep.add("sums-012", ok, "0-1-2 sum enumeration sizes equal s(n,k)")
    ok = all(
        _enum_count(enum_weighted_paths(c)) == cnt.r_diag(c)
        for c in range(min(s // 2 + 2, 8) + 1)
    )
    rep.add("weighted-paths", ok, "priced-path enumeration sizes equal r(cost)")
    ok = all(
        _enum_count(enum_chords(n)) == cnt.r_diag(n)
        for n in range(1, min(s // 2 + 2, 8) + 1)
    )
    rep.add("chords", ok, "symmetric chord enumeration sizes equal a(n,n)")
    ok = all(
        _enum_count(enum_staircases(k, t - k)) == cnt.b_table(t).value(k, t - k)
        for t in range(s + 1)
        for k in range(t + 1)
    )
    rep.add("staircases", ok, f"staircase enumeration sizes equal b(k,n) for k+n <= {s}")
    ok = all(
        _enum_count(enum_b_step_paths(k, t - k)) == cnt.b_table(t).value(k, t - k)
        for t in range(s + 1)
        for k in range(t + 1)
    )
    rep.add("step-paths", ok, f"step-path enumeration sizes equal b(k,n) for k+n <= {s}")
    lmax = min(s, 8)
    ok = True
    for t in range(2, lmax + 1):
        for k in range(1, t):
            n = t - k
            if _enum_count(enum_lacings(k, n, "non_self_crossing")) != cnt.b_table(t).value(k, n):
                ok = False
    rep.add("lacings", ok, f"non-crossing lacing counts equal b(k,n) for k+n <= {lmax}")
    return rep


def run_suite(name: str, max_scale: int | None = None) -> VerificationReport:
    """Run one suite (or all of them) at an optional overriding scale."""
    if name == "triangle":
        return suite_triangle(max_scale if max_scale is not None else 16)
    if name == "bijections":
        return suite_bijections(max_scale if max_scale is not None else 12)
    if name == "fibonacci":
        return suite_fibonacci(max_scale if max_scale is not None else 30)
    if name == "diagonal":
        return suite_diagonal(max_scale if max_scale is not None else 200)
    if name == "asymptotics":
        return suite_asymptotics()
    if name == "bounds":
        return suite_bounds(max_scale if max_scale is not None else 60)
    if name == "lacing":
        return suite_lacing()
    if name == "all":
        scale = max_scale if max_scale is not None else 12
        rep = VerificationReport("all")
        rep.extend(suite_triangle(min(scale, 16)))
        rep.extend(suite_enumeration(scale))
        rep.extend(suite_bijections(scale))
        rep.extend(suite_fibonacci(30))
        rep.extend(suite_diagonal(200))
        rep.extend(suite_asymptotics())
        rep.extend(suite_bounds(60))
        rep.extend(suite_lacing())
        return rep
    raise ValueError(f"unknown suite {name!r}")
