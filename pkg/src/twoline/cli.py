"""Command-line front end.

Subcommands: count, table, enumerate, map, verify, export, asymptotic.
Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 I/O error,
4 instance too large.  All output is UTF-8 text, newline terminated,
byte-deterministic for identical arguments.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

from . import bijections as bij
from . import counting as cnt
from . import verify as vfy
from .errors import EmptyPartSet, InstanceTooLarge, InvalidInput, TwolineError
from .objects import (
    ChordConfig,
    ClosedSet,
    Composition,
    Matching,
    MotzkinPath,
    Staircase,
    Sum012,
    WeightedPath,
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
from .partsets import ODD, ONE_TWO, PartSet

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_TOO_LARGE = 4


class UsageError(TwolineError):
    pass


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(text)


# ---------------------------------------------------------------------------
# count
# ---------------------------------------------------------------------------

def _require(args, *names) -> list[int]:
    vals = []
    for name in names:
        v = getattr(args, name)
        if v is None:
            raise UsageError(f"family {args.family!r} needs --{name}")
        vals.append(v)
    return vals


def cmd_count(args) -> int:
    fam = args.family
    if fam == "a":
        k, n = _require(args, "k", "n")
        val = cnt.a_long(k, n) if k >= 0 and n >= 0 else 0
    elif fam == "b":
        k, n = _require(args, "k", "n")
        val = cnt.b_value(k, n)
    elif fam == "z":
        n, k = _require(args, "n", "k")
        val = cnt.z_value(n, k)
    elif fam == "d":
        k, n = _require(args, "k", "n")
        val = cnt.d_count(k, n)
    elif fam == "m":
        k, n = _require(args, "k", "n")
        val = cnt.m_count(k, n)
    elif fam == "s":
        n, k = _require(args, "n", "k")
        val = cnt.s_count(n, k)
    elif fam == "r":
        (n,) = _require(args, "n")
        if n < 0:
            raise UsageError("--n must be nonnegative")
        val = cnt.r_diag(n)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown family {fam!r}")
    _write(f"{val}\n", args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------

def _build_table(kind: str, max_scale: int) -> cnt.TriangleTable:
    if max_scale < 0:
        raise UsageError("--max must be nonnegative")
    if kind == "a":
        return cnt.a_table(2 * max_scale)
    if kind == "b":
        return cnt.b_table(max_scale)
    return cnt.z_table(max_scale)


def cmd_table(args) -> int:
    table = _build_table(args.kind, args.max)
    rows = list(table.rows())
    fmt = args.format or "csv"
    if fmt == "csv":
        text = "\n".join(",".join(str(v) for v in row) for row in rows) + "\n"
    elif fmt == "json":
        text = json.dumps({"kind": args.kind, "rows": [list(r) for r in rows]}) + "\n"
    elif fmt == "bfile":
        flat = [v for row in rows for v in row]
        text = "".join(f"{i} {v}\n" for i, v in enumerate(flat))
    else:
        raise UsageError(f"table cannot be written as {fmt!r}")
    _write(text, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# enumerate
# ---------------------------------------------------------------------------

def _enumerator(args):
    fam = args.family
    if fam == "matchings":
        k, n = _require(args, "k", "n")
        return enum_matchings(k, n)
    if fam == "motzkin":
        k, n = _require(args, "k", "n")
        return enum_peakless(k, n)
    if fam == "dominoes":
        k, n = _require(args, "k", "n")
        return enum_domino_pairs(k, n)
    if fam == "closedsets":
        (m,) = _require(args, "m")
        return enum_closed_sets(m, size_filter=args.size)
    if fam == "s012":
        n, k = _require(args, "n", "k")
        return enum_012(n, k)
    if fam == "compositions":
        (n,) = _require(args, "n")
        part_set = PartSet.parse(args.set or "s1")
        part_count = tuple(args.part_count) if args.part_count else None
        return enum_compositions(
            part_set, n, part_count=part_count, num_parts=args.summands
        )
    if fam == "weighted":
        if args.cost is None:
            raise UsageError("family 'weighted' needs --cost")
        return enum_weighted_paths(args.cost)
    if fam == "chords":
        (n,) = _require(args, "n")
        return enum_chords(n)
    if fam == "lacings":
        k, n = _require(args, "k", "n")
        return enum_lacings(k, n, args.mode or "non_self_crossing")
    if fam == "staircases":
        k, n = _require(args, "k", "n")
        return enum_staircases(k, n)
    if fam == "steppaths":
        k, n = _require(args, "k", "n")
        return enum_b_step_paths(k, n)
    raise UsageError(f"unknown family {fam!r}")  # pragma: no cover


def cmd_enumerate(args) -> int:
    lines = []
    for i, obj in enumerate(_enumerator(args)):
        if args.limit is not None and i >= args.limit:
            break
        lines.append(obj.encode())
    _write("".join(line + "\n" for line in lines), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# map
# ---------------------------------------------------------------------------

def _map_split(args) -> str:
    m = Matching.decode(args.object)
    up, lo = bij.matching_split_horizontals(m)
    enc = lambda pairs: ",".join(f"{a}-{b}" for a, b in pairs)
    return f"{enc(up)};{enc(lo)}"


def _map_join(args) -> str:
    if args.k is None or args.n is None:
        raise UsageError("join-horizontals needs --k and --n")
    try:
        up_text, lo_text = args.object.split(";")
    except ValueError:
        raise UsageError("expected 'upper;lower' segment lists") from None
    parse = lambda t: tuple(
        tuple(int(x) for x in tok.split("-")) for tok in t.split(",") if tok
    )
    m = bij.matching_from_horizontals(args.k, args.n, parse(up_text), parse(lo_text))
    return m.encode()


def _map_compositions_to_staircase(args) -> str:
    try:
        h_text, v_text = args.object.split(";")
    except ValueError:
        raise UsageError("expected 'horizontal;vertical' compositions") from None
    h = Composition.decode(h_text, ONE_TWO)
    v = Composition.decode(v_text, ONE_TWO)
    return bij.composition_pair_to_staircase(h, v).encode()


def cmd_map(args) -> int:
    name = args.bijection
    simple = {
        "closed-to-matching": (ClosedSet.decode, bij.closed_set_to_matching),
        "matching-to-closed": (Matching.decode, bij.matching_to_closed_set),
        "closed-to-012": (ClosedSet.decode, bij.closed_set_to_012),
        "012-to-closed": (Sum012.decode, bij.sum012_to_closed_set),
        "012-to-motzkin": (Sum012.decode, bij.s012_to_motzkin),
        "motzkin-to-012": (MotzkinPath.decode, bij.motzkin_to_s012),
        "matching-to-weighted": (Matching.decode, bij.matching_to_weighted_path),
        "weighted-to-matching": (WeightedPath.decode, bij.weighted_path_to_matching),
        "motzkin-to-chords": (MotzkinPath.decode, bij.motzkin_to_chords),
        "chords-to-motzkin": (ChordConfig.decode, bij.chords_to_motzkin),
        "s1-to-domino": (
            lambda t: Composition.decode(t, ONE_TWO),
            bij.composition_s1_to_domino,
        ),
        "domino-to-s1": (str.strip, bij.domino_to_composition_s1),
        "s1-to-s2": (
            lambda t: Composition.decode(t, ONE_TWO),
            bij.composition_s1_to_s2,
        ),
        "s2-to-s1": (lambda t: Composition.decode(t, ODD), bij.composition_s2_to_s1),
        "staircase-to-compositions": (
            Staircase.decode,
            lambda s: ";".join(c.encode() for c in bij.staircase_to_composition_pair(s)),
        ),
    }
    if name in simple:
        decode, fn = simple[name]
        result = fn(decode(args.object))
        text = result if isinstance(result, str) else result.encode()
    elif name == "split-horizontals":
        text = _map_split(args)
    elif name == "join-horizontals":
        text = _map_join(args)
    elif name == "compositions-to-staircase":
        text = _map_compositions_to_staircase(args)
    else:
        raise UsageError(f"unknown bijection {name!r}")
    _write(text + "\n", args.out)
    return EXIT_OK


MAP_NAMES = (
    "closed-to-matching",
    "matching-to-closed",
    "closed-to-012",
    "012-to-closed",
    "012-to-motzkin",
    "motzkin-to-012",
    "matching-to-weighted",
    "weighted-to-matching",
    "motzkin-to-chords",
    "chords-to-motzkin",
    "split-horizontals",
    "join-horizontals",
    "s1-to-domino",
    "domino-to-s1",
    "s1-to-s2",
    "s2-to-s1",
    "staircase-to-compositions",
    "compositions-to-staircase",
)


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def cmd_verify(args) -> int:
    report = vfy.run_suite(args.suite, args.max)
    if (args.format or "json") == "text":
        lines = [
            f"{'PASS' if c.ok else 'FAIL'} {c.id}: {c.detail}" for c in report.checks
        ]
        lines.append(f"overall: {'pass' if report.overall else 'fail'}")
        _write("\n".join(lines) + "\n", args.out)
    else:
        _write(report.to_json() + "\n", args.out)
    return EXIT_OK if report.overall else EXIT_VERIFY_FAILED


# ---------------------------------------------------------------------------
# export
# ---------------------------------------------------------------------------

SEQUENCES = ("A079487", "A051286", "A125250", "A078698")


def _export_terms(seq: str, terms: int) -> list[int]:
    if seq == "A051286":
        return [cnt.r_diag(n) for n in range(terms)]
    if seq == "A078698":
        return [
            math.factorial(n - 1) ** 2 * cnt.r_diag(n) for n in range(1, terms + 1)
        ]
    flat: list[int] = []
    row = 0
    while len(flat) < terms:
        if seq == "A079487":
            flat.extend(cnt.z_value(row, k) for k in range(row + 1))
        else:  # A125250: staircase triangle by rows
            flat.extend(cnt.b_value(i, row - i) for i in range(row + 1))
        row += 1
    return flat[:terms]


def cmd_export(args) -> int:
    if args.terms < 1:
        raise UsageError("--terms must be positive")
    values = _export_terms(args.sequence, args.terms)
    text = "".join(f"{i} {v}\n" for i, v in enumerate(values))
    _write(text, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# asymptotic
# ---------------------------------------------------------------------------

def cmd_asymptotic(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    est = cnt.asymptotic_estimate(args.n)
    if (args.format or "text") == "json":
        text = json.dumps(
            {
                "n": est.n,
                "estimate_log": est.estimate_log,
                "exact_log": est.exact_log,
                "relative_error": est.relative_error,
            }
        )
    else:
        text = (
            f"n={est.n} estimate_log={est.estimate_log:.12f} "
            f"exact_log={est.exact_log:.12f} relative_error={est.relative_error:.3e}"
        )
    _write(text + "\n", args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv", "bfile"))
    common.add_argument("--out", metavar="PATH", help="write output to PATH")
    common.add_argument("--limit", type=int, metavar="N", help="stop after N objects")

    p = argparse.ArgumentParser(
        prog="twoline",
        description="Exact counts, enumerations, maps and checks for the "
        "two-line noncrossing matching family.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("count", parents=[common], help="print one exact count")
    pc.add_argument("family", choices=("a", "b", "z", "d", "m", "s", "r"))
    pc.add_argument("--k", type=int)
    pc.add_argument("--n", type=int)
    pc.set_defaults(func=cmd_count)

    pt = sub.add_parser(
        "table",
        parents=[common],
        help="emit a whole triangle (csv/json by rows, bfile as 'index value' "
        "lines over the rows flattened left to right, offset 0)",
    )
    pt.add_argument("kind", choices=("a", "b", "z"))
    pt.add_argument("--max", type=int, required=True, help="last row index")
    pt.set_defaults(func=cmd_table)

    pe = sub.add_parser(
        "enumerate", parents=[common], help="list objects, one encoding per line"
    )
    pe.add_argument(
        "family",
        choices=(
            "matchings",
            "motzkin",
            "dominoes",
            "closedsets",
            "s012",
            "compositions",
            "weighted",
            "chords",
            "lacings",
            "staircases",
            "steppaths",
        ),
    )
    pe.add_argument("--k", type=int)
    pe.add_argument("--n", type=int)
    pe.add_argument("--m", type=int, help="fence size for closedsets")
    pe.add_argument("--size", type=int, help="closed-set cardinality filter")
    pe.add_argument("--cost", type=int, help="price for weighted paths")
    pe.add_argument("--set", help="part set for compositions: s1, s2, s3 or '1,2,5'")
    pe.add_argument(
        "--part-count",
        nargs=2,
        type=int,
        metavar=("P", "C"),
        help="keep compositions with part P appearing exactly C times",
    )
    pe.add_argument("--summands", type=int, help="keep compositions with this many parts")
    pe.add_argument("--mode", choices=("right", "non_self_crossing"))
    pe.set_defaults(func=cmd_enumerate)

    pm = sub.add_parser(
        "map", parents=[common], help="apply a bijection to an encoded object"
    )
    pm.add_argument("bijection", choices=MAP_NAMES)
    pm.add_argument("object", help="canonical encoding of the input object")
    pm.add_argument("--k", type=int, help="line sizes for join-horizontals")
    pm.add_argument("--n", type=int)
    pm.set_defaults(func=cmd_map)

    pv = sub.add_parser("verify", parents=[common], help="run a verification suite")
    pv.add_argument("--suite", choices=vfy.SUITES, default="all")
    pv.add_argument("--max", type=int, help="override the suite's scale")
    pv.set_defaults(func=cmd_verify)

    px = sub.add_parser(
        "export",
        parents=[common],
        help="write a b-file (offset 0; A078698 line i holds the count for "
        "i+1 hole pairs)",
    )
    px.add_argument("sequence", choices=SEQUENCES)
    px.add_argument("--terms", type=int, required=True)
    px.set_defaults(func=cmd_export)

    pa = sub.add_parser(
        "asymptotic", parents=[common], help="leading-term estimate vs exact r(n)"
    )
    pa.add_argument("--n", type=int, required=True)
    pa.set_defaults(func=cmd_asymptotic)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InstanceTooLarge as exc:
        print(f"twoline: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (UsageError, InvalidInput, EmptyPartSet, ValueError) as exc:
        print(f"twoline: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"twoline: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
