"""Command line entry point: enumerate / count / map / verify / table.

Exit codes: 0 on success (and when every verify row passes), 1 when a
verify row fails, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from typing import Callable, Sequence

from . import bijections as bij
from . import counting, textio, verify
from .forests import FamilyTag, Forest, avoids
from .generate import (
    Composition,
    ListPartition,
    OrderedSetPartition,
    SetPartition,
    gen_compositions,
    gen_forests,
    gen_list_partitions,
    gen_ordered_cycle_decomps,
    gen_ordered_set_partitions,
    gen_partitioned_cycle_decomps,
    gen_set_partitions,
)
from .perms import CycleDecomposition, Pattern, PatternMode, Permutation, pattern

FOREST_FAMILIES = {
    "unordered": FamilyTag.UNORDERED,
    "binary": FamilyTag.UNORDERED_BINARY,
    "ordered": FamilyTag.ORDERED,
}

OBJECT_FAMILIES: dict[str, Callable[[int], object]] = {
    "set-partitions": gen_set_partitions,
    "ordered-set-partitions": gen_ordered_set_partitions,
    "list-partitions": gen_list_partitions,
    "ordered-list-partitions": lambda n: gen_list_partitions(
        n, ordered_blocks=True, up_to_reverse=True
    ),
    "compositions": gen_compositions,
    "ordered-cycle-decompositions": gen_ordered_cycle_decomps,
    "partitioned-cycle-decompositions": gen_partitioned_cycle_decomps,
}


def parse_pattern_list(text: str, mode: str = "mixed") -> list[Pattern]:
    """Parse ``321,!231``: a ``!`` prefix marks a consecutive pattern.

    ``mode`` = classical or consecutive forces every pattern to that mode;
    ``mixed`` (the default) honors the prefixes.
    """
    pats = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        consecutive = tok.startswith("!")
        word = tok.lstrip("!")
        if mode == "classical":
            consecutive = False
        elif mode == "consecutive":
            consecutive = True
        pats.append(
            pattern(word, PatternMode.CONSECUTIVE if consecutive else PatternMode.CLASSICAL)
        )
    if not pats:
        raise ValueError("empty pattern list")
    return pats


def object_to_json(obj) -> dict:
    if isinstance(obj, Forest):
        return {"kind": "forest", **textio.forest_to_json(obj)}
    if isinstance(obj, Permutation):
        return {"kind": "permutation", "word": list(obj.word)}
    if isinstance(obj, CycleDecomposition):
        return {
            "kind": "cycles",
            "cycles": [list(c) for c in obj.cycles],
            "blocks": None if obj.blocks is None else [list(b) for b in obj.blocks],
        }
    if isinstance(obj, SetPartition):
        return {"kind": "setPartition", "blocks": [list(b) for b in obj.blocks]}
    if isinstance(obj, OrderedSetPartition):
        return {"kind": "orderedSetPartition", "blocks": [list(b) for b in obj.blocks]}
    if isinstance(obj, ListPartition):
        return {
            "kind": "listPartition",
            "blocks": [list(b) for b in obj.blocks],
            "orderedBlocks": obj.ordered_blocks,
            "upToReverse": obj.up_to_reverse,
        }
    if isinstance(obj, Composition):
        return {"kind": "composition", "parts": list(obj.parts)}
    raise TypeError(f"no JSON form for {type(obj).__name__}")


def object_from_json(data: dict | str):
    if isinstance(data, str):
        data = json.loads(data)
    kind = data["kind"]
    if kind == "forest":
        return textio.forest_from_json(data)
    if kind == "permutation":
        return Permutation(data["word"])
    if kind == "cycles":
        return CycleDecomposition(data["cycles"], data.get("blocks"))
    if kind == "setPartition":
        return SetPartition(data["blocks"])
    if kind == "orderedSetPartition":
        return OrderedSetPartition(data["blocks"])
    if kind == "listPartition":
        return ListPartition(data["blocks"], data["orderedBlocks"], data["upToReverse"])
    if kind == "composition":
        return Composition(data["parts"])
    raise ValueError(f"unknown kind {kind!r}")


def object_to_text(obj) -> str:
    if isinstance(obj, Forest):
        return textio.forest_to_text(obj)
    if isinstance(obj, Permutation):
        return textio.perm_to_text(obj)
    return str(obj)


# -- the bijection registry ---------------------------------------------------

_PARSE_FOREST = textio.parse_forest


def _parse_ordered_lists(text: str) -> ListPartition:
    return textio.parse_list_partition(text, ordered_blocks=True, up_to_reverse=True)


BIJECTIONS: dict[str, dict] = {
    "phi": {
        "forward": (textio.parse_perm, bij.perm_to_increasing_forest),
        "inverse": (_PARSE_FOREST, bij.increasing_forest_to_perm),
    },
    "phi_d": {
        "forward": (textio.parse_perm, bij.perm_to_decreasing_forest),
        "inverse": (_PARSE_FOREST, bij.decreasing_forest_to_perm),
    },
    "theta": {
        "forward": (textio.parse_cycles, bij.cycles_to_unimodal_forest),
        "inverse": (_PARSE_FOREST, bij.unimodal_forest_to_cycles),
    },
    "shallow": {
        "forward": (textio.parse_set_partition, bij.set_partition_to_shallow_forest),
        "inverse": (_PARSE_FOREST, bij.shallow_forest_to_set_partition),
    },
    "xi": {
        "forward": (textio.parse_cycles, bij.partitioned_cycles_to_forest),
        "inverse": (_PARSE_FOREST, bij.forest_to_partitioned_cycles),
    },
    "gamma": {
        "forward": (textio.parse_ordered_set_partition, bij.ordered_partition_to_forest),
        "inverse": (_PARSE_FOREST, bij.forest_to_ordered_partition),
    },
    "tau": {
        "forward": (
            textio.parse_list_partition,
            lambda lp: bij.list_partition_to_forest(lp, bij.TauVariant.UNIMODAL132),
        ),
        "inverse": (_PARSE_FOREST, bij.forest_to_list_partition),
    },
    "tau_onedescent": {
        "forward": (
            textio.parse_list_partition,
            lambda lp: bij.list_partition_to_forest(lp, bij.TauVariant.ONE_DESCENT),
        ),
        "inverse": None,
    },
    "rho": {
        "forward": (textio.parse_perm, bij.perm_to_proper_descent_tree),
        "inverse": (_PARSE_FOREST, bij.proper_descent_tree_to_perm),
    },
    "psi": {
        "forward": (_parse_ordered_lists, bij.ordered_lists_to_forest),
        "inverse": (_PARSE_FOREST, bij.forest_to_ordered_lists),
    },
    "alpha": {
        "forward": (_PARSE_FOREST, bij.avoid312_to_avoid321),
        "inverse": (_PARSE_FOREST, bij.avoid321_to_avoid312),
    },
    "beta_wilf": {
        "forward": (_PARSE_FOREST, bij.avoid321_to_avoid312),
        "inverse": (_PARSE_FOREST, bij.avoid312_to_avoid321),
    },
}


# -- output helpers -----------------------------------------------------------


def _emit_rows(rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        print(json.dumps(rows, sort_keys=True), file=out)
    elif fmt == "csv":
        if rows:
            writer = csv.DictWriter(out, fieldnames=list(rows[0].keys()), lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
    else:
        for row in rows:
            print(" ".join(f"{k}={v}" for k, v in row.items()), file=out)


def _default_jobs() -> int:
    return max(1, os.cpu_count() or 1)


# -- subcommands --------------------------------------------------------------


def _cmd_enumerate(args, out) -> int:
    if args.family in FOREST_FAMILIES:
        stream = gen_forests(args.n, FOREST_FAMILIES[args.family])
        if args.avoid:
            pats = parse_pattern_list(args.avoid, args.mode)
            stream = (f for f in stream if avoids(f, pats))
    else:
        if args.avoid:
            raise ValueError("--avoid only applies to forest families")
        stream = OBJECT_FAMILIES[args.family](args.n)
    emitted = 0
    for obj in stream:
        if args.limit is not None and emitted >= args.limit:
            break
        if args.format == "json":
            print(json.dumps(object_to_json(obj), sort_keys=True), file=out)
        else:
            print(object_to_text(obj), file=out)
        emitted += 1
    return 0


def _cmd_count(args, out) -> int:
    family = FOREST_FAMILIES[args.family]
    pats = parse_pattern_list(args.avoid, args.mode)
    base = {
        "family": args.family,
        "n": args.n,
        "patterns": ",".join(str(p) for p in pats),
    }
    if args.by:
        table = counting.refined_table(
            args.n, family, pats, args.by, jobs=args.jobs, budget=args.budget
        )
        rows = [
            {**base, "by": args.by, "value": k, "count": table[k]}
            for k in sorted(table)
        ]
        if args.format == "text":
            for row in rows:
                print(f"{row['value']} {row['count']}", file=out)
        else:
            _emit_rows(rows, args.format, out)
    else:
        value = counting.brute_count(
            args.n, family, pats, jobs=args.jobs, budget=args.budget
        )
        if args.format == "text":
            print(value, file=out)
        else:
            _emit_rows([{**base, "count": value}], args.format, out)
    return 0


def _cmd_map(args, out) -> int:
    entry = BIJECTIONS[args.bijection]
    direction = "inverse" if args.inverse else "forward"
    if entry[direction] is None:
        raise ValueError(f"bijection {args.bijection!r} exposes no {direction} map")
    parser_fn, map_fn = entry[direction]
    text = args.input.strip()
    if text.startswith('{"'):
        obj_in = object_from_json(text)
    else:
        obj_in = parser_fn(text)
    obj_out = map_fn(obj_in)
    if args.format == "json":
        print(json.dumps(object_to_json(obj_out), sort_keys=True), file=out)
    else:
        print(object_to_text(obj_out), file=out)
    return 0


def _cmd_verify(args, out) -> int:
    rows = verify.run_check(args.theorem, args.max_n, jobs=args.jobs)
    payload = [
        {
            "check": r.check,
            "n": r.n,
            "subject": r.subject,
            "expected": r.expected,
            "computed": r.computed,
            "status": "PASS" if r.ok else "FAIL",
        }
        for r in rows
    ]
    if args.format == "text":
        for row in payload:
            print(
                f"{row['status']} {row['check']} n={row['n']} {row['subject']} "
                f"expected={row['expected']} computed={row['computed']}",
                file=out,
            )
    else:
        _emit_rows(payload, args.format, out)
    return 0 if all(r.ok for r in rows) else 1


def _cmd_table(args, out) -> int:
    rows = list(
        counting.table_rows(args.figure, args.max_n, jobs=args.jobs, budget=args.budget)
    )
    for row in rows:
        row["match"] = (
            "" if row["expected"] is None else str(row["computed"] == row["expected"])
        )
    if args.format == "text":
        for row in rows:
            expected = "?" if row["expected"] is None else row["expected"]
            print(
                f"table {row['figure']} {row['family']} n={row['n']} "
                f"{row['mode']} {row['pattern']}: computed={row['computed']} "
                f"expected={expected}",
                file=out,
            )
    else:
        _emit_rows(rows, args.format, out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="forest-patterns",
        description="Pattern avoidance in rooted labeled forests: enumeration, "
        "bijections, counting, and table reproduction.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=["text", "json", "csv"], default="text")

    p = sub.add_parser("enumerate", help="stream every object of a family")
    p.add_argument(
        "--family",
        required=True,
        choices=sorted(FOREST_FAMILIES) + sorted(OBJECT_FAMILIES),
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--avoid", help="pattern list, e.g. 321,!231 (forest families only)")
    p.add_argument("--mode", choices=["classical", "consecutive", "mixed"], default="mixed")
    p.add_argument("--limit", type=int)
    add_format(p)

    p = sub.add_parser("count", help="count avoiders of a pattern set")
    p.add_argument("--family", required=True, choices=sorted(FOREST_FAMILIES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--avoid", required=True)
    p.add_argument("--mode", choices=["classical", "consecutive", "mixed"], default="mixed")
    p.add_argument("--by", choices=list(counting.STATISTICS))
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--budget", type=int)
    add_format(p)

    p = sub.add_parser("map", help="apply a bijection to one object")
    p.add_argument("--bijection", required=True, choices=sorted(BIJECTIONS))
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--input", required=True)
    add_format(p)

    p = sub.add_parser("verify", help="check a named result against brute force")
    p.add_argument(
        "--theorem", required=True, choices=sorted(verify.CHECKS) + ["all"]
    )
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--jobs", type=int, default=_default_jobs())
    add_format(p)

    p = sub.add_parser("table", help="recompute a bundled reference table")
    p.add_argument("--figure", required=True, choices=sorted(counting.REFERENCE_TABLES))
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--budget", type=int)
    add_format(p)

    return ap


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "count": _cmd_count,
    "map": _cmd_map,
    "verify": _cmd_verify,
    "table": _cmd_table,
}


def run(argv: Sequence[str] | None = None, out=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    out = out if out is not None else sys.stdout
    try:
        return _COMMANDS[args.command](args, out)
    except (ValueError, KeyError, counting.BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
