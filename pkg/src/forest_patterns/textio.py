"""Text and JSON forms for the objects the command line deals in.

Forests on [n] serialize as ``n|p_1 p_2 ... p_n`` (parent of vertex i at
position i, 0 = virtual root); ordered forests append ``|`` and the child
orders of vertices 0..n as semicolon-separated comma lists.  The JSON form
uses keys ``n``, ``parents``, ``childOrder``.

Permutations are comma-separated integers; cycle decompositions are
parenthesized cycles, wrapped in braces per block when partitioned;
partition-like objects are brace-delimited blocks.
"""
from __future__ import annotations

import json
import re

from .forests import Forest, from_parents
from .generate import Composition, ListPartition, OrderedSetPartition, SetPartition
from .perms import CycleDecomposition, Permutation


# -- permutations -----------------------------------------------------------


def perm_to_text(p: Permutation) -> str:
    return ",".join(str(x) for x in p.word)


def parse_perm(text: str) -> Permutation:
    text = text.strip()
    if not text:
        return Permutation(())
    return Permutation(int(tok) for tok in text.split(","))


# -- forests ----------------------------------------------------------------


def forest_to_text(f: Forest) -> str:
    if f.labels != tuple(range(1, f.n + 1)):
        raise ValueError("text form is defined for forests on 1..n only")
    base = f"{f.n}|" + " ".join(str(f.parent[i]) for i in range(1, f.n + 1))
    if f.child_order is None:
        return base
    orders = ";".join(
        ",".join(str(c) for c in f.child_order[v]) for v in range(f.n + 1)
    )
    return base + "|" + orders


def parse_forest(text: str) -> Forest:
    parts = text.strip().split("|")
    if len(parts) not in (2, 3):
        raise ValueError(f"expected 'n|p_1 ... p_n[|orders]', got {text!r}")
    n = int(parts[0])
    vec = [int(tok) for tok in parts[1].split()] if parts[1].strip() else []
    base = from_parents(n, vec)
    if len(parts) == 2:
        return base
    chunks = parts[2].split(";")
    if len(chunks) != n + 1:
        raise ValueError(f"expected {n + 1} child orders, got {len(chunks)}")
    order = {
        v: tuple(int(tok) for tok in chunk.split(",") if tok.strip())
        for v, chunk in enumerate(chunks)
    }
    return Forest(base.parent, order)


def forest_to_json(f: Forest) -> dict:
    if f.labels != tuple(range(1, f.n + 1)):
        raise ValueError("JSON form is defined for forests on 1..n only")
    child_order = None
    if f.child_order is not None:
        child_order = [list(f.child_order[v]) for v in range(f.n + 1)]
    return {
        "n": f.n,
        "parents": [f.parent[i] for i in range(1, f.n + 1)],
        "childOrder": child_order,
    }


def forest_from_json(data: dict | str) -> Forest:
    if isinstance(data, str):
        data = json.loads(data)
    base = from_parents(data["n"], data["parents"])
    if data.get("childOrder") is None:
        return base
    order = {v: tuple(kids) for v, kids in enumerate(data["childOrder"])}
    return Forest(base.parent, order)


# -- cycle decompositions ----------------------------------------------------

_CYCLE_RE = re.compile(r"\(([^()]*)\)")
_BLOCK_RE = re.compile(r"\{([^{}]*)\}")


def cycles_to_text(cd: CycleDecomposition) -> str:
    return str(cd)


def parse_cycles(text: str) -> CycleDecomposition:
    """Parse ``(11,4,10,7)(12)`` (ordered) or ``{(2,1)(3)}{(4)}`` (partitioned)."""
    text = text.strip().replace(" ", "")
    if text.startswith("{"):
        blocks_text = _BLOCK_RE.findall(text)
        if "".join("{" + b + "}" for b in blocks_text) != text:
            raise ValueError(f"malformed partitioned cycles: {text!r}")
        cycles: list[tuple[int, ...]] = []
        blocks: list[list[int]] = []
        for chunk in blocks_text:
            indices = []
            for body in _CYCLE_RE.findall(chunk):
                indices.append(len(cycles))
                cycles.append(tuple(int(tok) for tok in body.split(",")))
            blocks.append(indices)
        return CycleDecomposition(cycles, blocks)
    bodies = _CYCLE_RE.findall(text)
    if "".join("(" + b + ")" for b in bodies) != text:
        raise ValueError(f"malformed cycles: {text!r}")
    return CycleDecomposition(tuple(int(tok) for tok in body.split(",")) for body in bodies)


# -- partitions --------------------------------------------------------------


def _parse_blocks(text: str) -> list[tuple[int, ...]]:
    text = text.strip().replace(" ", "")
    bodies = _BLOCK_RE.findall(text)
    if "".join("{" + b + "}" for b in bodies) != text or not bodies:
        raise ValueError(f"malformed block list: {text!r}")
    return [tuple(int(tok) for tok in body.split(",")) for body in bodies]


def parse_set_partition(text: str) -> SetPartition:
    return SetPartition(_parse_blocks(text))


def parse_ordered_set_partition(text: str) -> OrderedSetPartition:
    return OrderedSetPartition(_parse_blocks(text))


def parse_list_partition(
    text: str, ordered_blocks: bool = False, up_to_reverse: bool = False
) -> ListPartition:
    return ListPartition(_parse_blocks(text), ordered_blocks, up_to_reverse)


def parse_composition(text: str) -> Composition:
    return Composition(int(tok) for tok in text.strip().split(","))
