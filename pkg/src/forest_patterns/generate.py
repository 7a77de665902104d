"""Exhaustive, deterministic generation of forests and partition-like objects.

All streams are lazy, duplicate-free, and emit objects in a fixed order, so
two runs produce identical sequences.  Forests are enumerated directly as
acyclic parent vectors in lexicographic order; the parent vector is the
canonical form for unordered forests, so no isomorphism deduplication is
ever needed.  Ordered (plane) forests extend each parent vector with every
combination of child orders.

Cardinalities (used as oracles by the test suite):

* unordered forests on [n]: (n+1)^(n-1)
* ordered forests on [n]: n! * Catalan(n)
* set partitions: Bell(n); ordered set partitions: sum k! S(n,k)
* ordered cycle decompositions: sum k! c(n,k)
* partitioned cycle decompositions: sum Bell(k) c(n,k)
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Iterator, Sequence

from .forests import FamilyTag, Forest, from_parents
from .perms import CycleDecomposition


# ---------------------------------------------------------------------------
# partition-like domain objects


def _check_disjoint_blocks(blocks: Sequence[Sequence[int]]) -> None:
    flat = [x for b in blocks for x in b]
    if len(set(flat)) != len(flat):
        raise ValueError(f"blocks must be disjoint: {blocks!r}")
    if any(len(b) == 0 for b in blocks):
        raise ValueError("blocks must be nonempty")


@dataclass(frozen=True)
class SetPartition:
    """Disjoint nonempty sets; canonical form sorts blocks by minimum."""

    blocks: tuple[tuple[int, ...], ...]

    def __init__(self, blocks: Iterable[Iterable[int]]):
        bl = [tuple(sorted(b)) for b in blocks]
        _check_disjoint_blocks(bl)
        bl.sort(key=lambda b: b[0])
        object.__setattr__(self, "blocks", tuple(bl))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(x for b in self.blocks for x in b))

    def __str__(self) -> str:
        return "".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)


@dataclass(frozen=True)
class OrderedSetPartition:
    """Disjoint nonempty sets whose order matters; sets sorted internally."""

    blocks: tuple[tuple[int, ...], ...]

    def __init__(self, blocks: Iterable[Iterable[int]]):
        bl = [tuple(sorted(b)) for b in blocks]
        _check_disjoint_blocks(bl)
        object.__setattr__(self, "blocks", tuple(bl))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(x for b in self.blocks for x in b))

    def __str__(self) -> str:
        return "".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)


def _canonical_up_to_reverse(block: tuple[int, ...]) -> tuple[int, ...]:
    # Identify a list with its reversal: store the one where the smallest
    # element sits to the right of the second smallest.
    if len(block) < 2:
        return block
    lo1 = block.index(min(block))
    rest = min(x for x in block if x != block[lo1])
    return block if block.index(rest) < lo1 else block[::-1]


@dataclass(frozen=True)
class ListPartition:
    """A partition whose blocks are internally ordered lists.

    ``ordered_blocks`` makes the block sequence significant (otherwise
    blocks are stored sorted by minimum).  ``up_to_reverse`` identifies
    each block with its reversal and stores the canonical representative.
    """

    blocks: tuple[tuple[int, ...], ...]
    ordered_blocks: bool = False
    up_to_reverse: bool = False

    def __init__(
        self,
        blocks: Iterable[Iterable[int]],
        ordered_blocks: bool = False,
        up_to_reverse: bool = False,
    ):
        bl = [tuple(b) for b in blocks]
        _check_disjoint_blocks(bl)
        if up_to_reverse:
            bl = [_canonical_up_to_reverse(b) for b in bl]
        if not ordered_blocks:
            bl.sort(key=min)
        object.__setattr__(self, "blocks", tuple(bl))
        object.__setattr__(self, "ordered_blocks", ordered_blocks)
        object.__setattr__(self, "up_to_reverse", up_to_reverse)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(x for b in self.blocks for x in b))

    def __str__(self) -> str:
        return "".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)


@dataclass(frozen=True)
class Composition:
    """Positive integer parts with a significant order."""

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        p = tuple(parts)
        if any(x < 1 for x in p):
            raise ValueError(f"parts must be positive: {p!r}")
        object.__setattr__(self, "parts", p)

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


# ---------------------------------------------------------------------------
# forest enumeration


def iter_parent_vectors(
    n: int, binary: bool = False, first_parent: int | None = None
) -> Iterator[tuple[int, ...]]:
    """All acyclic parent vectors (p_1, ..., p_n) in lexicographic order.

    ``binary`` caps every vertex, including the virtual root, at two
    children.  ``first_parent`` restricts p_1 (used to partition the search
    space across workers; the slices cover the space disjointly).
    """
    if n == 0:
        if first_parent is None:
            yield ()
        return
    parents = [0] * (n + 1)
    child_count = [0] * (n + 1)

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i > n:
            yield tuple(parents[1:])
            return
        if i == 1 and first_parent is not None:
            choices: Iterable[int] = (first_parent,)
        else:
            choices = range(n + 1)
        for j in choices:
            if j == i:
                continue
            if binary and child_count[j] >= 2:
                continue
            w = j
            while 0 < w < i:
                w = parents[w]
            if w == i:  # assigning i -> j would close a cycle
                continue
            parents[i] = j
            child_count[j] += 1
            yield from rec(i + 1)
            child_count[j] -= 1
        parents[i] = 0

    yield from rec(1)


def _child_orders(f: Forest) -> Iterator[dict[int, tuple[int, ...]]]:
    vertices = (0,) + f.labels
    pools = [list(itertools.permutations(f.children(v))) for v in vertices]
    for combo in itertools.product(*pools):
        yield dict(zip(vertices, combo))


def gen_forests(n: int, family: FamilyTag) -> Iterator[Forest]:
    """Every forest on [n] in the family, exactly once, lexicographically
    by parent vector (then by child orders for the ordered family)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    binary = family is FamilyTag.UNORDERED_BINARY
    if family is FamilyTag.ORDERED:
        for vec in iter_parent_vectors(n):
            base = from_parents(n, vec)
            for order in _child_orders(base):
                yield Forest(base.parent, order)
    else:
        for vec in iter_parent_vectors(n, binary=binary):
            yield from_parents(n, vec)


def count_forests(n: int, family: FamilyTag) -> int:
    """Number of family forests on [n], by running the same enumeration
    without materializing objects (ordered forests are counted by
    multiplying each parent vector by its child-order arrangements)."""
    if family is FamilyTag.ORDERED:
        total = 0
        for vec in iter_parent_vectors(n):
            counts = [0] * (n + 1)
            for p in vec:
                counts[p] += 1
            w = 1
            for c in counts:
                w *= factorial(c)
            total += w
        return total
    return sum(1 for _ in iter_parent_vectors(n, binary=family is FamilyTag.UNORDERED_BINARY))


def satisfies_family(f: Forest, family: FamilyTag) -> bool:
    if family is FamilyTag.ORDERED:
        return f.is_ordered()
    if f.is_ordered():
        return False
    if family is FamilyTag.UNORDERED_BINARY:
        return all(len(f.children(v)) <= 2 for v in (0,) + f.labels)
    return True


# ---------------------------------------------------------------------------
# partition streams


def _restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    a = [0] * n

    def rec(i: int, m: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(a)
            return
        for v in range(m + 2):
            a[i] = v
            yield from rec(i + 1, max(m, v))

    if n == 0:
        yield ()
    else:
        yield from rec(0, -1)


def _blocks_from_rgs(rgs: Sequence[int]) -> list[list[int]]:
    blocks: list[list[int]] = []
    for i, b in enumerate(rgs):
        if b == len(blocks):
            blocks.append([])
        blocks[b].append(i + 1)
    return blocks


def gen_set_partitions(n: int) -> Iterator[SetPartition]:
    """All Bell(n) set partitions of [n], blocks sorted by minimum."""
    for rgs in _restricted_growth_strings(n):
        yield SetPartition(_blocks_from_rgs(rgs))


def gen_ordered_set_partitions(n: int) -> Iterator[OrderedSetPartition]:
    """All sum-of-k!·S(n,k) ordered set partitions of [n]."""
    for rgs in _restricted_growth_strings(n):
        blocks = _blocks_from_rgs(rgs)
        for perm in itertools.permutations(blocks):
            yield OrderedSetPartition(perm)


def gen_compositions(n: int, k: int | None = None) -> Iterator[Composition]:
    """Compositions of ``n`` (into ``k`` parts when given); C(n-1, k-1) many."""
    if k is None:
        for kk in range(1, n + 1):
            yield from gen_compositions(n, kk)
        return

    def rec(rest: int, parts_left: int, acc: list[int]) -> Iterator[Composition]:
        if parts_left == 1:
            if rest >= 1:
                yield Composition(acc + [rest])
            return
        for first in range(1, rest - parts_left + 2):
            yield from rec(rest - first, parts_left - 1, acc + [first])

    if 1 <= k <= n:
        yield from rec(n, k, [])


def _orderings(block: Sequence[int], up_to_reverse: bool) -> Iterator[tuple[int, ...]]:
    if len(block) == 1:
        yield tuple(block)
        return
    lo = min(block)
    second = min(x for x in block if x != lo)
    for perm in itertools.permutations(sorted(block)):
        if up_to_reverse and perm.index(second) > perm.index(lo):
            continue
        yield perm


def gen_list_partitions(
    n: int, ordered_blocks: bool = False, up_to_reverse: bool = False
) -> Iterator[ListPartition]:
    """Partitions of [n] into internally ordered lists.

    With neither flag the block sequence is canonical (sorted by minimum)
    and every within-block ordering appears.  ``up_to_reverse`` keeps one
    representative per block reversal class; ``ordered_blocks`` emits every
    arrangement of the blocks.
    """
    for rgs in _restricted_growth_strings(n):
        blocks = _blocks_from_rgs(rgs)
        pools = [list(_orderings(b, up_to_reverse)) for b in blocks]
        for combo in itertools.product(*pools):
            if ordered_blocks:
                for arrangement in itertools.permutations(combo):
                    yield ListPartition(arrangement, True, up_to_reverse)
            else:
                yield ListPartition(combo, False, up_to_reverse)


def _cycle_choices(block: Sequence[int]) -> list[tuple[int, ...]]:
    m = max(block)
    rest = sorted(x for x in block if x != m)
    return [(m,) + perm for perm in itertools.permutations(rest)]


def gen_ordered_cycle_decomps(n: int) -> Iterator[CycleDecomposition]:
    """Ordered cycle decompositions over [n]: sum of k!·c(n,k) objects."""
    for rgs in _restricted_growth_strings(n):
        blocks = _blocks_from_rgs(rgs)
        pools = [_cycle_choices(b) for b in blocks]
        for cycles in itertools.product(*pools):
            for arrangement in itertools.permutations(cycles):
                yield CycleDecomposition(arrangement)


def gen_partitioned_cycle_decomps(n: int) -> Iterator[CycleDecomposition]:
    """Partitioned cycle decompositions over [n]: sum of Bell(k)·c(n,k)."""
    for rgs in _restricted_growth_strings(n):
        blocks = _blocks_from_rgs(rgs)
        pools = [_cycle_choices(b) for b in blocks]
        for cycles in itertools.product(*pools):
            for grouping in _restricted_growth_strings(len(cycles)):
                idx_blocks = _blocks_from_rgs(grouping)
                yield CycleDecomposition(
                    cycles, [[i - 1 for i in b] for b in idx_blocks]
                )
