"""Constructive bijections between forests and partition-like objects.

Each map here sends a family of combinatorial objects (permutations, set
partitions, cycle decompositions, partitions into lists) onto a forest
avoidance class, and each is checked in the test suite by exhaustive
round trips and image comparisons on small ground sets.

Inverse maps marked "derived" below (for the partitioned-cycle, ordered-
partition and ordered-lists maps) read the structure back off the forest
rather than following an explicitly stated recipe; they are validated by
the same exhaustive round-trip tests as the rest.
"""
from __future__ import annotations

import enum
from typing import Sequence

from .forests import (
    DescentKind,
    Forest,
    avoids,
    descent_kind,
    height,
    is_decreasing,
    is_increasing,
    largest_increasing_subforest,
    top_down_maxima,
)
from .generate import ListPartition, OrderedSetPartition, SetPartition
from .perms import CycleDecomposition, Permutation, inverse, pattern


class NotIncreasing(ValueError):
    """The forest is not increasing (some parent exceeds its child)."""


class NotUnimodal(ValueError):
    """The forest is not unimodal (it contains 213 or 312 along a path)."""


class NotInClass(ValueError):
    """The forest is outside the avoidance class this map is defined on."""


class TwoAfterOne(ValueError):
    """The second-smallest entry does not precede the smallest one."""


class TauVariant(enum.Enum):
    """Which tree-building rule the list-partition map uses: the unimodal
    rule (image avoids {312, 213, 132}) or the single-descent rule (image
    avoids {321, 132, 213})."""

    UNIMODAL132 = "unimodal132"
    ONE_DESCENT = "one_descent"


_P312 = (pattern(312),)
_P321 = (pattern(321),)
_UNIMODAL = (pattern(213), pattern(312))
_XI_CLASS = (pattern(213), pattern(312), pattern(123))
_GAMMA_CLASS = (pattern(213), pattern(312), pattern(321))
_TAU_CLASS = (pattern(312), pattern(213), pattern(132))
_TAU_ONE_DESCENT_CLASS = (pattern(321), pattern(132), pattern(213))
_PSI_CLASS = (pattern(321), pattern(2143), pattern(3142))


# ---------------------------------------------------------------------------
# permutations <-> increasing / decreasing forests


def perm_to_increasing_forest(p: Permutation) -> Forest:
    """Increasing forest from a permutation: left-to-right minima become
    roots; every other entry becomes a child of the rightmost earlier
    entry smaller than it."""
    w = p.word
    parent: dict[int, int] = {}
    for idx, v in enumerate(w):
        j = 0
        for u in reversed(w[:idx]):
            if u < v:
                j = u
                break
        parent[v] = j
    return Forest(parent)


def increasing_forest_to_perm(f: Forest) -> Permutation:
    """Inverse of :func:`perm_to_increasing_forest`: preorder traversal
    visiting roots and children in decreasing label order (the clockwise
    reading when children are drawn smallest to largest)."""
    if not is_increasing(f):
        raise NotIncreasing(f"forest has a non-increasing edge: {f.parent}")
    word: list[int] = []
    stack = list(f.roots)  # ascending; popping yields largest first
    while stack:
        v = stack.pop()
        word.append(v)
        stack.extend(f.children(v))
    return Permutation(word)


def perm_to_decreasing_forest(p: Permutation) -> Forest:
    """Decreasing forest: build the increasing forest, then complement
    labels within the ground set."""
    from .forests import complement_forest

    return complement_forest(perm_to_increasing_forest(p))


def decreasing_forest_to_perm(f: Forest) -> Permutation:
    from .forests import complement_forest

    if not is_decreasing(f):
        raise NotIncreasing(f"forest has a non-decreasing edge: {f.parent}")
    return increasing_forest_to_perm(complement_forest(f))


# ---------------------------------------------------------------------------
# unimodal decomposition helpers

def _attach_decreasing(parent: dict[int, int], cycle: Sequence[int]) -> None:
    # Hang the decreasing forest of the cycle's non-maximum entries under
    # its maximum (the first entry, by canonical rotation).
    m, rest = cycle[0], cycle[1:]
    if rest:
        dec = perm_to_decreasing_forest(Permutation(rest))
        for v, pv in dec.parent.items():
            parent[v] = m if pv == 0 else pv


def _hanging_groups(f: Forest, tdm: frozenset[int]) -> dict[int, dict[int, int]]:
    """For each top-down maximum, the parent map of the non-maximum
    vertices whose nearest maximum ancestor it is."""
    groups: dict[int, dict[int, int]] = {m: {} for m in tdm}
    for v in f.labels:
        if v in tdm:
            continue
        p = f.parent[v]
        m = p
        while m not in tdm:
            m = f.parent[m]
        groups[m][v] = p if p not in tdm else 0
    return groups


# ---------------------------------------------------------------------------
# ordered cycle decompositions <-> unimodal forests


def cycles_to_unimodal_forest(cd: CycleDecomposition) -> Forest:
    """Unimodal forest from an ordered cycle decomposition.

    The cycle maxima, in decomposition order, arrange into an increasing
    forest; each cycle's remaining entries hang below its maximum as a
    decreasing forest.
    """
    if cd.blocks is not None:
        raise ValueError("expected an ordered (unpartitioned) decomposition")
    maxima = [c[0] for c in cd.cycles]
    parent = dict(perm_to_increasing_forest(Permutation(maxima)).parent)
    for c in cd.cycles:
        _attach_decreasing(parent, c)
    return Forest(parent)


def unimodal_forest_to_cycles(f: Forest) -> CycleDecomposition:
    """Inverse of :func:`cycles_to_unimodal_forest`."""
    if not avoids(f, _UNIMODAL):
        raise NotUnimodal("forest contains 213 or 312 along a path")
    tdm = top_down_maxima(f)
    inc = largest_increasing_subforest(f)
    maxima_word = increasing_forest_to_perm(inc).word
    groups = _hanging_groups(f, tdm)
    cycles = []
    for m in maxima_word:
        rest: tuple[int, ...] = ()
        if groups[m]:
            rest = decreasing_forest_to_perm(Forest(groups[m])).word
        cycles.append((m,) + rest)
    return CycleDecomposition(cycles)


# ---------------------------------------------------------------------------
# set partitions <-> increasing forests of height <= 2


def set_partition_to_shallow_forest(sp: SetPartition) -> Forest:
    """Each block's minimum becomes a root with the rest of the block as
    its children; the image is exactly the increasing forests of height
    at most two, one tree per block."""
    parent: dict[int, int] = {}
    for block in sp.blocks:
        r = block[0]  # blocks are stored sorted
        parent[r] = 0
        for v in block[1:]:
            parent[v] = r
    return Forest(parent)


def shallow_forest_to_set_partition(f: Forest) -> SetPartition:
    if not is_increasing(f) or height(f) > 2:
        raise NotInClass("expected an increasing forest of height at most 2")
    return SetPartition([(r,) + f.children(r) for r in f.roots])


# ---------------------------------------------------------------------------
# partitioned cycle decompositions <-> unimodal 123-avoiding forests


def partitioned_cycles_to_forest(cd: CycleDecomposition) -> Forest:
    """Forest avoiding {213, 312, 123} from a partitioned cycle
    decomposition: the partition of the cycle maxima gives the (height
    <= 2) increasing subforest, and each cycle's remaining entries hang
    below its maximum as a decreasing forest."""
    if cd.blocks is None:
        raise ValueError("expected a partitioned decomposition")
    maxima_blocks = [[cd.cycles[i][0] for i in b] for b in cd.blocks]
    parent = dict(set_partition_to_shallow_forest(SetPartition(maxima_blocks)).parent)
    for c in cd.cycles:
        _attach_decreasing(parent, c)
    return Forest(parent)


def forest_to_partitioned_cycles(f: Forest) -> CycleDecomposition:
    """Derived inverse of :func:`partitioned_cycles_to_forest`."""
    if not avoids(f, _XI_CLASS):
        raise NotInClass("forest contains 213, 312 or 123 along a path")
    tdm = top_down_maxima(f)
    inc = largest_increasing_subforest(f)
    maxima_partition = shallow_forest_to_set_partition(inc)
    groups = _hanging_groups(f, tdm)
    cycles = []
    index_of_max: dict[int, int] = {}
    for m in sorted(tdm):
        rest: tuple[int, ...] = ()
        if groups[m]:
            rest = decreasing_forest_to_perm(Forest(groups[m])).word
        index_of_max[m] = len(cycles)
        cycles.append((m,) + rest)
    blocks = [[index_of_max[m] for m in b] for b in maxima_partition.blocks]
    return CycleDecomposition(cycles, blocks)


# ---------------------------------------------------------------------------
# ordered set partitions <-> unimodal 321-avoiding forests


def ordered_partition_to_forest(osp: OrderedSetPartition) -> Forest:
    """Forest avoiding {213, 312, 321}: block maxima, in block order,
    arrange into an increasing forest; the other elements of each block
    become children of their block's maximum."""
    maxima = [max(b) for b in osp.blocks]
    parent = dict(perm_to_increasing_forest(Permutation(maxima)).parent)
    for block, m in zip(osp.blocks, maxima):
        for v in block:
            if v != m:
                parent[v] = m
    return Forest(parent)


def forest_to_ordered_partition(f: Forest) -> OrderedSetPartition:
    """Derived inverse of :func:`ordered_partition_to_forest`."""
    if not avoids(f, _GAMMA_CLASS):
        raise NotInClass("forest contains 213, 312 or 321 along a path")
    tdm = top_down_maxima(f)
    inc = largest_increasing_subforest(f)
    word = increasing_forest_to_perm(inc).word
    blocks = []
    for m in word:
        blocks.append((m,) + tuple(c for c in f.children(m) if c not in tdm))
    return OrderedSetPartition(blocks)


# ---------------------------------------------------------------------------
# partitions into lists <-> forests, two variants


def _tree_from_list(block: Sequence[int], variant: TauVariant) -> dict[int, int]:
    r = block[0]
    parent = {r: 0}
    for idx in range(1, len(block)):
        v = block[idx]
        j = 0
        if v > r:
            # climb the increasing part: rightmost earlier entry in [r, v)
            for u in reversed(block[:idx]):
                if r <= u < v:
                    j = u
                    break
        elif variant is TauVariant.UNIMODAL132:
            # decreasing chains below the root: rightmost earlier larger entry
            for u in reversed(block[:idx]):
                if u > v:
                    j = u
                    break
        else:
            # increasing chains below the root: rightmost earlier entry that
            # is either at/above the root or smaller than v
            for u in reversed(block[:idx]):
                if u >= r or u < v:
                    j = u
                    break
        parent[v] = j
    return parent


def list_partition_to_forest(
    lp: ListPartition, variant: TauVariant = TauVariant.UNIMODAL132
) -> Forest:
    """One tree per list, rooted at the list's first entry.

    The ``UNIMODAL132`` rule produces exactly the forests avoiding
    {312, 213, 132}; the ``ONE_DESCENT`` rule produces exactly the forests
    avoiding {321, 132, 213}.
    """
    parent: dict[int, int] = {}
    for block in lp.blocks:
        parent.update(_tree_from_list(block, variant))
    return Forest(parent)


def forest_to_list_partition(f: Forest) -> ListPartition:
    """Inverse of the ``UNIMODAL132`` variant: per tree, read the labels
    clockwise with children below the root value drawn in decreasing order
    to the right of those above it."""
    if not avoids(f, _TAU_CLASS):
        raise NotInClass("forest contains 312, 213 or 132 along a path")
    blocks = []
    for r in f.roots:
        word: list[int] = []
        stack = [r]
        while stack:
            v = stack.pop()
            word.append(v)
            kids = f.children(v)
            low = [c for c in kids if c < r]
            high = [c for c in kids if c > r]
            # visit low ascending then high descending => push in reverse
            for c in reversed(low + high[::-1]):
                stack.append(c)
        blocks.append(tuple(word))
    return ListPartition(blocks)


# ---------------------------------------------------------------------------
# permutations with 2 before 1 <-> trees with a proper descent at the root


def perm_to_proper_descent_tree(p: Permutation) -> Forest:
    """Tree with a proper descent at the root and no other descents.

    Requires the second-smallest entry to precede the smallest, which makes
    the inverse permutation start with a descent.  The inverse word's first
    entry becomes the root, its other left-to-right minima become children
    of the root, and every remaining entry becomes a child of the rightmost
    earlier entry smaller than it.
    """
    w = p.word
    if len(w) < 2:
        raise TwoAfterOne("need at least two entries")
    g = p.ground
    if w.index(g[1]) > w.index(g[0]):
        raise TwoAfterOne(
            f"second-smallest entry {g[1]} must precede smallest {g[0]} in {w}"
        )
    iw = inverse(p).word
    f0 = perm_to_increasing_forest(Permutation(iw))
    root = iw[0]
    parent = dict(f0.parent)
    for r in f0.roots:
        if r != root:
            parent[r] = root
    return Forest(parent)


def proper_descent_tree_to_perm(f: Forest) -> Permutation:
    """Inverse of :func:`perm_to_proper_descent_tree`: read the tree
    clockwise (children drawn smallest to largest) and invert the word."""
    if len(f.roots) != 1:
        raise NotInClass("expected a single tree")
    r = f.roots[0]
    if descent_kind(f, r) is not DescentKind.PROPER_DESCENT:
        raise NotInClass("root must be greater than all of its children")
    for v in f.labels:
        if v != r and descent_kind(f, v) is not DescentKind.NONE:
            raise NotInClass(f"unexpected descent at vertex {v}")
    word: list[int] = []
    stack = [r]
    while stack:
        v = stack.pop()
        word.append(v)
        stack.extend(f.children(v))
    return inverse(Permutation(word))


# ---------------------------------------------------------------------------
# ordered partitions into lists (up to reverse) <-> at most one descent per path


def ordered_lists_to_forest(lp: ListPartition) -> Forest:
    """Forest avoiding {321, 2143, 3142} from an ordered partition into
    lists up to reverse: singleton blocks give singleton trees, longer
    blocks go through the proper-descent-tree map, and the tree roots, in
    block order, arrange into an increasing subforest."""
    if not (lp.ordered_blocks and lp.up_to_reverse):
        raise ValueError("expected an ordered partition into lists up to reverse")
    parent: dict[int, int] = {}
    roots_in_order: list[int] = []
    for block in lp.blocks:
        if len(block) == 1:
            parent[block[0]] = 0
            roots_in_order.append(block[0])
        else:
            t = perm_to_proper_descent_tree(Permutation(block))
            parent.update(t.parent)
            roots_in_order.append(t.roots[0])
    inc = perm_to_increasing_forest(Permutation(roots_in_order))
    parent.update(inc.parent)
    return Forest(parent)


def forest_to_ordered_lists(f: Forest) -> ListPartition:
    """Derived inverse of :func:`ordered_lists_to_forest`.

    Block roots are recovered as the vertices whose root path is strictly
    increasing (top-down maxima deeper inside a block do not qualify).
    """
    if not avoids(f, _PSI_CLASS):
        raise NotInClass("forest contains 321, 2143 or 3142 along a path")
    rising: set[int] = set()
    stack: list[tuple[int, int, bool]] = [(r, 0, True) for r in f.roots]
    while stack:
        v, prev, ok = stack.pop()
        ok = ok and v > prev
        if ok:
            rising.add(v)
        for c in f.children(v):
            stack.append((c, v, ok))
    inc = Forest({v: f.parent[v] for v in rising})
    word = increasing_forest_to_perm(inc).word

    trees: dict[int, dict[int, int]] = {b: {b: 0} for b in rising}
    for v in f.labels:
        if v in rising:
            continue
        m = f.parent[v]
        while m not in rising:
            m = f.parent[m]
        trees[m][v] = f.parent[v]

    blocks = []
    for b in word:
        t = trees[b]
        if len(t) == 1:
            blocks.append((b,))
        else:
            blocks.append(proper_descent_tree_to_perm(Forest(t)).word)
    return ListPartition(blocks, ordered_blocks=True, up_to_reverse=True)


# ---------------------------------------------------------------------------
# 312-avoiding forests <-> 321-avoiding forests (shape-preserving)


def _bfs_levels(f: Forest) -> list[list[int]]:
    levels = []
    frontier = list(f.roots)
    while frontier:
        levels.append(frontier)
        nxt: list[int] = []
        for v in frontier:
            nxt.extend(f.children(v))
        frontier = nxt
    return levels


def _rearrange_non_maxima(f: Forest, pick) -> Forest:
    """Shared engine for the shape-preserving label rearrangements.

    Top-down maxima keep their labels.  Vertices are processed level by
    level; at each non-maximum vertex, ``pick`` chooses a replacement label
    from the non-maximum labels currently in its subtree (itself included),
    and the displaced labels are redistributed over the remaining subtree
    positions preserving their relative order.
    """
    tdm = top_down_maxima(f)
    label = {v: v for v in f.labels}
    for level in _bfs_levels(f):
        for pos in sorted(level, key=lambda q: label[q]):
            if pos in tdm:
                continue
            positions = [q for q in f.subtree(pos) if q not in tdm]
            labels_here = sorted(label[q] for q in positions)
            chosen = pick(pos, labels_here, label)
            if chosen is None or chosen == label[pos]:
                continue
            rest = [q for q in positions if q != pos]
            rest.sort(key=lambda q: label[q])
            remaining = [x for x in labels_here if x != chosen]
            for q, x in zip(rest, remaining):
                label[q] = x
            label[pos] = chosen
    parent = {
        label[v]: (0 if f.parent[v] == 0 else label[f.parent[v]]) for v in f.labels
    }
    return Forest(parent)


def avoid312_to_avoid321(f: Forest) -> Forest:
    """Shape- and maxima-preserving bijection from 312-avoiding forests to
    321-avoiding forests: each non-maximum vertex takes the smallest
    non-maximum label in its subtree."""
    if not avoids(f, _P312):
        raise NotInClass("forest contains 312 along a path")

    def pick(pos, labels_here, label):
        return labels_here[0]

    return _rearrange_non_maxima(f, pick)


def avoid321_to_avoid312(f: Forest) -> Forest:
    """Inverse of :func:`avoid312_to_avoid321`: each non-maximum vertex
    takes the largest subtree label that stays below some ancestor (so no
    new top-down maximum appears)."""
    if not avoids(f, _P321):
        raise NotInClass("forest contains 321 along a path")

    def pick(pos, labels_here, label):
        ceiling = 0
        w = f.parent[pos]
        while w != 0:
            if label[w] > ceiling:
                ceiling = label[w]
            w = f.parent[w]
        candidates = [x for x in labels_here if x < ceiling]
        return max(candidates) if candidates else None

    return _rearrange_non_maxima(f, pick)
