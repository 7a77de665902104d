"""Permutations over arbitrary finite ordered ground sets.

A permutation is stored in one-line notation as a word over its ground set
(a strictly increasing tuple of distinct positive integers).  Working over
general ground sets, not just [n] = {1, ..., n}, matters because several of
the forest bijections in this package apply the increasing-forest map to
subsets of [n].

Pattern containment comes in two modes: classical (any subsequence in the
same relative order as the pattern) and consecutive (contiguous
subsequences only).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence


class InvalidSequence(ValueError):
    """Raised when a sequence that must have distinct entries does not."""


class InvalidDecomposition(ValueError):
    """Raised for cycle lists that are not disjoint or miss elements."""


def _check_distinct(seq: Sequence[int]) -> None:
    if len(set(seq)) != len(seq):
        raise InvalidSequence(f"entries must be distinct: {seq!r}")


@dataclass(frozen=True)
class Permutation:
    """A permutation of a finite ordered set, in one-line notation.

    ``word`` lists the images; ``ground`` is the sorted tuple of the same
    integers.  The empty permutation is valid.
    """

    word: tuple[int, ...]

    def __init__(self, word: Iterable[int]):
        w = tuple(word)
        _check_distinct(w)
        if any(x < 1 for x in w):
            raise InvalidSequence(f"entries must be positive: {w!r}")
        object.__setattr__(self, "word", w)

    @property
    def ground(self) -> tuple[int, ...]:
        return tuple(sorted(self.word))

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.word)


class PatternMode(enum.Enum):
    CLASSICAL = "classical"
    CONSECUTIVE = "consecutive"


@dataclass(frozen=True)
class Pattern:
    """A pattern: a permutation of [k] plus a containment mode."""

    perm: Permutation
    mode: PatternMode = PatternMode.CLASSICAL

    def __post_init__(self):
        k = len(self.perm)
        if k < 1:
            raise ValueError("patterns must be nonempty")
        if self.perm.ground != tuple(range(1, k + 1)):
            raise ValueError(f"pattern ground must be 1..k, got {self.perm.word}")

    def __str__(self) -> str:
        digits = "".join(str(x) for x in self.perm.word)
        return digits if self.mode is PatternMode.CLASSICAL else "!" + digits


def pattern(word: Iterable[int] | int | str, mode: PatternMode = PatternMode.CLASSICAL) -> Pattern:
    """Convenience constructor: ``pattern(321)``, ``pattern("!231")``.

    A string with a leading ``!`` means consecutive mode.
    """
    if isinstance(word, str):
        if word.startswith("!"):
            word, mode = word[1:], PatternMode.CONSECUTIVE
        word = [int(c) for c in word]
    elif isinstance(word, int):
        word = [int(c) for c in str(word)]
    return Pattern(Permutation(word), mode)


def standardize(seq: Sequence[int]) -> Permutation:
    """The permutation of [k] in the same relative order as ``seq``.

    >>> standardize([5, 9, 3, 8, 1]).word
    (3, 5, 2, 4, 1)
    """
    _check_distinct(seq)
    rank = {v: i + 1 for i, v in enumerate(sorted(seq))}
    return Permutation(rank[v] for v in seq)


def _std_word(seq: Sequence[int]) -> tuple[int, ...]:
    rank = {v: i + 1 for i, v in enumerate(sorted(seq))}
    return tuple(rank[v] for v in seq)


def word_contains_classical(seq: Sequence[int], pat: Sequence[int]) -> bool:
    """True iff some subsequence of ``seq`` standardizes to ``pat``.

    Backtracking over positions with incremental order-isomorphism checks;
    fine for the short patterns and words this package deals in.
    """
    k = len(pat)
    n = len(seq)
    if k == 0:
        return True
    if n < k:
        return False

    chosen: list[int] = []

    def extend(start: int) -> bool:
        m = len(chosen)
        if m == k:
            return True
        for pos in range(start, n - (k - m) + 1):
            x = seq[pos]
            ok = True
            for j in range(m):
                if (x > chosen[j]) != (pat[m] > pat[j]):
                    ok = False
                    break
            if ok:
                chosen.append(x)
                if extend(pos + 1):
                    return True
                chosen.pop()
        return False

    return extend(0)


def word_contains_consecutive(seq: Sequence[int], pat: Sequence[int]) -> bool:
    """True iff some contiguous window of ``seq`` standardizes to ``pat``."""
    k = len(pat)
    if k == 0:
        return True
    pw = tuple(pat)
    for i in range(len(seq) - k + 1):
        if _std_word(seq[i : i + k]) == pw:
            return True
    return False


def word_contains(seq: Sequence[int], pat: Pattern) -> bool:
    if pat.mode is PatternMode.CONSECUTIVE:
        return word_contains_consecutive(seq, pat.perm.word)
    return word_contains_classical(seq, pat.perm.word)


def contains(p: Permutation, pat: Pattern) -> bool:
    """Whether ``p`` contains the pattern in the pattern's mode."""
    return word_contains(p.word, pat)


def avoids(p: Permutation, pat: Pattern) -> bool:
    return not contains(p, pat)


def reverse(p: Permutation) -> Permutation:
    """Reverse the word.

    >>> str(reverse(Permutation([5, 9, 3, 8, 1])))
    '1,8,3,9,5'
    """
    return Permutation(reversed(p.word))


def complement(p: Permutation) -> Permutation:
    """Swap the i-th smallest entry with the i-th largest.

    >>> str(complement(Permutation([5, 9, 3, 8, 1])))
    '5,1,8,3,9'
    """
    g = p.ground
    comp = {v: g[len(g) - 1 - i] for i, v in enumerate(g)}
    return Permutation(comp[v] for v in p.word)


def inverse(p: Permutation) -> Permutation:
    """Standardize, invert, and map the values back to the ground set.

    >>> str(inverse(Permutation([5, 9, 3, 8, 1])))
    '9,5,1,8,3'
    """
    g = p.ground
    std = _std_word(p.word)
    inv = [0] * len(std)
    for pos, v in enumerate(std):
        inv[v - 1] = pos + 1
    return Permutation(g[i - 1] for i in inv)


@dataclass(frozen=True)
class PermutationStats:
    descents: tuple[int, ...]  # 1-based positions i with word[i] > word[i+1]
    ascents: tuple[int, ...]
    lr_minima: tuple[int, ...]  # values, in order of occurrence
    lr_maxima: tuple[int, ...]


def stats(p: Permutation) -> PermutationStats:
    """Descent/ascent positions and left-to-right extrema values."""
    w = p.word
    descents, ascents = [], []
    for i in range(len(w) - 1):
        (descents if w[i] > w[i + 1] else ascents).append(i + 1)
    minima, maxima = [], []
    for i, x in enumerate(w):
        if i == 0 or x < min(w[:i]):
            minima.append(x)
        if i == 0 or x > max(w[:i]):
            maxima.append(x)
    return PermutationStats(tuple(descents), tuple(ascents), tuple(minima), tuple(maxima))


def _rotate_max_first(cycle: Sequence[int]) -> tuple[int, ...]:
    i = cycle.index(max(cycle))
    return tuple(cycle[i:]) + tuple(cycle[:i])


@dataclass(frozen=True)
class CycleDecomposition:
    """Disjoint cycles covering a ground set, each rotated maximum-first.

    ``blocks`` is ``None`` for an ordered decomposition (the order of
    ``cycles`` is meaningful data).  Otherwise ``blocks`` is a set partition
    of the cycle indices and the cycles are stored in canonical order
    (sorted by minimum element) so that equal partitioned decompositions
    compare equal.
    """

    cycles: tuple[tuple[int, ...], ...]
    blocks: tuple[tuple[int, ...], ...] | None = None

    def __init__(self, cycles: Iterable[Sequence[int]], blocks=None):
        cyc = [tuple(c) for c in cycles]
        if any(len(c) == 0 for c in cyc):
            raise InvalidDecomposition("empty cycle")
        flat = [x for c in cyc for x in c]
        if len(set(flat)) != len(flat):
            raise InvalidDecomposition(f"cycles overlap: {cyc!r}")
        cyc = [_rotate_max_first(c) for c in cyc]
        if blocks is not None:
            blocks = [tuple(sorted(b)) for b in blocks]
            idx = sorted(i for b in blocks for i in b)
            if idx != list(range(len(cyc))):
                raise InvalidDecomposition("blocks must partition the cycle indices")
            # Canonical cycle order for partitioned decompositions.
            order = sorted(range(len(cyc)), key=lambda i: min(cyc[i]))
            new_index = {old: new for new, old in enumerate(order)}
            cyc = [cyc[i] for i in order]
            blocks = tuple(sorted(tuple(sorted(new_index[i] for i in b)) for b in blocks))
        object.__setattr__(self, "cycles", tuple(cyc))
        object.__setattr__(self, "blocks", blocks)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(x for c in self.cycles for x in c))

    def __str__(self) -> str:
        text = "".join("(" + ",".join(str(x) for x in c) + ")" for c in self.cycles)
        if self.blocks is not None:
            text = "".join(
                "{" + "".join("(" + ",".join(str(x) for x in self.cycles[i]) + ")" for i in b) + "}"
                for b in self.blocks
            )
        return text


def to_cycles(p: Permutation) -> CycleDecomposition:
    """Cycle decomposition of ``p`` as a function on its ground set.

    Cycles are listed by increasing minimum element, each rotated so its
    maximum comes first.
    """
    g = p.ground
    image = dict(zip(g, p.word))
    seen: set[int] = set()
    cycles = []
    for start in g:
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        x = image[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = image[x]
        cycles.append(cyc)
    cycles.sort(key=min)
    return CycleDecomposition(cycles)


def from_cycles(cd: CycleDecomposition) -> Permutation:
    """The permutation whose cycle decomposition is ``cd``."""
    image: dict[int, int] = {}
    for c in cd.cycles:
        for i, x in enumerate(c):
            image[x] = c[(i + 1) % len(c)]
    return Permutation(image[a] for a in sorted(image))
