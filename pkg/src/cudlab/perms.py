"""Permutations of finite sets of positive integers and the alternating-cycle
families built on them.

A permutation of a set ``A = {a_1 < a_2 < ... < a_n}`` is stored as its
one-line word: entry ``i`` of the word is the image of ``a_i``.  The cycle
form is kept canonical: every cycle is rotated so its smallest element comes
first, and cycles are listed by increasing first entry, which makes the
decomposition unique.

The recognizers cover up-down (alternating) words, cycle-up-down (CUD)
permutations whose canonical cycles all read up-down, the generalized variant
(GCUD) where each cycle merely has *some* rotation that reads up-down, and a
handful of refinements (parity-restricted cycles, derangements, single-cycle,
excedance/deficiency-swapping).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence


class DomainError(ValueError):
    """Well-formed input that lies outside an operation's domain."""


class MalformedInput(ValueError):
    """Data that does not describe a permutation at all."""


def switched_word(word: Sequence[int]) -> tuple[int, ...]:
    """Replace each entry a_i of the word by a_{n+1-i} (values sorted).

    >>> switched_word((2, 6, 3, 4))
    (6, 2, 4, 3)
    """
    values = sorted(word)
    n = len(values)
    rank = {a: i for i, a in enumerate(values)}
    return tuple(values[n - 1 - rank[x]] for x in word)


def is_up_down_word(word: Sequence[int]) -> bool:
    """True iff w_1 < w_2 > w_3 < w_4 > ...  (vacuous for length <= 1)."""
    return all(
        word[i] < word[i + 1] if i % 2 == 0 else word[i] > word[i + 1]
        for i in range(len(word) - 1)
    )


def is_down_up_word(word: Sequence[int]) -> bool:
    """True iff w_1 > w_2 < w_3 > w_4 < ..."""
    return all(
        word[i] > word[i + 1] if i % 2 == 0 else word[i] < word[i + 1]
        for i in range(len(word) - 1)
    )


def is_up_down_cycle(cycle: Sequence[int]) -> bool:
    """True iff the cycle, written starting at its smallest element, is an
    up-down word.  Length-1 cycles count vacuously."""
    return is_up_down_word(_rotate_min_first(cycle))


def is_gen_up_down_cycle(cycle: Sequence[int]) -> bool:
    """True iff some rotation of the cycle is an up-down word.

    Tries all rotations; cycles here are short enough that the quadratic
    scan is irrelevant.

    >>> is_gen_up_down_cycle((2, 3, 4, 6))
    True
    >>> is_up_down_cycle((2, 3, 4, 6))
    False
    """
    k = len(cycle)
    return any(
        is_up_down_word(tuple(cycle[(i + j) % k] for j in range(k))) for i in range(k)
    )


def _rotate_min_first(cycle: Sequence[int]) -> tuple[int, ...]:
    k = len(cycle)
    if k == 0:
        raise MalformedInput("empty cycle")
    i = cycle.index(min(cycle))
    return tuple(cycle[(i + j) % k] for j in range(k))


@dataclass(frozen=True)
class Permutation:
    """A permutation in one-line notation over its own ground set.

    ``word[i]`` is the image of the ``i``-th smallest ground element, so a
    permutation of [n] maps ``i+1`` to ``word[i]``.  The empty permutation is
    legal.  Values are immutable and safe to share.
    """

    word: tuple[int, ...]

    def __post_init__(self):
        for x in self.word:
            if not isinstance(x, int) or x < 1:
                raise MalformedInput(f"entries must be positive integers, got {x!r}")
        if len(set(self.word)) != len(self.word):
            raise MalformedInput(f"repeated entry in word {self.word}")

    @property
    def ground(self) -> tuple[int, ...]:
        """The underlying set, sorted increasingly."""
        return tuple(sorted(self.word))

    def __len__(self) -> int:
        return len(self.word)

    def mapping(self) -> dict[int, int]:
        """Ground element -> image."""
        return dict(zip(self.ground, self.word))

    def apply(self, a: int) -> int:
        try:
            return self.word[self.ground.index(a)]
        except ValueError:
            raise DomainError(f"{a} is not in the ground set") from None

    def is_natural(self) -> bool:
        """True iff the ground set is [n] = {1, ..., n}."""
        return self.ground == tuple(range(1, len(self.word) + 1))


@dataclass(frozen=True)
class CycleDecomposition:
    """Cycles in canonical shape: each starts at its minimum, listed by
    increasing first entry, together partitioning the ground set."""

    cycles: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for cyc in self.cycles:
            if not cyc:
                raise MalformedInput("empty cycle")
            if min(cyc) != cyc[0]:
                raise MalformedInput(f"cycle {cyc} is not in standard form")
            for x in cyc:
                if not isinstance(x, int) or x < 1:
                    raise MalformedInput(f"entries must be positive integers, got {x!r}")
                if x in seen:
                    raise MalformedInput(f"element {x} repeated across cycles")
                seen.add(x)
        firsts = [cyc[0] for cyc in self.cycles]
        if firsts != sorted(firsts):
            raise MalformedInput("cycles not sorted by increasing first entry")

    @classmethod
    def from_raw(cls, cycles: Iterable[Sequence[int]]) -> "CycleDecomposition":
        """Normalize arbitrary rotations/orderings into canonical shape."""
        std = [_rotate_min_first(cyc) for cyc in cycles]
        std.sort(key=lambda cyc: cyc[0])
        return cls(tuple(std))

    @property
    def ground(self) -> tuple[int, ...]:
        return tuple(sorted(x for cyc in self.cycles for x in cyc))

    def __len__(self) -> int:
        return len(self.cycles)


class Family(Enum):
    """The permutation families the oracle and CLI can enumerate."""

    ALL = "all"
    UD = "ud"
    DOWNUP = "downup"
    CUD = "cud"
    CUD_EVEN_ONLY = "cud-even-only"
    CUD_ODD_ONLY = "cud-odd-only"
    CUD_DERANGEMENT = "cud-derangement"
    GCUD = "gcud"
    GCUD_ODD_ONLY = "gcud-odd-only"
    GCUD_EVEN_ONLY = "gcud-even-only"
    CUD_CYCLIC = "cud-cyclic"
    GCUD_CYCLIC = "gcud-cyclic"
    UD_LAST_GT_FIRST = "ud-last-gt-first"
    EXC_DEF_SWAP = "exc-def-swap"

    @classmethod
    def from_text(cls, text: str) -> "Family":
        try:
            return cls(text)
        except ValueError:
            known = ", ".join(f.value for f in cls)
            raise MalformedInput(f"unknown family {text!r} (known: {known})") from None


def to_cycles(p: Permutation) -> CycleDecomposition:
    """Canonical cycle decomposition of a permutation.

    >>> format_cycles(to_cycles(parse_permutation("2 5 1 7 3 6 4")))
    '(1,2,5,3)(4,7)(6)'
    """
    m = p.mapping()
    seen: set[int] = set()
    cycles = []
    for a in p.ground:
        if a in seen:
            continue
        cyc = []
        cur = a
        while cur not in seen:
            seen.add(cur)
            cyc.append(cur)
            cur = m[cur]
        cycles.append(tuple(cyc))
    # starting each walk at the smallest unvisited element yields canonical
    # shape directly
    return CycleDecomposition(tuple(cycles))


def from_cycles(c: CycleDecomposition) -> Permutation:
    """Inverse of :func:`to_cycles`.

    >>> format_permutation(from_cycles(parse_cycles("(1,2,5,3)(4,7)(6)")))
    '2 5 1 7 3 6 4'
    """
    image: dict[int, int] = {}
    for cyc in c.cycles:
        for i, x in enumerate(cyc):
            image[x] = cyc[(i + 1) % len(cyc)]
    return Permutation(tuple(image[a] for a in sorted(image)))


def switch(p: Permutation) -> Permutation:
    """The order-reversing relabeling a_i -> a_{n+1-i}; an involution.

    >>> format_permutation(switch(parse_permutation("2 6 3 4")))
    '6 2 4 3'
    """
    return Permutation(switched_word(p.word))


def is_member(p: Permutation, family: Family) -> bool:
    """Membership test for every supported family.

    All families are defined through relative order (or through the value
    map for excedance-flavored ones), so arbitrary ground sets are accepted
    throughout.
    """
    word = p.word
    if family is Family.ALL:
        return True
    if family is Family.UD:
        return is_up_down_word(word)
    if family is Family.DOWNUP:
        return is_down_up_word(word)
    if family is Family.UD_LAST_GT_FIRST:
        return (
            len(word) >= 2
            and len(word) % 2 == 0
            and is_up_down_word(word)
            and word[-1] > word[0]
        )

    cycles = to_cycles(p).cycles
    if family is Family.CUD:
        return all(is_up_down_word(cyc) for cyc in cycles)
    if family is Family.CUD_EVEN_ONLY:
        return all(len(cyc) % 2 == 0 and is_up_down_word(cyc) for cyc in cycles)
    if family is Family.CUD_ODD_ONLY:
        return all(len(cyc) % 2 == 1 and is_up_down_word(cyc) for cyc in cycles)
    if family is Family.CUD_DERANGEMENT:
        return all(len(cyc) > 1 and is_up_down_word(cyc) for cyc in cycles)
    if family is Family.CUD_CYCLIC:
        return len(cycles) == 1 and is_up_down_word(cycles[0])
    if family is Family.GCUD:
        return all(is_gen_up_down_cycle(cyc) for cyc in cycles)
    if family is Family.GCUD_ODD_ONLY:
        return all(len(cyc) % 2 == 1 and is_gen_up_down_cycle(cyc) for cyc in cycles)
    if family is Family.GCUD_EVEN_ONLY:
        return all(len(cyc) % 2 == 0 and is_gen_up_down_cycle(cyc) for cyc in cycles)
    if family is Family.GCUD_CYCLIC:
        return len(cycles) == 1 and is_gen_up_down_cycle(cycles[0])
    if family is Family.EXC_DEF_SWAP:
        # fixed points allowed; every longer cycle must alternate fully, i.e.
        # be an even up-down cycle, so images of excedances are deficiencies
        # and vice versa
        return all(
            len(cyc) == 1 or (len(cyc) % 2 == 0 and is_up_down_word(cyc))
            for cyc in cycles
        )
    raise MalformedInput(f"unknown family {family!r}")


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str) -> Permutation:
    """Parse one-line notation, e.g. ``"2 5 1 7 3 6 4"``.  Strict: repeated
    or non-positive entries are rejected.  The empty string is the empty
    permutation."""
    text = text.strip()
    if not text:
        return Permutation(())
    try:
        word = tuple(int(tok) for tok in text.split())
    except ValueError as exc:
        raise MalformedInput(f"bad one-line notation {text!r}: {exc}") from None
    return Permutation(word)


def parse_cycles(text: str) -> CycleDecomposition:
    """Parse cycle notation, e.g. ``"(1,2,5,3)(4,7)(6)"``.  Cycles may be
    given in any rotation/order; the result is canonical."""
    text = text.strip()
    if not text:
        return CycleDecomposition(())
    if text.replace(" ", "") != "".join(
        f"({m.group(1)})".replace(" ", "") for m in _CYCLE_RE.finditer(text)
    ):
        raise MalformedInput(f"bad cycle notation {text!r}")
    cycles = []
    for m in _CYCLE_RE.finditer(text):
        body = m.group(1).strip()
        if not body:
            raise MalformedInput("empty cycle in cycle notation")
        try:
            cycles.append(tuple(int(tok) for tok in body.split(",")))
        except ValueError as exc:
            raise MalformedInput(f"bad cycle notation {text!r}: {exc}") from None
    return CycleDecomposition.from_raw(cycles)


def parse_any(text: str):
    """One-line or cycle notation, auto-detected by a leading ``(``."""
    if text.strip().startswith("("):
        return parse_cycles(text)
    return parse_permutation(text)


def format_permutation(p: Permutation) -> str:
    return " ".join(str(x) for x in p.word)


def format_cycles(c: CycleDecomposition) -> str:
    return "".join("(" + ",".join(str(x) for x in cyc) + ")" for cyc in c.cycles)
