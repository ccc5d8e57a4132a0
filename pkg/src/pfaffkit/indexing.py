"""Signed index bookkeeping and shuffle signs.

Matrices of size 2n are addressed by signed indices i in {1..n, -n..-1};
the negative label -k stands for row/column 2n+1-k.  Splitting a sorted
index set into two pieces carries the sign of the permutation that
rearranges it, computed here by counting crossings.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


def position(value: int, n: int) -> int:
    """1-based slot of a signed index in a 2n-sized matrix."""
    if not 1 <= abs(value) <= n or value == 0:
        raise ValueError(f"signed index {value} out of range for n={n}")
    return value if value > 0 else 2 * n + 1 + value


def signed_value(pos: int, n: int) -> int:
    """Inverse of :func:`position`."""
    if not 1 <= pos <= 2 * n:
        raise ValueError(f"slot {pos} out of range for n={n}")
    return pos if pos <= n else pos - (2 * n + 1)


@dataclass(frozen=True)
class SignedIndex:
    """A signed index together with its ambient half-size n."""

    value: int
    ambient: int

    def __post_init__(self):
        position(self.value, self.ambient)  # range check

    @property
    def pos(self) -> int:
        return position(self.value, self.ambient)

    def __neg__(self) -> "SignedIndex":
        return SignedIndex(-self.value, self.ambient)


def _check_sorted_unique(elements: Sequence[int], what: str) -> tuple[int, ...]:
    elems = tuple(elements)
    for a, b in zip(elems, elems[1:]):
        if a >= b:
            raise ValueError(f"{what} must be strictly increasing, got {elems}")
    return elems


@dataclass(frozen=True)
class IndexSet:
    """A strictly increasing subset of a declared universe."""

    elements: tuple[int, ...]
    universe: tuple[int, ...]

    def __init__(self, elements: Iterable[int], universe: Iterable[int]):
        elems = _check_sorted_unique(tuple(elements), "index set")
        univ = _check_sorted_unique(tuple(universe), "universe")
        missing = set(elems) - set(univ)
        if missing:
            raise ValueError(f"elements {sorted(missing)} not in universe")
        object.__setattr__(self, "elements", elems)
        object.__setattr__(self, "universe", univ)

    def complement(self) -> "IndexSet":
        inside = set(self.elements)
        return IndexSet(tuple(x for x in self.universe if x not in inside), self.universe)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self.elements

    def split_sign_with(self, other: "IndexSet") -> int:
        """Sign of sorting (self, other) back into their union."""
        return split_sign(tuple(self.elements) + tuple(other.elements), self.elements, other.elements)


def _crossings(left: Sequence[int], right: Sequence[int]) -> int:
    # pairs (x, y) with x in left, y in right, x > y; both inputs sorted
    left = list(left)
    total = 0
    for y in right:
        total += len(left) - bisect_right(left, y)
    return total


def split_sign(whole: Iterable[int], left: Iterable[int], right: Iterable[int]) -> int:
    """Sign of the permutation rearranging sorted `whole` into (left, right).

    Both pieces are read in increasing order; the sign is (-1)^c where c
    counts pairs (x, y) with x in left, y in right and x > y.  The pieces
    must partition `whole`.
    """
    K = _check_sorted_unique(sorted(whole), "whole")
    I = _check_sorted_unique(sorted(left), "left part")
    J = _check_sorted_unique(sorted(right), "right part")
    if set(I) & set(J):
        raise ValueError("parts overlap")
    if tuple(sorted(I + J)) != K:
        raise ValueError("parts do not partition the whole set")
    return -1 if _crossings(I, J) % 2 else 1


def complement_sign(part: Iterable[int], universe: Iterable[int]) -> int:
    """Sign sgn(complement, part) of splitting `universe` as (complement, part)."""
    part_t = tuple(sorted(part))
    univ = tuple(sorted(universe))
    inside = set(part_t)
    comp = tuple(x for x in univ if x not in inside)
    if len(inside) != len(part_t) or not inside <= set(univ):
        raise ValueError("part must be a subset of the universe")
    return split_sign(univ, comp, part_t)
