"""Oriented separations of the ground set and their partial order.

A separation is an ordered bipartition (A, X \\ A); its order is f(A).  Both
empty-sided separations (emptyset, X) and (X, emptyset) are admitted, since
the structure axioms quantify over them.  The canonical ordering used by
every set-valued output in the toolkit is ascending by the bitmask of the
first side.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .connectivity import ConnectivitySystem
from .exceptions import GroundSetLimitError

# enumerating all 2**n oriented separations stays cheap up to here
ENUMERATION_LIMIT = 16


@dataclass(frozen=True)
class Separation:
    """An oriented separation (first, second) with its cached order."""

    system: ConnectivitySystem
    first: int
    second: int
    order: int

    def reverse(self) -> "Separation":
        return Separation(self.system, self.second, self.first, self.order)

    def first_elements(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.system.n) if self.first >> i & 1)

    def __repr__(self):
        n = self.system.n
        side = "{" + ",".join(str(i) for i in range(n) if self.first >> i & 1) + "}"
        return f"Separation({side}, order={self.order})"


def make_separation(system: ConnectivitySystem, first: int) -> Separation:
    """Build (A, X \\ A) from the mask of side A, caching f(A)."""
    if first < 0 or first > system.full_mask:
        raise ValueError(
            f"mask {first:#x} has bits outside the ground set of size {system.n}"
        )
    return Separation(system, first, system.full_mask ^ first, system.evaluate(first))


def reverse(sep: Separation) -> Separation:
    return sep.reverse()


def _require_same_system(s1: Separation, s2: Separation) -> None:
    if s1.system is not s2.system:
        raise ValueError("separations belong to different systems")


def leq(s1: Separation, s2: Separation) -> bool:
    """(A, B) <= (C, D) iff A is a subset of C and B a superset of D.

    For bipartitions of one ground set the two clauses coincide; both are
    evaluated anyway so the predicate reads like its definition.
    """
    _require_same_system(s1, s2)
    return (s1.first & ~s2.first) == 0 and (s2.second & ~s1.second) == 0


def lt(s1: Separation, s2: Separation) -> bool:
    return leq(s1, s2) and s1.first != s2.first


def enumerate_k_efficient(system: ConnectivitySystem, k: int) -> list[Separation]:
    """All oriented separations of order <= k, ascending by first-side mask.

    Both orientations of every unordered separation appear.
    """
    if system.n > ENUMERATION_LIMIT:
        raise GroundSetLimitError("separation enumeration", system.n, ENUMERATION_LIMIT)
    if k < 0:
        raise ValueError("k must be non-negative")
    table = system.table()
    masks = np.nonzero(table <= k)[0]
    return [
        Separation(system, int(m), system.full_mask ^ int(m), int(table[m]))
        for m in masks
    ]


def efficient_masks(system: ConnectivitySystem, k: int) -> list[int]:
    """First-side masks of all k-efficient separations, ascending."""
    if system.n > ENUMERATION_LIMIT:
        raise GroundSetLimitError("separation enumeration", system.n, ENUMERATION_LIMIT)
    return [int(m) for m in np.nonzero(system.table() <= k)[0]]


@dataclass(frozen=True)
class SeparationFamily:
    """A duplicate-free set of oriented separations declared against a bound k.

    Members are kept in canonical order.  The order <= k claim is *not*
    enforced here: structure checks report violations as axiom failures.
    """

    system: ConnectivitySystem
    k: int
    members: tuple[Separation, ...]

    @classmethod
    def from_masks(cls, system: ConnectivitySystem, k: int, masks) -> "SeparationFamily":
        masks = list(masks)
        if len(set(masks)) != len(masks):
            raise ValueError("duplicate members in separation family")
        members = tuple(make_separation(system, m) for m in sorted(masks))
        return cls(system, k, members)

    @property
    def member_masks(self) -> tuple[int, ...]:
        return tuple(s.first for s in self.members)

    def mask_set(self) -> frozenset[int]:
        return frozenset(s.first for s in self.members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, item) -> bool:
        if isinstance(item, Separation):
            item = item.first
        return any(s.first == item for s in self.members)

    def __repr__(self):
        sides = ",".join(
            "{" + ",".join(map(str, s.first_elements())) + "}" for s in self.members
        )
        return f"SeparationFamily(k={self.k}, first_sides=[{sides}])"
