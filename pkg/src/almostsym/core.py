"""Gap-set representation of numerical semigroups and their basic invariants.

A numerical semigroup S is an additively closed subset of the nonnegative
integers containing 0 with finite complement.  The complement (the "gaps")
is a finite set of positive integers and identifies S uniquely, so it is
used as the canonical form throughout: equality, hashing and ordering of
semigroups all compare sorted gap tuples.

Conventions for the full semigroup S = N (empty gap set): frobenius = -1,
pf = (), type_ = 0, msg = (1,).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Iterator


class ClosureViolation(ValueError):
    """Two non-gaps sum to a gap, so the complement is not a semigroup."""

    def __init__(self, a: int, b: int):
        super().__init__(f"complement not additively closed: {a} + {b} is a gap")
        self.a = a
        self.b = b


class NotNumerical(ValueError):
    """gcd of the generators is not 1, so the complement would be infinite."""


class InvalidParameters(ValueError):
    """Arguments outside the domain of an enumeration entry point."""


class LimitExceeded(ValueError):
    """Requested size is beyond the configured brute-force limit."""


class Semigroup:
    """A numerical semigroup identified by its sorted tuple of gaps.

    Instances are immutable; the constructor normalizes (sorts, removes
    duplicates) and checks positivity but does NOT check additive closure
    of the complement.  Use :func:`from_gaps` for validated construction
    from untrusted input; the enumeration algorithms construct directly
    because closure is guaranteed by the theorems they implement.
    """

    __slots__ = ("gaps", "_gapset")

    def __init__(self, gaps: Iterable[int] = ()):
        gaps = tuple(sorted(set(gaps)))
        if gaps and gaps[0] < 1:
            raise ValueError("gaps must be positive integers")
        self.gaps = gaps
        self._gapset = frozenset(gaps)

    @classmethod
    def _from_sorted(cls, gaps: tuple[int, ...]) -> "Semigroup":
        # hot-path constructor: caller guarantees sorted, distinct, positive;
        # the frozenset is built lazily on first membership query
        self = object.__new__(cls)
        self.gaps = gaps
        self._gapset = None
        return self

    @property
    def frobenius(self) -> int:
        return self.gaps[-1] if self.gaps else -1

    def gap_set(self) -> frozenset:
        gs = self._gapset
        if gs is None:
            gs = self._gapset = frozenset(self.gaps)
        return gs

    def contains(self, x: int) -> bool:
        return x >= 0 and x not in self.gap_set()

    __contains__ = contains

    def members(self, upto: int) -> Iterator[int]:
        """Yield the elements of S in [0, upto]."""
        return (x for x in range(upto + 1) if x not in self.gap_set())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Semigroup) and self.gaps == other.gaps

    def __lt__(self, other: "Semigroup") -> bool:
        return self.gaps < other.gaps

    def __hash__(self) -> int:
        return hash(self.gaps)

    def __repr__(self) -> str:
        return f"Semigroup(gaps={list(self.gaps)})"


def from_gaps(gaps: Iterable[int]) -> Semigroup:
    """Build a semigroup from a prescribed gap set, verifying closure.

    Raises ClosureViolation(a, b) if two nonzero non-gaps a, b sum to a gap.
    """
    S = Semigroup(gaps)
    if not S.gaps:
        return S
    F = S.frobenius
    member = [x not in S.gap_set() for x in range(F + 1)]
    for g in S.gaps:
        for a in range(1, g // 2 + 1):
            if member[a] and member[g - a]:
                raise ClosureViolation(a, g - a)
    return S


def from_generators(gens: Iterable[int]) -> Semigroup:
    """Build the semigroup generated by `gens` under addition.

    Membership is sieved upward from 0: n is a member when n == 0 or
    n - g is a member for some generator g.  Once min(gens) consecutive
    members have appeared, every larger integer is a member (add the
    smallest generator), so the sieve stops there.

    Raises NotNumerical when gcd(gens) != 1.
    """
    gens = sorted(set(gens))
    if not gens:
        raise InvalidParameters("need at least one generator")
    if gens[0] < 1:
        raise InvalidParameters("generators must be positive")
    g = 0
    for a in gens:
        g = gcd(g, a)
    if g != 1:
        raise NotNumerical(f"gcd of generators is {g}")

    m = gens[0]
    member = [True]  # index 0
    run = 0
    gaps = []
    n = 0
    while run < m:
        n += 1
        is_member = any(n >= a and member[n - a] for a in gens)
        member.append(is_member)
        if is_member:
            run += 1
        else:
            run = 0
            gaps.append(n)
    return Semigroup(gaps)


def contains(S: Semigroup, x: int) -> bool:
    """True iff x is a nonnegative element of S."""
    return S.contains(x)


@dataclass(frozen=True)
class Stats:
    """Derived invariants of a numerical semigroup.

    gaps_first is N(S) = {x gap | F - x in S}; gaps_second is L(S), the
    remaining gaps.  type_ = len(pf).
    """

    frobenius: int
    genus: int
    multiplicity: int
    msg: tuple[int, ...]
    pf: tuple[int, ...]
    type_: int
    gaps_first: tuple[int, ...]
    gaps_second: tuple[int, ...]


@functools.lru_cache(maxsize=None)
def compute_stats(S: Semigroup) -> Stats:
    """Compute all basic invariants of S.

    Minimal generators are searched up to F + m: any s > F + m splits as
    m + (s - m) with both summands nonzero members.  The pseudo-Frobenius
    test is reduced to generators: x is in PF iff x is a gap and x + n is
    a member for every minimal generator n (every nonzero member is a sum
    of minimal generators).
    """
    gaps = S.gaps
    if not gaps:
        return Stats(-1, 0, 1, (1,), (), 0, (), ())
    F = gaps[-1]
    gapset = S.gap_set()

    multiplicity = 1
    while multiplicity in gapset:
        multiplicity += 1
    m = multiplicity

    bound = F + m
    member = [x > F or x not in gapset for x in range(bound + 1)]

    msg = []
    for s in range(m, bound + 1):
        if not member[s]:
            continue
        if any(member[a] and member[s - a] for a in range(m, s - m + 1)):
            continue
        msg.append(s)

    def in_S(x: int) -> bool:
        return x > F or (x >= 0 and x not in gapset)

    pf = tuple(x for x in gaps if all(in_S(x + n) for n in msg))

    gaps_first = tuple(x for x in gaps if (F - x) not in gapset)
    gaps_second = tuple(x for x in gaps if (F - x) in gapset)

    return Stats(F, len(gaps), m, tuple(msg), pf, len(pf),
                 gaps_first, gaps_second)


@dataclass(frozen=True)
class TreeEdge:
    """A parent -> child edge of an enumeration tree, labeled by the
    integer x that was moved (replaced generator, or adjoined element)."""

    parent: Semigroup
    child: Semigroup
    x: int


@dataclass(frozen=True)
class EnumerationResult:
    """Deduplicated, canonically ordered enumeration output.

    collisions counts how many raw results were dropped as duplicates
    (distinct construction paths reaching the same semigroup).
    """

    semigroups: tuple[Semigroup, ...]
    algorithm: str
    depth: int
    edges: tuple[TreeEdge, ...] = ()
    collisions: int = 0

    def __len__(self) -> int:
        return len(self.semigroups)

    def __iter__(self) -> Iterator[Semigroup]:
        return iter(self.semigroups)

    def gap_sets(self) -> set[tuple[int, ...]]:
        return {S.gaps for S in self.semigroups}

    @classmethod
    def collect(cls, semigroups: Iterable[Semigroup], algorithm: str,
                depth: int, edges: Iterable[TreeEdge] = ()) -> "EnumerationResult":
        raw = list(semigroups)
        by_gaps = {S.gaps: S for S in raw}
        unique = tuple(by_gaps[g] for g in sorted(by_gaps))
        return cls(unique, algorithm, depth, tuple(edges),
                   len(raw) - len(unique))
