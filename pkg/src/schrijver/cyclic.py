"""Ground-set arithmetic modulo n and the 2-stable k-subsets of the n-cycle.

Elements are 1-based (1..n) with 1 and n cyclically consecutive; arithmetic
wraps with the convention 0 = n.  A vertex is represented as a single-word
bitmask (bit i-1 set iff element i is present), so membership and
disjointness tests are one AND each.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator

from .errors import ParameterError

# Single-word bitmask cap; the largest case exercised anywhere is n=26.
MAX_N = 64


def wrap(x: int, n: int) -> int:
    """Reduce x into 1..n (0 and n coincide)."""
    return (x - 1) % n + 1


@dataclass(frozen=True)
class CycleParams:
    """Ground-set size n and subset size k of SG(n,k).

    Accepts any 2 <= n <= 64, k >= 1: combinations with no 2-stable
    k-subsets simply have an empty vertex set.
    """

    n: int
    k: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or not isinstance(self.k, int):
            raise ParameterError(f"n and k must be integers, got n={self.n!r}, k={self.k!r}")
        if self.k < 1:
            raise ParameterError(f"k must be >= 1, got k={self.k}")
        if self.n < 2:
            raise ParameterError(f"n must be >= 2, got n={self.n}")
        if self.n > MAX_N:
            raise ParameterError(
                f"n={self.n} exceeds the single-word cap n <= {MAX_N}"
            )

    @property
    def r(self) -> int:
        """The excess n - 2k."""
        return self.n - 2 * self.k

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1


def rol_mask(mask: int, shift: int, n: int) -> int:
    """Rotate an n-bit mask left by shift (element i maps to i+shift)."""
    shift %= n
    full = (1 << n) - 1
    return ((mask << shift) | (mask >> (n - shift))) & full if shift else mask


def mask_of(members: Iterable[int]) -> int:
    m = 0
    for x in members:
        m |= 1 << (x - 1)
    return m


def members_of(mask: int) -> tuple[int, ...]:
    out = []
    x = 1
    while mask:
        if mask & 1:
            out.append(x)
        mask >>= 1
        x += 1
    return tuple(out)


@dataclass(frozen=True)
class StableSet:
    """A 2-stable k-subset of the n-cycle: a vertex of SG(n,k)."""

    params: CycleParams
    mask: int

    def __post_init__(self) -> None:
        n, k = self.params.n, self.params.k
        if self.mask < 0 or self.mask >> n:
            raise ParameterError("mask has bits outside 1..n")
        if self.mask.bit_count() != k:
            raise ParameterError(
                f"expected {k} members, got {self.mask.bit_count()}"
            )
        if self.mask & rol_mask(self.mask, 1, n):
            raise ParameterError(
                f"set {members_of(self.mask)} contains cyclically consecutive elements (n={n})"
            )

    @property
    def members(self) -> tuple[int, ...]:
        """Members in strictly increasing order."""
        return members_of(self.mask)

    @property
    def n(self) -> int:
        return self.params.n

    def __contains__(self, x: int) -> bool:
        return 1 <= x <= self.params.n and bool(self.mask >> (x - 1) & 1)

    def isdisjoint(self, other: "StableSet") -> bool:
        return not self.mask & other.mask

    def intersection(self, other: "StableSet") -> tuple[int, ...]:
        return members_of(self.mask & other.mask)

    def __str__(self) -> str:
        return format_set_text(self.members)


def stable_set(members: Iterable[int], params: CycleParams) -> StableSet:
    """Build a StableSet from raw members, validating everything."""
    mems = tuple(members)
    for x in mems:
        if not 1 <= x <= params.n:
            raise ParameterError(f"element {x} out of range 1..{params.n}")
    if len(set(mems)) != len(mems):
        raise ParameterError(f"duplicate elements in {mems}")
    return StableSet(params, mask_of(mems))


def is_2_stable(members: Iterable[int], params: CycleParams) -> bool:
    """True iff no two elements are cyclically adjacent (1 and n included)."""
    n = params.n
    mask = 0
    for x in members:
        if not 1 <= x <= n:
            raise ParameterError(f"element {x} out of range 1..{n}")
        mask |= 1 << (x - 1)
    return not mask & rol_mask(mask, 1, n)


def stable_count(params: CycleParams) -> int:
    """Number of 2-stable k-subsets: (n/(n-k)) * C(n-k, k)."""
    n, k = params.n, params.k
    if n < 2 * k:
        return 0
    return n * comb(n - k, k) // (n - k)


def enumerate_stable_sets(params: CycleParams) -> list[StableSet]:
    """All vertices of SG(n,k), lexicographic on the member sequence."""
    n, k = params.n, params.k
    out: list[StableSet] = []
    prefix: list[int] = []

    def extend(mask: int, start: int) -> None:
        i = len(prefix)
        if i == k:
            out.append(StableSet(params, mask))
            return
        # Leave room for the remaining elements (gap >= 2 each); when the
        # prefix starts at 1 the last element must stay below n.
        hi = n - 2 * (k - i - 1) - (1 if prefix and prefix[0] == 1 else 0)
        for v in range(start, hi + 1):
            prefix.append(v)
            extend(mask | (1 << (v - 1)), v + 2)
            prefix.pop()

    extend(0, 1)
    return out


def rotate(s: StableSet, shift: int) -> StableSet:
    """Shift every member by +shift around the cycle."""
    return StableSet(s.params, rol_mask(s.mask, shift, s.params.n))


def reflect(s: StableSet) -> StableSet:
    """Mirror the cycle about element 1: m maps to n - m + 2 (mod n)."""
    n = s.params.n
    return StableSet(s.params, mask_of(wrap(n - m + 2, n) for m in s.members))


def _anchored_rotations(members: tuple[int, ...], n: int) -> Iterator[tuple[int, ...]]:
    # Rotations that place some member at 1; all other rotations start at
    # an element > 1, hence are lexicographically larger.
    k = len(members)
    gaps = [
        (members[(i + 1) % k] - members[i]) % n for i in range(k)
    ]
    for i in range(k):
        acc = 1
        cand = [1]
        for j in range(k - 1):
            acc += gaps[(i + j) % k]
            cand.append(acc)
        yield tuple(cand)


def canonical_form(s: StableSet) -> StableSet:
    """Lexicographically least member sequence over the 2n dihedral images."""
    n = s.params.n
    best = None
    for source in (s.members, reflect(s).members):
        for cand in _anchored_rotations(source, n):
            if best is None or cand < best:
                best = cand
    return StableSet(s.params, mask_of(best))


def parse_set_text(text: str, params: CycleParams | None = None) -> tuple[int, ...]:
    """Parse `1,3,6,8` (ascending, no spaces); rejects unsorted/duplicates."""
    if not text:
        raise ParameterError("empty set text")
    try:
        mems = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ParameterError(f"bad set text {text!r}: {exc}") from None
    for prev, cur in zip(mems, mems[1:]):
        if cur <= prev:
            raise ParameterError(
                f"set text {text!r} must be strictly ascending"
            )
    if params is not None:
        for x in mems:
            if not 1 <= x <= params.n:
                raise ParameterError(f"element {x} out of range 1..{params.n}")
    return mems


def format_set_text(members: Iterable[int]) -> str:
    return ",".join(str(x) for x in sorted(members))
