"""Structural decomposition of a vertex pair on the cycle.

For intersecting A != B the cycle splits into the components of X = A u B
and the complement intervals between them (the blocks).  Block boundaries
are classified by which kind of end (A-, B- or H-end) sits on each side;
those types drive every constructive path in this package, and the
odd-block count decides whether the pair is at distance 2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclic import CycleParams, StableSet, mask_of, members_of, rol_mask, wrap
from .errors import DegenerateInputError, InvariantError, ParameterError

# Block types: boundary ends (i-1, j+1) in order, H = element of both sets.
TYPE_I = "I"
TYPE_IIA = "II(A)"
TYPE_IIB = "II(B)"
TYPE_IIIA = "III(A)"
TYPE_IIIB = "III(B)"
TYPE_IVA = "IV(A)"
TYPE_IVB = "IV(B)"
TYPE_IVH = "IV(H)"

_BLOCK_TYPE = {
    ("H", "H"): TYPE_I,
    ("H", "A"): TYPE_IIA,
    ("H", "B"): TYPE_IIB,
    ("A", "H"): TYPE_IIIA,
    ("B", "H"): TYPE_IIIB,
    ("A", "A"): TYPE_IVA,
    ("B", "B"): TYPE_IVB,
    ("A", "B"): TYPE_IVH,
    ("B", "A"): TYPE_IVH,
}

# Component classes: single H'-vertices, alternating runs ending in A/A,
# B/B, or mixed (H'').
COMP_A = "A"
COMP_B = "B"
COMP_H_PRIME = "H'"
COMP_H_DPRIME = "H''"


@dataclass
class CyclicInterval:
    """Interval [start .. start+length-1] on the n-cycle; at most one wraps."""

    start: int
    length: int
    n: int

    @property
    def end(self) -> int:
        return wrap(self.start + self.length - 1, self.n)

    def elements(self) -> tuple[int, ...]:
        n = self.n
        return tuple(wrap(self.start + t, n) for t in range(self.length))

    def __str__(self) -> str:
        return f"[{self.start},{self.end}]"


@dataclass
class Block:
    """Maximal complement interval with its boundary type and usable count m."""

    interval: CyclicInterval
    btype: str
    m: int


@dataclass
class Component:
    """Maximal interval of X = A u B with its class."""

    interval: CyclicInterval
    cclass: str


@dataclass
class EndSets:
    """A-, B- and H-ends, with the singleton-component split e' / e''."""

    eA: frozenset[int]
    eB: frozenset[int]
    eH: frozenset[int]
    eA_prime: frozenset[int]
    eA_dprime: frozenset[int]
    eB_prime: frozenset[int]
    eB_dprime: frozenset[int]


@dataclass
class Decomposition:
    a: StableSet
    b: StableSet
    components: tuple[Component, ...]
    blocks: tuple[Block, ...]
    ends: EndSets
    h: int

    @property
    def params(self) -> CycleParams:
        return self.a.params

    @property
    def x_components(self) -> tuple[CyclicInterval, ...]:
        return tuple(c.interval for c in self.components)


def _runs(mask: int, n: int) -> list[tuple[int, int]]:
    """Maximal cyclic runs of set bits as (start, length), sorted by start."""
    if mask == 0:
        return []
    full = (1 << n) - 1
    if mask == full:
        return [(1, n)]
    starts = mask & ~rol_mask(mask, 1, n)
    runs = []
    s = starts
    while s:
        low = s & -s
        p = low.bit_length()
        length = 1
        q = p % n + 1
        while mask >> (q - 1) & 1:
            length += 1
            q = q % n + 1
        runs.append((p, length))
        s ^= low
    runs.sort()
    return runs


def decompose(a: StableSet, b: StableSet) -> Decomposition:
    """Components, blocks, ends and h for an intersecting pair A != B."""
    if a.params != b.params:
        raise ParameterError("vertices come from different SG(n,k)")
    am, bm = a.mask, b.mask
    if am == bm:
        raise DegenerateInputError("decompose needs A != B")
    hm = am & bm
    if hm == 0:
        raise DegenerateInputError(
            "decompose needs A and B to intersect (disjoint pairs are adjacent)"
        )
    n = a.params.n
    xm = am | bm

    components: list[Component] = []
    eA: list[int] = []
    eB: list[int] = []
    eA_p: list[int] = []
    eA_dp: list[int] = []
    eB_p: list[int] = []
    eB_dp: list[int] = []

    def side(x: int) -> str:
        bit = 1 << (x - 1)
        if hm & bit:
            return "H"
        return "A" if am & bit else "B"

    for start, length in _runs(xm, n):
        iv = CyclicInterval(start, length, n)
        last = iv.end
        if length == 1:
            cls = side(start)
            if cls == "H":
                components.append(Component(iv, COMP_H_PRIME))
            elif cls == "A":
                components.append(Component(iv, COMP_A))
                eA.append(start)
                eA_dp.append(start)
            else:
                components.append(Component(iv, COMP_B))
                eB.append(start)
                eB_dp.append(start)
            continue
        s_cls, e_cls = side(start), side(last)
        for x, cls in ((start, s_cls), (last, e_cls)):
            if cls == "A":
                eA.append(x)
                eA_p.append(x)
            else:
                eB.append(x)
                eB_p.append(x)
        if s_cls == e_cls:
            components.append(Component(iv, COMP_A if s_cls == "A" else COMP_B))
        else:
            components.append(Component(iv, COMP_H_DPRIME))

    blocks: list[Block] = []
    for start, length in _runs(~xm & a.params.full_mask, n):
        iv = CyclicInterval(start, length, n)
        btype = _BLOCK_TYPE[(side(wrap(start - 1, n)), side(wrap(start + length, n)))]
        usable = length - 1 if btype in (TYPE_IVA, TYPE_IVB, TYPE_IVH) else length
        blocks.append(Block(iv, btype, usable))

    ends = EndSets(
        eA=frozenset(eA),
        eB=frozenset(eB),
        eH=frozenset(members_of(hm)),
        eA_prime=frozenset(eA_p),
        eA_dprime=frozenset(eA_dp),
        eB_prime=frozenset(eB_p),
        eB_dprime=frozenset(eB_dp),
    )
    return Decomposition(a, b, tuple(components), tuple(blocks), ends, hm.bit_count())


def distance2_criterion(d: Decomposition) -> bool:
    """True iff dist(A,B) = 2: (|odd blocks| + |complement|) / 2 >= k."""
    odd = sum(1 for blk in d.blocks if blk.interval.length % 2)
    total = sum(blk.interval.length for blk in d.blocks)
    return odd + total >= 2 * d.params.k


@dataclass
class CountSummary:
    n_a: int
    n_b: int
    n_h_prime: int
    n_h_dprime: int
    block_counts: dict[str, int]


def component_counts(d: Decomposition) -> CountSummary:
    """Component and block-type tallies (the paper's counting identities)."""
    n_a = n_b = n_hp = n_hpp = 0
    for comp in d.components:
        if comp.cclass == COMP_A:
            n_a += 1
        elif comp.cclass == COMP_B:
            n_b += 1
        elif comp.cclass == COMP_H_PRIME:
            n_hp += 1
        else:
            n_hpp += 1
    bc = {
        t: 0
        for t in (TYPE_I, TYPE_IIA, TYPE_IIB, TYPE_IIIA, TYPE_IIIB, TYPE_IVA, TYPE_IVB, TYPE_IVH)
    }
    for blk in d.blocks:
        bc[blk.btype] += 1
    return CountSummary(n_a, n_b, n_hp, n_hpp, bc)


def m_sum_bound(d: Decomposition) -> bool:
    """Whether sum of m over blocks >= n - 3k + 2h + 2 (holds when dist >= 3)."""
    n, k = d.params.n, d.params.k
    return sum(blk.m for blk in d.blocks) >= n - 3 * k + 2 * d.h + 2


def disjoint_middle_vertex(d: Decomposition) -> StableSet:
    """A vertex disjoint from A and B; exists iff the distance-2 criterion holds.

    Takes every other element of each block starting at its first element
    (the maximum stable subset of that block), then keeps the k smallest.
    """
    picks: list[int] = []
    n = d.params.n
    for blk in d.blocks:
        start, length = blk.interval.start, blk.interval.length
        picks.extend(wrap(start + t, n) for t in range(0, length, 2))
    if len(picks) < d.params.k:
        raise InvariantError(
            "no common neighbor: the distance-2 criterion does not hold"
        )
    chosen = sorted(picks)[: d.params.k]
    return StableSet(d.params, mask_of(chosen))


def decomposition_to_json(d: Decomposition) -> dict:
    return {
        "h": d.h,
        "x_components": [
            {
                "start": c.interval.start,
                "length": c.interval.length,
                "elements": list(c.interval.elements()),
                "class": c.cclass,
            }
            for c in d.components
        ],
        "blocks": [
            {
                "start": blk.interval.start,
                "length": blk.interval.length,
                "elements": list(blk.interval.elements()),
                "type": blk.btype,
                "m": blk.m,
            }
            for blk in d.blocks
        ],
        "ends": {
            "A": sorted(d.ends.eA),
            "B": sorted(d.ends.eB),
            "H": sorted(d.ends.eH),
            "A_prime": sorted(d.ends.eA_prime),
            "A_dprime": sorted(d.ends.eA_dprime),
            "B_prime": sorted(d.ends.eB_prime),
            "B_dprime": sorted(d.ends.eB_dprime),
        },
        "distance2": distance2_criterion(d),
    }
