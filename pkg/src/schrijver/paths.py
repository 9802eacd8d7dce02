"""Constructive short paths between vertices of SG(n,k).

Everything here emits PathCertificate values; validity is established by
the independent verifier in `certificates`, never assumed.  The central
construction grows two supersets (one avoiding A, one avoiding B) from the
complement blocks via eight per-type assignment rules, leaving singleton
type-I blocks in a reserve that is distributed last.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blocks import (
    TYPE_I,
    TYPE_IIA,
    TYPE_IIB,
    TYPE_IIIA,
    TYPE_IIIB,
    TYPE_IVA,
    TYPE_IVB,
    TYPE_IVH,
    Block,
    Decomposition,
    decompose,
    disjoint_middle_vertex,
    distance2_criterion,
)
from .certificates import PathCertificate
from .cyclic import StableSet, is_2_stable, mask_of, members_of, rotate, stable_set, wrap
from .errors import DegenerateInputError, InvariantError, ParameterError, RegimeError


def zy_split(
    block: Block,
) -> tuple[frozenset[int], frozenset[int], frozenset[int], frozenset[int]]:
    """Parity split of a block: (Z, Y, Z', Y').

    Z holds the elements at odd clockwise distance from the left boundary
    i-1 (so the first, third, ... element of the block); Y the even ones.
    Z'/Y' count from the right boundary j+1 instead.
    """
    els = block.interval.elements()
    rev = els[::-1]
    return (
        frozenset(els[0::2]),
        frozenset(els[1::2]),
        frozenset(rev[0::2]),
        frozenset(rev[1::2]),
    )


@dataclass
class StarPair:
    """Supersets grown by rules R1-R8 before the type-I reserve is placed.

    a_star avoids A, b_star avoids B, the two are disjoint, and i_prime
    holds the still-unassigned singleton type-I block elements.
    """

    a_star: frozenset[int]
    b_star: frozenset[int]
    i_prime: tuple[int, ...]
    s: int
    r_blocks: int
    h: int


def _apply_rules(d: Decomposition) -> tuple[set[int], set[int], list[int], int, int]:
    a_star = set(members_of(d.b.mask & ~d.a.mask))
    b_star = set(members_of(d.a.mask & ~d.b.mask))
    i_prime: list[int] = []
    r_blocks = 0
    two_s = 0
    a_side = d.a.mask & ~d.b.mask

    for blk in d.blocks:
        z, y, zp, yp = zy_split(blk)
        j = blk.interval.end
        t = blk.btype
        if t == TYPE_I:
            if blk.interval.length >= 2:
                a_star |= z
                b_star |= y
                r_blocks += 1
            else:
                i_prime.append(blk.interval.start)
        elif t == TYPE_IIA:
            a_star |= zp
            b_star |= yp
            two_s += 1
        elif t == TYPE_IIB:
            b_star |= zp
            a_star |= yp
            two_s += 1
        elif t == TYPE_IIIA:
            a_star |= z
            b_star |= y
            two_s += 1
        elif t == TYPE_IIIB:
            b_star |= z
            a_star |= y
            two_s += 1
        elif t == TYPE_IVA:
            a_star |= z
            b_star |= y - {j}
        elif t == TYPE_IVB:
            b_star |= z
            a_star |= y - {j}
        else:  # IV(H): orientation decided by the left boundary's side
            left = wrap(blk.interval.start - 1, d.params.n)
            if a_side >> (left - 1) & 1:
                a_star |= z - {j}
                b_star |= y
            else:
                b_star |= z - {j}
                a_star |= y

    if two_s % 2:
        raise InvariantError("odd number of type II/III blocks")
    i_prime.sort()
    return a_star, b_star, i_prime, two_s // 2, r_blocks


def build_star_pair(d: Decomposition) -> StarPair:
    """Apply R1-R8 plus B\\A -> a_star, A\\B -> b_star; validate the outcome.

    Total on every decomposable pair: the rules and the counting behind
    |I'| = h - s - r need intersection and A != B, nothing about distance.
    """
    a_star, b_star, i_prime, s, r_blocks = _apply_rules(d)

    params = d.params
    am, bm = d.a.mask, d.b.mask
    a_mask, b_mask = mask_of(a_star), mask_of(b_star)
    if not is_2_stable(a_star, params) or not is_2_stable(b_star, params):
        raise InvariantError("star sets are not 2-stable")
    if a_mask & am or b_mask & bm or a_mask & b_mask:
        raise InvariantError("star sets violate the disjointness conditions")
    if (bm & ~am) & ~a_mask or (am & ~bm) & ~b_mask:
        raise InvariantError("star sets do not contain the opposite difference")
    if len(i_prime) != d.h - s - r_blocks:
        raise InvariantError("|I'| != h - s - r")
    return StarPair(frozenset(a_star), frozenset(b_star), tuple(i_prime), s, r_blocks, d.h)


def _keep_smallest(pool: set[int], k: int) -> list[int]:
    return sorted(pool)[:k]


def reduce_intersection(a: StableSet, b: StableSet) -> tuple[StableSet, StableSet]:
    """Produce (a', b') with a n a' = b n b' = empty and |a' n b'| <= h-1.

    The reserve goes to a_star first (smallest elements, only as many as
    needed to reach size k), the rest to b_star; elements are re-used on
    both sides only when unavoidable, which caps the new intersection at
    |I'| <= h-1.
    """
    if a.params != b.params:
        raise ParameterError("vertices come from different SG(n,k)")
    k = a.params.k
    h = (a.mask & b.mask).bit_count()
    if a.mask == b.mask or h == 0:
        raise DegenerateInputError("reduce_intersection needs A != B with A n B != empty")
    d = decompose(a, b)
    sp = build_star_pair(d)

    a_pool = set(sp.a_star)
    b_pool = set(sp.b_star)
    reserve = list(sp.i_prime)
    need_a = max(0, k - len(a_pool))
    take_a = reserve[:need_a]
    a_pool.update(take_a)
    rest = reserve[need_a:]
    need_b = max(0, k - len(b_pool))
    b_pool.update(rest[:need_b])
    if len(b_pool) < k:
        b_pool.update(take_a[: k - len(b_pool)])
    if len(a_pool) < k or len(b_pool) < k:
        raise InvariantError("star sets plus reserve cannot reach size k")

    a2 = stable_set(_keep_smallest(a_pool, k), a.params)
    b2 = stable_set(_keep_smallest(b_pool, k), a.params)
    if a2.mask & a.mask or b2.mask & b.mask:
        raise InvariantError("reduced pair meets its own endpoint")
    if (a2.mask & b2.mask).bit_count() > h - 1:
        raise InvariantError("intersection did not shrink")
    return a2, b2


def path_small_intersection(a: StableSet, b: StableSet) -> PathCertificate:
    """Short path for |A n B| = k-1 (via the +1 shift) or = 1 (P4/paw)."""
    if a.params != b.params:
        raise ParameterError("vertices come from different SG(n,k)")
    params = a.params
    n, k = params.n, params.k
    h = (a.mask & b.mask).bit_count()

    if h == k - 1 and k >= 2 and a.mask != b.mask:
        mid = rotate(b, 1)
        if mid.mask & a.mask:
            mid = rotate(a, 1)
            if mid.mask & b.mask:
                raise InvariantError("neither shifted endpoint is a common neighbor")
        return PathCertificate((a, mid, b), 2)

    if h == 1:
        common = members_of(a.mask & b.mask)[0]
        shift = (1 - common) % n
        ar, br = rotate(a, shift), rotate(b, shift)
        swapped = ar.members[1] > br.members[1]
        if swapped:
            ar, br = br, ar
        x = stable_set((2,) + br.members[1:], params)
        y = rotate(x, 1)
        walk = [ar, x, y, br]
        if swapped:
            walk.reverse()
        back = (-shift) % n
        return PathCertificate(tuple(rotate(v, back) for v in walk), 3)

    raise ParameterError(f"|A n B| = {h}, expected 1 or k-1")


def _disjoint_middle_pair(d: Decomposition) -> tuple[StableSet, StableSet] | None:
    """Disjoint (A', B') adjacent to A resp. B via R1-R8, or None.

    The reserve distribution follows the large-n argument: a_star takes
    the smallest elements it needs, b_star all the rest.  Below n = 3k-2
    this can fail (return None); at n >= 3k-2 it cannot.
    """
    k = d.params.k
    sp = build_star_pair(d)
    reserve = list(sp.i_prime)
    need_a = max(0, k - len(sp.a_star))
    if need_a > len(reserve):
        return None
    b_pool = set(sp.b_star)
    b_pool.update(reserve[need_a:])
    if len(b_pool) < k:
        return None
    a_pool = set(sp.a_star)
    a_pool.update(reserve[:need_a])
    a2 = stable_set(_keep_smallest(a_pool, k), d.params)
    b2 = stable_set(_keep_smallest(b_pool, k), d.params)
    return a2, b2


def path_dist3(a: StableSet, b: StableSet) -> PathCertificate:
    """Length-3 certificate A - A' - B' - B for dist >= 3 pairs, k-2 <= r <= 2k-3."""
    if a.params != b.params:
        raise ParameterError("vertices come from different SG(n,k)")
    n, k = a.params.n, a.params.k
    if not 3 * k - 2 <= n <= 4 * k - 3:
        raise RegimeError(
            f"path_dist3 needs 3k-2 <= n <= 4k-3, got n={n}, k={k}"
        )
    if a.mask == b.mask or not a.mask & b.mask:
        raise DegenerateInputError("pair is at distance 0 or 1")
    d = decompose(a, b)
    if distance2_criterion(d):
        raise RegimeError("pair is at distance 2")
    pair = _disjoint_middle_pair(d)
    if pair is None:
        raise InvariantError("middle-pair construction failed in its proven regime")
    a2, b2 = pair
    bad = [
        blk.interval.start
        for blk in d.blocks
        if blk.btype == TYPE_IVH and blk.interval.length == 1
    ]
    middle = a2.mask | b2.mask
    for t in bad:
        if middle >> (t - 1) & 1:
            raise InvariantError(f"singleton IV(H) element {t} leaked into the path")
    return PathCertificate((a, a2, b2, b), 3)


def path_via_reduction(
    a: StableSet, b: StableSet, via: StableSet | None = None
) -> PathCertificate:
    """Certificate of length <= 1 + 2|A n B| by repeated intersection reduction.

    With `via` given, joins the two half-paths through it instead
    (length <= 2 + 2(|A n Y| + |Y n B|)).
    """
    if via is not None:
        left = path_via_reduction(a, via)
        right = path_via_reduction(via, b)
        return PathCertificate(
            left.vertices + right.vertices[1:],
            left.claimed_bound + right.claimed_bound,
        )
    if a.params != b.params:
        raise ParameterError("vertices come from different SG(n,k)")
    if a.mask == b.mask:
        return PathCertificate((a,), 0)
    h = (a.mask & b.mask).bit_count()
    if h == 0:
        return PathCertificate((a, b), 1)
    bound = 1 + 2 * h
    d = decompose(a, b)
    if distance2_criterion(d):
        return PathCertificate((a, disjoint_middle_vertex(d), b), bound)
    a2, b2 = reduce_intersection(a, b)
    inner = path_via_reduction(a2, b2)
    cert = PathCertificate((a,) + inner.vertices + (b,), bound)
    if cert.edge_count > bound:
        raise InvariantError("reduction path exceeded 1 + 2h")
    return cert
