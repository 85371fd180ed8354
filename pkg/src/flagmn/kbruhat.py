"""The k-Bruhat order on S_n: covers, intervals, chains, and minimality.

For a fixed k, a cover u -> w multiplies u on the right by a transposition
t_ij with i <= k < j, u(i) < u(j), and no position l strictly between i and j
carrying a value strictly between u(i) and u(j).  These are exactly the terms
of the degree-one product rule, and the edge u -> w is labeled by the value
u(i) that moves right.

An interval [u, w]_k is graded by length.  A chain is *peakless of height a*
when its label sequence strictly decreases to a unique minimum at step a and
strictly increases afterwards.

A permutation zeta is *minimal* when lrank(zeta) = #support(zeta) - (number
of nontrivial cycles), where lrank(zeta) = length(zeta u) - length(u) for any
witness pair u <=_k zeta u.  Minimality and lrank only depend on the flattened
shape of zeta, which the default code paths exploit.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Iterator, Sequence

from .perm import Permutation, flatten_cycles, het, identity

__all__ = [
    "up_covers",
    "cover_transposition",
    "bruhat_leq",
    "leq_k",
    "LabeledPoset",
    "interval",
    "Chain",
    "chains",
    "peakless_height",
    "peakless_chain_counts",
    "has_peakless_chain",
    "find_witness",
    "lrank",
    "is_minimal",
    "peakless_count",
    "crossing",
    "noncrossing_factorization",
]


def up_covers(u: Permutation, k: int) -> list[tuple[int, Permutation]]:
    """All covers u -> w in the k-Bruhat order, as (label, w) pairs.

    The label is the value u(i) moving from the left block to the right.

    >>> [(lab, str(w)) for lab, w in up_covers(Permutation((1, 3, 2, 4)), 2)]
    [(1, '2314'), (3, '1423')]
    """
    word = u.word
    n = len(word)
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must be in 1..{n - 1}, got {k}")
    out: list[tuple[int, Permutation]] = []
    for i in range(k):
        a = word[i]
        # smallest value above a seen strictly between the swap positions
        bound = n + 1
        for l in range(i + 1, n):
            v = word[l]
            if v <= a:
                continue
            if l >= k and v < bound:
                out.append((a, u.swap_positions(i + 1, l + 1)))
            if v < bound:
                bound = v
    return out


def cover_transposition(
    u: Permutation, w: Permutation, k: int
) -> tuple[int, int] | None:
    """The (i, j) with w = u * t_ij if u -> w is a k-Bruhat cover, else None."""
    diff = [i + 1 for i in range(u.n) if u.word[i] != w.word[i]]
    if len(diff) != 2:
        return None
    i, j = diff
    if not (i <= k < j):
        return None
    if u(i) > u(j) or w != u.swap_positions(i, j):
        return None
    lo, hi = u(i), u(j)
    if any(lo < u(l) < hi for l in range(i + 1, j)):
        return None
    return (i, j)


def bruhat_leq(x: Permutation, w: Permutation) -> bool:
    """Strong Bruhat order via sorted-prefix dominance.

    x <= w iff for every i the sorted tuple of x(1..i) is entrywise at most
    the sorted tuple of w(1..i).
    """
    if x.n != w.n:
        raise ValueError("size mismatch")
    xs: list[int] = []
    ws: list[int] = []
    import bisect

    for a, b in zip(x.word, w.word):
        bisect.insort(xs, a)
        bisect.insort(ws, b)
        if any(p > q for p, q in zip(xs, ws)):
            return False
    return True


def _position_constraints_ok(u: Permutation, w: Permutation, k: int) -> bool:
    # Necessary for u <=_k w: with zeta = w u^{-1}, every rising value of zeta
    # sits in a position <= k of u and every falling value in a position > k.
    zeta = w * u.inverse()
    for v in range(1, u.n + 1):
        img = zeta(v)
        if img > v and u.position(v) > k:
            return False
        if img < v and u.position(v) <= k:
            return False
    return True


def leq_k(u: Permutation, w: Permutation, k: int) -> bool:
    """Whether u <= w in the k-Bruhat order."""
    if u.n != w.n:
        raise ValueError("size mismatch")
    if u == w:
        return True
    budget = w.length - u.length
    if budget <= 0 or not bruhat_leq(u, w):
        return False
    if not _position_constraints_ok(u, w, k):
        return False
    frontier = {u}
    for _ in range(budget):
        nxt: set[Permutation] = set()
        for x in frontier:
            for _lab, y in up_covers(x, k):
                if y == w:
                    return True
                if y.length < w.length and bruhat_leq(y, w):
                    nxt.add(y)
        frontier = nxt
        if not frontier:
            return False
    return False


# -- labeled graded posets ---------------------------------------------------


@dataclass(frozen=True)
class LabeledPoset:
    """A graded interval with labeled cover edges.

    Elements are any hashable objects with a sensible str(); edges are
    (lower, label, upper) triples with rank(upper) = rank(lower) + 1.
    """

    bottom: Hashable
    top: Hashable
    elements: tuple
    edges: tuple
    rank_of: dict

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: Hashable) -> bool:
        return x in self.rank_of

    def levels(self) -> dict[int, list]:
        out: dict[int, list] = {}
        for x in self.elements:
            out.setdefault(self.rank_of[x], []).append(x)
        return out

    def edge_labels(self) -> list:
        return sorted(lab for _x, lab, _y in self.edges)

    def successors(self, x: Hashable) -> list[tuple[Hashable, Hashable]]:
        return [(lab, y) for a, lab, y in self.edges if a == x]

    def to_dot(self) -> str:
        lines = ["digraph interval {", "  rankdir=BT;"]
        for x in self.elements:
            lines.append(f'  "{x}";')
        for x, lab, y in self.edges:
            lines.append(f'  "{x}" -> "{y}" [label="{lab}"];')
        lines.append("}")
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps(
            {
                "bottom": str(self.bottom),
                "top": str(self.top),
                "elements": [
                    {"element": str(x), "rank": self.rank_of[x]}
                    for x in self.elements
                ],
                "edges": [
                    {"from": str(x), "label": str(lab), "to": str(y)}
                    for x, lab, y in self.edges
                ],
            },
            indent=2,
        )


def _build_interval(
    bottom: Hashable,
    top: Hashable,
    rank: Callable[[Hashable], int],
    covers: Callable[[Hashable], Iterable[tuple[Hashable, Hashable]]],
    prune: Callable[[Hashable], bool],
    what: str,
) -> LabeledPoset:
    budget = rank(top) - rank(bottom)
    if budget < 0:
        raise ValueError(f"{bottom} is not below {top} in the {what}")
    adj: dict[Hashable, list[tuple[Hashable, Hashable]]] = {}
    frontier = {bottom}
    seen = {bottom}
    for _ in range(budget):
        nxt: set[Hashable] = set()
        for x in frontier:
            for lab, y in covers(x):
                if rank(y) > rank(top) or not prune(y):
                    continue
                adj.setdefault(x, []).append((lab, y))
                if y not in seen:
                    seen.add(y)
                    nxt.add(y)
        frontier = nxt
    if top != bottom and top not in seen:
        raise ValueError(f"{bottom} is not below {top} in the {what}")
    # keep only elements on a path from bottom to top
    radj: dict[Hashable, list[Hashable]] = {}
    for x, pairs in adj.items():
        for _lab, y in pairs:
            radj.setdefault(y, []).append(x)
    keep = {top}
    stack = [top]
    while stack:
        y = stack.pop()
        for x in radj.get(y, ()):
            if x not in keep:
                keep.add(x)
                stack.append(x)
    if bottom not in keep:
        raise ValueError(f"{bottom} is not below {top} in the {what}")
    base = rank(bottom)
    rank_of = {x: rank(x) - base for x in keep}
    elements = tuple(sorted(keep, key=lambda x: (rank_of[x], str(x))))
    edges = tuple(
        sorted(
            (
                (x, lab, y)
                for x, pairs in adj.items()
                if x in keep
                for lab, y in pairs
                if y in keep
            ),
            key=lambda e: (rank_of[e[0]], str(e[0]), str(e[1])),
        )
    )
    return LabeledPoset(bottom, top, elements, edges, rank_of)


def interval(u: Permutation, w: Permutation, k: int) -> LabeledPoset:
    """The interval [u, w]_k as a labeled graded poset.

    Raises ValueError when u is not below w in the k-Bruhat order.
    """
    if u.n != w.n:
        raise ValueError("size mismatch")
    if u != w and not (
        bruhat_leq(u, w) and _position_constraints_ok(u, w, k)
    ):
        raise ValueError(f"{u} is not below {w} in the {k}-Bruhat order")
    wlen = w.length
    return _build_interval(
        u,
        w,
        rank=lambda x: x.length,
        covers=lambda x: up_covers(x, k),
        prune=lambda y: y.length <= wlen and bruhat_leq(y, w),
        what=f"{k}-Bruhat order",
    )


@dataclass(frozen=True)
class Chain:
    """A saturated chain: elements[0] -> ... -> elements[-1], labels[i] on step i."""

    elements: tuple
    labels: tuple

    def __len__(self) -> int:
        return len(self.labels)


def chains(u: Permutation, w: Permutation, k: int) -> Iterator[Chain]:
    """All saturated chains of [u, w]_k, in label-lexicographic order."""
    poset = interval(u, w, k)
    yield from poset_chains(poset)


def poset_chains(poset: LabeledPoset) -> Iterator[Chain]:
    adj: dict[Hashable, list[tuple[Hashable, Hashable]]] = {}
    for x, lab, y in poset.edges:
        adj.setdefault(x, []).append((lab, y))
    for pairs in adj.values():
        pairs.sort(key=lambda p: (p[0], str(p[1])))

    def walk(x, elems, labs):
        if x == poset.top and len(labs) == poset.rank_of[poset.top]:
            yield Chain(tuple(elems), tuple(labs))
            return
        for lab, y in adj.get(x, ()):
            yield from walk(y, elems + [y], labs + [lab])

    yield from walk(poset.bottom, [poset.bottom], [])


def peakless_height(labels: Sequence[int]) -> int | None:
    """The height of a peakless label sequence, or None if it has a peak.

    Peakless of height a: strictly decreasing through the a-th label, which is
    the unique minimum, then strictly increasing.

    >>> peakless_height((6, 3, 1, 3))
    3
    >>> peakless_height((2, 5, 3)) is None
    True
    """
    if not labels:
        return None
    a = min(range(len(labels)), key=lambda i: labels[i])
    if labels.count(labels[a]) != 1:
        return None
    down = all(labels[i] > labels[i + 1] for i in range(a))
    up = all(labels[i] < labels[i + 1] for i in range(a, len(labels) - 1))
    return a + 1 if down and up else None


def peakless_chain_counts(
    u: Permutation, w: Permutation, k: int
) -> dict[int, int]:
    """Number of peakless chains of [u, w]_k by height.

    The label-pattern constraint prunes the chain search, so this is usable
    on intervals whose full chain count would be unreasonable.
    """
    poset = interval(u, w, k)
    adj: dict[Hashable, list[tuple[int, Hashable]]] = {}
    for x, lab, y in poset.edges:
        adj.setdefault(x, []).append((lab, y))
    counts: dict[int, int] = {}
    r = poset.rank_of[poset.top]
    if r == 0:
        return counts

    def walk(x, last: int, descending: bool, height: int, depth: int):
        if x == poset.top and depth == r:
            counts[height] = counts.get(height, 0) + 1
            return
        for lab, y in adj.get(x, ()):
            if descending and lab < last:
                walk(y, lab, True, depth + 1, depth + 1)
            elif lab > last:
                walk(y, lab, False, height, depth + 1)

    for lab, y in adj.get(poset.bottom, ()):
        walk(y, lab, True, 1, 1)
    return counts


def has_peakless_chain(u: Permutation, w: Permutation, k: int) -> bool:
    return bool(peakless_chain_counts(u, w, k))


# -- minimality ---------------------------------------------------------------


def find_witness(
    zeta: Permutation, *, flatten_first: bool = False
) -> tuple[Permutation, int]:
    """Some (u, k) with u <=_k zeta u, searched over position-compatible u.

    With ``flatten_first`` the witness is for the flattened shape of zeta
    (equivalent for rank computations, much faster).
    """
    z = flatten_cycles(zeta) if flatten_first else zeta
    if z.is_identity():
        z = identity(2) if z.n < 2 else z
        return identity(z.n), 1
    n = z.n
    supp = sorted(z.support())
    rising = [v for v in supp if z(v) > v]
    falling = [v for v in supp if z(v) < v]
    fixed = [v for v in range(1, n + 1) if z(v) == v]
    h = len(rising)
    for k in range(max(h, 1), min(n - len(supp) + h, n - 1) + 1):
        for fixed_left in itertools.combinations(fixed, k - h):
            left_vals = rising + list(fixed_left)
            right_vals = falling + [v for v in fixed if v not in fixed_left]
            for left in itertools.permutations(left_vals):
                for right in itertools.permutations(right_vals):
                    u = Permutation(left + right)
                    if leq_k(u, z * u, k):
                        return u, k
    raise ValueError(f"no witness found for {zeta}")


def lrank(zeta: Permutation, *, flatten_first: bool = True) -> int:
    """length(zeta u) - length(u) for a witness u <=_k zeta u.

    Independent of the witness; depends only on the flattened shape.
    """
    z = flatten_cycles(zeta) if flatten_first else zeta
    if z.is_identity():
        return 0
    u, _k = find_witness(z)
    return (z * u).length - u.length


def is_minimal(zeta: Permutation) -> bool:
    """Whether lrank(zeta) equals #support - #cycles, its smallest possible value."""
    z = flatten_cycles(zeta)
    return lrank(z, flatten_first=False) == len(z.support()) - z.num_cycles()


def peakless_count(zeta: Permutation, a: int) -> int:
    """Peakless chains of height a in [u, zeta u]_k for minimal zeta and any witness.

    Equal to C(s - 1, het - a) with s the number of nontrivial cycles of zeta;
    zero when a is out of range.
    """
    s = zeta.num_cycles()
    h = het(zeta)
    if s == 0:
        return 0
    if not 0 <= h - a <= s - 1:
        return 0
    return math.comb(s - 1, h - a)


# -- crossing supports ---------------------------------------------------------


def crossing(a_supp: Iterable[int], b_supp: Iterable[int]) -> bool:
    """Whether two supports interleave: l1 < m1 < l2 < m2 across the two sets.

    >>> crossing({1, 3}, {2, 4})
    True
    >>> crossing({1, 4}, {2, 3})
    False
    """
    A = sorted(a_supp)
    B = sorted(b_supp)
    for x1, x2 in itertools.combinations(A, 2):
        if any(x1 < m < x2 for m in B) and any(m > x2 for m in B):
            return True
    for m1, m2 in itertools.combinations(B, 2):
        if any(m1 < l < m2 for l in A) and any(l > m2 for l in A):
            return True
    return False


def noncrossing_factorization(zeta: Permutation) -> list[Permutation]:
    """Factor zeta into permutations with pairwise noncrossing connected supports.

    Cycles whose supports cross are grouped together; each group multiplies
    back into one factor.  Factors are ordered by minimum of support.
    """
    from .perm import from_cycles

    cycs = zeta.cycles()
    m = len(cycs)
    parent = list(range(m))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(m):
        for j in range(i + 1, m):
            if crossing(cycs[i], cycs[j]):
                parent[find(i)] = find(j)
    groups: dict[int, list[tuple[int, ...]]] = {}
    for i in range(m):
        groups.setdefault(find(i), []).append(cycs[i])
    factors = [from_cycles(g, zeta.n) for g in groups.values()]
    return sorted(factors, key=lambda f: min(f.support()))
