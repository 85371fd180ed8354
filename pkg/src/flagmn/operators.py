"""Words in the left operators v(a,b) and their action on S_n[q].

A letter v(a,b), a != b, sends u to the cover (a,b)u of u in the quantum
k-Bruhat order when that cover exists and to zero otherwise; quantum letters
(a > b) pick up the monomial q_{i,j} of the positions swapped.  Words compose
letters, and everything downstream of the action -- zero-equivalence, the
two-letter relation table, the path/row/column/tree/forest taxonomy, and the
row-times-column decomposition -- is decided semantically, by brute force over
the symmetric group the size of the word's support.  The relations the letters
satisfy are verified, never used as a rewriting system.
"""

from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .kbruhat import Chain, crossing
from .perm import Permutation, all_permutations, cyclic_shift, flatten, identity
from .qbruhat import QElement, q_chains, q_ij

__all__ = [
    "OperatorWord",
    "parse_word",
    "act_letter",
    "act",
    "flatten_word",
    "is_zero_word",
    "equivalent_words",
    "o_shift_word",
    "w0_word",
    "rho_word",
    "tau_word",
    "iota_word",
    "word_symmetries",
    "tau_index",
    "iota_index",
    "drop_position",
    "insert_value",
    "drop_wall",
    "insert_wall_zero",
    "word_components",
    "has_crossing_components",
    "is_tree_word",
    "is_forest_word",
    "is_path_word",
    "row_shift",
    "column_shift",
    "is_row",
    "is_column",
    "classify",
    "relation_table",
    "chain_word",
    "chains_word_bijection",
    "rc_decompose",
    "yellow_window",
    "word_diagram",
    "word_to_dot",
]


@dataclass(frozen=True)
class OperatorWord:
    """A composition of left operators v(a,b) on S_n[q].

    ``letters`` is kept in composition order: ``letters[0]`` is the leftmost
    factor and acts *last*; the first letter applied is ``letters[-1]``.  So
    the word printed ``v(4,1) v(1,2) v(3,4) v(4,5)`` hits a permutation with
    v(4,5) first.  A letter (a, b) is classical when a < b and quantum when
    a > b; the kind is always derived from the pair, never stored, so index
    relabelings cannot desynchronize it.
    """

    n: int
    letters: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "letters", tuple((a, b) for a, b in self.letters)
        )
        for a, b in self.letters:
            if not (1 <= a <= self.n and 1 <= b <= self.n):
                raise ValueError(f"letter ({a},{b}) outside 1..{self.n}")
            if a == b:
                raise ValueError(f"degenerate letter ({a},{a})")

    @classmethod
    def from_application(
        cls, n: int, letters: Iterable[tuple[int, int]]
    ) -> "OperatorWord":
        """Build a word from letters listed in the order they are applied."""
        return cls(n, tuple(reversed(tuple(letters))))

    @property
    def application_order(self) -> tuple[tuple[int, int], ...]:
        """The letters in the order they act (first-applied first)."""
        return tuple(reversed(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(f"v({a},{b})" for a, b in self.letters)

    def support(self) -> frozenset[int]:
        return frozenset(v for letter in self.letters for v in letter)

    def quantum_letters(self) -> tuple[tuple[int, int], ...]:
        return tuple((a, b) for a, b in self.letters if a > b)

    def is_classical(self) -> bool:
        return all(a < b for a, b in self.letters)

    def zeta(self) -> Permutation:
        """The product of the letter transpositions (rightmost applied first)."""
        z = identity(self.n)
        for a, b in self.letters:
            z = z * identity(self.n).swap_values(a, b)
        return z

    def is_minimal(self) -> bool:
        """Whether the letter count is least possible for this zeta."""
        z = self.zeta()
        return len(self.letters) == len(z.support()) - z.num_cycles()


_LETTER_RE = re.compile(r"v\s*_?\s*[({]?\s*(\d+)\s*[,;]\s*(\d+)\s*[)}]?")


def parse_word(text: str, n: int) -> OperatorWord:
    """Parse a word like "v(2,3) v(1,2)" (rightmost letter applied first).

    >>> parse_word("v(2,3) v(1,2)", 3).letters
    ((2, 3), (1, 2))
    """
    letters = tuple(
        (int(a), int(b)) for a, b in _LETTER_RE.findall(text)
    )
    if not letters and text.strip():
        raise ValueError(f"no letters found in {text!r}")
    return OperatorWord(n, letters)


# ---------------------------------------------------------------------------
# the k-action


def act_letter(x: QElement, a: int, b: int, k: int) -> QElement | None:
    """One letter of the k-action on q^alpha u; None is the zero outcome.

    Writing i, j for the positions of a, b in u, the letter acts only when
    i <= k < j and the swap is a cover: no value between a and b may sit
    strictly between i and j in the classical case a < b, and every such
    value must lie strictly between b and a in the quantum case a > b, which
    also multiplies by q_{i,j}.
    """
    u = x.w
    i = u.position(a)
    j = u.position(b)
    if not i <= k < j:
        return None
    between = u.word[i : j - 1]
    if a < b:
        if any(a < m < b for m in between):
            return None
        return QElement(x.alpha, u.swap_positions(i, j))
    if any(not b < m < a for m in between):
        return None
    alpha = tuple(e + d for e, d in zip(x.alpha, q_ij(i, j, u.n)))
    return QElement(alpha, u.swap_positions(i, j))


def act(
    word: OperatorWord, u: Permutation | QElement, k: int
) -> QElement | None:
    """Apply the word to u, rightmost letter first; None means zero.

    Zero is absorbing and the q-parts of quantum letters accumulate onto
    whatever exponent u already carries.
    """
    x = u if isinstance(u, QElement) else QElement((0,) * (u.n - 1), u)
    if word.n != x.w.n:
        raise ValueError(f"word over 1..{word.n} cannot act on S_{x.w.n}")
    if not 1 <= k <= x.w.n - 1:
        raise ValueError(f"k must be in 1..{x.w.n - 1}, got {k}")
    for a, b in word.application_order:
        x = act_letter(x, a, b, k)
        if x is None:
            return None
    return x


# ---------------------------------------------------------------------------
# zero-equivalence and (u,k)-equivalence, decided semantically


def flatten_word(word: OperatorWord) -> OperatorWord:
    """Relabel the support onto 1..m, preserving relative order.

    The result acts on S_m where m is the support size; by shape-equivalence
    this loses nothing as far as being zero is concerned.
    """
    supp = sorted(word.support())
    relabel = {v: i + 1 for i, v in enumerate(supp)}
    return OperatorWord(
        len(supp), tuple((relabel[a], relabel[b]) for a, b in word.letters)
    )


@lru_cache(maxsize=None)
def _flat_is_zero(flat: OperatorWord) -> bool:
    for u in all_permutations(flat.n):
        for k in range(1, flat.n):
            if act(flat, u, k) is not None:
                return False
    return True


def is_zero_word(word: OperatorWord) -> bool:
    """Whether the word kills every element at every k.

    Decided by brute force over the flattened ambient: all u in S_m and all
    k < m with m the support size.  The empty word is the identity, not zero.
    """
    if not word.letters:
        return False
    return _flat_is_zero(flatten_word(word))


def equivalent_words(v: OperatorWord, w: OperatorWord) -> bool:
    """Equal actions at every u in S_n and every k (same ambient required).

    Plain permutations suffice as inputs: the action on q^alpha u differs
    from the action on u only by the fixed prefactor q^alpha.
    """
    if v.n != w.n:
        raise ValueError(f"ambient mismatch: 1..{v.n} vs 1..{w.n}")
    for u in all_permutations(v.n):
        for k in range(1, v.n):
            if act(v, u, k) != act(w, u, k):
                return False
    return True


# ---------------------------------------------------------------------------
# relabelings: cyclic shift, reversal, transpose-reversal, deletion, insertion


def o_shift_word(word: OperatorWord, power: int = 1) -> OperatorWord:
    """Relabel every letter through the cyclic shift, ``power`` times.

    The shift is the unique relabeling exchanging classical and quantum kinds
    exactly on the letters touching n.
    """
    n = word.n
    r = power % n
    return OperatorWord(
        n,
        tuple(
            ((a - 1 + r) % n + 1, (b - 1 + r) % n + 1)
            for a, b in word.letters
        ),
    )


def w0_word(word: OperatorWord) -> OperatorWord:
    """Reverse the index line: v(a,b) -> v(n+1-b, n+1-a), kinds preserved."""
    n = word.n
    return OperatorWord(
        n, tuple((n + 1 - b, n + 1 - a) for a, b in word.letters)
    )


def rho_word(word: OperatorWord) -> OperatorWord:
    """Reverse the order of application; the letters themselves are unchanged."""
    return OperatorWord(word.n, tuple(reversed(word.letters)))


def word_symmetries(word: OperatorWord) -> dict[str, OperatorWord]:
    """The three global relabelings, keyed "o", "w0", "rho"."""
    return {
        "o": o_shift_word(word),
        "w0": w0_word(word),
        "rho": rho_word(word),
    }


def tau_index(j: int, s: int) -> int:
    """Index relabeling after deleting s: entries above s drop by one."""
    return j if j < s else j - 1


def iota_index(j: int, s: int) -> int:
    """Index relabeling before inserting at s: entries at or above s move up."""
    return j if j < s else j + 1


def tau_word(word: OperatorWord, s: int) -> OperatorWord:
    """Delete the unused index s from the ambient.

    Raises ValueError when s appears in the support (the letters could not be
    relabeled consistently).
    """
    if not 1 <= s <= word.n:
        raise ValueError(f"s must be in 1..{word.n}, got {s}")
    if s in word.support():
        raise ValueError(f"{s} is in the support of {word}")
    return OperatorWord(
        word.n - 1,
        tuple((tau_index(a, s), tau_index(b, s)) for a, b in word.letters),
    )


def iota_word(word: OperatorWord, s: int) -> OperatorWord:
    """Open a gap at index s (1 <= s <= n+1); the letters move around it."""
    if not 1 <= s <= word.n + 1:
        raise ValueError(f"s must be in 1..{word.n + 1}, got {s}")
    return OperatorWord(
        word.n + 1,
        tuple((iota_index(a, s), iota_index(b, s)) for a, b in word.letters),
    )


def drop_position(u: Permutation, r: int) -> Permutation:
    """Delete position r from u and flatten the remaining values.

    >>> str(drop_position(Permutation((4, 1, 3, 6, 5, 2)), 3))
    '31542'
    """
    word = u.word
    if not 1 <= r <= u.n:
        raise ValueError(f"position {r} out of range")
    return Permutation(flatten(word[: r - 1] + word[r:]))


def insert_value(u: Permutation, r: int, s: int) -> Permutation:
    """The member of S_{n+1} with value s at position r restricting to u."""
    if not 1 <= r <= u.n + 1 or not 1 <= s <= u.n + 1:
        raise ValueError(f"cannot insert value {s} at position {r} in {u}")
    bumped = tuple(v if v < s else v + 1 for v in u.word)
    return Permutation(bumped[: r - 1] + (s,) + bumped[r - 1 :])


def drop_wall(alpha: tuple[int, ...], r: int) -> tuple[int, ...]:
    """The exponent vector left when position r is deleted.

    Deleting an interior position merges walls r-1 and r, so entry r goes;
    deleting the last position removes the final wall.
    """
    i = min(r, len(alpha)) - 1
    return alpha[:i] + alpha[i + 1 :]


def insert_wall_zero(alpha: tuple[int, ...], r: int) -> tuple[int, ...]:
    """The exponent vector after opening a new position r: a zero wall appears."""
    return alpha[: r - 1] + (0,) + alpha[r - 1 :]


# ---------------------------------------------------------------------------
# the graph of a word and its taxonomy


def word_components(word: OperatorWord) -> tuple[OperatorWord, ...]:
    """Connected components of the word's graph, as subwords.

    Letters keep their relative order inside each component; components are
    sorted by smallest support value and keep the ambient n.
    """
    parent: dict[int, int] = {}

    def find(v: int) -> int:
        parent.setdefault(v, v)
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in word.letters:
        parent[find(a)] = find(b)
    buckets: dict[int, list[tuple[int, int]]] = {}
    for a, b in word.letters:
        buckets.setdefault(find(a), []).append((a, b))
    ordered = sorted(buckets.values(), key=lambda ls: min(min(l) for l in ls))
    return tuple(OperatorWord(word.n, tuple(ls)) for ls in ordered)


def has_crossing_components(word: OperatorWord) -> bool:
    """Whether two connected components have crossing supports."""
    comps = word_components(word)
    return any(
        crossing(c.support(), d.support())
        for c, d in itertools.combinations(comps, 2)
    )


def is_tree_word(word: OperatorWord) -> bool:
    """Whether the multigraph is a tree: connected with #letters = #supp - 1."""
    if not word.letters:
        return False
    return (
        len(word_components(word)) == 1
        and len(word.letters) == len(word.support()) - 1
    )


def is_forest_word(word: OperatorWord) -> bool:
    """Whether every component is a tree and supports pairwise do not cross.

    This is the graph shape only; whether the word also acts nonzero is a
    separate (semantic) question.
    """
    comps = word_components(word)
    if any(len(c.letters) != len(c.support()) - 1 for c in comps):
        return False
    return not has_crossing_components(word)


def is_path_word(word: OperatorWord) -> bool:
    """Whether the graph is a simple path traversed compatibly.

    Consecutive letters (in application order) must share exactly one index
    and the first letter applied must contain an endpoint of the path.  Shape
    only; zero words can have this shape.
    """
    if not word.letters or not is_tree_word(word):
        return False
    degree = Counter(v for letter in word.letters for v in letter)
    if any(d > 2 for d in degree.values()):
        return False
    app = word.application_order
    for prev, nxt in zip(app, app[1:]):
        if len(set(prev) & set(nxt)) != 1:
            return False
    ends = {v for v, d in degree.items() if d == 1}
    return bool(set(app[0]) & ends)


def _chain_linked_row(app: Sequence[tuple[int, int]]) -> bool:
    # connected classical row in application order: (a1,a2),(a2,a3),...,(ar,br)
    return all(a < b for a, b in app) and all(
        nxt[0] == prev[1] for prev, nxt in zip(app, app[1:])
    )


def _chain_linked_column(app: Sequence[tuple[int, int]]) -> bool:
    # connected classical column in application order: (a1,b1),(a2,a1),...
    return all(a < b for a, b in app) and all(
        nxt[1] == prev[0] for prev, nxt in zip(app, app[1:])
    )


def _is_classical_row(word: OperatorWord) -> bool:
    if has_crossing_components(word):
        return False
    return all(
        _chain_linked_row(c.application_order) for c in word_components(word)
    )


def _is_classical_column(word: OperatorWord) -> bool:
    if has_crossing_components(word):
        return False
    return all(
        _chain_linked_column(c.application_order)
        for c in word_components(word)
    )


def row_shift(word: OperatorWord) -> int | None:
    """The least cyclic-shift power making the word a classical row, if any.

    A classical row is a noncrossing union of chains (a1,a2),(a2,a3),... of
    classical letters; chains from different components may interleave, since
    such letters commute.
    """
    for r in range(word.n):
        if _is_classical_row(o_shift_word(word, r)):
            return r
    return None


def column_shift(word: OperatorWord) -> int | None:
    """The least cyclic-shift power making the word a classical column, if any."""
    for r in range(word.n):
        if _is_classical_column(o_shift_word(word, r)):
            return r
    return None


def is_row(word: OperatorWord) -> bool:
    return row_shift(word) is not None


def is_column(word: OperatorWord) -> bool:
    return column_shift(word) is not None


def classify(word: OperatorWord) -> str:
    """Taxonomy of a word: where its graph and its action place it.

    One of "crossing", "zero", "path(single)", "path(row)", "path(column)",
    "row", "column", "tree", "forest", "other".  Crossing components are
    reported before zeroness (such words are also zero when the components
    are connected and minimal).  Rows and columns always act somewhere, so
    their zeroness is never brute-forced; a path-shaped word that is neither
    is zero by the path theorem, while a nonzero path carrying two quantum
    letters, or shifting to a row and a column at once, would be a theorem
    violation and is reported loudly.
    """
    if not word.letters:
        return "other"
    if has_crossing_components(word):
        return "crossing"
    row, col = is_row(word), is_column(word)
    path = is_path_word(word)
    if row or col:
        if path:
            if len(word.quantum_letters()) > 1:
                raise RuntimeError(
                    f"nonzero path with two quantum letters: {word}"
                )
            if len(word.letters) == 1:
                return "path(single)"
            if row and col:
                raise RuntimeError(
                    f"multi-letter path is both row and column: {word}"
                )
            return "path(row)" if row else "path(column)"
        return "row" if row else "column"
    if is_zero_word(word):
        return "zero"
    if path:
        raise RuntimeError(f"nonzero path is neither row nor column: {word}")
    if is_tree_word(word):
        return "tree"
    if is_forest_word(word):
        return "forest"
    return "other"


# ---------------------------------------------------------------------------
# the two-letter relation table


def relation_table() -> dict[str, dict[str, object]]:
    """Brute-force verification of the catalogue of two-letter relations.

    Disjoint supports are flattened into S_4, shared-index pairs into S_3 and
    repeated supports into S_2.  Each entry reports the number of words it
    covers and whether the expected behaviour (zero, nonzero, commuting,
    pairwise inequivalent) held.
    """
    report: dict[str, dict[str, object]] = {}

    def word2(n: int, l1: tuple[int, int], l2: tuple[int, int]) -> OperatorWord:
        return OperatorWord(n, (l1, l2))

    # -- disjoint supports ---------------------------------------------------
    disjoint: list[tuple[tuple[int, int], tuple[int, int]]] = []
    for half in itertools.combinations(range(1, 5), 2):
        other = tuple(sorted(set(range(1, 5)) - set(half)))
        if half > other:
            continue
        for l1 in (half, half[::-1]):
            for l2 in (other, other[::-1]):
                disjoint.append((l1, l2))
                disjoint.append((l2, l1))

    def nested_mixed(l1: tuple[int, int], l2: tuple[int, int]) -> bool:
        # v(a,b) v(c,d) with a<d<c<b (quantum strictly inside classical) or
        # a>b>c>d (two quantum letters side by side), in either role
        for (a, b), (c, d) in ((l1, l2), (l2, l1)):
            if a < d < c < b or a > b > c > d:
                return True
        return False

    cross = [p for p in disjoint if crossing(set(p[0]), set(p[1]))]
    nested = [
        p
        for p in disjoint
        if p not in cross and nested_mixed(*p)
    ]
    free = [p for p in disjoint if p not in cross and p not in nested]

    report["crossing_pairs"] = {
        "words": len(cross),
        "ok": len(cross) == 8
        and all(is_zero_word(word2(4, *p)) for p in cross),
    }
    report["mixed_nested_pairs"] = {
        "words": len(nested),
        "ok": len(nested) == 4
        and all(is_zero_word(word2(4, *p)) for p in nested),
    }
    report["disjoint_free_pairs"] = {
        "words": len(free),
        "ok": len(free) == 12
        and all(
            not is_zero_word(word2(4, l1, l2))
            and equivalent_words(word2(4, l1, l2), word2(4, l2, l1))
            for l1, l2 in free
        ),
    }

    # -- one shared index ----------------------------------------------------
    letters3 = list(itertools.permutations(range(1, 4), 2))
    shared = [
        (l1, l2)
        for l1 in letters3
        for l2 in letters3
        if l1 != l2 and len(set(l1) & set(l2)) == 1
    ]
    zero_chains = {
        ((2, 1), (1, 3)),
        ((3, 2), (2, 1)),
        ((1, 3), (3, 2)),
        ((1, 3), (2, 1)),
        ((2, 1), (3, 2)),
        ((3, 2), (1, 3)),
    }
    live_chains = {
        ((1, 2), (2, 3)),
        ((2, 3), (3, 1)),
        ((3, 1), (1, 2)),
        ((2, 3), (1, 2)),
        ((3, 1), (2, 3)),
        ((1, 2), (3, 1)),
    }
    endpoint = [
        (l1, l2) for l1, l2 in shared if l1[0] == l2[0] or l1[1] == l2[1]
    ]
    partition_ok = (
        len(shared) == 24
        and len(endpoint) == 12
        and set(endpoint).isdisjoint(zero_chains | live_chains)
        and set(shared) == set(endpoint) | zero_chains | live_chains
    )
    report["zero_chain_triples"] = {
        "words": len(zero_chains),
        "ok": partition_ok
        and all(is_zero_word(word2(3, *p)) for p in zero_chains),
    }
    report["shared_endpoint_pairs"] = {
        "words": len(endpoint),
        "ok": all(is_zero_word(word2(3, *p)) for p in endpoint),
    }
    live = [word2(3, *p) for p in sorted(live_chains)]
    report["live_chain_triples"] = {
        "words": len(live),
        "ok": all(not is_zero_word(w) for w in live)
        and all(
            not equivalent_words(v, w)
            for v, w in itertools.combinations(live, 2)
        ),
    }

    # -- repeated support ----------------------------------------------------
    report["squares"] = {
        "words": 2,
        "ok": all(
            is_zero_word(word2(2, l, l)) for l in ((1, 2), (2, 1))
        ),
    }
    near_ok = True
    for a, b in ((1, 2), (2, 1)):
        w = word2(2, (a, b), (b, a))
        # multiplication by q_k exactly when (u(k), u(k+1)) is the
        # first-applied letter (b, a); both orientations force the pair
        # adjacent across wall k, so one quantum and one classical step
        # cancel into a bare q_k
        for u in all_permutations(2):
            want = QElement((1,), u) if (u(1), u(2)) == (b, a) else None
            near_ok = near_ok and act(w, u, 1) == want
    report["near_inverse_pairs"] = {"words": 2, "ok": near_ok}
    return report


# ---------------------------------------------------------------------------
# chains <-> words


def chain_word(chain: Chain, n: int) -> OperatorWord:
    """The operator word read off a saturated chain, first cover applied first.

    A step w -> w' with w^{-1} w' the transposition of positions (s, t),
    s < t, contributes the letter (w(s), w(t)); its first entry is the label
    of the cover.
    """
    app: list[tuple[int, int]] = []
    for x, y in zip(chain.elements, chain.elements[1:]):
        wx = x.w if isinstance(x, QElement) else x
        wy = y.w if isinstance(y, QElement) else y
        s, t = sorted((wx.inverse() * wy).support())
        app.append((wx(s), wx(t)))
    return OperatorWord.from_application(n, app)


def chains_word_bijection(
    u: Permutation, t: QElement, k: int
) -> list[tuple[Chain, OperatorWord]]:
    """All (chain, word) pairs for [u, t]^q_k, with the bijection checked.

    Every chain's word must act u -> t, reproduce the chain labels as the
    first letter entries, and be distinct from the other chains' words; any
    failure raises RuntimeError.  Incomparable endpoints raise ValueError.
    """
    n = u.n
    out: list[tuple[Chain, OperatorWord]] = []
    seen: set[OperatorWord] = set()
    for chain in q_chains(u, t, k):
        w = chain_word(chain, n)
        if tuple(a for a, _ in w.application_order) != tuple(chain.labels):
            raise RuntimeError(f"labels of {chain} disagree with {w}")
        if act(w, u, k) != t:
            raise RuntimeError(f"{w} does not map {u} to {t} at k = {k}")
        if w in seen:
            raise RuntimeError(f"two chains share the word {w}")
        seen.add(w)
        out.append((chain, w))
    return out


# ---------------------------------------------------------------------------
# row-times-column decomposition


def _o_power_perm(u: Permutation, r: int) -> Permutation:
    o = cyclic_shift(u.n)
    for _ in range(r % u.n):
        u = o * u
    return u


def rc_decompose(
    word: OperatorWord, u: Permutation, k: int
) -> tuple[OperatorWord, OperatorWord, int]:
    """A row-times-column form of a forest word's action: (R, C, shift).

    C is applied first, R after it, and R C maps u to act(word, u, k); shift
    is a cyclic-shift power making every letter of R C classical while the
    shifted composition still acts nonzero on the shifted u.  The pair is
    found by searching the saturated chains of [u, act(word,u,k)]^q_k for one
    whose word splits as column prefix + row suffix; exhausting the chains
    without a hit would contradict the decomposition theorem and raises
    RuntimeError.
    """
    if not is_forest_word(word):
        raise ValueError(f"not a forest word: {word}")
    target = act(word, u, k)
    if target is None:
        raise ValueError(f"{word} kills {u} at k = {k}")
    n = word.n
    for chain in q_chains(u, target, k):
        app = chain_word(chain, n).application_order
        for cut in range(len(app) + 1):
            col = OperatorWord.from_application(n, app[:cut])
            row = OperatorWord.from_application(n, app[cut:])
            for r in range(n):
                if not (
                    _is_classical_column(o_shift_word(col, r))
                    and _is_classical_row(o_shift_word(row, r))
                ):
                    continue
                whole = OperatorWord(n, row.letters + col.letters)
                if act(o_shift_word(whole, r), _o_power_perm(u, r), k) is None:
                    continue
                return row, col, r
    raise RuntimeError(
        f"no row-times-column chain for {word} on {u} at k = {k}; "
        "this contradicts the decomposition theorem"
    )


# ---------------------------------------------------------------------------
# pictures


def yellow_window(word: OperatorWord) -> tuple[tuple[int, int], ...]:
    """Open unit segments inside every quantum span and no classical span.

    The span of v(a,b) is the interval from min(a,b) to max(a,b); a segment
    (i, i+1) belongs to the window when every quantum letter's span contains
    it and no classical letter's span does.  For a path with a quantum
    letter, a nonempty window is what permits the shift to a classical word.
    """
    spans = [(min(a, b), max(a, b), a > b) for a, b in word.letters]
    out = []
    for i in range(1, word.n):
        inside = [(lo <= i and i + 1 <= hi) for lo, hi, _ in spans]
        if all(
            ok == quantum
            for ok, (_, _, quantum) in zip(inside, spans)
        ):
            out.append((i, i + 1))
    return tuple(out)


def word_diagram(word: OperatorWord) -> str:
    """Plain-text picture: one line per letter, first-applied on the bottom."""
    lines = []
    app = word.application_order
    for idx in range(len(app), 0, -1):
        a, b = app[idx - 1]
        kind = "quantum" if a > b else "classical"
        lines.append(f"{idx:>3}  v({a},{b})  {kind}")
    window = yellow_window(word)
    if window and word.quantum_letters():
        lines.append(
            "window: " + " ".join(f"({i},{j})" for i, j in window)
        )
    return "\n".join(lines)


def word_to_dot(word: OperatorWord) -> str:
    """DOT multigraph: classical letters green solid, quantum red dashed.

    Edge labels give the application order (1 = applied first).
    """
    lines = ["graph word {", "  node [shape=circle];"]
    for v in sorted(word.support()):
        lines.append(f"  {v};")
    for idx, (a, b) in enumerate(word.application_order, start=1):
        style = (
            "color=green, style=solid"
            if a < b
            else "color=red, style=dashed"
        )
        lines.append(f'  {a} -- {b} [label="{idx}", {style}];')
    lines.append("}")
    return "\n".join(lines)
