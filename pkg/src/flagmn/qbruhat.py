"""The quantum k-Bruhat order on S_n[q] = {q^alpha u}.

Covers come in two kinds, both raising the rank
rank(q^alpha u) = 2 deg(alpha) + length(u) by one:

- classical: u -> u t_ij with i <= k < j, u(i) < u(j), and no value between
  u(i) and u(j) at a position between i and j (alpha unchanged);
- quantum: u -> q_{i,j} u t_ij with i <= k < j, u(i) > u(j), and every
  position strictly between i and j carrying a value strictly between u(j)
  and u(i); here q_{i,j} = q_i q_{i+1} ... q_{j-1}.

Both edges are labeled by the value u(i) at the left swap position.

Exponent vectors alpha live on the walls 1..n-1 and are stored as tuples of
length n-1.  An interval [u, q^alpha w]_k^q is *minimal* when its rank
difference equals #supp(w u^{-1}) - s(w u^{-1}).
"""

from __future__ import annotations

import re
from typing import Iterator

from .kbruhat import Chain, LabeledPoset, _build_interval, poset_chains, up_covers
from .perm import Permutation, parse_permutation

__all__ = [
    "QElement",
    "q_ij",
    "quantum_up_covers",
    "q_up_covers",
    "q_interval",
    "q_leq",
    "q_chains",
    "is_minimal_interval",
    "parse_qelement",
]


def q_ij(i: int, j: int, n: int) -> tuple[int, ...]:
    """Exponent tuple of q_{i,j} = q_i q_{i+1} ... q_{j-1} on the walls of S_n.

    >>> q_ij(2, 4, 5)
    (0, 1, 1, 0)
    """
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= n, got ({i}, {j}) in S_{n}")
    return tuple(1 if i <= wall < j else 0 for wall in range(1, n))


class QElement:
    """q^alpha w, an element of S_n[q].

    >>> x = QElement((0, 1, 1, 0, 0, 0, 0), parse_permutation("68235741"))
    >>> x.rank
    22
    >>> str(QElement((0, 0, 0), parse_permutation("1432")))
    '1432'
    """

    __slots__ = ("alpha", "w", "_hash")

    def __init__(self, alpha: tuple[int, ...], w: Permutation):
        alpha = tuple(alpha)
        if len(alpha) != w.n - 1:
            raise ValueError(
                f"alpha has {len(alpha)} walls, expected {w.n - 1}"
            )
        if any(a < 0 for a in alpha):
            raise ValueError(f"negative exponent in {alpha!r}")
        self.alpha = alpha
        self.w = w
        self._hash = hash((alpha, w.word))

    @property
    def rank(self) -> int:
        return 2 * sum(self.alpha) + self.w.length

    @property
    def degree(self) -> int:
        return sum(self.alpha)

    def is_classical(self) -> bool:
        return not any(self.alpha)

    def sort_key(self):
        return (self.degree, self.alpha, self.w.word)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, QElement)
            and self.alpha == other.alpha
            and self.w == other.w
        )

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        if self.is_classical():
            return str(self.w)
        exps = ",".join(str(a) for a in self.alpha)
        return f"q^({exps}) {self.w}"

    def __repr__(self) -> str:
        return f"QElement({self.alpha!r}, {self.w!r})"


def quantum_up_covers(
    u: Permutation, k: int
) -> list[tuple[int, tuple[int, int], Permutation]]:
    """Quantum covers of u: (label, (i, j), u t_ij) with monomial q_{i,j}.

    >>> [(lab, ij, str(w)) for lab, ij, w in quantum_up_covers(Permutation((1, 4, 3, 2)), 2)]
    [(4, (2, 3), '1342'), (4, (2, 4), '1234')]
    """
    word = u.word
    n = len(word)
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must be in 1..{n - 1}, got {k}")
    out: list[tuple[int, tuple[int, int], Permutation]] = []
    for i in range(k):
        a = word[i]
        min_mid = n + 1
        for l in range(i + 1, n):
            v = word[l]
            if v > a:
                break  # a value above u(i) blocks every further swap
            if l >= k and v < min_mid:
                out.append((a, (i + 1, l + 1), u.swap_positions(i + 1, l + 1)))
            if v < min_mid:
                min_mid = v
    return out


def q_up_covers(x: QElement, k: int) -> list[tuple[int, QElement]]:
    """All covers of x in the quantum k-Bruhat order, as (label, element) pairs."""
    u = x.w
    n = u.n
    out = [(lab, QElement(x.alpha, w)) for lab, w in up_covers(u, k)]
    for lab, (i, j), w in quantum_up_covers(u, k):
        alpha = tuple(
            a + b for a, b in zip(x.alpha, q_ij(i, j, n))
        )
        out.append((lab, QElement(alpha, w)))
    return out


def _alpha_leq(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def q_interval(u: Permutation, t: QElement, k: int) -> LabeledPoset:
    """The interval [u, t]_k^q as a labeled graded poset.

    Raises ValueError when u is not below t.
    """
    if u.n != t.w.n:
        raise ValueError("size mismatch")
    bottom = QElement((0,) * (u.n - 1), u)
    return _build_interval(
        bottom,
        t,
        rank=lambda x: x.rank,
        covers=lambda x: q_up_covers(x, k),
        prune=lambda y: y.rank <= t.rank and _alpha_leq(y.alpha, t.alpha),
        what=f"quantum {k}-Bruhat order",
    )


def q_leq(u: Permutation, t: QElement, k: int) -> bool:
    """Whether u <= t in the quantum k-Bruhat order."""
    if u.n != t.w.n:
        raise ValueError("size mismatch")
    bottom = QElement((0,) * (u.n - 1), u)
    if bottom == t:
        return True
    budget = t.rank - bottom.rank
    if budget <= 0:
        return False
    frontier = {bottom}
    for _ in range(budget):
        nxt: set[QElement] = set()
        for x in frontier:
            for _lab, y in q_up_covers(x, k):
                if y == t:
                    return True
                if y.rank < t.rank and _alpha_leq(y.alpha, t.alpha):
                    nxt.add(y)
        frontier = nxt
        if not frontier:
            return False
    return False


def q_chains(u: Permutation, t: QElement, k: int) -> Iterator[Chain]:
    """All saturated chains of [u, t]_k^q."""
    yield from poset_chains(q_interval(u, t, k))


def is_minimal_interval(u: Permutation, t: QElement, k: int) -> bool:
    """Whether rank(t) - rank(u) equals #supp(w u^{-1}) - s(w u^{-1}).

    Raises ValueError when u is not below t in the quantum k-Bruhat order.
    """
    if not q_leq(u, t, k):
        raise ValueError(
            f"{u} is not below {t} in the quantum {k}-Bruhat order"
        )
    zeta = t.w * u.inverse()
    want = len(zeta.support()) - zeta.num_cycles()
    return t.rank - u.length == want


_Q_TOKEN = re.compile(
    r"q\^\(\s*([0-9,\s-]+?)\s*\)|q_\{(\d+),\s*(\d+)\}|q_(\d+)|q(\d)"
)


def parse_qelement(text: str, n: int) -> QElement:
    """Parse 'q^(0,1,1) 1234', 'q_{2,4} 1234', 'q_2 q_3 1234' or plain '1234'.

    >>> str(parse_qelement("q_{3,5}52134", 5))
    'q^(0,0,1,1) 52134'
    """
    rest = text.strip()
    alpha = [0] * (n - 1)
    while True:
        m = _Q_TOKEN.match(rest)
        if not m:
            break
        if m.group(1) is not None:
            exps = [int(x) for x in m.group(1).replace(",", " ").split()]
            if len(exps) != n - 1:
                raise ValueError(
                    f"q^(...) needs {n - 1} exponents, got {len(exps)}"
                )
            alpha = [a + b for a, b in zip(alpha, exps)]
        elif m.group(2) is not None:
            for wall, e in enumerate(q_ij(int(m.group(2)), int(m.group(3)), n), 1):
                alpha[wall - 1] += e
        else:
            wall = int(m.group(4) if m.group(4) is not None else m.group(5))
            if not 1 <= wall <= n - 1:
                raise ValueError(f"wall {wall} out of range for S_{n}")
            alpha[wall - 1] += 1
        rest = rest[m.end():].lstrip(" *")
    if not rest:
        raise ValueError(f"no permutation part in {text!r}")
    return QElement(tuple(alpha), parse_permutation(rest, n))
