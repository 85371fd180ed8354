"""Schubert polynomials and products in the cohomology of the flag manifold.

Three independent routes to the same products are implemented:

- ``hook_multiply_chains``: sums over peakless chains in the k-Bruhat order
  (height a, length a + b - 1 for the hook (b, 1^(a-1)));
- ``hook_multiply_minimal``: sums binomials over minimal permutations;
- ``poly_product``: honest polynomial multiplication followed by expansion in
  the Schubert basis, the slow oracle the rules are checked against.

Schubert polynomials are computed by the transition recursion: with r the
last descent of w and s the last position past r with w(s) < w(r), setting
v = w t_rs gives

    S_w = x_r S_v + sum of S_{v t_ir} over the covers v -> v t_ir with i < r.

Everything is exact integer arithmetic on sparse exponent dictionaries;
exponent keys are tuples with trailing zeros stripped.

``Expansion`` is a formal ZZ-linear combination of basis classes q^alpha w;
classical results simply carry alpha = 0.  Multiplication by x_m in the
quotient presentation of H*Fl_n is the difference of two degree-one products
(monk at k = m minus monk at k = m - 1), which is how ``schur_multiply``
computes products by general Schur polynomials.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterable, Iterator

from .kbruhat import peakless_count, up_covers
from .perm import Permutation, from_code, grassmannian, het
from .qbruhat import QElement

__all__ = [
    "Poly",
    "divided_difference",
    "schubert_poly",
    "schur_poly",
    "expand_in_schubert",
    "Expansion",
    "monk_multiply",
    "x_times",
    "schur_multiply",
    "hook_multiply_chains",
    "hook_multiply_minimal",
    "powersum_multiply",
    "poly_product",
]


def _trim(exps: tuple[int, ...]) -> tuple[int, ...]:
    m = len(exps)
    while m and exps[m - 1] == 0:
        m -= 1
    return exps[:m]


class Poly:
    """Sparse integer polynomial in x_1, x_2, ... with tuple exponent keys."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, ...], int] | None = None):
        clean: dict[tuple[int, ...], int] = {}
        if terms:
            for exps, c in terms.items():
                if c:
                    clean[_trim(tuple(exps))] = c
        self.terms = clean

    @classmethod
    def one(cls) -> "Poly":
        return cls({(): 1})

    @classmethod
    def x(cls, i: int) -> "Poly":
        return cls({(0,) * (i - 1) + (1,): 1})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for exps, c in other.terms.items():
            out[exps] = out.get(exps, 0) + c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            return Poly({e: c * other for e, c in self.terms.items()})
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                long, short = (e1, e2) if len(e1) >= len(e2) else (e2, e1)
                key = tuple(
                    a + b
                    for a, b in zip(long, short + (0,) * (len(long) - len(short)))
                )
                out[key] = out.get(key, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def times_x(self, i: int) -> "Poly":
        out = {}
        for exps, c in self.terms.items():
            e = list(exps) + [0] * (i - len(exps))
            e[i - 1] += 1
            out[tuple(e)] = c
        return Poly(out)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def lexmin_monomial(self) -> tuple[int, ...]:
        return min(self.terms)

    def monomials(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items())

    def coefficient(self, exps: tuple[int, ...]) -> int:
        return self.terms.get(_trim(tuple(exps)), 0)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.monomials():
            vars_ = "*".join(
                f"x{i + 1}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(exps)
                if e
            )
            if not vars_:
                parts.append(f"{c:+d}")
            elif c == 1:
                parts.append(f"+{vars_}")
            elif c == -1:
                parts.append(f"-{vars_}")
            else:
                parts.append(f"{c:+d}*{vars_}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self.terms!r})"


def divided_difference(p: Poly, i: int) -> Poly:
    """The operator (f - s_i f) / (x_i - x_{i+1}), acting monomial by monomial."""
    if i < 1:
        raise ValueError("variable index must be positive")
    out: dict[tuple[int, ...], int] = {}
    for exps, c in p.terms.items():
        e = list(exps) + [0] * (i + 1 - len(exps))
        a, b = e[i - 1], e[i]
        if a == b:
            continue
        sign = 1 if a > b else -1
        lo, hi = min(a, b), max(a, b)
        for t in range(lo, hi):
            e[i - 1], e[i] = t, a + b - 1 - t
            key = _trim(tuple(e))
            out[key] = out.get(key, 0) + sign * c
    return Poly(out)


@lru_cache(maxsize=None)
def _schubert_cached(word: tuple[int, ...]) -> Poly:
    w = Permutation(word)
    des = w.descents()
    if not des:
        return Poly.one()
    r = des[-1]
    s = max(j for j in range(r + 1, w.n + 1) if w(j) < w(r))
    v = w.swap_positions(r, s)
    p = _schubert_cached(v.trim().word).times_x(r)
    for i in range(1, r):
        if v(i) < v(r) and not any(v(i) < v(l) < v(r) for l in range(i + 1, r)):
            p = p + _schubert_cached(v.swap_positions(i, r).trim().word)
    return p


def schubert_poly(w: Permutation) -> Poly:
    """The Schubert polynomial of w (stable under extending w by fixed points)."""
    return _schubert_cached(w.trim().word)


def schur_poly(lam: tuple[int, ...], k: int) -> Poly:
    """s_lambda(x_1, ..., x_k), via the Grassmannian Schubert polynomial."""
    lam = tuple(v for v in lam if v)
    if not lam:
        return Poly.one()
    if len(lam) > k:
        return Poly()
    return schubert_poly(grassmannian(lam, k, k + lam[0]))


def expand_in_schubert(p: Poly) -> dict[Permutation, int]:
    """Write p as an integer combination of Schubert polynomials.

    Repeatedly strips the lexicographically smallest monomial x^c, which can
    only be the leading monomial x^code(w) of the Schubert polynomial with
    code c.  Permutation keys are trimmed.
    """
    rem = Poly(dict(p.terms))
    out: dict[Permutation, int] = {}
    for _ in range(1_000_000):
        if not rem:
            return out
        mono = rem.lexmin_monomial()
        coeff = rem.terms[mono]
        w = from_code(mono).trim()
        out[w] = coeff
        rem = rem - coeff * schubert_poly(w)
        if rem.coefficient(mono):
            raise RuntimeError(f"pivot monomial {mono} not eliminated")
    raise RuntimeError("expansion did not terminate")


# -- expansions in the Schubert basis ------------------------------------------


class Expansion:
    """A formal ZZ-linear combination of classes q^alpha w over a fixed S_n."""

    __slots__ = ("n", "terms")

    def __init__(
        self,
        n: int,
        terms: dict[QElement, int] | Iterable[tuple[QElement, int]] | None = None,
    ):
        self.n = n
        acc: dict[QElement, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, dict) else terms
            for x, c in items:
                if x.w.n != n:
                    raise ValueError(f"term {x} not in S_{n}[q]")
                if c:
                    acc[x] = acc.get(x, 0) + c
        self.terms = {x: c for x, c in acc.items() if c}

    @classmethod
    def unit(cls, u: Permutation) -> "Expansion":
        return cls(u.n, {QElement((0,) * (u.n - 1), u): 1})

    def items(self) -> list[tuple[QElement, int]]:
        return sorted(self.terms.items(), key=lambda t: t[0].sort_key())

    def coefficient(self, x: QElement | Permutation) -> int:
        if isinstance(x, Permutation):
            x = QElement((0,) * (x.n - 1), x)
        return self.terms.get(x, 0)

    def classical_terms(self) -> dict[Permutation, int]:
        return {x.w: c for x, c in self.terms.items() if x.is_classical()}

    def is_classical(self) -> bool:
        return all(x.is_classical() for x in self.terms)

    def __add__(self, other: "Expansion") -> "Expansion":
        if other.n != self.n:
            raise ValueError("ambient size mismatch")
        out = dict(self.terms)
        for x, c in other.terms.items():
            out[x] = out.get(x, 0) + c
        return Expansion(self.n, out)

    def __sub__(self, other: "Expansion") -> "Expansion":
        return self + other.scale(-1)

    def scale(self, c: int) -> "Expansion":
        return Expansion(self.n, {x: c * v for x, v in self.terms.items()})

    def __mul__(self, c: int) -> "Expansion":
        return self.scale(c)

    __rmul__ = __mul__

    def apply(
        self, op: Callable[[QElement], Iterable[tuple[QElement, int]]]
    ) -> "Expansion":
        out: dict[QElement, int] = {}
        for x, c in self.terms.items():
            for y, d in op(x):
                out[y] = out.get(y, 0) + c * d
        return Expansion(self.n, out)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Expansion)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[QElement, int]]:
        return iter(self.items())

    def text(self) -> str:
        if not self.terms:
            return "0"
        return "\n".join(f"{c:+d} {x}" for x, c in self.items())

    __str__ = text

    def __repr__(self) -> str:
        return f"Expansion({self.n}, {dict(self.items())!r})"


def monk_multiply(u: Permutation, k: int, *, poly: bool = False) -> Expansion:
    """The product of S_u by S_{(k, k+1)} = x_1 + ... + x_k.

    In the quotient ring (default) the terms are the k-Bruhat covers of u
    inside S_n.  With ``poly`` the product is taken in the polynomial ring:
    every cover appears, which requires one extra letter of room.
    """
    if poly:
        n = max(u.n, k + 1) + 1
        u = u.extend(n)
    else:
        n = u.n
        if not 1 <= k <= n - 1:
            raise ValueError(f"k must be in 1..{n - 1}, got {k}")
    zero = (0,) * (n - 1)
    return Expansion(
        n, [(QElement(zero, w), 1) for _lab, w in up_covers(u, k)]
    )


def x_times(exp: Expansion, m: int) -> Expansion:
    """Multiplication by x_m in H*Fl_n (monk at m minus monk at m - 1)."""
    n = exp.n
    if not 1 <= m <= n:
        raise ValueError(f"x_{m} is not a variable of H*Fl_{n}")

    def op(x: QElement):
        out = []
        if m < n:
            for _lab, w in up_covers(x.w, m):
                out.append((QElement(x.alpha, w), 1))
        if m > 1:
            for _lab, w in up_covers(x.w, m - 1):
                out.append((QElement(x.alpha, w), -1))
        return out

    return exp.apply(op)


def schur_multiply(u: Permutation, lam: tuple[int, ...], k: int) -> Expansion:
    """S_u times s_lambda(x_1, ..., x_k) in H*Fl_n, by iterated x_m-operators."""
    n = u.n
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must be in 1..{n - 1}, got {k}")
    lam = tuple(v for v in lam if v)
    if len(lam) > k:
        return Expansion(n)
    out = Expansion(n)
    for exps, c in schur_poly(lam, k).monomials():
        cur = Expansion.unit(u)
        for i, e in enumerate(exps, start=1):
            for _ in range(e):
                cur = x_times(cur, i)
        out = out + cur.scale(c)
    return out


def _check_hook_args(u: Permutation, a: int, b: int, k: int) -> None:
    n = u.n
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must be in 1..{n - 1}, got {k}")
    if not 1 <= a <= k:
        raise ValueError(f"hook height a={a} must be in 1..k={k}")
    if not 1 <= b <= n - k:
        raise ValueError(f"hook width b={b} must be in 1..n-k={n - k}")


def hook_multiply_chains(u: Permutation, a: int, b: int, k: int) -> Expansion:
    """S_u times s_{(b, 1^(a-1))}(x_1..x_k), summing peakless chains of height a."""
    _check_hook_args(u, a, b, k)
    n = u.n
    r = a + b - 1
    counts: dict[Permutation, int] = {}

    def dfs(x: Permutation, last: int, t: int) -> None:
        if t == r:
            counts[x] = counts.get(x, 0) + 1
            return
        for lab, y in up_covers(x, k):
            if (lab < last) if t + 1 <= a else (lab > last):
                dfs(y, lab, t + 1)

    for lab, y in up_covers(u, k):
        dfs(y, lab, 1)
    zero = (0,) * (n - 1)
    return Expansion(n, [(QElement(zero, w), c) for w, c in counts.items()])


def _reachable_at_rank(u: Permutation, k: int, r: int) -> set[Permutation]:
    frontier = {u}
    for _ in range(r):
        frontier = {y for x in frontier for _lab, y in up_covers(x, k)}
    return frontier


def hook_multiply_minimal(u: Permutation, a: int, b: int, k: int) -> Expansion:
    """S_u times s_{(b, 1^(a-1))}(x_1..x_k), via minimal permutations.

    The coefficient of S_w is C(s - 1, het - a) for zeta = w u^{-1} minimal
    with #supp - #cycles = a + b - 1.
    """
    _check_hook_args(u, a, b, k)
    n = u.n
    r = a + b - 1
    zero = (0,) * (n - 1)
    terms = []
    for w in _reachable_at_rank(u, k, r):
        zeta = w * u.inverse()
        if len(zeta.support()) - zeta.num_cycles() != r:
            continue  # reachable at rank r but not minimal
        c = peakless_count(zeta, a)
        if c:
            terms.append((QElement(zero, w), c))
    return Expansion(n, terms)


def powersum_multiply(u: Permutation, r: int, k: int) -> Expansion:
    """S_u times p_r(x_1..x_k): signed sum over minimal cycles of rank r."""
    n = u.n
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must be in 1..{n - 1}, got {k}")
    if r < 1:
        raise ValueError(f"power sum degree must be positive, got {r}")
    zero = (0,) * (n - 1)
    terms = []
    for w in _reachable_at_rank(u, k, r):
        zeta = w * u.inverse()
        if zeta.num_cycles() == 1 and len(zeta.support()) - 1 == r:
            terms.append((QElement(zero, w), (-1) ** (het(zeta) + 1)))
    return Expansion(n, terms)


def poly_product(
    u: Permutation, lam: tuple[int, ...], k: int
) -> dict[Permutation, int]:
    """S_u(x) * s_lambda(x_1..x_k) in the full polynomial ring.

    Returns the expansion over the Schubert basis with trimmed permutation
    keys; restricting to keys in S_n recovers the quotient-ring product.
    """
    return expand_in_schubert(schubert_poly(u) * schur_poly(lam, k))
