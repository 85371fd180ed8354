"""Products of Schubert classes in the quantum cohomology of the flag manifold.

Three independent routes are implemented and cross-checked:

- ``q_monk_multiply`` / ``q_x_times``: the degree-one products, which
  determine the ring structure;
- ``q_hook_multiply`` / ``q_powersum_multiply``: closed combinatorial rules
  summing over minimal intervals of the quantum k-Bruhat order;
- ``fgp_product``: an oracle that multiplies honestly in ZZ[q][x] after
  quantizing the Schur polynomial through quantum elementary polynomials
  E^j_i, applying one x_m-operator at a time.

``quantum_lr`` computes a single coefficient N^{w,alpha}_{u,v(lam,k)} by the
descent-exchange reduction: while alpha is nonzero, find a wall i where u
descends, w ascends, and the second difference of alpha is 1 (2 when i = k);
swapping positions i, i+1 in both u and w and stripping e_i from alpha
preserves the coefficient exactly, so the classical coefficient reached at
alpha = 0 is the answer.  When no wall qualifies the coefficient is zero.

Cyclic-shift bookkeeping lives here as well: the Laurent monomial
q^{o(u,w)} = q_{w^{-1}(n), u^{-1}(n)} measures how exponent vectors move
when every value is shifted by the n-cycle (1 2 ... n), and
``o_shift_element`` / ``w0_element`` / ``rho_element`` are the induced maps
on S_n[q] that carry an interval [u, q^alpha w]_k^q onto its three partners.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .kbruhat import peakless_count
from .perm import (
    Permutation,
    cyclic_shift,
    fits_rectangle,
    het,
    longest_element,
)
from .qbruhat import QElement, q_up_covers
from .schubert import Expansion, Poly, schur_multiply, schur_poly

__all__ = [
    "varpi",
    "sg",
    "QLRQuery",
    "ll_reduce_step",
    "quantum_lr",
    "SignedQMonomial",
    "o_shift_monomial",
    "o_shift_element",
    "w0_element",
    "rho_element",
    "q_monk_multiply",
    "q_x_times",
    "q_schur_multiply",
    "q_hook_multiply",
    "q_powersum_multiply",
    "QPoly",
    "quantum_elementary",
    "quantize",
    "quantum_schur",
    "fgp_product",
]


def varpi(alpha: tuple[int, ...], i: int) -> int:
    """The second difference -alpha_{i-1} + 2 alpha_i - alpha_{i+1}.

    Out-of-range neighbours count as zero.

    >>> varpi((1, 2, 2, 3, 2), 2)
    1
    >>> varpi((1, 2, 2, 3, 2), 4)
    2
    """
    if not 1 <= i <= len(alpha):
        raise ValueError(f"wall {i} out of range for {len(alpha) + 1} letters")
    left = alpha[i - 2] if i >= 2 else 0
    right = alpha[i] if i < len(alpha) else 0
    return -left + 2 * alpha[i - 1] - right


def sg(u: Permutation, i: int) -> int:
    """1 when u has a descent at i, else 0."""
    return 1 if u.has_descent(i) else 0


@dataclass(frozen=True)
class QLRQuery:
    """A coefficient query: which multiple of S_w does S_u * s^q_lam(x_1..x_k) contain?

    ``alpha`` is the exponent vector of the q-monomial attached to w.
    """

    u: Permutation
    w: Permutation
    alpha: tuple[int, ...]
    lam: tuple[int, ...]
    k: int

    def __post_init__(self):
        n = self.u.n
        if self.w.n != n:
            raise ValueError("u and w must share an ambient S_n")
        object.__setattr__(self, "alpha", tuple(self.alpha))
        object.__setattr__(
            self, "lam", tuple(v for v in self.lam if v)
        )
        if len(self.alpha) != n - 1:
            raise ValueError(f"alpha needs {n - 1} walls, got {len(self.alpha)}")
        if any(a < 0 for a in self.alpha):
            raise ValueError(f"negative exponent in {self.alpha!r}")
        if not 1 <= self.k <= n - 1:
            raise ValueError(f"k must be in 1..{n - 1}, got {self.k}")
        if not fits_rectangle(self.lam, self.k, n - self.k):
            raise ValueError(
                f"shape {self.lam} has no Grassmannian permutation with "
                f"descent {self.k} in S_{n}"
            )


def ll_reduce_step(
    query: QLRQuery, *, largest: bool = False
) -> tuple[int, QLRQuery] | None:
    """One descent-exchange reduction, or None when the coefficient is zero.

    Finds a wall i with sg_i(u) = 1, sg_i(w) = 0 and varpi_i(alpha) = 1
    (= 2 when i = k) and moves the query to (u s_i, w s_i, alpha - e_i).
    Any qualifying wall yields the same coefficient; the smallest is taken
    unless ``largest`` is set.
    """
    if not any(query.alpha):
        raise ValueError("reduction needs a nonzero exponent vector")
    u, w, alpha, k = query.u, query.w, query.alpha, query.k
    walls = range(1, u.n)
    if largest:
        walls = reversed(walls)
    for i in walls:
        want = 2 if i == k else 1
        if (
            varpi(alpha, i) == want
            and sg(u, i) == 1
            and sg(w, i) == 0
        ):
            e_i = tuple(1 if j == i else 0 for j in range(1, u.n))
            reduced = QLRQuery(
                u.swap_positions(i, i + 1),
                w.swap_positions(i, i + 1),
                tuple(a - b for a, b in zip(alpha, e_i)),
                query.lam,
                k,
            )
            return i, reduced
    return None


def quantum_lr(query: QLRQuery, *, largest: bool = False) -> int:
    """The numerical part N^{w,alpha}_{u,v(lam,k)} of a quantum LR coefficient.

    Reduces to a classical coefficient wall by wall; a failed reduction with
    alpha still nonzero certifies that the coefficient vanishes.
    """
    while any(query.alpha):
        step = ll_reduce_step(query, largest=largest)
        if step is None:
            return 0
        query = step[1]
    return schur_multiply(query.u, query.lam, query.k).coefficient(query.w)


# -- cyclic-shift bookkeeping ---------------------------------------------------


@dataclass(frozen=True)
class SignedQMonomial:
    """A Laurent monomial in the q_i, stored as a signed exponent vector."""

    exponents: tuple[int, ...]

    def __mul__(self, other: "SignedQMonomial") -> "SignedQMonomial":
        if len(other.exponents) != len(self.exponents):
            raise ValueError("wall count mismatch")
        return SignedQMonomial(
            tuple(a + b for a, b in zip(self.exponents, other.exponents))
        )

    def inverse(self) -> "SignedQMonomial":
        return SignedQMonomial(tuple(-a for a in self.exponents))

    def is_effective(self) -> bool:
        return all(a >= 0 for a in self.exponents)

    def degree(self) -> int:
        return sum(self.exponents)

    def __str__(self) -> str:
        if not any(self.exponents):
            return "1"
        return "q^(" + ",".join(str(a) for a in self.exponents) + ")"


def _signed_q_ij(i: int, j: int, n: int) -> SignedQMonomial:
    """q_{i,j} as a Laurent monomial; q_{i,j} = q_{j,i}^{-1} when i > j."""
    lo, hi, sign = (i, j, 1) if i <= j else (j, i, -1)
    return SignedQMonomial(
        tuple(sign if lo <= wall < hi else 0 for wall in range(1, n))
    )


def o_shift_monomial(u: Permutation, w: Permutation) -> SignedQMonomial:
    """q^{o(u,w)} = q_{w^{-1}(n), u^{-1}(n)}, the cyclic-shift correction.

    Multiplicative: o(u,w) = o(u,v) + o(v,w) for any u, v, w in S_n.
    """
    n = u.n
    if w.n != n:
        raise ValueError("size mismatch")
    return _signed_q_ij(w.position(n), u.position(n), n)


def o_shift_element(u: Permutation, x: QElement) -> QElement:
    """Where the cyclic shift sends q^gamma y inside [u, q^alpha w]_k^q."""
    n = u.n
    corr = o_shift_monomial(u, x.w)
    alpha = tuple(g + e for g, e in zip(x.alpha, corr.exponents))
    if any(a < 0 for a in alpha):
        raise ValueError(
            f"cyclic shift of {x} relative to {u} leaves S_{n}[q]"
        )
    return QElement(alpha, cyclic_shift(n) * x.w)


def w0_element(x: QElement) -> QElement:
    """q^gamma y -> q^{w0(gamma)} w0 y w0 (exponents reversed)."""
    w0 = longest_element(x.w.n)
    return QElement(tuple(reversed(x.alpha)), w0 * x.w * w0)


def rho_element(alpha: tuple[int, ...], x: QElement) -> QElement:
    """q^gamma y -> q^{w0(alpha - gamma)} y w0, the order-reversing partner.

    ``alpha`` is the exponent vector at the top of the ambient interval.
    """
    w0 = longest_element(x.w.n)
    gamma = tuple(reversed(tuple(a - g for a, g in zip(alpha, x.alpha))))
    if any(a < 0 for a in gamma):
        raise ValueError(f"{x} does not sit below q^{alpha} in this interval")
    return QElement(gamma, x.w * w0)


# -- the quantum product --------------------------------------------------------


def _as_expansion(x: Expansion | QElement | Permutation) -> Expansion:
    if isinstance(x, Expansion):
        return x
    if isinstance(x, QElement):
        return Expansion(x.w.n, {x: 1})
    return Expansion.unit(x)


def q_monk_multiply(exp: Expansion | QElement | Permutation, k: int) -> Expansion:
    """The quantum product by S_{(k,k+1)}, extended ZZ[q]-linearly."""
    exp = _as_expansion(exp)
    if not 1 <= k <= exp.n - 1:
        raise ValueError(f"k must be in 1..{exp.n - 1}, got {k}")
    return exp.apply(lambda x: [(y, 1) for _lab, y in q_up_covers(x, k)])


def q_x_times(exp: Expansion, m: int) -> Expansion:
    """Multiplication by x_m in qH*Fl_n.

    x_m = (x_1 + ... + x_m) - (x_1 + ... + x_{m-1}) is a difference of two
    degree-one classes; x_1 + ... + x_n acts as zero.
    """
    n = exp.n
    if not 1 <= m <= n:
        raise ValueError(f"x_{m} is not a variable of qH*Fl_{n}")

    def op(x: QElement):
        out = []
        if m < n:
            for _lab, y in q_up_covers(x, m):
                out.append((y, 1))
        if m > 1:
            for _lab, y in q_up_covers(x, m - 1):
                out.append((y, -1))
        return out

    return exp.apply(op)


def _q_reachable(u: Permutation, k: int, r: int) -> set[QElement]:
    """Everything r cover-steps above u in the quantum k-Bruhat order."""
    frontier = {QElement((0,) * (u.n - 1), u)}
    for _ in range(r):
        frontier = {y for x in frontier for _lab, y in q_up_covers(x, k)}
    return frontier


def q_hook_multiply(u: Permutation, a: int, b: int, k: int) -> Expansion:
    """S_u * s^q_{(b, 1^(a-1))}(x_1..x_k), summed over minimal intervals.

    The coefficient of q^alpha S_w is C(s - 1, het - a) computed from
    zeta = w u^{-1}, for every minimal interval [u, q^alpha w]_k^q of rank
    a + b - 1.
    """
    n = u.n
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must be in 1..{n - 1}, got {k}")
    if not 1 <= a <= k:
        raise ValueError(f"hook height a={a} must be in 1..k={k}")
    if not 1 <= b <= n - k:
        raise ValueError(f"hook width b={b} must be in 1..n-k={n - k}")
    r = a + b - 1
    terms = []
    for x in _q_reachable(u, k, r):
        zeta = x.w * u.inverse()
        if len(zeta.support()) - zeta.num_cycles() != r:
            continue  # reachable at rank r but the interval is not minimal
        c = peakless_count(zeta, a)
        if c:
            terms.append((x, c))
    return Expansion(n, terms)


def q_powersum_multiply(u: Permutation, r: int, k: int) -> Expansion:
    """S_u * p^q_r(x_1..x_k): signed sum over minimal single-cycle intervals."""
    n = u.n
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must be in 1..{n - 1}, got {k}")
    if r < 1:
        raise ValueError(f"power sum degree must be positive, got {r}")
    terms = []
    for x in _q_reachable(u, k, r):
        zeta = x.w * u.inverse()
        if zeta.num_cycles() == 1 and len(zeta.support()) - 1 == r:
            terms.append((x, (-1) ** (het(zeta) + 1)))
    return Expansion(n, terms)


# -- the quantization oracle ----------------------------------------------------


class QPoly:
    """Sparse integer polynomial in x's and q's; keys are (x, q) exponent pairs."""

    __slots__ = ("terms",)

    def __init__(
        self,
        terms: dict[tuple[tuple[int, ...], tuple[int, ...]], int] | None = None,
    ):
        clean: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
        if terms:
            for (xe, qe), c in terms.items():
                if c:
                    clean[(_trim(xe), _trim(qe))] = c
        self.terms = clean

    @classmethod
    def one(cls) -> "QPoly":
        return cls({((), ()): 1})

    @classmethod
    def from_poly(cls, p: Poly) -> "QPoly":
        return cls({(xe, ()): c for xe, c in p.terms.items()})

    @classmethod
    def x(cls, i: int) -> "QPoly":
        return cls({((0,) * (i - 1) + (1,), ()): 1})

    @classmethod
    def q(cls, i: int) -> "QPoly":
        return cls({((), (0,) * (i - 1) + (1,)): 1})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QPoly) and self.terms == other.terms

    def __add__(self, other: "QPoly") -> "QPoly":
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return QPoly(out)

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + (other * -1)

    def __mul__(self, other) -> "QPoly":
        if isinstance(other, int):
            return QPoly({key: c * other for key, c in self.terms.items()})
        out: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
        for (xa, qa), c1 in self.terms.items():
            for (xb, qb), c2 in other.terms.items():
                key = (_padded_sum(xa, xb), _padded_sum(qa, qb))
                out[key] = out.get(key, 0) + c1 * c2
        return QPoly(out)

    __rmul__ = __mul__

    def classical_part(self) -> Poly:
        """The polynomial obtained by setting every q_i to zero."""
        return Poly({xe: c for (xe, qe), c in self.terms.items() if not qe})

    def monomials(self):
        return sorted(self.terms.items())

    def coefficient(self, xe: tuple[int, ...], qe: tuple[int, ...] = ()) -> int:
        return self.terms.get((_trim(tuple(xe)), _trim(tuple(qe))), 0)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (xe, qe), c in self.monomials():
            names = [
                f"q{i + 1}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(qe)
                if e
            ] + [
                f"x{i + 1}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(xe)
                if e
            ]
            body = "*".join(names)
            if not body:
                parts.append(f"{c:+d}")
            elif c == 1:
                parts.append(f"+{body}")
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c:+d}*{body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"QPoly({self.terms!r})"


def _trim(exps: tuple[int, ...]) -> tuple[int, ...]:
    m = len(exps)
    while m and exps[m - 1] == 0:
        m -= 1
    return tuple(exps[:m])


def _padded_sum(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    return tuple(
        x + y for x, y in zip(a, b + (0,) * (len(a) - len(b)))
    )


@lru_cache(maxsize=None)
def quantum_elementary(i: int, j: int) -> QPoly:
    """The quantum elementary polynomial E^j_i in x_1..x_j and q_1..q_{j-1}.

    E^j_i = E^{j-1}_i + x_j E^{j-1}_{i-1} + q_{j-1} E^{j-2}_{i-2}, with
    E^j_0 = 1 and E^j_i = 0 outside 0 <= i <= j.  Setting q = 0 recovers
    e_i(x_1, ..., x_j).

    >>> str(quantum_elementary(2, 2))
    '+q1 +x1*x2'
    """
    if i == 0:
        return QPoly.one()
    if i < 0 or i > j:
        return QPoly()
    out = quantum_elementary(i, j - 1) + QPoly.x(j) * quantum_elementary(
        i - 1, j - 1
    )
    if j >= 2:
        out = out + QPoly.q(j - 1) * quantum_elementary(i - 2, j - 2)
    return out


@lru_cache(maxsize=None)
def _elementary_poly(i: int, j: int) -> Poly:
    """e_i(x_1, ..., x_j) as a classical polynomial."""
    out: dict[tuple[int, ...], int] = {}
    for subset in itertools.combinations(range(j), i):
        e = [0] * j
        for m in subset:
            e[m] = 1
        out[tuple(e)] = 1
    return Poly(out)


@lru_cache(maxsize=None)
def _standard_solver(n: int):
    """Change of basis from staircase monomials to elementary-monomial products.

    Both the monomials x^a with a_j <= n - j and the products
    e_{i_1}(x_1) e_{i_2}(x_1,x_2) ... e_{i_{n-1}}(x_1..x_{n-1}) with
    0 <= i_j <= j are ZZ-bases of the same rank-n! lattice, so the change of
    basis is integral in both directions; integrality is asserted.
    """
    monos = sorted(
        _trim(tuple(e))
        for e in itertools.product(*(range(n - j + 1) for j in range(1, n + 1)))
    )
    index = {e: t for t, e in enumerate(monos)}
    basis = list(itertools.product(*(range(j + 1) for j in range(1, n))))
    dim = len(monos)
    cols = []
    for tup in basis:
        p = Poly.one()
        for j, i_j in enumerate(tup, start=1):
            if i_j:
                p = p * _elementary_poly(i_j, j)
        col = [0] * dim
        for xe, c in p.terms.items():
            col[index[xe]] = c
        cols.append(col)
    # invert the basis matrix over the rationals, then drop to ZZ
    a = [
        [Fraction(cols[b][m]) for b in range(dim)] + [
            Fraction(1 if b == m else 0) for b in range(dim)
        ]
        for m in range(dim)
    ]
    for col in range(dim):
        piv = next(r for r in range(col, dim) if a[r][col])
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(dim):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [v - f * p for v, p in zip(a[r], a[col])]
    inverse = []
    for r in range(dim):
        row = a[r][dim:]
        if any(v.denominator != 1 for v in row):
            raise RuntimeError("elementary-monomial basis is not unimodular")
        inverse.append([int(v) for v in row])
    return monos, index, basis, inverse


def _expand_in_standard_basis(p: Poly, n: int) -> dict[tuple[int, ...], int]:
    monos, index, basis, inverse = _standard_solver(n)
    vec = [0] * len(monos)
    for xe, c in p.terms.items():
        if xe not in index:
            raise ValueError(
                f"monomial {xe} lies outside the span of elementary-monomial "
                f"products for n={n} (degree too high in some variable)"
            )
        vec[index[xe]] = c
    out: dict[tuple[int, ...], int] = {}
    support = [m for m, v in enumerate(vec) if v]
    for b, tup in enumerate(basis):
        c = sum(inverse[b][m] * vec[m] for m in support)
        if c:
            out[tup] = c
    return out


@lru_cache(maxsize=None)
def _quantum_basis_element(tup: tuple[int, ...]) -> QPoly:
    out = QPoly.one()
    for j, i_j in enumerate(tup, start=1):
        if i_j:
            out = out * quantum_elementary(i_j, j)
    return out


def quantize(p: Poly, n: int) -> QPoly:
    """The quantization of p: expand in elementary-monomial products and
    replace each e_{i_j}(x_1..x_j) by E^j_{i_j}.

    Degree-one polynomials are fixed, and setting q = 0 returns p.
    """
    out = QPoly()
    for tup, c in _expand_in_standard_basis(p, n).items():
        out = out + _quantum_basis_element(tup) * c
    return out


@lru_cache(maxsize=None)
def quantum_schur(lam: tuple[int, ...], k: int, n: int) -> QPoly:
    """The quantum Schur polynomial s^q_lam(x_1..x_k) for lam inside R_{k,n-k}."""
    lam = tuple(v for v in lam if v)
    if not fits_rectangle(lam, k, n - k):
        raise ValueError(f"{lam} does not fit in the {k} x {n - k} rectangle")
    return quantize(schur_poly(lam, k), n)


def _q_shift(exp: Expansion, qe: tuple[int, ...]) -> Expansion:
    full = tuple(qe) + (0,) * (exp.n - 1 - len(qe))
    return Expansion(
        exp.n,
        {
            QElement(tuple(a + b for a, b in zip(x.alpha, full)), x.w): c
            for x, c in exp.terms.items()
        },
    )


def q_schur_multiply(u: Permutation, lam: tuple[int, ...], k: int) -> Expansion:
    """S_u * s^q_lam(x_1..x_k) through iterated x_m-operators (the FGP route)."""
    n = u.n
    out = Expansion(n)
    for (xe, qe), c in quantum_schur(tuple(lam), k, n).monomials():
        cur = Expansion.unit(u)
        for i, e in enumerate(xe, start=1):
            for _ in range(e):
                cur = q_x_times(cur, i)
        if qe:
            cur = _q_shift(cur, qe)
        out = out + cur.scale(c)
    return out


def fgp_product(
    u: Permutation, lam: tuple[int, ...], k: int, n: int | None = None
) -> Expansion:
    """q_schur_multiply with an explicit ambient: u is embedded into S_n."""
    if n is not None:
        if n < u.n:
            raise ValueError(f"cannot shrink {u} into S_{n}")
        u = u.extend(n)
    return q_schur_multiply(u, lam, k)
