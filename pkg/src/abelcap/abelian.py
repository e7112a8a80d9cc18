"""Finite abelian groups in invariant factor form.

A group ``G = C_{n_1} x ... x C_{n_k}`` (``1 < n_1 | ... | n_k``) is stored as
its factor tuple.  Elements are residue vectors.  A subgroup ``H`` is stored as
the canonical Hermite basis of the lattice ``M`` with ``L <= M <= Z^k`` where
``L`` is spanned by the rows ``n_i * e_i``; then ``H = M / L``.  Because the
Hermite form is unique, subgroup equality is plain basis equality.

>>> G = AbelianGroup((2, 4))
>>> H = subgroup_generated(G, [G.element((1, 1))])
>>> H.order, quotient_invariants(H)
(4, (2,))
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, lcm, prod
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

from sympy import divisors, factorint
from sympy.utilities.iterables import partitions

from .intlinalg import IntMatrix, _solve_rows, hermite_rows, snf

__all__ = [
    "AbelianGroup",
    "GroupElement",
    "Subgroup",
    "GroupMismatchError",
    "EnumerationBoundError",
    "DEFAULT_BOUND",
    "group_from_orders",
    "add",
    "neg",
    "zero",
    "smul",
    "element_order",
    "subgroup_generated",
    "contains",
    "elements",
    "join",
    "intersect",
    "quotient_invariants",
    "quotient_exponent",
    "subgroup_invariants",
    "is_isomorphic",
    "enumerate_subgroups",
    "abelian_types",
    "abelian_types_of_order",
]

DEFAULT_BOUND = 4096

Factors = Tuple[int, ...]


class GroupMismatchError(ValueError):
    """Operands belong to different groups."""


class EnumerationBoundError(ValueError):
    """Group too large for exhaustive subgroup enumeration."""


@dataclass(frozen=True)
class AbelianGroup:
    """``C_{n_1} x ... x C_{n_k}`` given by its invariant factors."""

    factors: Factors

    def __post_init__(self):
        fs = tuple(self.factors)
        for f in fs:
            if isinstance(f, bool) or not isinstance(f, int) or f <= 1:
                raise ValueError(f"invariant factors must be integers > 1, got {fs}")
        for a, b in zip(fs, fs[1:]):
            if b % a:
                raise ValueError(f"{fs} is not a divisibility chain; "
                                 "use group_from_orders to normalize")
        object.__setattr__(self, "factors", fs)

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def order(self) -> int:
        return prod(self.factors)

    @property
    def exponent(self) -> int:
        return self.factors[-1] if self.factors else 1

    def element(self, coords: Sequence[int]) -> "GroupElement":
        if len(coords) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates, got {len(coords)}")
        return GroupElement(self, tuple(c % n for c, n in zip(coords, self.factors)))

    def zero(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.rank)

    def generators(self) -> List["GroupElement"]:
        """The standard generators ``a_1, ..., a_k``."""
        k = self.rank
        return [self.element(tuple(int(i == j) for j in range(k))) for i in range(k)]

    def __iter__(self) -> Iterator["GroupElement"]:
        for c in itertools.product(*(range(n) for n in self.factors)):
            yield GroupElement(self, c)

    def __len__(self):
        return self.order

    def whole(self) -> "Subgroup":
        return Subgroup(self, IntMatrix.identity(self.rank))

    def trivial(self) -> "Subgroup":
        return Subgroup(self, IntMatrix.diag(self.factors))

    def __str__(self):
        if not self.factors:
            return "trivial"
        return " x ".join(f"C{n}" for n in self.factors)


@dataclass(frozen=True)
class GroupElement:
    group: AbelianGroup
    coords: Tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != self.group.rank or any(
                not 0 <= c < n for c, n in zip(self.coords, self.group.factors)):
            raise ValueError(f"{self.coords} is not a reduced element of {self.group}")

    def __add__(self, other):
        return add(self, other)

    def __neg__(self):
        return neg(self)

    def __sub__(self, other):
        return add(self, neg(other))

    def __rmul__(self, c: int):
        return smul(c, self)

    @property
    def order(self) -> int:
        return element_order(self)

    def __str__(self):
        return ",".join(map(str, self.coords))


@dataclass(frozen=True)
class Subgroup:
    """``M / L`` for the lattice ``M`` spanned by the rows of ``basis``.

    ``basis`` is the ``k x k`` canonical Hermite form; build instances with
    :func:`subgroup_generated` rather than directly.
    """

    group: AbelianGroup
    basis: IntMatrix

    @property
    def index(self) -> int:
        return prod(self.basis.diagonal())

    @property
    def order(self) -> int:
        return self.group.order // self.index

    def __contains__(self, x: GroupElement) -> bool:
        return contains(self, x)

    def __le__(self, other: "Subgroup") -> bool:
        _same(self.group, other.group)
        return all(_in_basis(other, self.basis.row(i)) for i in range(self.basis.rows))

    def sort_key(self):
        return self.basis.entries

    def generators(self) -> List[GroupElement]:
        """Nonzero basis rows reduced into the group; generates the subgroup."""
        G = self.group
        gens = [G.element(self.basis.row(i)) for i in range(self.basis.rows)]
        return [g for g in gens if any(g.coords)]

    def __str__(self):
        gens = self.generators()
        return "<" + "; ".join(map(str, gens or [self.group.zero()])) + ">"


def _same(G: AbelianGroup, H: AbelianGroup):
    if G != H:
        raise GroupMismatchError(f"{G} vs {H}")


def group_from_orders(orders: Iterable[int]) -> AbelianGroup:
    """Invariant factor form of ``C_{m_1} x ... x C_{m_r}``.

    >>> group_from_orders([4, 6]).factors
    (2, 12)
    """
    orders = list(orders)
    for m in orders:
        if isinstance(m, bool) or not isinstance(m, int) or m <= 1:
            raise ValueError(f"cyclic orders must be integers > 1, got {m!r}")
    D, _, _ = snf(IntMatrix.diag(orders))
    return AbelianGroup(tuple(d for d in D.diagonal() if d != 1))


def add(x: GroupElement, y: GroupElement) -> GroupElement:
    _same(x.group, y.group)
    return GroupElement(x.group, tuple(
        (a + b) % n for a, b, n in zip(x.coords, y.coords, x.group.factors)))


def neg(x: GroupElement) -> GroupElement:
    return GroupElement(x.group, tuple(-a % n for a, n in zip(x.coords, x.group.factors)))


def zero(G: AbelianGroup) -> GroupElement:
    return G.zero()


def smul(c: int, x: GroupElement) -> GroupElement:
    return GroupElement(x.group, tuple(c * a % n for a, n in zip(x.coords, x.group.factors)))


def element_order(x: GroupElement) -> int:
    return lcm(*(n // gcd(a, n) for a, n in zip(x.coords, x.group.factors)))


def _coords(G: AbelianGroup, g) -> Tuple[int, ...]:
    if isinstance(g, GroupElement):
        _same(G, g.group)
        return g.coords
    return G.element(g).coords


def _make(G: AbelianGroup, rows) -> Subgroup:
    k = G.rank
    lattice = list(rows) + [[n if i == j else 0 for j in range(k)]
                            for i, n in enumerate(G.factors)]
    H = hermite_rows(lattice, k)
    return Subgroup(G, IntMatrix.from_rows(H, k))


def subgroup_generated(G: AbelianGroup,
                       gens: Iterable[Union[GroupElement, Sequence[int]]]) -> Subgroup:
    """Subgroup generated by ``gens`` (elements or coordinate tuples)."""
    return _make(G, [_coords(G, g) for g in gens])


def _in_basis(H: Subgroup, v: Sequence[int]) -> bool:
    b = H.basis
    return _solve_rows([b.row(i) for i in range(b.rows)], v) is not None


def contains(H: Subgroup, x: GroupElement) -> bool:
    _same(H.group, x.group)
    return _in_basis(H, x.coords)


@lru_cache(maxsize=8192)
def _element_coords(H: Subgroup) -> Tuple[Tuple[int, ...], ...]:
    # With the basis upper triangular (diagonal d_i), the combinations
    # c @ basis with 0 <= c_i < n_i / d_i hit each element of M/L exactly once.
    ns = H.group.factors
    rows = [H.basis.row(i) for i in range(H.basis.rows)]
    ranges = [range(n // rows[i][i]) for i, n in enumerate(ns)]
    out = []
    for c in itertools.product(*ranges):
        out.append(tuple(sum(ci * r[j] for ci, r in zip(c, rows)) % n
                         for j, n in enumerate(ns)))
    out.sort()
    return tuple(out)


def element_set(H: Subgroup) -> frozenset:
    """Coordinate tuples of all members of ``H``."""
    return frozenset(_element_coords(H))


def elements(H: Subgroup) -> List[GroupElement]:
    return [GroupElement(H.group, c) for c in _element_coords(H)]


def join(H1: Subgroup, H2: Subgroup) -> Subgroup:
    _same(H1.group, H2.group)
    return _make(H1.group, H1.basis.tolist() + H2.basis.tolist())


def intersect(H1: Subgroup, H2: Subgroup) -> Subgroup:
    _same(H1.group, H2.group)
    small, big = (H1, H2) if H1.order <= H2.order else (H2, H1)
    if small <= big:
        return small
    brows = [big.basis.row(i) for i in range(big.basis.rows)]
    common = [c for c in _element_coords(small) if any(c)
              and _solve_rows(brows, c) is not None]
    return _make(H1.group, common)


@lru_cache(maxsize=65536)
def quotient_invariants(H: Subgroup) -> Factors:
    """Invariant factors of ``G / H``; ``()`` for the trivial quotient."""
    D, _, _ = snf(H.basis)
    return tuple(d for d in D.diagonal() if d != 1)


def quotient_exponent(H: Subgroup) -> int:
    q = quotient_invariants(H)
    return q[-1] if q else 1


@lru_cache(maxsize=65536)
def subgroup_invariants(H: Subgroup) -> Factors:
    """Invariant factors of ``H`` itself.

    In the coordinates of the basis rows, ``L`` is the row space of the
    integer matrix ``C`` with ``C @ basis = diag(n_1, ..., n_k)``, so
    ``H = Z^k / rowspace(C)``.
    """
    ns = H.group.factors
    k = len(ns)
    rows = [H.basis.row(i) for i in range(k)]
    C = []
    for i, n in enumerate(ns):
        c = _solve_rows(rows, [n if j == i else 0 for j in range(k)])
        assert c is not None, "basis does not contain the relation lattice"
        C.append(c)
    D, _, _ = snf(IntMatrix.from_rows(C, k))
    return tuple(d for d in D.diagonal() if d != 1)


def is_isomorphic(f1: Sequence[int], f2: Sequence[int]) -> bool:
    """Compare two groups given in invariant factor form."""
    return tuple(f1) == tuple(f2)


def enumerate_subgroups(G: AbelianGroup, bound: int = DEFAULT_BOUND) -> List[Subgroup]:
    """Every subgroup of ``G``, sorted by canonical basis.

    Builds Hermite bases bottom-up: row ``i`` is ``d_i e_i + sum a_ij e_j``
    with ``d_i | n_i`` and ``0 <= a_ij < d_j``, kept only when ``n_i e_i``
    lies in the span of the rows built so far.
    """
    if G.order > bound:
        raise EnumerationBoundError(
            f"|G| = {G.order} exceeds the enumeration bound {bound}")
    ns = G.factors
    k = len(ns)
    partial = [[]]  # lists of rows i..k-1, each row of full length k
    for i in reversed(range(k)):
        n = ns[i]
        grown = []
        for below in partial:
            pivots = [r[i + 1 + t] for t, r in enumerate(below)]
            for d in divisors(n):
                m = n // d
                for tail in itertools.product(*(range(p) for p in pivots)):
                    # m * row - n * e_i must lie in the span of the rows below
                    if _solve_rows(below, [0] * (i + 1) + [m * x for x in tail]) is None:
                        continue
                    grown.append([[0] * i + [d, *tail]] + below)
        partial = grown
    subs = [Subgroup(G, IntMatrix.from_rows(rows, k)) for rows in partial]
    subs.sort(key=Subgroup.sort_key)
    return subs


def abelian_types_of_order(n: int) -> List[Factors]:
    """Invariant factor lists of all abelian groups of order exactly ``n``."""
    if n < 1:
        raise ValueError("order must be positive")
    per_prime = []
    for p, e in sorted(factorint(n).items()):
        parts = []
        for part in partitions(e):
            seq = sorted((q for q, mult in part.items() for _ in range(mult)),
                         reverse=True)
            parts.append([p ** q for q in seq])
        per_prime.append(parts)
    types = set()
    for choice in itertools.product(*per_prime):
        width = max((len(c) for c in choice), default=0)
        top_down = [prod(c[j] for c in choice if j < len(c)) for j in range(width)]
        types.add(tuple(reversed(top_down)))
    return sorted(types, key=lambda f: (len(f), f))


def abelian_types(N: int) -> List[Factors]:
    """One invariant factor list per abelian group of order ``<= N``."""
    if N < 1:
        raise ValueError("N must be >= 1")
    return [f for n in range(1, N + 1) for f in abelian_types_of_order(n)]
