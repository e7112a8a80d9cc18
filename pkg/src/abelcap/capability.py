"""Capability of finite abelian groups and subgroup-family witnesses.

A finite abelian group with invariant factors ``n_1 | ... | n_k`` is capable
exactly when ``k >= 2`` and ``n_{k-1} == n_k``.  Equivalently it admits a
family of subgroups with trivial intersection, whose union covers the group,
with all members isomorphic and all quotients isomorphic.  This module builds
such families, checks arbitrary families, and decides existence by exhaustive
search for small groups.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import asdict, dataclass
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import isprime, multiplicity

from .abelian import (
    DEFAULT_BOUND,
    AbelianGroup,
    GroupMismatchError,
    Subgroup,
    element_set,
    enumerate_subgroups,
    intersect,
    join,
    quotient_exponent,
    quotient_invariants,
    subgroup_generated,
    subgroup_invariants,
)
from .intlinalg import ext_gcd

__all__ = [
    "FamilyReport",
    "NotCapableError",
    "is_capable",
    "capability_reason",
    "x_set",
    "complement",
    "cyclic_cover",
    "cover_representatives",
    "witness_family",
    "verify_family",
    "find_family_c",
    "find_family_d",
    "exists_family_c",
    "exists_family_d",
    "critical_subgroup",
]


class NotCapableError(ValueError):
    """Raised when a witness family is requested for a non-capable group."""


@dataclass(frozen=True)
class FamilyReport:
    intersection_trivial: bool
    generates: bool
    covers: bool
    quotient_invariant_lists: Tuple[Tuple[int, ...], ...]
    quotient_exponents: Tuple[int, ...]
    subgroup_invariant_lists: Tuple[Tuple[int, ...], ...]
    verdict_c: bool
    verdict_d: bool

    def to_dict(self) -> dict:
        d = asdict(self)
        for key in ("quotient_invariant_lists", "subgroup_invariant_lists"):
            d[key] = [list(x) for x in d[key]]
        d["quotient_exponents"] = list(d["quotient_exponents"])
        return d


def is_capable(G: AbelianGroup) -> bool:
    f = G.factors
    return len(f) >= 2 and f[-1] == f[-2]


def capability_reason(G: AbelianGroup) -> str:
    """Short human-readable verdict, e.g. ``"not capable (cyclic)"``."""
    f = G.factors
    if not f:
        return "not capable (trivial)"
    if len(f) == 1:
        return "not capable (cyclic)"
    if f[-1] != f[-2]:
        return f"not capable (top factors {f[-2]} != {f[-1]})"
    return "capable"


def x_set(n: int) -> List[Tuple[int, int]]:
    """Pairs ``(i, j)`` in ``[0, n)^2`` with ``gcd(i, j, n) == 1``, i.e. the
    elements of order ``n`` in ``C_n x C_n``, in lexicographic order."""
    if n <= 1:
        raise ValueError("n must be > 1")
    return [(i, j) for i in range(n) for j in range(n) if gcd(i, j, n) == 1]


def complement(x: Sequence[int], n: int) -> Tuple[int, int]:
    """An element ``y`` with ``C_n x C_n = <x> (+) <y>``.

    For ``x = (i, j)`` take Bezout coefficients ``i*s + j*t = gcd(i, j)`` and
    return ``(t, -s) mod n``.  The matrix ``[[i, j], [t, -s]]`` has
    determinant ``-gcd(i, j)``, a unit mod ``n``.
    """
    i, j = x
    if n <= 1:
        raise ValueError("n must be > 1")
    if not (0 <= i < n and 0 <= j < n) or gcd(i, j, n) != 1:
        raise ValueError(f"{tuple(x)} does not have order {n} in C{n} x C{n}")
    _, s, t = ext_gcd(i, j)
    return t % n, -s % n


def cover_representatives(n: int) -> List[Tuple[Tuple[int, int], Subgroup]]:
    """``(x, <x>)`` for each distinct cyclic subgroup of order ``n`` in
    ``C_n x C_n``, with ``x`` its lexicographically least generator."""
    G = AbelianGroup((n, n))
    seen = set()
    out = []
    for x in x_set(n):
        H = subgroup_generated(G, [x])
        if H not in seen:
            seen.add(H)
            out.append((x, H))
    return out


def cyclic_cover(n: int) -> List[Subgroup]:
    """The cyclic subgroups ``<x>``, ``x`` of order ``n``; they cover
    ``C_n x C_n``."""
    return [H for _, H in cover_representatives(n)]


def witness_family(G: AbelianGroup) -> List[Subgroup]:
    """Family with trivial intersection, covering union, every member
    isomorphic to ``C_{n_1} x ... x C_{n_{k-1}}`` and every quotient
    isomorphic to ``C_{n_k}``.  Sorted by canonical basis, duplicates removed.
    """
    if not is_capable(G):
        raise NotCapableError(f"{G} is {capability_reason(G)}: a capable group "
                              "needs k >= 2 and n_(k-1) == n_k")
    ns = G.factors
    k = len(ns)
    a = [tuple(int(i == j) for j in range(k)) for i in range(k)]
    family = set()
    for i in range(k - 1):
        twisted = list(a[i])
        twisted[k - 1] = ns[k - 1] // ns[i]
        gens = a[:i] + [tuple(twisted)] + a[i + 1:k - 1]
        family.add(subgroup_generated(G, gens))
    family.add(subgroup_generated(G, a[:k - 1]))
    for (i, j), _ in cover_representatives(ns[-1]):
        family.add(subgroup_generated(G, a[:k - 2] + [(0,) * (k - 2) + (i, j)]))
    return sorted(family, key=Subgroup.sort_key)


def verify_family(G: AbelianGroup, family: Sequence[Subgroup]) -> FamilyReport:
    """Check the intersection, generation, covering and quotient conditions."""
    family = list(family)
    if not family:
        raise ValueError("family must be nonempty")
    for H in family:
        if H.group != G:
            raise GroupMismatchError(f"subgroup of {H.group} in a family for {G}")

    meet = family[0]
    for H in family[1:]:
        if meet.order == 1:
            break
        meet = intersect(meet, H)
    span = family[0]
    for H in family[1:]:
        if span.order == G.order:
            break
        span = join(span, H)
    union = set()
    for H in family:
        union |= element_set(H)
        if len(union) == G.order:
            break

    quotients = tuple(quotient_invariants(H) for H in family)
    exponents = tuple(quotient_exponent(H) for H in family)
    subtypes = tuple(subgroup_invariants(H) for H in family)
    intersection_trivial = meet.order == 1
    generates = span.order == G.order
    covers = len(union) == G.order
    return FamilyReport(
        intersection_trivial=intersection_trivial,
        generates=generates,
        covers=covers,
        quotient_invariant_lists=quotients,
        quotient_exponents=exponents,
        subgroup_invariant_lists=subtypes,
        verdict_c=intersection_trivial and generates and len(set(exponents)) == 1,
        verdict_d=(intersection_trivial and covers and len(set(quotients)) == 1
                   and len(set(subtypes)) == 1),
    )


def _first_passing(G, classes: Dict, verdict: str) -> Optional[List[Subgroup]]:
    for key in sorted(classes):
        fam = classes[key]
        if getattr(verify_family(G, fam), verdict):
            return fam
    return None


def find_family_c(G: AbelianGroup, bound: int = DEFAULT_BOUND) -> Optional[List[Subgroup]]:
    """A family satisfying the exponent condition, or ``None``.

    Only the maximal family of each quotient exponent is tried: adding members
    of the same class can only shrink the intersection and grow the join.
    The trivial group is excluded and yields ``None``.
    """
    if G.order == 1:
        return None
    classes = defaultdict(list)
    for H in enumerate_subgroups(G, bound):
        classes[quotient_exponent(H)].append(H)
    return _first_passing(G, classes, "verdict_c")


def find_family_d(G: AbelianGroup, bound: int = DEFAULT_BOUND) -> Optional[List[Subgroup]]:
    """A family satisfying the isomorphism/covering condition, or ``None``.

    Classes are keyed by (subgroup type, quotient type); the maximal family of
    each class is tried.  The trivial group yields ``None``.
    """
    if G.order == 1:
        return None
    classes = defaultdict(list)
    for H in enumerate_subgroups(G, bound):
        classes[subgroup_invariants(H), quotient_invariants(H)].append(H)
    return _first_passing(G, classes, "verdict_d")


def exists_family_c(G: AbelianGroup, bound: int = DEFAULT_BOUND) -> bool:
    return find_family_c(G, bound) is not None


def exists_family_d(G: AbelianGroup, bound: int = DEFAULT_BOUND) -> bool:
    return find_family_d(G, bound) is not None


def critical_subgroup(G: AbelianGroup, p: int) -> Subgroup:
    """The order ``p^t`` subgroup of the top cyclic factor, where ``p^t`` is
    the largest power of ``p`` dividing ``n_k / n_{k-1}``.

    A subgroup ``H`` contains it exactly when ``exp(G/H)`` divides
    ``n_k / p^t``.
    """
    f = G.factors
    if len(f) < 2:
        raise ValueError(f"{G} is cyclic; the obstruction needs k >= 2")
    m = f[-1] // f[-2]
    if m == 1:
        raise ValueError(f"{G} is capable; n_k / n_(k-1) = 1")
    if not isprime(p) or m % p:
        raise ValueError(f"p = {p} must be a prime dividing n_k / n_(k-1) = {m}")
    pt = p ** multiplicity(p, m)
    return subgroup_generated(G, [(0,) * (len(f) - 1) + (f[-1] // pt,)])
