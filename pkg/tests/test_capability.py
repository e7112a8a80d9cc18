import pytest

import oracles
from abelcap.abelian import (
    AbelianGroup,
    GroupMismatchError,
    abelian_types,
    element_set,
    enumerate_subgroups,
    quotient_exponent,
    subgroup_generated,
)
from abelcap.capability import (
    FamilyReport,
    NotCapableError,
    capability_reason,
    complement,
    critical_subgroup,
    cyclic_cover,
    exists_family_c,
    exists_family_d,
    find_family_c,
    find_family_d,
    is_capable,
    verify_family,
    witness_family,
    x_set,
)


def G_(*f):
    return AbelianGroup(tuple(f))


def test_is_capable_examples():
    assert is_capable(G_(2, 2))
    assert not is_capable(G_(6))
    assert not is_capable(G_(2, 4))
    assert is_capable(G_(2, 6, 6))
    assert not is_capable(G_())
    assert capability_reason(G_(6)) == "not capable (cyclic)"
    assert capability_reason(G_()) == "not capable (trivial)"


# --- C_n x C_n -------------------------------------------------------------

def test_x_set_examples():
    assert sorted(x_set(2)) == sorted([(1, 0), (0, 1), (1, 1)])
    for n in range(2, 13):
        assert (1, 0) in x_set(n)
    X6 = x_set(6)
    assert (2, 4) not in X6 and (2, 3) in X6
    assert oracles.order_by_iteration((6, 6), (2, 3)) == 6
    assert oracles.order_by_iteration((6, 6), (2, 4)) == 3
    with pytest.raises(ValueError):
        x_set(1)


def _direct_product(n, x, y):
    f = (n, n)
    X, Y = oracles.closure(f, [x]), oracles.closure(f, [y])
    return len(X) == n and len(Y) == n and X & Y == {(0, 0)} and \
        len(oracles.sumset(f, X, Y)) == n * n


def test_complement_examples():
    for n in range(2, 10):
        assert complement((1, 0), n) == (0, n - 1)
    y = complement((1, 1), 2)
    assert _direct_product(2, (1, 1), y)
    assert _direct_product(6, (2, 3), complement((2, 3), 6))


def test_complement_rejects_non_generators():
    with pytest.raises(ValueError):
        complement((2, 4), 6)
    with pytest.raises(ValueError):
        complement((0, 0), 5)


def test_cyclic_cover_examples():
    cover = cyclic_cover(2)
    assert len(cover) == 3
    assert {frozenset(element_set(H)) for H in cover} == {
        frozenset({(0, 0), (1, 0)}), frozenset({(0, 0), (0, 1)}), frozenset({(0, 0), (1, 1)})}
    cover3 = cyclic_cover(3)
    assert len(cover3) == 4
    assert len(set().union(*(element_set(H) for H in cover3))) == 9


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_cover_partitions_generators_for_primes(p):
    cover = cyclic_cover(p)
    assert len(cover) == p + 1
    for x in x_set(p):
        assert sum(x in element_set(H) for H in cover) == 1
    assert len(x_set(p)) == (p - 1) * (p + 1)


def test_cover_subgroups_distinct_and_order_n():
    for n in range(2, 13):
        cover = cyclic_cover(n)
        assert len(set(cover)) == len(cover)
        assert all(H.order == n for H in cover)


# --- witness families ------------------------------------------------------

def test_witness_klein():
    G = G_(2, 2)
    fam = witness_family(G)
    assert {element_set(H) for H in fam} == {
        frozenset({(0, 0), (1, 0)}), frozenset({(0, 0), (0, 1)}), frozenset({(0, 0), (1, 1)})}
    # brute force all four conditions
    sets = [element_set(H) for H in fam]
    assert frozenset.intersection(*sets) == {(0, 0)}
    assert frozenset.union(*sets) == set(oracles.all_elements((2, 2)))
    assert len({oracles.order_profile((2, 2), S) for S in sets}) == 1
    assert len({oracles.quotient_profile((2, 2), S) for S in sets}) == 1
    rep = verify_family(G, fam)
    assert rep.intersection_trivial and rep.generates and rep.covers
    assert rep.verdict_c and rep.verdict_d


def test_witness_refuses_non_capable():
    with pytest.raises(NotCapableError, match="not capable"):
        witness_family(G_(2, 4))
    with pytest.raises(NotCapableError):
        witness_family(G_(5))


def test_witness_222():
    G = G_(2, 2, 2)
    fam = witness_family(G)
    rep = verify_family(G, fam)
    assert set(rep.subgroup_invariant_lists) == {(2, 2)}
    assert set(rep.quotient_invariant_lists) == {(2,)}
    assert rep.verdict_d
    f = (2, 2, 2)
    for H in fam:
        S = element_set(H)
        assert oracles.order_profile(f, S) == oracles.type_profile((2, 2))
        assert oracles.quotient_profile(f, S) == oracles.type_profile((2,))


def test_witness_contains_paper_subgroups():
    G = G_(2, 4, 4)
    fam = set(witness_family(G))
    # H_1 = <a_1 a_3^2, a_2>, H_2 = <a_1, a_2 a_3>, H_3 = <a_1, a_2>
    assert subgroup_generated(G, [(1, 0, 2), (0, 1, 0)]) in fam
    assert subgroup_generated(G, [(1, 0, 0), (0, 1, 1)]) in fam
    assert subgroup_generated(G, [(1, 0, 0), (0, 1, 0)]) in fam


@pytest.mark.parametrize("f", [f for f in abelian_types(64) if len(f) >= 2 and f[-1] == f[-2]], ids=str)
def test_witness_brute_force(f):
    G = AbelianGroup(f)
    sets = [element_set(H) for H in witness_family(G)]
    assert frozenset.intersection(*sets) == {oracles.zero(f)}
    assert len(frozenset.union(*sets)) == G.order
    assert all(len(S) == G.order // f[-1] for S in sets)
    assert all(oracles.quotient_exponent(f, S) == f[-1] for S in sets)


# --- verify_family ---------------------------------------------------------

def test_verify_family_degenerate():
    G = G_(2, 4)
    rep = verify_family(G, [G.whole()])
    assert not rep.intersection_trivial and not rep.verdict_c and not rep.verdict_d
    rep = verify_family(G, [G.trivial()])
    assert not rep.generates and not rep.covers and not rep.verdict_c
    with pytest.raises(ValueError):
        verify_family(G, [])
    with pytest.raises(GroupMismatchError):
        verify_family(G, [G_(2, 2).whole()])


def test_report_invariants():
    for f in abelian_types(24):
        G = AbelianGroup(f)
        subs = enumerate_subgroups(G)
        for i in range(len(subs)):
            fam = subs[i:i + 3]
            rep = verify_family(G, fam)
            assert isinstance(rep, FamilyReport)
            assert not rep.covers or rep.generates
            assert rep.verdict_c == (rep.intersection_trivial and rep.generates
                                     and len(set(rep.quotient_exponents)) == 1)
            assert rep.verdict_d == (rep.intersection_trivial and rep.covers
                                     and len(set(rep.quotient_invariant_lists)) == 1
                                     and len(set(rep.subgroup_invariant_lists)) == 1)
            # cross-check against element sets
            sets = [element_set(H) for H in fam]
            assert rep.intersection_trivial == (frozenset.intersection(*sets) == {oracles.zero(f)})
            assert rep.covers == (len(frozenset.union(*sets)) == G.order)


def test_generation_is_weaker_than_covering():
    # <(1,0)> and <(0,1)> generate C2 x C2 without covering (1,1)
    G = G_(2, 2)
    rep = verify_family(G, [subgroup_generated(G, [(1, 0)]), subgroup_generated(G, [(0, 1)])])
    assert rep.generates and not rep.covers
    assert rep.verdict_c and not rep.verdict_d


# --- existence oracles -----------------------------------------------------

@pytest.mark.parametrize("f,expected", [((2, 2), True), ((4,), False), ((2, 4), False),
                                        ((3, 3), True), ((2, 6, 6), True), ((), False)])
def test_exists_examples(f, expected):
    G = AbelianGroup(f)
    assert exists_family_c(G) is expected
    assert exists_family_d(G) is expected


def test_found_families_verify():
    G = G_(3, 3)
    assert verify_family(G, find_family_c(G)).verdict_c
    assert verify_family(G, find_family_d(G)).verdict_d
    assert find_family_c(G_(2, 4)) is None


def test_exists_bound():
    with pytest.raises(ValueError):
        exists_family_c(G_(2, 2, 4), bound=8)


# --- obstruction subgroup ------------------------------------------------

@pytest.mark.parametrize("f,p,order", [((2, 4), 2, 2), ((2, 8), 2, 4), ((2, 6), 3, 3)])
def test_critical_subgroup_examples(f, p, order):
    G = AbelianGroup(f)
    A = critical_subgroup(G, p)
    assert A.order == order
    assert A == subgroup_generated(G, [(0, 2)])
    pt = order
    for H in enumerate_subgroups(G):
        assert ((f[-1] // pt) % quotient_exponent(H) == 0) == (A <= H)


@pytest.mark.parametrize("f,p", [((4,), 2), ((2, 2), 2), ((2, 4), 3), ((2, 12), 4)])
def test_critical_subgroup_preconditions(f, p):
    with pytest.raises(ValueError):
        critical_subgroup(AbelianGroup(f), p)


def test_critical_subgroup_in_top_factor():
    G = G_(3, 36)
    for p in (2, 3):
        A = critical_subgroup(G, p)
        assert all(x[0] == 0 for x in element_set(A))
        assert A.order == {2: 4, 3: 3}[p]
