"""Capability of finite abelian groups via subgroup families."""

from .abelian import (
    AbelianGroup,
    GroupElement,
    Subgroup,
    abelian_types,
    enumerate_subgroups,
    group_from_orders,
    subgroup_generated,
)
from .capability import (
    FamilyReport,
    exists_family_c,
    exists_family_d,
    is_capable,
    verify_family,
    witness_family,
)

__all__ = [
    "AbelianGroup",
    "GroupElement",
    "Subgroup",
    "FamilyReport",
    "abelian_types",
    "enumerate_subgroups",
    "group_from_orders",
    "subgroup_generated",
    "exists_family_c",
    "exists_family_d",
    "is_capable",
    "verify_family",
    "witness_family",
]
