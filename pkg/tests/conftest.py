"""Shared construction cache so tests reuse lattices and algebras."""

from ncphom import ChainAlgebra, CoxeterGroup, PartitionLattice

_algebras: dict = {}


def algebra_for(name: str) -> ChainAlgebra:
    """One memoized algebra (with its lattice and group) per type name."""
    out = _algebras.get(name)
    if out is None:
        group = CoxeterGroup.from_name(name)
        out = ChainAlgebra(PartitionLattice(group))
        _algebras[name] = out
    return out


def lattice_for(name: str) -> PartitionLattice:
    return algebra_for(name).lat


def group_for(name: str) -> CoxeterGroup:
    return algebra_for(name).group
