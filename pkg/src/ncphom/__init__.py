"""Integral homology from noncrossing partition lattices of finite
Coxeter groups.

The pipeline: parse a type, realize its reflections, build the interval
below a bipartite Coxeter element in absolute order, antisymmetrize
reduced factorizations into basis chains, assemble the boundary
matrices of five chain complexes, and read homology off Smith normal
forms.  Everything is exact integer arithmetic.
"""

from .chain_algebra import ChainAlgebra, GradedBasis
from .complexes import (SPACES, ChainComplex, build_algebra_complex,
                        build_complex)
from .coxgroup import DEFAULT_GROUP_CAP, CoxeterGroup, GroupCapExceeded
from .homology import (BoundaryMatrix, HomologyGroup, euler_characteristic,
                       homology_of, invariant_factors)
from .lattice import PartitionLattice
from .properties import property_suite
from .refdata import ReferenceRow, all_rows, load_rows, lookup
from .rootsys import CoxeterType, TypeParseError

__version__ = "0.1.0"

__all__ = [
    "BoundaryMatrix",
    "ChainAlgebra",
    "ChainComplex",
    "CoxeterGroup",
    "CoxeterType",
    "DEFAULT_GROUP_CAP",
    "GradedBasis",
    "GroupCapExceeded",
    "HomologyGroup",
    "PartitionLattice",
    "ReferenceRow",
    "SPACES",
    "TypeParseError",
    "all_rows",
    "build_algebra_complex",
    "build_complex",
    "euler_characteristic",
    "homology_of",
    "invariant_factors",
    "load_rows",
    "lookup",
    "property_suite",
    "__version__",
]
