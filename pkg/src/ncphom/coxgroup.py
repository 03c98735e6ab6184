"""The finite Coxeter group behind a type: elements, lengths, absolute order.

Elements are opaque hashable keys: ambient reflection matrices (tuples of
tuples of exact scalars) for the matrix-realized types, symbolic pairs for
the dihedral family.  All length computations use reflection length; for the
matrix backend that is rank(M - I) over the exact scalar field, which equals
the codimension of the fixed space in the essential representation because
every group element fixes the orthogonal complement of the root span
pointwise (so the ambient rank never overcounts).
"""

from __future__ import annotations

from fractions import Fraction

from .dihedral import DihedralGroup
from .rootsys import CoxeterType, RootSystem
from .scalars import mat_mul, mat_rank

DEFAULT_GROUP_CAP = 52000


class GroupCapExceeded(RuntimeError):
    """Raised when an operation would enumerate a group above the cap."""


def _as_int_matrix(m):
    return tuple(tuple(int(x) for x in row) for row in m)


def _all_integral(matrices) -> bool:
    try:
        return all(x.denominator == 1
                   for m in matrices for row in m for x in row)
    except AttributeError:
        return False


class CoxeterGroup:
    """Group operations for one admissible irreducible type."""

    def __init__(self, ctype: CoxeterType):
        self.ctype = ctype
        self.rank = ctype.rank
        if ctype.is_dihedral:
            self._backend = DihedralGroup(ctype.dihedral_order)
            self._rootsys = None
            self.identity = self._backend.identity
            self.gamma = self._backend.gamma
            self.reflection_keys = self._backend.reflection_elements()
        else:
            self._rootsys = RootSystem(ctype)
            self._backend = None
            self.identity = self._rootsys.identity
            self.gamma = self._rootsys.coxeter_matrix_form
            self.reflection_keys = self._rootsys.reflection_matrices
            self._simple_matrices = self._rootsys.simple_matrices
            # permutation-style realizations have integer matrices; plain
            # int arithmetic multiplies them far faster than field scalars
            self._integral = _all_integral(self.reflection_keys)
            if self._integral:
                self.identity = _as_int_matrix(self.identity)
                self.gamma = _as_int_matrix(self.gamma)
                self.reflection_keys = tuple(
                    _as_int_matrix(m) for m in self.reflection_keys)
                self._simple_matrices = tuple(
                    _as_int_matrix(m) for m in self._simple_matrices)
        self.num_reflections = len(self.reflection_keys)
        self._position_of = {key: k for k, key in
                             enumerate(self.reflection_keys)}
        self._length_cache: dict = {self.identity: 0}
        self._inverse_cache: dict = {}
        self._conj_cache: dict = {}
        self._pair_product_cache: dict = {}

    @classmethod
    def from_name(cls, name: str) -> "CoxeterGroup":
        return cls(CoxeterType.parse(name))

    # -- core operations -----------------------------------------------------

    def multiply(self, a, b):
        if self._backend is not None:
            return self._backend.multiply(a, b)
        return mat_mul(a, b)

    def inverse(self, a):
        cached = self._inverse_cache.get(a)
        if cached is not None:
            return cached
        if self._backend is not None:
            inv = self._backend.inverse(a)
        else:
            # orthogonal matrices: inverse = transpose
            inv = tuple(zip(*a))
        self._inverse_cache[a] = inv
        return inv

    def reflection_length(self, a) -> int:
        cached = self._length_cache.get(a)
        if cached is not None:
            return cached
        if self._backend is not None:
            length = self._backend.reflection_length(a)
        else:
            diff = tuple(tuple(x - y for x, y in zip(row, idrow))
                         for row, idrow in zip(a, self.identity))
            if self._integral:
                # rank elimination divides, so promote int entries
                diff = tuple(tuple(Fraction(x) for x in row)
                             for row in diff)
            length = mat_rank(diff)
        self._length_cache[a] = length
        return length

    def absolute_leq(self, a, b) -> bool:
        """a <= b in absolute order: lengths add along a, a^{-1} b."""
        rest = self.multiply(self.inverse(a), b)
        return (self.reflection_length(a) + self.reflection_length(rest)
                == self.reflection_length(b))

    def parity(self, a) -> int:
        """0 for even elements (determinant +1), 1 for odd."""
        return self.reflection_length(a) % 2

    # -- reflections ---------------------------------------------------------

    def reflection(self, position: int):
        """Element of the reflection at a 0-based position in the order."""
        return self.reflection_keys[position]

    def reflection_position(self, element) -> int:
        """0-based position of a reflection element; KeyError otherwise."""
        return self._position_of[element]

    def conjugate_position(self, i: int, j: int) -> int:
        """Position of t_i ^ t_j = t_j t_i t_j (0-based positions)."""
        key = (i, j)
        cached = self._conj_cache.get(key)
        if cached is not None:
            return cached
        if self._backend is not None:
            pos = self._backend.conjugate_position(i, j)
        else:
            pos = self._rootsys.conjugate_position(i, j)
        self._conj_cache[key] = pos
        return pos

    def reflection_product(self, i: int, j: int):
        """Element t_i t_j (0-based positions), cached pairwise."""
        key = (i, j)
        cached = self._pair_product_cache.get(key)
        if cached is None:
            cached = self.multiply(self.reflection_keys[i],
                                   self.reflection_keys[j])
            self._pair_product_cache[key] = cached
        return cached

    def sequence_product(self, positions):
        """Product of reflections given by 0-based positions, left to right."""
        if not positions:
            return self.identity
        out = self.reflection_keys[positions[0]]
        for p in positions[1:]:
            out = self.multiply(out, self.reflection_keys[p])
        return out

    # -- enumeration ---------------------------------------------------------

    def enumerate_elements(self, cap: int = DEFAULT_GROUP_CAP):
        """All group elements (BFS over simple products for the matrix
        backend); raises GroupCapExceeded if |W| exceeds the cap."""
        order = self.ctype.group_order
        if cap is not None and order > cap:
            raise GroupCapExceeded(
                f"|W({self.ctype})| = {order} exceeds the cap {cap}")
        if self._backend is not None:
            return self._backend.enumerate_elements()
        generators = self._simple_matrices
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            new = []
            for w in frontier:
                for g in generators:
                    img = mat_mul(w, g)
                    if img not in seen:
                        seen.add(img)
                        new.append(img)
            frontier = new
        assert len(seen) == order, (len(seen), order)
        return list(seen)
