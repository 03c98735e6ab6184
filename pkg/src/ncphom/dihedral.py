"""Symbolic dihedral groups of order 2m, no matrices involved.

Elements are pairs: ("r", i) is the rotation (s2 s1)^(i-1) and ("t", i) the
reflection s1 (s2 s1)^(i-1), indices living in 1..m (mod m).  The identity is
("r", 1) and the chosen Coxeter element gamma = s1 s2 = ("r", m).  The
composition rules collapse to index arithmetic:

    r_i r_j = r_{i+j-1}    r_i t_j = t_{j-i+1}
    t_j r_i = t_{i+j-1}    t_i t_j = r_{j-i+1}

so conjugation of reflections is t_i ^ t_j = t_{2j-i}.  The reflection order
is t_1 < t_2 < ... < t_m, which is what the bipartite root recurrence
produces for this family.
"""

from __future__ import annotations


class DihedralGroup:
    """Order-2m dihedral group with symbolic elements."""

    def __init__(self, m: int):
        if m < 3:
            raise ValueError("need m >= 3")
        self.m = m
        self.identity = ("r", 1)
        self.gamma = ("r", m)

    def _norm(self, i: int) -> int:
        return (i - 1) % self.m + 1

    def multiply(self, a, b):
        ka, i = a
        kb, j = b
        m = self._norm
        if ka == "r" and kb == "r":
            return ("r", m(i + j - 1))
        if ka == "r" and kb == "t":
            return ("t", m(j - i + 1))
        if ka == "t" and kb == "r":
            return ("t", m(i + j - 1))
        return ("r", m(j - i + 1))

    def inverse(self, a):
        kind, i = a
        if kind == "t":
            return a
        return ("r", self._norm(2 - i))

    def reflection_length(self, a) -> int:
        kind, i = a
        if kind == "t":
            return 1
        return 0 if i == 1 else 2

    def reflection_elements(self):
        return tuple(("t", i) for i in range(1, self.m + 1))

    def conjugate_position(self, i: int, j: int) -> int:
        """0-based position of t_{i+1} conjugated by t_{j+1}."""
        return (2 * j - i) % self.m

    def enumerate_elements(self):
        return ([("r", i) for i in range(1, self.m + 1)]
                + [("t", i) for i in range(1, self.m + 1)])
