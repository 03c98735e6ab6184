"""Signed factorization chains: the Hurwitz action, the antisymmetrized
chains attached to reduced factorizations, their truncation cycles, the
shuffle product, and unitriangular basis reduction.

A chain is a dict mapping label sequences (tuples of 0-based reflection
positions) to nonzero integers.  The central constructions:

- ``alternating_chain(s)``: the signed sum over the full braid-lifted
  permutation orbit of s, computed by the first-entry recursion

      sum_i (-1)^(i-1) (t_i, alternating_chain(t_1^{t_i}, ..., t_{i-1}^{t_i},
                                               t_{i+1}, ..., t_k))

  with memoization on subsequences,
- ``interval_cycle(s)``: its truncation (drop the last entry of every key),
  a top-homology cycle of the open interval under the product of s,
- ``shuffle_product``: the signed shuffle with braid-lifted crossings; the
  product of two single-entry chains recovers alternating_chain of the pair,
- ``reduced_product``: shuffle followed by projection onto keys that are
  reduced with product inside the lattice (the algebra multiplication),
- ``coords_in_basis``: exact integer coordinates by lex-maximal-key peeling
  against a unitriangular basis.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import PartitionLattice

Chain = dict  # tuple[int, ...] -> int


def add_into(target: Chain, key, coeff: int) -> None:
    new = target.get(key, 0) + coeff
    if new:
        target[key] = new
    else:
        target.pop(key, None)


def chain_sum(*parts) -> Chain:
    out: Chain = {}
    for chain, scale in parts:
        for key, c in chain.items():
            add_into(out, key, scale * c)
    return out


class ChainAlgebra:
    """Chain-level constructions over one partition lattice."""

    def __init__(self, lat: PartitionLattice):
        self.lat = lat
        self.group = lat.group
        self._beta_memo: dict = {(): {(): 1}}
        self._product_memo: dict = {}
        self._full_basis_memo: dict = {}
        self._cycle_basis_memo: dict = {}
        self._coords_memo: dict = {}

    def _conj(self, i: int, j: int) -> int:
        return self.group.conjugate_position(i, j)

    # -- Hurwitz action ------------------------------------------------------

    def hurwitz_move(self, seq, i: int, inverse: bool = False):
        """Braid generator i (0-based, acting on entries i, i+1)."""
        if not 0 <= i < len(seq) - 1:
            raise IndexError(f"move {i} out of range for length {len(seq)}")
        a, b = seq[i], seq[i + 1]
        if inverse:
            pair = (self._conj(b, a), a)
        else:
            pair = (b, self._conj(a, b))
        return seq[:i] + pair + seq[i + 2:]

    def deleted_conjugate(self, seq, i: int):
        """Drop entry i and conjugate every earlier entry by it; the result
        multiplies to t_i * product(seq)."""
        ti = seq[i]
        return (tuple(self._conj(seq[j], ti) for j in range(i))
                + seq[i + 1:])

    # -- the antisymmetrized chains ------------------------------------------

    def alternating_chain(self, seq) -> Chain:
        seq = tuple(seq)
        memo = self._beta_memo
        out = memo.get(seq)
        if out is not None:
            return out
        result: Chain = {}
        for i in range(len(seq)):
            sub = self.alternating_chain(self.deleted_conjugate(seq, i))
            sign = -1 if i % 2 else 1
            ti = seq[i]
            for key, c in sub.items():
                add_into(result, (ti,) + key, sign * c)
        memo[seq] = result
        return result

    def truncate(self, chain: Chain) -> Chain:
        """The boundary-to-cycle map: drop the last entry of every key."""
        out: Chain = {}
        for key, c in chain.items():
            add_into(out, key[:-1], c)
        return out

    def interval_cycle(self, seq) -> Chain:
        return self.truncate(self.alternating_chain(seq))

    # -- shuffle product -----------------------------------------------------

    def _star_keys(self, s, u):
        """Signed keys of the shuffle of two label sequences."""
        if not s:
            yield u, 1
            return
        if not u:
            yield s, 1
            return
        head_s = s[0]
        for key, sign in self._star_keys(s[1:], u):
            yield (head_s,) + key, sign
        factor = -1 if len(s) % 2 else 1
        conj_s = tuple(self._conj(a, u[0]) for a in s)
        head_u = u[0]
        for key, sign in self._star_keys(conj_s, u[1:]):
            yield (head_u,) + key, factor * sign

    def shuffle_product(self, x: Chain, y: Chain) -> Chain:
        out: Chain = {}
        for s, cs in x.items():
            for u, cu in y.items():
                coeff = cs * cu
                for key, sign in self._star_keys(s, u):
                    add_into(out, key, sign * coeff)
        return out

    def _reduced_lattice_id(self, seq):
        """Lattice id of product(seq) when seq is reduced with product in
        the lattice, else None."""
        memo = self._product_memo
        if seq in memo:
            return memo[seq]
        product = self.group.sequence_product(seq)
        vid = self.lat.index.get(product)
        if vid is not None and self.lat.rank[vid] != len(seq):
            vid = None
        memo[seq] = vid
        return vid

    def project_to_algebra(self, chain: Chain) -> Chain:
        """Kill keys that are non-reduced or whose product leaves the
        lattice."""
        return {key: c for key, c in chain.items()
                if self._reduced_lattice_id(key) is not None}

    def reduced_product(self, x: Chain, y: Chain) -> Chain:
        return self.project_to_algebra(self.shuffle_product(x, y))

    def generator(self, tpos: int) -> Chain:
        return {(tpos,): 1}

    # -- bases ---------------------------------------------------------------

    def full_basis(self, k: int) -> "GradedBasis":
        """Basis of the degree-k algebra component: the antisymmetrized
        chains of all decreasing factorizations at rank k, lex order."""
        out = self._full_basis_memo.get(k)
        if out is not None:
            return out
        labels = sorted(
            seq
            for wid in self.lat.rank_row(k)
            for seq in self.lat.decreasing_factorizations(wid))
        expansions = tuple(self.alternating_chain(s) for s in labels)
        out = GradedBasis(k, tuple(labels), expansions,
                          {s: p for p, s in enumerate(labels)})
        self._full_basis_memo[k] = out
        return out

    def cycle_basis(self, k: int) -> "GradedBasis":
        """Basis of the truncation image in degree k - 1: cycles of the
        rank-prefix sequences, whose maximal key drops the final entry."""
        out = self._cycle_basis_memo.get(k)
        if out is not None:
            return out
        labels = self.lat.rank_prefix_basis(k - 1)
        expansions = tuple(self.interval_cycle(s) for s in labels)
        out = GradedBasis(k, tuple(labels), expansions,
                          {s[:-1]: p for p, s in enumerate(labels)})
        self._cycle_basis_memo[k] = out
        return out

    def cycle_coords(self, seq, degree: int):
        """Sparse coordinates {position: coeff} of the interval cycle of a
        reduced sequence in the degree-``degree`` cycle basis."""
        key = ("cycle", tuple(seq), degree)
        out = self._coords_memo.get(key)
        if out is None:
            coords = self.coords_in_basis(self.interval_cycle(seq),
                                          self.cycle_basis(degree))
            out = {p: c for p, c in enumerate(coords) if c}
            self._coords_memo[key] = out
        return out

    def chain_coords(self, seq, degree: int):
        """Sparse coordinates {position: coeff} of the alternating chain of
        a reduced sequence in the degree-``degree`` full basis."""
        key = ("chain", tuple(seq), degree)
        out = self._coords_memo.get(key)
        if out is None:
            coords = self.coords_in_basis(self.alternating_chain(seq),
                                          self.full_basis(degree))
            out = {p: c for p, c in enumerate(coords) if c}
            self._coords_memo[key] = out
        return out

    def coords_in_basis(self, chain: Chain, basis: "GradedBasis"):
        """Exact coordinates of a chain in a unitriangular basis."""
        residual = dict(chain)
        coords = [0] * len(basis.labels)
        while residual:
            key = max(residual)
            pos = basis.max_key_to_pos.get(key)
            if pos is None:
                raise ValueError(f"chain not in span: stuck at key {key}")
            c = residual[key]
            coords[pos] = c
            for bkey, bc in basis.expansions[pos].items():
                add_into(residual, bkey, -c * bc)
        return coords


@dataclass(frozen=True)
class GradedBasis:
    """An ordered unitriangular basis of one graded piece.

    ``max_key_to_pos`` sends the lex-maximal expansion key of each entry to
    its position; peeling against it solves coordinates exactly.
    """

    degree: int
    labels: tuple
    expansions: tuple
    max_key_to_pos: dict
