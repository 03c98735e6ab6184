"""The noncrossing partition lattice: the absolute-order interval under the
bipartite Coxeter element.

Elements are collected by downward closure from the top: the lower covers of
v are exactly the products v t over reflections t that drop the reflection
length by one, and iterating reaches every element of the interval.  All
order data is then derived combinatorially:

- containment bitsets (one integer bitmask per element) by a rank-by-rank
  sweep over cover edges, making every leq test O(1),
- cover labels: the edge u < v carries the reflection u^{-1} v, which for the
  closure edge u = v t is t itself,
- reduced and decreasing factorization enumeration by memoized first-letter
  peeling (the first letters of w are the atoms below w),
- the unique increasing maximal chain of any interval by greedy least-label
  steps (its uniqueness is a property test, not an assumption of the code),
- Moebius values by recursion over the bitsets.

Factorizations are stored as tuples of 0-based reflection positions in the
fixed reflection order; "lex" always means entrywise comparison of those
position tuples.
"""

from __future__ import annotations

from .coxgroup import CoxeterGroup


class PartitionLattice:
    """The interval [identity, gamma] in absolute order, fully indexed."""

    def __init__(self, group: CoxeterGroup):
        self.group = group
        self.n = group.reflection_length(group.gamma)
        assert self.n == group.ctype.rank

        # downward closure from gamma
        rank_of = {group.gamma: self.n}
        lower = {group.gamma: []}
        frontier = [group.gamma]
        while frontier:
            new = []
            for v in frontier:
                r = rank_of[v]
                for tpos in range(group.num_reflections):
                    u = group.multiply(v, group.reflection(tpos))
                    if group.reflection_length(u) != r - 1:
                        continue
                    lower[v].append((tpos, u))
                    if u not in rank_of:
                        rank_of[u] = r - 1
                        lower[u] = []
                        new.append(u)
            frontier = new
        assert rank_of.get(group.identity) == 0

        by_rank_keys = [[] for _ in range(self.n + 1)]
        for key, r in rank_of.items():
            by_rank_keys[r].append(key)
        for row in by_rank_keys:
            row.sort()
        assert len(by_rank_keys[1]) == group.num_reflections

        self.keys = [key for row in by_rank_keys for key in row]
        self.size = len(self.keys)
        self.index = {key: i for i, key in enumerate(self.keys)}
        self.rank = [rank_of[key] for key in self.keys]
        self.by_rank = []
        offset = 0
        for row in by_rank_keys:
            self.by_rank.append(list(range(offset, offset + len(row))))
            offset += len(row)
        self.identity_id = self.index[group.identity]
        self.gamma_id = self.index[group.gamma]

        self.lower_covers = [sorted((tpos, self.index[u])
                                    for tpos, u in lower[key])
                             for key in self.keys]
        self.upper_covers = [[] for _ in range(self.size)]
        for vid in range(self.size):
            for tpos, uid in self.lower_covers[vid]:
                self.upper_covers[uid].append((tpos, vid))
        for row in self.upper_covers:
            row.sort()

        self.atom_of_label = {}
        for aid in self.by_rank[1]:
            (tpos, _), = [c for c in self.lower_covers[aid]]
            self.atom_of_label[tpos] = aid
        assert len(self.atom_of_label) == group.num_reflections

        # leq bitsets, swept upward by rank
        bits = [0] * self.size
        for i in range(self.size):
            b = 1 << i
            for _, uid in self.lower_covers[i]:
                b |= bits[uid]
            bits[i] = b
        self.leq_bits = bits

        self._rex_memo: dict = {}
        self._dec_memo: dict = {}
        self._mobius: list | None = None
        self._chain_memo: dict = {}
        self._prefix_basis_memo: dict = {}

    # -- order ---------------------------------------------------------------

    def leq(self, uid: int, vid: int) -> bool:
        return bool(self.leq_bits[vid] >> uid & 1)

    def rank_row(self, k: int):
        return self.by_rank[k]

    def interval_ids(self, uid: int, vid: int):
        """All ids in [u, v], ascending by (rank, id)."""
        out = [wid for wid in self._bit_ids(self.leq_bits[vid])
               if self.leq(uid, wid)]
        out.sort(key=lambda wid: (self.rank[wid], wid))
        return out

    def _bit_ids(self, bitmask: int):
        while bitmask:
            low = bitmask & -bitmask
            yield low.bit_length() - 1
            bitmask ^= low

    def atoms_below(self, vid: int):
        """Labels (reflection positions) of the atoms below v, ascending."""
        return sorted(tpos for tpos, aid in self.atom_of_label.items()
                      if self.leq(aid, vid))

    # -- factorizations ------------------------------------------------------

    def reduced_factorizations(self, vid: int):
        """All reduced factorizations of v, as label tuples, lex order."""
        memo = self._rex_memo
        out = memo.get(vid)
        if out is not None:
            return out
        if vid == self.identity_id:
            out = ((),)
        else:
            seqs = []
            key = self.keys[vid]
            for tpos in self.atoms_below(vid):
                rest_key = self.group.multiply(self.group.reflection(tpos),
                                               key)
                rest_id = self.index[rest_key]
                for rest in self.reduced_factorizations(rest_id):
                    seqs.append((tpos,) + rest)
            out = tuple(seqs)
        memo[vid] = out
        return out

    def decreasing_factorizations(self, vid: int, bound: int | None = None):
        """Strictly decreasing reduced factorizations (entries < bound)."""
        if bound is None:
            bound = self.group.num_reflections
        memo = self._dec_memo
        state = (vid, bound)
        out = memo.get(state)
        if out is not None:
            return out
        if vid == self.identity_id:
            out = ((),)
        else:
            seqs = []
            key = self.keys[vid]
            for tpos in self.atoms_below(vid):
                if tpos >= bound:
                    continue
                rest_key = self.group.multiply(self.group.reflection(tpos),
                                               key)
                rest_id = self.index[rest_key]
                for rest in self.decreasing_factorizations(rest_id, tpos):
                    seqs.append((tpos,) + rest)
            out = tuple(sorted(seqs))
        memo[state] = out
        return out

    # -- chains and bases ----------------------------------------------------

    def increasing_chain(self, uid: int, vid: int):
        """Label sequence of the lex-first maximal chain from u to v, built
        by greedy least-label steps; raises if some step has no way up."""
        state = (uid, vid)
        cached = self._chain_memo.get(state)
        if cached is not None:
            return cached
        labels = []
        cur = uid
        while cur != vid:
            step = next(((tpos, wid) for tpos, wid in self.upper_covers[cur]
                         if self.leq(wid, vid)), None)
            if step is None:
                raise ValueError("no chain upward; not a lattice interval")
            labels.append(step[0])
            cur = step[1]
        out = tuple(labels)
        self._chain_memo[state] = out
        return out

    def rank_prefix_basis(self, k: int):
        """The degree-(k+1) basis label sequences: decreasing factorizations
        of rank-k elements extended by the first label of the increasing
        chain up to gamma; lex-sorted.

        Each returned sequence has length k+1; the extension label must stay
        below the last prefix entry, and the full increasing completion is
        checked to be strictly increasing.
        """
        out = self._prefix_basis_memo.get(k)
        if out is not None:
            return out
        seqs = []
        for wid in self.by_rank[k]:
            completion = self.increasing_chain(wid, self.gamma_id)
            assert completion, "rank below top must reach gamma"
            assert all(a < b for a, b in zip(completion, completion[1:])), (
                "greedy completion must be increasing")
            first = completion[0]
            for prefix in self.decreasing_factorizations(wid):
                if not prefix or prefix[-1] > first:
                    seqs.append(prefix + (first,))
        out = tuple(sorted(seqs))
        self._prefix_basis_memo[k] = out
        return out

    def mobius(self, vid: int) -> int:
        """Moebius value mu(identity, v)."""
        if self._mobius is None:
            mob = [0] * self.size
            for wid in range(self.size):  # ids ascend with rank
                if wid == self.identity_id:
                    mob[wid] = 1
                    continue
                below = 0
                for uid in self._bit_ids(self.leq_bits[wid] & ~(1 << wid)):
                    below += mob[uid]
                mob[wid] = -below
            self._mobius = mob
        return self._mobius[vid]

    # -- products ------------------------------------------------------------

    def id_of_labels(self, labels) -> int:
        """Lattice id of the product of the labelled reflections."""
        return self.index[self.group.sequence_product(labels)]

    def contains(self, key) -> bool:
        return key in self.index
