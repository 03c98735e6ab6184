"""Antisymmetrized chains, interval cycles, the shuffle product, bases,
and coordinates.

Two independent oracles anchor the core constructions:

- the extraction-order expansion of the alternating chain (sum over all
  orders of pulling entries to the front, signed by extraction
  positions), computed without the recursion the implementation uses;
- the simplicial boundary of the order complex of an open interval,
  which every interval cycle must annihilate.
"""

import random
from itertools import permutations

import pytest

from conftest import algebra_for
from ncphom.chain_algebra import add_into, chain_sum


def brute_alternating_chain(algebra, seq):
    """Sum over extraction orders, independent of the recursion."""
    out = {}
    k = len(seq)
    for order in permutations(range(k)):
        current = list(seq)
        originals = list(range(k))
        key = []
        sign = 1
        for target in order:
            pos = originals.index(target)
            if pos % 2:
                sign = -sign
            picked = current[pos]
            current = [algebra._conj(current[j], picked) if j < pos
                       else current[j]
                       for j in range(len(current)) if j != pos]
            originals.pop(pos)
            key.append(picked)
        add_into(out, tuple(key), sign)
    return out


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "I2(5)"])
def test_alternating_chain_matches_extraction_oracle(name):
    algebra = algebra_for(name)
    rng = random.Random(17)
    n = algebra.group.num_reflections
    for length in (1, 2, 3, 4):
        for _ in range(12):
            seq = tuple(rng.randrange(n) for _ in range(length))
            assert algebra.alternating_chain(seq) == brute_alternating_chain(
                algebra, seq)


def test_pinned_a2_chains():
    algebra = algebra_for("A2")
    assert algebra.alternating_chain((1, 0)) == {(1, 0): 1, (0, 2): -1}
    assert algebra.alternating_chain((2, 1)) == {(2, 1): 1, (1, 0): -1}
    assert algebra.interval_cycle((2, 1)) == {(2,): 1, (1,): -1}
    assert algebra.alternating_chain(()) == {(): 1}


def test_chain_keys_stay_reduced_in_the_lattice():
    algebra = algebra_for("B3")
    lat = algebra.lat
    for vid in range(lat.size):
        for seq in lat.reduced_factorizations(vid):
            for key in algebra.alternating_chain(seq):
                assert algebra._reduced_lattice_id(key) == vid
            for key in algebra.interval_cycle(seq):
                assert algebra._reduced_lattice_id(key) is not None


def simplicial_boundary_of_cycle(algebra, seq):
    """Push an interval cycle into the order complex of the open interval
    below product(seq) and take the augmented simplicial boundary."""
    group = algebra.group
    out = {}
    for key, coeff in algebra.interval_cycle(seq).items():
        flag = []
        walked = group.identity
        for tpos in key:
            walked = group.multiply(walked, group.reflection(tpos))
            flag.append(walked)
        flag = tuple(flag)
        for j in range(len(flag)):
            face = flag[:j] + flag[j + 1:]
            sign = -1 if j % 2 else 1
            add_into(out, face, sign * coeff)
    return out


@pytest.mark.parametrize("name", ["A3", "B3"])
def test_interval_cycles_kill_the_simplicial_boundary(name):
    algebra = algebra_for(name)
    lat = algebra.lat
    checked = 0
    for vid in range(lat.size):
        if lat.rank[vid] < 2:
            continue
        for seq in lat.reduced_factorizations(vid):
            assert simplicial_boundary_of_cycle(algebra, seq) == {}
            checked += 1
    assert checked > 0


def test_hurwitz_moves_are_braid_moves():
    algebra = algebra_for("A3")
    group = algebra.group
    rng = random.Random(2)
    n = group.num_reflections
    for _ in range(300):
        seq = tuple(rng.randrange(n) for _ in range(5))
        i = rng.randrange(4)
        moved = algebra.hurwitz_move(seq, i)
        assert group.sequence_product(moved) == group.sequence_product(seq)
        assert algebra.hurwitz_move(moved, i, inverse=True) == seq
    with pytest.raises(IndexError):
        algebra.hurwitz_move((0, 1), 1)


def test_deleted_conjugate_shifts_the_product():
    algebra = algebra_for("B3")
    group = algebra.group
    rng = random.Random(6)
    n = group.num_reflections
    for _ in range(100):
        seq = tuple(rng.randrange(n) for _ in range(4))
        i = rng.randrange(4)
        rest = algebra.deleted_conjugate(seq, i)
        lhs = group.multiply(group.reflection(seq[i]),
                             group.sequence_product(rest))
        assert lhs == group.sequence_product(seq)


def test_shuffle_of_generators_is_the_two_letter_chain():
    algebra = algebra_for("A2")
    got = algebra.shuffle_product({(1,): 1}, {(0,): 1})
    assert got == {(1, 0): 1, (0, 2): -1}
    assert got == algebra.alternating_chain((1, 0))


def test_shuffle_builds_longer_alternating_chains():
    algebra = algebra_for("B3")
    rng = random.Random(31)
    n = algebra.group.num_reflections
    for _ in range(20):
        seq = tuple(rng.randrange(n) for _ in range(3))
        prod = algebra.shuffle_product(
            algebra.shuffle_product({(seq[0],): 1}, {(seq[1],): 1}),
            {(seq[2],): 1})
        assert prod == algebra.alternating_chain(seq)


def test_shuffle_is_associative_on_random_chains():
    algebra = algebra_for("A3")
    rng = random.Random(12)
    n = algebra.group.num_reflections

    def random_chain():
        out = {}
        for _ in range(3):
            key = tuple(rng.randrange(n)
                        for _ in range(rng.randint(0, 2)))
            add_into(out, key, rng.randint(-2, 2))
        return out

    for _ in range(40):
        x, y, z = random_chain(), random_chain(), random_chain()
        left = algebra.shuffle_product(algebra.shuffle_product(x, y), z)
        right = algebra.shuffle_product(x, algebra.shuffle_product(y, z))
        assert left == right


def test_reduced_product_projects_off_lattice_shuffles():
    algebra = algebra_for("A3")
    # positions 2 and 5 multiply to a crossing pair, which is outside
    # the lattice, so the product dies entirely
    assert algebra.reduced_product({(2,): 1}, {(5,): 1}) == {}
    # squares die because repeated letters are never reduced
    for i in range(algebra.group.num_reflections):
        assert algebra.reduced_product({(i,): 1}, {(i,): 1}) == {}


def test_rank_two_cyclic_relation_on_dihedral():
    algebra = algebra_for("I2(5)")
    lat = algebra.lat
    total = {}
    for seq in lat.reduced_factorizations(lat.gamma_id):
        part = algebra.reduced_product({(seq[0],): 1}, {(seq[1],): 1})
        total = chain_sum((total, 1), (part, 1))
    assert total == {}


def test_leibniz_identity_on_a3():
    algebra = algebra_for("A3")
    lat = algebra.lat
    for seq in lat.reduced_factorizations(lat.gamma_id):
        lhs = algebra.interval_cycle(seq)
        for i in (1, 2):
            pre, suf = seq[:i], seq[i:]
            sign = -1 if (len(seq) - i) % 2 else 1
            rhs = chain_sum(
                (algebra.reduced_product(algebra.interval_cycle(pre),
                                         algebra.alternating_chain(suf)),
                 sign),
                (algebra.reduced_product(algebra.alternating_chain(pre),
                                         algebra.interval_cycle(suf)), 1))
            assert lhs == rhs


def test_full_basis_sizes_follow_mobius():
    algebra = algebra_for("A3")
    assert [len(algebra.full_basis(k).labels) for k in range(4)] == [
        1, 6, 10, 5]
    assert algebra.full_basis(3).labels == (
        (2, 1, 0), (3, 2, 1), (4, 2, 0), (4, 3, 2), (5, 4, 3))


def test_cycle_basis_tracks_rank_prefixes():
    algebra = algebra_for("A3")
    basis = algebra.cycle_basis(2)
    assert basis.labels == ((1, 0), (2, 0), (3, 1), (4, 0), (5, 3))
    for label, expansion in zip(basis.labels, basis.expansions):
        assert expansion == algebra.interval_cycle(label)
        assert max(expansion) == label[:-1]


def test_coords_round_trip_in_full_bases():
    algebra = algebra_for("A3")
    rng = random.Random(29)
    for k in (1, 2, 3):
        basis = algebra.full_basis(k)
        for _ in range(10):
            coeffs = [rng.randint(-3, 3) for _ in basis.labels]
            chain = {}
            for c, expansion in zip(coeffs, basis.expansions):
                chain = chain_sum((chain, 1), (expansion, c))
            assert algebra.coords_in_basis(chain, basis) == coeffs


def test_coords_reject_chains_outside_the_span():
    algebra = algebra_for("A3")
    with pytest.raises(ValueError, match="not in span"):
        algebra.coords_in_basis({(0, 0): 1}, algebra.full_basis(2))


def test_sparse_coordinate_wrappers_agree():
    algebra = algebra_for("A3")
    lat = algebra.lat
    for vid in lat.rank_row(2):
        for seq in lat.reduced_factorizations(vid):
            dense = algebra.coords_in_basis(algebra.alternating_chain(seq),
                                            algebra.full_basis(2))
            sparse = algebra.chain_coords(seq, 2)
            assert sparse == {p: c for p, c in enumerate(dense) if c}
    gamma_seqs = lat.reduced_factorizations(lat.gamma_id)
    for seq in gamma_seqs:
        dense = algebra.coords_in_basis(algebra.interval_cycle(seq),
                                        algebra.cycle_basis(3))
        assert algebra.cycle_coords(seq, 3) == {
            p: c for p, c in enumerate(dense) if c}
