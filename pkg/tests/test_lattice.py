"""The noncrossing partition lattice: sizes, order, factorizations,
chains, and Moebius values."""

import pytest

from conftest import lattice_for

EXPECTED_SIZES = {
    "A1": 2, "A2": 5, "A3": 14, "A4": 42, "A5": 132,
    "B2": 6, "B3": 20, "B4": 70,
    "D3": 14, "D4": 50,
    "F4": 105, "H3": 32,
    "I2(3)": 5, "I2(4)": 6, "I2(7)": 9, "I2(12)": 14,
}


@pytest.mark.parametrize("name,size", sorted(EXPECTED_SIZES.items()))
def test_lattice_sizes(name, size):
    assert lattice_for(name).size == size


def test_rank_rows_of_a3():
    lat = lattice_for("A3")
    assert [len(lat.by_rank[k]) for k in range(4)] == [1, 6, 6, 1]
    assert lat.rank[lat.identity_id] == 0
    assert lat.rank[lat.gamma_id] == 3


def test_leq_is_the_absolute_order():
    lat = lattice_for("B3")
    group = lat.group
    for uid in range(lat.size):
        for vid in range(lat.size):
            expected = group.absolute_leq(lat.keys[uid], lat.keys[vid])
            assert lat.leq(uid, vid) == expected


def test_cover_labels_multiply_up():
    lat = lattice_for("A3")
    group = lat.group
    for vid in range(lat.size):
        for tpos, uid in lat.lower_covers[vid]:
            assert lat.rank[uid] == lat.rank[vid] - 1
            assert group.multiply(lat.keys[uid],
                                  group.reflection(tpos)) == lat.keys[vid]


def test_atoms_below_are_the_first_letters():
    lat = lattice_for("B3")
    for vid in range(lat.size):
        firsts = sorted({seq[0] for seq in lat.reduced_factorizations(vid)
                         if seq})
        assert lat.atoms_below(vid) == firsts


def test_reduced_factorization_counts_on_a3():
    lat = lattice_for("A3")
    by_rank = {}
    for vid in range(lat.size):
        k = lat.rank[vid]
        by_rank.setdefault(k, []).append(len(lat.reduced_factorizations(vid)))
    assert by_rank[0] == [1]
    assert by_rank[1] == [1] * 6
    # four 3-cycles with three factorizations, two disjoint pairs with two
    assert sorted(by_rank[2]) == [2, 2, 3, 3, 3, 3]
    assert by_rank[3] == [16]


def test_factorizations_multiply_to_their_element_and_are_lex_sorted():
    lat = lattice_for("B3")
    group = lat.group
    for vid in range(lat.size):
        rex = lat.reduced_factorizations(vid)
        assert list(rex) == sorted(rex)
        for seq in rex:
            assert group.sequence_product(seq) == lat.keys[vid]
            assert len(seq) == lat.rank[vid]
        dec = lat.decreasing_factorizations(vid)
        assert set(dec) <= set(rex)
        for seq in dec:
            assert all(a > b for a, b in zip(seq, seq[1:]))


def test_pinned_a3_bases():
    lat = lattice_for("A3")
    assert lat.increasing_chain(lat.identity_id, lat.gamma_id) == (0, 1, 5)
    assert lat.rank_prefix_basis(1) == (
        (1, 0), (2, 0), (3, 1), (4, 0), (5, 3))
    assert lat.rank_prefix_basis(2) == (
        (2, 1, 0), (3, 2, 1), (4, 2, 0), (4, 3, 2), (5, 4, 3))
    gamma_dec = lat.decreasing_factorizations(lat.gamma_id)
    assert gamma_dec == (
        (2, 1, 0), (3, 2, 1), (4, 2, 0), (4, 3, 2), (5, 4, 3))


def test_increasing_chain_is_a_chain_with_ascending_labels():
    lat = lattice_for("B3")
    group = lat.group
    for vid in range(lat.size):
        for uid in lat.interval_ids(lat.identity_id, vid):
            chain = lat.increasing_chain(uid, vid)
            assert len(chain) == lat.rank[vid] - lat.rank[uid]
            assert all(a < b for a, b in zip(chain, chain[1:]))
            walked = lat.keys[uid]
            for tpos in chain:
                walked = group.multiply(walked, group.reflection(tpos))
            assert walked == lat.keys[vid]


@pytest.mark.parametrize("name,top_mobius", [
    ("A2", 2), ("A3", -5), ("B2", 3), ("B3", -10),
    ("H3", -21), ("I2(7)", 6),
])
def test_top_mobius_values(name, top_mobius):
    lat = lattice_for(name)
    assert lat.mobius(lat.gamma_id) == top_mobius


def test_mobius_recursion_sums_to_zero():
    lat = lattice_for("B3")
    for vid in range(lat.size):
        if vid == lat.identity_id:
            assert lat.mobius(vid) == 1
            continue
        total = sum(lat.mobius(uid)
                    for uid in lat.interval_ids(lat.identity_id, vid))
        assert total == 0


def test_mobius_counts_decreasing_factorizations():
    for name in ("A3", "B3", "I2(6)"):
        lat = lattice_for(name)
        for vid in range(lat.size):
            sign = -1 if lat.rank[vid] % 2 else 1
            assert len(lat.decreasing_factorizations(vid)) == (
                sign * lat.mobius(vid))


def test_interval_ids_are_sorted_by_rank():
    lat = lattice_for("A3")
    ids = lat.interval_ids(lat.identity_id, lat.gamma_id)
    assert ids == sorted(ids, key=lambda i: (lat.rank[i], i))
    assert len(ids) == lat.size
    atom = lat.by_rank[1][0]
    sub = lat.interval_ids(atom, lat.gamma_id)
    assert all(lat.leq(atom, i) for i in sub)


def test_id_of_labels_and_contains():
    lat = lattice_for("A3")
    assert lat.id_of_labels(()) == lat.identity_id
    assert lat.id_of_labels((0, 1, 5)) == lat.gamma_id
    assert lat.contains(lat.group.gamma)
    # a crossing pair: rank 2 in the group but outside the interval
    crossing = lat.group.sequence_product((2, 5))
    assert lat.group.reflection_length(crossing) == 2
    assert not lat.contains(crossing)
    with pytest.raises(KeyError):
        lat.id_of_labels((2, 5))
