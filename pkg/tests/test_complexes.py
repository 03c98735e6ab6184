"""The five chain complexes and the algebra differential."""

import pytest

from conftest import algebra_for
from ncphom import GroupCapExceeded, build_complex, homology_of
from ncphom.complexes import (build_algebra_complex,
                              fibre_support_is_reflections,
                              group_ring_boundary,
                              group_ring_square_is_zero)
from ncphom.homology import invariant_factors

SMALL = ("A2", "A3", "B2", "I2(5)")


@pytest.mark.parametrize("name", SMALL)
@pytest.mark.parametrize("space", ["FP", "FQ0", "FQ", "M", "MW"])
def test_boundary_squares_to_zero(name, space):
    build_complex(algebra_for(name), space).check_square_zero()


def test_unknown_space_is_rejected():
    with pytest.raises(ValueError, match="unknown space"):
        build_complex(algebra_for("A2"), "XX")


def test_quotient_fibre_dimensions_on_a3():
    cx = build_complex(algebra_for("A3"), "FP")
    assert cx.degrees == [1, 2, 3]
    assert [cx.dims[k] for k in cx.degrees] == [1, 5, 5]
    # one-dimensional target: the degree-2 boundary must vanish
    assert cx.matrices[2].is_zero()


def test_pinned_a3_quotient_fibre_top_boundary():
    """The full degree-3 boundary matrix, column by column."""
    algebra = algebra_for("A3")
    cx = build_complex(algebra, "FP")
    rows = algebra.cycle_basis(2).labels
    cols = algebra.cycle_basis(3).labels
    assert rows == ((1, 0), (2, 0), (3, 1), (4, 0), (5, 3))
    assert cols == ((2, 1, 0), (3, 2, 1), (4, 2, 0), (4, 3, 2), (5, 4, 3))
    expected_columns = {
        (2, 1, 0): {(1, 0): 1, (3, 1): 1, (4, 0): -1},
        (3, 2, 1): {(1, 0): 1, (2, 0): 1, (3, 1): 1, (4, 0): -1, (5, 3): 1},
        (4, 2, 0): {(1, 0): -1, (2, 0): 1, (5, 3): 1},
        (4, 3, 2): {(1, 0): 2, (3, 1): 1, (4, 0): -1},
        (5, 4, 3): {(1, 0): 1},
    }
    for c, label in enumerate(cols):
        got = {rows[r]: v for r, v in cx.matrices[3].column(c).items()}
        assert got == expected_columns[label], label


@pytest.mark.parametrize("name,expected", [
    ("A2", ["Z", "Z^2"]),
    ("A3", ["Z", "Z^2", "Z^2"]),
    ("B3", ["Z", "Z", "Z^3"]),
    ("I2(9)", ["Z", "Z^8"]),
])
def test_quotient_fibre_homology(name, expected):
    groups = homology_of(build_complex(algebra_for(name), "FP"))
    assert [str(h) for h in groups] == expected


def test_fibre_complexes_split_by_parity():
    algebra = algebra_for("B2")
    full = build_complex(algebra, "FQ")
    half = build_complex(algebra, "FQ0")
    assert full.degrees == half.degrees
    for k in full.degrees:
        assert full.dims[k] == 2 * half.dims[k]


def test_fibre_homology_doubles():
    algebra = algebra_for("A2")
    full = homology_of(build_complex(algebra, "FQ"))
    half = homology_of(build_complex(algebra, "FQ0"))
    assert [str(h) for h in half] == ["Z", "Z^4"]
    assert [h.doubled() for h in half] == full


def test_complement_boundary_in_degree_one():
    """d(w (x) beta_t) = (w t) (x) 1 - w (x) 1 for every reflection."""
    algebra = algebra_for("A2")
    group = algebra.group
    cx = build_complex(algebra, "M")
    elements = sorted(group.enumerate_elements())
    index = {w: i for i, w in enumerate(elements)}
    width = len(algebra.full_basis(1).labels)
    for wi, w in enumerate(elements):
        for tpos in range(width):
            col = cx.matrices[1].column(wi * width + tpos)
            moved = index[group.multiply(w, group.reflection(tpos))]
            assert col == {moved: 1, wi: -1}


@pytest.mark.parametrize("name,betti", [
    ("A2", [1, 3, 2]),
    ("A3", [1, 6, 11, 6]),
    ("B3", [1, 9, 23, 15]),
    ("I2(5)", [1, 5, 4]),
    ("I2(6)", [1, 6, 5]),
])
def test_complement_is_torsion_free_with_product_betti(name, betti):
    """Betti numbers multiply out of the exponents, no torsion."""
    groups = homology_of(build_complex(algebra_for(name), "M"))
    assert [h.free_rank for h in groups] == betti
    assert all(not h.torsion for h in groups)


@pytest.mark.parametrize("m,expected", [
    (5, ["Z", "Z", "0"]), (7, ["Z", "Z", "0"]),
    (6, ["Z", "Z^2", "Z"]), (8, ["Z", "Z^2", "Z"]),
])
def test_orbit_complement_dihedral_parity(m, expected):
    groups = homology_of(build_complex(algebra_for(f"I2({m})"), "MW"))
    assert [str(h) for h in groups] == expected


def test_group_cap_stops_enumeration():
    with pytest.raises(GroupCapExceeded):
        build_complex(algebra_for("A3"), "M", cap=10)


def test_algebra_complex_is_exact_with_pinned_ranks():
    algebra = algebra_for("A3")
    cx = build_algebra_complex(algebra)
    cx.check_square_zero()
    assert [cx.dims[k] for k in cx.degrees] == [1, 6, 10, 5]
    assert [invariant_factors(cx.matrices[k])[1] for k in (1, 2, 3)] == [
        1, 5, 5]
    assert all(h.is_trivial for h in homology_of(cx))
    ones = cx.matrices[1]
    assert all(ones.column(c) == {0: 1} for c in range(cx.dims[1]))


def test_group_ring_boundary_matches_materialized_fibre():
    """Entries of the symbolic boundary, specialized at each group
    element, reproduce the materialized FQ matrix."""
    algebra = algebra_for("A2")
    group = algebra.group
    symbolic = group_ring_boundary(algebra, "FQ", 2)
    cx = build_complex(algebra, "FQ")
    elements = sorted(group.enumerate_elements())
    index = {w: i for i, w in enumerate(elements)}
    prev_labels = algebra.cycle_basis(1).labels
    labels = algebra.cycle_basis(2).labels
    rebuilt = {}
    for (row_label, col_label), poly in symbolic.items():
        r = prev_labels.index(row_label)
        c = labels.index(col_label)
        for wi, w in enumerate(elements):
            for elem, coeff in poly.items():
                target = index[group.multiply(w, elem)]
                key = (target * len(prev_labels) + r,
                       wi * len(labels) + c)
                rebuilt[key] = rebuilt.get(key, 0) + coeff
    rebuilt = {k: v for k, v in rebuilt.items() if v}
    assert rebuilt == cx.matrices[2].entries


@pytest.mark.parametrize("name", ["B3", "D4"])
def test_group_ring_squares_vanish(name):
    algebra = algebra_for(name)
    assert group_ring_square_is_zero(algebra, "FQ")
    assert group_ring_square_is_zero(algebra, "M")


def test_fibre_boundary_support_is_reflections():
    assert fibre_support_is_reflections(algebra_for("A3"))
    assert fibre_support_is_reflections(algebra_for("B3"))
