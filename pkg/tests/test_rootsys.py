"""Type parsing, root systems, and the fixed reflection order."""

import random

import pytest

from ncphom.rootsys import CoxeterType, RootSystem, TypeParseError
from ncphom.scalars import mat_mul, mat_vec


def test_parse_accepts_every_admissible_family():
    for name, family, rank in (("A1", "A", 1), ("A9", "A", 9),
                               ("B2", "B", 2), ("D3", "D", 3),
                               ("E6", "E", 6), ("E8", "E", 8),
                               ("F4", "F", 4), ("H3", "H", 3),
                               ("H4", "H", 4)):
        ct = CoxeterType.parse(name)
        assert (ct.family, ct.rank) == (family, rank)
        assert ct.name == name
    ct = CoxeterType.parse("I2(7)")
    assert ct.is_dihedral and ct.dihedral_order == 7
    assert CoxeterType.parse("  A3 ").name == "A3"


@pytest.mark.parametrize("bad", ["A0", "B1", "D2", "E5", "E9", "F3", "F5",
                                 "H2", "H5", "I2(2)", "I2(1)", "G2", "X4",
                                 "A", "3", "", "A3 B2"])
def test_parse_rejects_inadmissible_names(bad):
    with pytest.raises(TypeParseError):
        CoxeterType.parse(bad)


def test_reducible_rejections_explain_themselves():
    with pytest.raises(TypeParseError, match="reducible"):
        CoxeterType.parse("D2")
    with pytest.raises(TypeParseError, match="reducible"):
        CoxeterType.parse("I2(2)")


@pytest.mark.parametrize("name,reflections,order,coxnum", [
    ("A1", 1, 2, 2), ("A2", 3, 6, 3), ("A3", 6, 24, 4), ("A4", 10, 120, 5),
    ("B2", 4, 8, 4), ("B3", 9, 48, 6), ("B4", 16, 384, 8),
    ("D3", 6, 24, 4), ("D4", 12, 192, 6), ("D5", 20, 1920, 8),
    ("E6", 36, 51840, 12), ("E7", 63, 2903040, 18),
    ("E8", 120, 696729600, 30),
    ("F4", 24, 1152, 12), ("H3", 15, 120, 10), ("H4", 60, 14400, 30),
    ("I2(3)", 3, 6, 3), ("I2(7)", 7, 14, 7), ("I2(12)", 12, 24, 12),
])
def test_numerology(name, reflections, order, coxnum):
    ct = CoxeterType.parse(name)
    assert ct.num_reflections == reflections
    assert ct.group_order == order
    assert ct.coxeter_number == coxnum


def test_a3_reflection_order_is_pinned():
    """The root recurrence order everything downstream depends on."""
    rs = RootSystem(CoxeterType.parse("A3"))
    assert rs.ordered_roots == (
        (1, -1, 0, 0),
        (0, 0, 1, -1),
        (1, 0, 0, -1),
        (0, 1, 0, -1),
        (1, 0, -1, 0),
        (0, 1, -1, 0),
    )
    assert rs.color_classes == ((0, 2), (1,))


@pytest.mark.parametrize("name", ["A3", "B3", "D4", "F4", "H3"])
def test_root_system_consistency(name):
    ct = CoxeterType.parse(name)
    rs = RootSystem(ct)
    assert len(rs.ordered_roots) == ct.num_reflections
    assert len(set(rs.ordered_roots)) == ct.num_reflections
    assert rs.coxeter_order == ct.coxeter_number
    for m in rs.reflection_matrices:
        assert mat_mul(m, m) == rs.identity


@pytest.mark.parametrize("name", ["A3", "B3", "H3"])
def test_conjugate_position_matches_matrix_conjugation(name):
    rs = RootSystem(CoxeterType.parse(name))
    rng = random.Random(3)
    n = len(rs.reflection_matrices)
    for _ in range(40):
        i, j = rng.randrange(n), rng.randrange(n)
        mi, mj = rs.reflection_matrices[i], rs.reflection_matrices[j]
        conj = mat_mul(mat_mul(mj, mi), mj)
        assert rs.reflection_matrices[rs.conjugate_position(i, j)] == conj


def test_bipartite_classes_are_orthogonal():
    for name in ("A4", "B3", "H3"):
        rs = RootSystem(CoxeterType.parse(name))
        for cls in rs.color_classes:
            for i in cls:
                for j in cls:
                    if i != j:
                        ri = rs.simple_roots[i]
                        rj = rs.simple_roots[j]
                        assert sum((a * b for a, b in zip(ri, rj)),
                                   0 * ri[0]) == 0


def test_gamma_rotates_the_root_recurrence():
    rs = RootSystem(CoxeterType.parse("B3"))
    gamma = rs.coxeter_matrix_form
    n = rs.ctype.rank
    for k in range(n, len(rs.ordered_roots)):
        assert rs.ordered_roots[k] == mat_vec(gamma, rs.ordered_roots[k - n])


def test_dihedral_types_have_no_matrix_realization_here():
    with pytest.raises(ValueError):
        RootSystem(CoxeterType.parse("I2(5)"))
