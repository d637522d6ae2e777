import pytest

from fqg.algebra import InvalidDataError
from fqg.groups import (CATALOG, cyclic, dihedral, direct_product,
                        group_from_table, klein4, named_group, quaternion8,
                        symmetric)


def test_catalog_orders():
    expected = {"Z2": 2, "Z3": 3, "Z4": 4, "Z5": 5, "Z6": 6, "Z7": 7, "Z8": 8,
                "K4": 4, "S3": 6, "S4": 24, "D4": 8, "Q8": 8}
    for name in CATALOG:
        assert named_group(name).order == expected[name]


def test_trivial_group():
    g = cyclic(1)
    assert g.order == 1 and g.identity == 0


def test_symmetric3_nonabelian():
    s3 = symmetric(3)
    assert s3.order == 6
    assert not s3.is_abelian()
    with pytest.raises(InvalidDataError):
        symmetric(5)


def test_identity_is_index_zero_everywhere():
    for name in CATALOG:
        assert named_group(name).identity == 0


def test_latin_square_rejection():
    with pytest.raises(InvalidDataError):
        group_from_table([[0, 0], [1, 1]])


def test_associativity_rejection():
    # a Latin square with two-sided identity that is not a group (order 5 loop)
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(InvalidDataError):
        group_from_table(table)


def test_identity_normalization():
    # Z2 written with the identity at index 1
    g = group_from_table([[1, 0], [0, 1]])
    assert g.identity == 0
    assert g.table == ((0, 1), (1, 0))


def test_quaternion_structure():
    q8 = quaternion8()
    assert q8.order == 8
    orders = sorted(q8.element_order(x) for x in range(8))
    assert orders == [1, 2, 4, 4, 4, 4, 4, 4]
    minus_one = next(x for x in range(8) if q8.element_order(x) == 2)
    i = next(x for x in range(8) if q8.element_order(x) == 4)
    assert q8.mul(i, i) == minus_one
    assert not q8.is_abelian()


def test_dihedral_4():
    d4 = dihedral(4)
    assert d4.order == 8 and not d4.is_abelian()
    assert sorted(d4.element_order(x) for x in range(8)) == [1, 2, 2, 2, 2, 2, 4, 4]
    with pytest.raises(InvalidDataError):
        dihedral(2)


def test_klein4_and_products():
    k4 = klein4()
    assert k4.order == 4 and all(k4.element_order(x) <= 2 for x in range(4))
    z6 = direct_product(cyclic(2), cyclic(3))
    assert z6.order == 6 and z6.is_abelian()
    assert named_group("Z2xZ2").order == 4


def test_element_orders_and_exponent():
    z6 = cyclic(6)
    assert [z6.element_order(x) for x in range(6)] == [1, 6, 3, 2, 3, 6]
    assert z6.exponent() == 6
    assert named_group("S3").exponent() == 6


def test_generating_sequence_generates():
    for name in ("Z8", "S3", "D4", "Q8", "S4"):
        g = named_group(name)
        gens = g.generating_sequence()
        closure = {g.identity}
        frontier = [g.identity]
        while frontier:
            fresh = []
            for x in frontier:
                for s in gens:
                    for y in (g.mul(x, s), g.mul(s, x)):
                        if y not in closure:
                            closure.add(y)
                            fresh.append(y)
            frontier = fresh
        assert len(closure) == g.order


def test_unknown_name_rejected():
    with pytest.raises(InvalidDataError):
        named_group("E8")
