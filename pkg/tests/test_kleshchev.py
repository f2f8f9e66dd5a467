import pytest

from grpn.combinat import Multipartition, empty_multipartition, enumerate_partitions
from grpn.flotw import Node, enumerate_flotw
from grpn.kleshchev import (
    SIGNATURE_ORDERS,
    addable_nodes,
    addable_removable_profile,
    add_node,
    enumerate_kleshchev,
    enumerate_lambda0,
    good_node,
    good_removable_node,
    remove_node,
    removable_nodes,
)
from grpn.params import build_parameters, charge_data

mp = Multipartition.from_parts


def test_addable_removable_nodes():
    shape = mp([[2, 1], []])
    assert addable_nodes(shape) == [
        Node(1, 3, 1), Node(2, 2, 1), Node(3, 1, 1), Node(1, 1, 2),
    ]
    assert removable_nodes(shape) == [Node(1, 2, 1), Node(2, 1, 1)]


def test_add_remove_roundtrip():
    shape = mp([[2, 1], []])
    grown = add_node(shape, Node(2, 2, 1))
    assert grown.to_lists() == [[2, 2], []]
    assert remove_node(grown, Node(2, 2, 1)) == shape
    assert add_node(shape, Node(1, 1, 2)).to_lists() == [[2, 1], [1]]


def test_profile_on_empty_shape(spec4210):
    cd = charge_data(spec4210)
    empty = empty_multipartition(2)
    # one addable corner per component whose charge matches i
    assert addable_removable_profile(empty, 0, cd, 4) == "A"
    assert addable_removable_profile(empty, 2, cd, 4) == "A"
    assert addable_removable_profile(empty, 1, cd, 4) == ""


def test_profile_examples(spec4210):
    cd = charge_data(spec4210)
    shape = mp([[1], []])
    assert addable_removable_profile(shape, 1, cd, 4) == "A"
    assert addable_removable_profile(shape, 0, cd, 4) == "R"
    assert addable_removable_profile(shape, 2, cd, 4) == "A"


def test_good_node_on_empty(spec4210):
    cd = charge_data(spec4210)
    empty = empty_multipartition(2)
    assert good_node(empty, 0, cd, 4) == Node(1, 1, 1)
    assert good_node(empty, 2, cd, 4) == Node(1, 1, 2)
    assert good_node(empty, 1, cd, 4) is None


def test_all_r_signature_has_no_good_node(spec4210):
    cd = charge_data(spec4210)
    shape = mp([[1], []])
    assert addable_removable_profile(shape, 0, cd, 4) == "R"
    assert good_node(shape, 0, cd, 4) is None
    assert good_removable_node(shape, 0, cd, 4) == Node(1, 1, 1)


def test_depth_one_vertices(spec4210):
    vertices = enumerate_kleshchev(1, spec4210)
    assert {v.to_lists()[0] == [1] or v.to_lists()[1] == [1] for v in vertices}
    assert sorted(v.to_lists() for v in vertices) == [[[], [1]], [[1], []]]


def test_depth_three_vertices_hand_checked(spec4210):
    got = sorted(v.to_lists() for v in enumerate_kleshchev(3, spec4210))
    assert got == sorted(
        [
            [[3], []], [[2, 1], []], [[1, 1, 1], []], [[2], [1]],
            [[1, 1], [1]], [[1], [2]], [[], [2, 1]], [[1], [1, 1]],
        ]
    )


def test_level_one_crystal_is_e_regular():
    # single component, charge 0: depth-n vertices are the partitions with
    # no part repeated e times or more
    for e in (2, 3, 4):
        spec = build_parameters(e, 1, 1, (0,))
        for n in range(8):
            regular = [
                p
                for p in enumerate_partitions(n)
                if all(list(p.parts).count(x) < e for x in set(p.parts))
            ]
            got = enumerate_kleshchev(n, spec)
            assert sorted(g.components[0].parts for g in got) == sorted(
                p.parts for p in regular
            )


def test_both_orders_give_equal_counts(matrix_specs):
    for spec in matrix_specs:
        for n in range(5):
            asc = len(enumerate_kleshchev(n, spec, "asc"))
            desc = len(enumerate_kleshchev(n, spec, "desc"))
            assert asc == desc == len(enumerate_flotw(n, spec))


def test_orders_differ_as_sets(spec2210):
    # same cardinality, genuinely different vertex sets
    asc = {lam for lam in enumerate_kleshchev(3, spec2210, "asc")}
    desc = {lam for lam in enumerate_kleshchev(3, spec2210, "desc")}
    assert len(asc) == len(desc)
    assert asc != desc


def test_unknown_order_rejected(spec4210):
    with pytest.raises(ValueError):
        enumerate_kleshchev(1, spec4210, "bogus")


def test_corrupt_reading_order_breaks_the_count(spec4210):
    # interleaving rows across components is not a valid reading order;
    # the count identity detects it
    SIGNATURE_ORDERS["rowmajor"] = lambda nodes: sorted(
        nodes, key=lambda nd: (nd.row, nd.comp)
    )
    try:
        broken = len(enumerate_kleshchev(3, spec4210, "rowmajor"))
        assert broken == 7  # FLOTW count is 8
        assert broken != len(enumerate_flotw(3, spec4210))
    finally:
        del SIGNATURE_ORDERS["rowmajor"]


def test_every_vertex_has_a_good_removal(matrix_specs):
    for spec in matrix_specs:
        cd = charge_data(spec)
        previous = set(enumerate_kleshchev(0, spec))
        for n in range(1, 5):
            layer = enumerate_kleshchev(n, spec)
            for shape in layer:
                parents = []
                for i in range(spec.e):
                    nd = good_removable_node(shape, i, cd, spec.e)
                    if nd is not None:
                        parents.append(remove_node(shape, nd))
                assert parents, f"no good removal from {shape.to_lists()}"
                assert any(parent in previous for parent in parents)
            previous = set(layer)


def test_enumeration_is_deterministic(spec4210):
    first = enumerate_kleshchev(4, spec4210)
    assert first == enumerate_kleshchev(4, spec4210)


def test_lambda0_basics(spec4210, spec2410):
    assert [lam.to_lists() for lam in enumerate_lambda0(0, spec2410)] == [
        [[], [], [], []]
    ]
    for n in range(4):
        reshaped = [lam.to_lists() for lam in enumerate_kleshchev(n, spec4210)]
        assert [lam.to_lists() for lam in enumerate_lambda0(n, spec4210)] == reshaped
    # block convolution at n = 1
    per_block = len(enumerate_kleshchev(1, spec2410))
    assert len(enumerate_lambda0(1, spec2410)) == 2 * per_block
