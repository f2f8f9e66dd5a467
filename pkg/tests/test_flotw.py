import pytest

from grpn.clifford import apply_varpi, varpi
from grpn.combinat import Multipartition, Partition, enumerate_multipartitions
from grpn.errors import ComponentMismatch
from grpn.flotw import (
    Node,
    block_flotw,
    enumerate_flotw,
    enumerate_lambda1,
    is_flotw,
    residue,
    rim_residues,
)
from grpn.kleshchev import enumerate_kleshchev
from grpn.params import build_parameters, charge_data

mp = Multipartition.from_parts


def test_residue_examples(spec4210):
    cd = charge_data(spec4210)
    assert residue(Node(1, 1, 1), cd, 4) == 0
    assert residue(Node(1, 2, 1), cd, 4) == 1
    assert residue(Node(1, 1, 2), cd, 4) == 2
    with pytest.raises(ComponentMismatch):
        residue(Node(1, 1, 3), cd, 4)


def test_is_flotw_examples(spec4210):
    assert is_flotw(mp([[], []]), spec4210)
    assert is_flotw(mp([[1], []]), spec4210)
    assert is_flotw(mp([[], [1]]), spec4210)
    # first cylindrical condition with equal charges
    spec = build_parameters(2, 1, 2, (0, 0))
    assert not is_flotw(mp([[], [1]]), spec)
    assert is_flotw(mp([[1], []]), spec)


def test_is_flotw_residue_condition(spec2210):
    # both columns complete the residue set mod 2
    assert not is_flotw(mp([[1], [1]]), spec2210)
    assert is_flotw(mp([[2], []]), spec2210)


def test_is_flotw_hand_checked_size_two(spec4210):
    assert all(is_flotw(lam, spec4210) for lam in enumerate_multipartitions(2, 2))


def test_is_flotw_hand_checked_size_three(spec4210, spec2210):
    flotw3 = [lam.to_lists() for lam in enumerate_flotw(3, spec4210)]
    assert flotw3 == [
        [[3], []],
        [[2, 1], []],
        [[2], [1]],
        [[1, 1], [1]],
        [[1], [2]],
        [[1], [1, 1]],
        [[], [3]],
        [[], [2, 1]],
    ]
    assert [lam.to_lists() for lam in enumerate_flotw(3, spec2210)] == [
        [[3], []],
        [[2], [1]],
        [[1], [2]],
        [[], [3]],
    ]


def test_component_count_checked(spec4210):
    with pytest.raises(ComponentMismatch):
        is_flotw(mp([[1]]), spec4210)


def test_enumerate_flotw_basics(spec4210):
    assert [lam.to_lists() for lam in enumerate_flotw(0, spec4210)] == [[[], []]]
    assert len(enumerate_flotw(1, spec4210)) == 2


def test_flotw_counts_match_kleshchev(matrix_specs):
    for spec in matrix_specs:
        for n in range(5):
            assert len(enumerate_flotw(n, spec)) == len(enumerate_kleshchev(n, spec))


def test_enumerate_lambda1_p_prime_one(spec4210):
    for n in range(4):
        assert [lam.to_lists() for lam in enumerate_lambda1(n, spec4210)] == [
            lam.to_lists() for lam in enumerate_flotw(n, spec4210)
        ]


def test_enumerate_lambda1_block_convolution(spec2410):
    assert len(enumerate_lambda1(0, spec2410)) == 1
    # blocks (1,0) and (0,1), each factor of size one has two FLOTW shapes
    per_block = len(enumerate_flotw(1, spec2410))
    assert len(enumerate_lambda1(1, spec2410)) == 2 * per_block
    for lam in enumerate_lambda1(2, spec2410):
        assert lam.r == 4
        assert block_flotw(lam, spec2410)


def test_varpi_stability(matrix_specs):
    for spec in matrix_specs:
        action = varpi(spec)
        for n in range(5):
            for lam in enumerate_lambda1(n, spec):
                assert block_flotw(apply_varpi(lam, action), spec)


def test_rim_residue_rotation(matrix_specs):
    # rotating a block shifts every right-rim residue by e' mod e
    for spec in matrix_specs:
        cd = charge_data(spec)
        delta, fd = spec.delta, spec.fd
        for n in range(5):
            for lam in enumerate_flotw(n, spec):
                comps = lam.components
                rotated = Multipartition(comps[fd - delta :] + comps[: fd - delta])
                original = rim_residues(lam, cd, spec.e)
                moved = rim_residues(rotated, cd, spec.e)
                assert set(original) == set(moved)
                for col, residues in original.items():
                    shifted = sorted((x + spec.eprime) % spec.e for x in residues)
                    assert shifted == sorted(moved[col])


def test_predicate_total_after_row_removal(matrix_specs):
    for spec in matrix_specs:
        for lam in enumerate_flotw(4, spec):
            for c in range(lam.r):
                comps = list(lam.components)
                if not comps[c].parts:
                    continue
                comps[c] = Partition(comps[c].parts[:-1])
                trimmed = Multipartition(tuple(comps))
                assert is_flotw(trimmed, spec) in (True, False)
