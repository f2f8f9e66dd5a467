"""Node residues and the FLOTW (cylindrical) multipartition predicate.

A node (a, b, c) — row a, column b, component c, all 1-based — has residue
``(b - a + w_c) mod e`` for the extended charges w.  An f*delta-partition is
FLOTW when the cylindrical inequalities hold between consecutive components
(with wrap-around) and no column's right-rim residue set is complete.
"""

from __future__ import annotations

from itertools import product
from typing import NamedTuple

from .combinat import (
    Multipartition,
    compositions,
    enumerate_multipartitions,
)
from .errors import ComponentMismatch
from .params import ChargeData, ParameterSpec, blocks, charge_data


class Node(NamedTuple):
    row: int
    col: int
    comp: int


def residue(node: Node, charges: ChargeData, e: int) -> int:
    """Residue exponent (col - row + w_comp) mod e."""
    if not 1 <= node.comp <= charges.fd:
        raise ComponentMismatch(
            f"component {node.comp} out of [1, {charges.fd}]"
        )
    return (node.col - node.row + charges.w[node.comp - 1]) % e


def rim_residues(
    mu: Multipartition, charges: ChargeData, e: int
) -> dict[int, list[int]]:
    """Residues of the row-end nodes of mu, grouped by column.

    The row-end node of row a in component c sits in column mu(c)_a; together
    with the column-k restriction this selects the rows of length exactly k.
    """
    out: dict[int, list[int]] = {}
    for c in range(1, mu.r + 1):
        for a, length in enumerate(mu.component(c).parts, start=1):
            out.setdefault(length, []).append(
                residue(Node(a, length, c), charges, e)
            )
    return out


def is_flotw(lam: Multipartition, spec: ParameterSpec) -> bool:
    """The four FLOTW conditions for an f*delta-partition.

    1. within a charge block:  lam((i-1)d+j)_k >= lam((i-1)d+j+1)_{k+v_{j+1}-v_j}
    2. between blocks:         lam(i*d)_k      >= lam(i*d+1)_{k+v_1+e'-v_d}
    3. wrap-around:            lam(f*d)_k      >= lam(1)_{k+v_1+e'-v_d}
    4. for every column k, the set of residues of the column-k right-rim nodes
       has fewer than e elements.
    """
    fd = spec.fd
    if lam.r != fd:
        raise ComponentMismatch(f"expected {fd} components, got {lam.r}")
    v = spec.charges
    delta = spec.delta
    wrap_shift = v[0] + spec.eprime - v[-1]
    max_height = max((c.height for c in lam.components), default=0)

    def dominates(upper: int, lower: int, shift: int) -> bool:
        a, b = lam.component(upper), lam.component(lower)
        return all(
            a.part(k) >= b.part(k + shift) for k in range(1, max_height + 1)
        )

    for i in range(1, spec.f + 1):
        for j in range(1, delta):
            if not dominates(
                (i - 1) * delta + j, (i - 1) * delta + j + 1, v[j] - v[j - 1]
            ):
                return False
    for i in range(1, spec.f):
        if not dominates(i * delta, i * delta + 1, wrap_shift):
            return False
    if not dominates(fd, 1, wrap_shift):
        return False

    charges = charge_data(spec)
    for residues in rim_residues(lam, charges, spec.e).values():
        if len(set(residues)) == spec.e:
            return False
    return True


def enumerate_flotw(nprime: int, spec: ParameterSpec) -> list[Multipartition]:
    """All FLOTW f*delta-partitions of size nprime, in enumeration order."""
    return [
        lam
        for lam in enumerate_multipartitions(nprime, spec.fd)
        if is_flotw(lam, spec)
    ]


def enumerate_lambda1(n: int, spec: ParameterSpec) -> list[Multipartition]:
    """All r-partitions of n whose p' blocks are each FLOTW, flattened in
    block order (the label set of the root-of-unity parametrization)."""
    per_size: dict[int, list[Multipartition]] = {}

    def flotw_of(k: int) -> list[Multipartition]:
        if k not in per_size:
            per_size[k] = enumerate_flotw(k, spec)
        return per_size[k]

    out: list[Multipartition] = []
    for comp in compositions(n, spec.pprime):
        for chosen in product(*(flotw_of(k) for k in comp)):
            components = sum((block.components for block in chosen), ())
            out.append(Multipartition(components))
    return out


def block_flotw(lam: Multipartition, spec: ParameterSpec) -> bool:
    """Whether every block of an r-partition is FLOTW (membership in the label set)."""
    return all(is_flotw(block, spec) for block in blocks(lam, spec))
