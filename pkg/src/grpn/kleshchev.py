"""Good-node crystal enumeration of Kleshchev multipartitions.

For a residue i, every addable/removable i-node of a shape is written as an
A/R letter in a fixed reading order; adjacent "A then R" pairs cancel until
none remain, and the good addable node is the first surviving A.  Reading
orders live in ``SIGNATURE_ORDERS``; the two shipped orders are the two
tensor directions through the components and give the same vertex counts at
every depth (they model the same highest-weight crystal), which is what the
cross-checks against the FLOTW enumeration verify.  A reading order that is
not a tensor direction breaks those counts, which is exactly how a wrong
convention is detected.
"""

from __future__ import annotations

from itertools import product
from typing import Callable, Iterable, Optional

from .combinat import Multipartition, Partition, compositions, empty_multipartition
from .flotw import Node, residue
from .params import ChargeData, ParameterSpec, charge_data

OrderFn = Callable[[Iterable[Node]], list[Node]]

SIGNATURE_ORDERS: dict[str, OrderFn] = {
    "asc": lambda nodes: sorted(nodes, key=lambda nd: (nd.comp, nd.row)),
    "desc": lambda nodes: sorted(nodes, key=lambda nd: (-nd.comp, -nd.row)),
}
DEFAULT_SIGNATURE_ORDER = "asc"


def addable_nodes(shape: Multipartition) -> list[Node]:
    """Cells whose addition keeps every component a partition."""
    out = []
    for c in range(1, shape.r + 1):
        comp = shape.component(c)
        for a in range(1, comp.height + 2):
            if a == 1 or comp.part(a) < comp.part(a - 1):
                out.append(Node(a, comp.part(a) + 1, c))
    return out


def removable_nodes(shape: Multipartition) -> list[Node]:
    """Row-end cells whose removal keeps every component a partition."""
    out = []
    for c in range(1, shape.r + 1):
        comp = shape.component(c)
        for a in range(1, comp.height + 1):
            if comp.part(a) > comp.part(a + 1):
                out.append(Node(a, comp.part(a), c))
    return out


def _signature(
    shape: Multipartition,
    i: int,
    charges: ChargeData,
    e: int,
    order: str,
) -> list[tuple[Node, str]]:
    try:
        arrange = SIGNATURE_ORDERS[order]
    except KeyError:
        raise ValueError(
            f"unknown signature order {order!r}; known: {sorted(SIGNATURE_ORDERS)}"
        ) from None
    letters = {}
    for nd in addable_nodes(shape):
        if residue(nd, charges, e) == i % e:
            letters[nd] = "A"
    for nd in removable_nodes(shape):
        if residue(nd, charges, e) == i % e:
            letters[nd] = "R"
    return [(nd, letters[nd]) for nd in arrange(letters)]


def _reduce(sig: list[tuple[Node, str]]) -> list[tuple[Node, str]]:
    """Cancel adjacent (A, R) pairs until the word reads R...RA...A."""
    stack: list[tuple[Node, str]] = []
    for item in sig:
        if item[1] == "R" and stack and stack[-1][1] == "A":
            stack.pop()
        else:
            stack.append(item)
    return stack


def addable_removable_profile(
    shape: Multipartition,
    i: int,
    charges: ChargeData,
    e: int,
    order: str = DEFAULT_SIGNATURE_ORDER,
) -> str:
    """The unreduced A/R word of the i-nodes in the chosen reading order."""
    return "".join(letter for _, letter in _signature(shape, i, charges, e, order))


def good_node(
    shape: Multipartition,
    i: int,
    charges: ChargeData,
    e: int,
    order: str = DEFAULT_SIGNATURE_ORDER,
) -> Optional[Node]:
    """The good addable i-node, or None when the reduced word has no A."""
    for nd, letter in _reduce(_signature(shape, i, charges, e, order)):
        if letter == "A":
            return nd
    return None


def good_removable_node(
    shape: Multipartition,
    i: int,
    charges: ChargeData,
    e: int,
    order: str = DEFAULT_SIGNATURE_ORDER,
) -> Optional[Node]:
    """The good removable i-node (last surviving R), or None."""
    reduced = _reduce(_signature(shape, i, charges, e, order))
    for nd, letter in reversed(reduced):
        if letter == "R":
            return nd
    return None


def add_node(shape: Multipartition, node: Node) -> Multipartition:
    comps = list(shape.components)
    comp = comps[node.comp - 1]
    parts = list(comp.parts)
    if node.row == len(parts) + 1:
        parts.append(1)
    else:
        parts[node.row - 1] += 1
    comps[node.comp - 1] = Partition(tuple(parts))
    return Multipartition(tuple(comps))


def remove_node(shape: Multipartition, node: Node) -> Multipartition:
    comps = list(shape.components)
    comp = comps[node.comp - 1]
    parts = list(comp.parts)
    parts[node.row - 1] -= 1
    if parts[node.row - 1] == 0:
        parts.pop()
    comps[node.comp - 1] = Partition(tuple(parts))
    return Multipartition(tuple(comps))


def enumerate_kleshchev(
    nprime: int,
    spec: ParameterSpec,
    order: str = DEFAULT_SIGNATURE_ORDER,
) -> list[Multipartition]:
    """All depth-nprime vertices of the good-node crystal grown from the empty
    f*delta-partition, sorted canonically."""
    charges = charge_data(spec)
    layer = {empty_multipartition(spec.fd)}
    for _ in range(nprime):
        grown: set[Multipartition] = set()
        for shape in layer:
            for i in range(spec.e):
                nd = good_node(shape, i, charges, spec.e, order)
                if nd is not None:
                    grown.add(add_node(shape, nd))
        layer = grown
    return sorted(layer, key=Multipartition.sort_key)


def enumerate_lambda0(
    n: int,
    spec: ParameterSpec,
    order: str = DEFAULT_SIGNATURE_ORDER,
) -> list[Multipartition]:
    """All p'-tuples of Kleshchev f*delta-partitions of total size n,
    flattened to r-partitions in block order."""
    per_size: dict[int, list[Multipartition]] = {}

    def kleshchev_of(k: int) -> list[Multipartition]:
        if k not in per_size:
            per_size[k] = enumerate_kleshchev(k, spec, order)
        return per_size[k]

    out: list[Multipartition] = []
    for comp in compositions(n, spec.pprime):
        for chosen in product(*(kleshchev_of(k) for k in comp)):
            components = sum((block.components for block in chosen), ())
            out.append(Multipartition(components))
    return out
