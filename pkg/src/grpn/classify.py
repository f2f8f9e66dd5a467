"""Assembly of the modular simple-module label set and its count checks.

A label is an orbit representative whose blocks are all FLOTW, together with
an eigenvalue index i in [0, p/o_lambda - 1].  Labels are ordered by a-value
(the order that makes decomposition columns unitriangular), with canonical
tie-breaking so that output is reproducible byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .afunction import a_value_r
from .clifford import orbit_decomposition, varpi
from .combinat import Multipartition, empty_multipartition
from .flotw import enumerate_lambda1
from .kleshchev import DEFAULT_SIGNATURE_ORDER, enumerate_lambda0
from .params import ParameterSpec

#: Identifier attached to triangularity metadata records.
TRIANGULARITY_STATEMENT = (
    "decomposition column of this label is unitriangular; every other entry "
    "in the column has strictly smaller a-value"
)
TRIANGULARITY_STATEMENT_ID = "a-unitriangular"


@dataclass(frozen=True)
class SimpleLabel:
    """One simple module in the modular case: a canonical orbit representative
    with FLOTW blocks plus an eigenvalue index."""

    lam: Multipartition
    o_lambda: int
    eigen_index: int
    a_value: Fraction


@dataclass(frozen=True)
class CountReport:
    """Cross-counts of the two label sets and the orbit bookkeeping."""

    lambda0: int
    lambda1: int
    orbits: int
    total: int
    classify_count: int

    @property
    def bijection_ok(self) -> bool:
        return self.lambda0 == self.lambda1

    @property
    def total_ok(self) -> bool:
        return self.classify_count == self.total

    @property
    def ok(self) -> bool:
        return self.bijection_ok and self.total_ok


def classify(n: int, spec: ParameterSpec) -> list[SimpleLabel]:
    """All simple-module labels at size n, sorted by (a-value, canonical
    order of the representative, eigenvalue index).

    n = 0 yields the single conventional label on the empty r-partition.
    """
    if n == 0:
        return [
            SimpleLabel(
                lam=empty_multipartition(spec.r),
                o_lambda=1,
                eigen_index=0,
                a_value=Fraction(0),
            )
        ]
    action = varpi(spec)
    labels = []
    for datum in orbit_decomposition(enumerate_lambda1(n, spec), action):
        a_val = a_value_r(datum.representative, spec)
        for i in range(spec.p // datum.o_lambda):
            labels.append(
                SimpleLabel(
                    lam=datum.representative,
                    o_lambda=datum.o_lambda,
                    eigen_index=i,
                    a_value=a_val,
                )
            )
    labels.sort(key=lambda lb: (lb.a_value, lb.lam.sort_key(), lb.eigen_index))
    return labels


def count_check(
    n: int,
    spec: ParameterSpec,
    order: str = DEFAULT_SIGNATURE_ORDER,
) -> CountReport:
    """Counts of both label sets, the orbit count, and the expected and actual
    classification sizes.  Violations are reported in the flags, not raised."""
    lambda0 = len(enumerate_lambda0(n, spec, order))
    lambda1_list = enumerate_lambda1(n, spec)
    action = varpi(spec)
    orbits = orbit_decomposition(lambda1_list, action)
    if n == 0:
        total = 1
    else:
        total = sum(spec.p // datum.o_lambda for datum in orbits)
    return CountReport(
        lambda0=lambda0,
        lambda1=len(lambda1_list),
        orbits=len(orbits),
        total=total,
        classify_count=len(classify(n, spec)),
    )


def triangularity_metadata(label: SimpleLabel) -> dict:
    """The decomposition-matrix statement attached to a label.  No
    decomposition numbers are computed; this records the a-value together
    with the unitriangularity guarantee the ordering realizes."""
    return {
        "a_value": label.a_value,
        "statement": TRIANGULARITY_STATEMENT,
        "statement_id": TRIANGULARITY_STATEMENT_ID,
    }
