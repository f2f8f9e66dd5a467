"""Cross-module identity suites: the verification harness behind `grpn verify`.

Every check recomputes one identity through two independent routes and
reports the smallest counterexample on failure.  The default matrix of
parameter sets exercises (r, p) in {(2,2), (4,2), (3,3), (4,4)} plus the
p = 1 (plain Ariki-Koike) degeneration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from importlib import resources
from itertools import combinations

from .afunction import a_value_r
from .classify import classify, count_check
from .clifford import (
    apply_varpi,
    orbit_decomposition,
    semisimple_labels,
    tableau_orbits,
    varpi,
)
from .combinat import (
    DEFAULT_TABLEAU_CAP,
    enumerate_multipartitions,
    syt_count,
)
from .flotw import block_flotw, enumerate_flotw, enumerate_lambda1
from .kleshchev import DEFAULT_SIGNATURE_ORDER, enumerate_kleshchev
from .params import build_parameters, build_Q, morita_split
from .serialize import classify_payload, dumps_canonical

#: (e, p, delta, charges) rows of the default verification matrix.
TEST_SPEC_INPUTS: tuple[tuple[int, int, int, tuple[int, ...]], ...] = (
    (4, 2, 1, (0,)),
    (2, 2, 1, (0,)),
    (3, 3, 1, (0,)),
    (4, 2, 2, (0, 1)),
    (2, 4, 1, (0,)),
)

#: p = 1 rows: the classification must reduce to the FLOTW parametrization.
P1_SPEC_INPUTS: tuple[tuple[int, int, int, tuple[int, ...]], ...] = (
    (3, 1, 2, (0, 1)),
    (4, 1, 1, (0,)),
)

#: The committed regression fixtures: (e, p, delta, charges, n, resource name).
GOLDEN_CASES: tuple[tuple[int, int, int, tuple[int, ...], int, str], ...] = (
    (4, 2, 1, (0,), 1, "classify_e4_p2_d1_c0_n1.json"),
    (4, 2, 1, (0,), 2, "classify_e4_p2_d1_c0_n2.json"),
    (4, 2, 1, (0,), 3, "classify_e4_p2_d1_c0_n3.json"),
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


def matrix_specs():
    return [build_parameters(*row) for row in TEST_SPEC_INPUTS]


def _spec_tag(spec) -> str:
    return f"(e={spec.e},p={spec.p},delta={spec.delta},v={list(spec.charges)})"


def check_sum_of_squares(rmax: int = 4, nmax: int = 5) -> CheckResult:
    """sum of syt_count^2 over all r-partitions of n equals r^n * n!."""
    for r in range(1, rmax + 1):
        for n in range(0, nmax + 1):
            total = sum(
                syt_count(lam) ** 2 for lam in enumerate_multipartitions(n, r)
            )
            expected = r**n * math.factorial(n)
            if total != expected:
                return CheckResult(
                    "sum-of-squares",
                    False,
                    f"r={r} n={n}: got {total}, expected {expected}",
                )
    return CheckResult(
        "sum-of-squares", True, f"r <= {rmax}, n <= {nmax}: all equal r^n*n!"
    )


def check_count_bijection(
    nmax: int = 4, order: str = DEFAULT_SIGNATURE_ORDER
) -> CheckResult:
    """|Kleshchev| = |FLOTW| at every size, per block parameters."""
    for spec in matrix_specs():
        for n in range(0, nmax + 1):
            k = len(enumerate_kleshchev(n, spec, order))
            f = len(enumerate_flotw(n, spec))
            if k != f:
                return CheckResult(
                    "count-bijection",
                    False,
                    f"{_spec_tag(spec)} n'={n}: kleshchev={k}, flotw={f}",
                )
    return CheckResult(
        "count-bijection", True, f"n' <= {nmax}: counts agree on all specs"
    )


def check_varpi_stability(nmax: int = 4) -> CheckResult:
    """The blockwise-FLOTW set is stable under the component permutation."""
    for spec in matrix_specs():
        action = varpi(spec)
        for n in range(0, nmax + 1):
            for lam in enumerate_lambda1(n, spec):
                image = lam
                for _ in range(spec.p):
                    image = apply_varpi(image, action)
                    if not block_flotw(image, spec):
                        return CheckResult(
                            "varpi-stability",
                            False,
                            f"{_spec_tag(spec)} lam={lam.to_lists()} leaves the set",
                        )
    return CheckResult(
        "varpi-stability", True, f"|lam| <= {nmax}: all orbits stay inside"
    )


def check_a_invariance(nmax: int = 4) -> CheckResult:
    """a-values are constant along varpi-orbits of arbitrary r-partitions."""
    for spec in matrix_specs():
        action = varpi(spec)
        for n in range(0, nmax + 1):
            for lam in enumerate_multipartitions(n, spec.r):
                image = apply_varpi(lam, action)
                if a_value_r(lam, spec) != a_value_r(image, spec):
                    return CheckResult(
                        "a-invariance",
                        False,
                        f"{_spec_tag(spec)} lam={lam.to_lists()}: "
                        f"{a_value_r(lam, spec)} != {a_value_r(image, spec)}",
                    )
    return CheckResult("a-invariance", True, f"|lam| <= {nmax}: exact equality")


def check_tableau_orbit_sizes(
    nmax: int = 4, cap: int = DEFAULT_TABLEAU_CAP
) -> CheckResult:
    """Orbits of standard tableaux under varpi^{o_lambda} all have size
    p/o_lambda, hence syt*o/p eigenspace pieces of equal dimension."""
    for spec in matrix_specs():
        action = varpi(spec)
        for n in range(1, nmax + 1):
            for datum in orbit_decomposition(
                enumerate_multipartitions(n, spec.r), action
            ):
                lam = datum.representative
                expected = spec.p // datum.o_lambda
                orbits = tableau_orbits(lam, action, cap=cap)
                if any(len(orb) != expected for orb in orbits):
                    return CheckResult(
                        "tableau-orbit-sizes",
                        False,
                        f"{_spec_tag(spec)} lam={lam.to_lists()}: "
                        f"orbit sizes {[len(o) for o in orbits]} != {expected}",
                    )
                if len(orbits) * spec.p != syt_count(lam) * datum.o_lambda:
                    return CheckResult(
                        "tableau-orbit-sizes",
                        False,
                        f"{_spec_tag(spec)} lam={lam.to_lists()}: orbit count "
                        f"{len(orbits)} != syt*o/p",
                    )
    return CheckResult(
        "tableau-orbit-sizes", True, f"1 <= |lam| <= {nmax}: free action confirmed"
    )


def check_morita_split() -> CheckResult:
    """The canonical sequence splits into p' classes of size f*delta and class
    j is eta_p^{j-1} times class 1, entry by entry."""
    for spec in matrix_specs():
        Q = build_Q(spec)
        classes = morita_split(Q, spec.e)
        if len(classes) != spec.pprime or any(
            len(ids) != spec.fd for ids in classes
        ):
            return CheckResult(
                "morita-split",
                False,
                f"{_spec_tag(spec)}: classes {[len(c) for c in classes]} "
                f"!= {spec.pprime} x {spec.fd}",
            )
        shift = spec.L // spec.p
        base = [Q[i].exponent for i in classes[0]]
        for j, ids in enumerate(classes):
            want = [(x + j * shift) % spec.L for x in base]
            got = [Q[i].exponent for i in ids]
            if got != want:
                return CheckResult(
                    "morita-split",
                    False,
                    f"{_spec_tag(spec)} class {j + 1}: {got} != eta_p^{j} * class 1",
                )
        for ids_a, ids_b in combinations(classes, 2):
            for i in ids_a:
                for k in ids_b:
                    if (Q[i].exponent - Q[k].exponent) % (spec.L // spec.e) == 0:
                        return CheckResult(
                            "morita-split",
                            False,
                            f"{_spec_tag(spec)}: cross-class q-power quotient "
                            f"at indices {i},{k}",
                        )
    return CheckResult("morita-split", True, "p' classes of size f*delta on all specs")


def check_semisimple_dimensions(nmax: int = 4) -> CheckResult:
    """sum of dimension^2 over the label table equals r^n * n!/p (n >= 1)."""
    for spec in matrix_specs():
        for n in range(1, nmax + 1):
            total = sum(lb.dimension**2 for lb in semisimple_labels(n, spec))
            expected = spec.r**n * math.factorial(n) // spec.p
            if total * spec.p != spec.r**n * math.factorial(n):
                return CheckResult(
                    "semisimple-dimensions",
                    False,
                    f"{_spec_tag(spec)} n={n}: got {total}, expected {expected}",
                )
    return CheckResult(
        "semisimple-dimensions", True, f"1 <= n <= {nmax}: equals r^n*n!/p"
    )


def check_classification_counts(
    nmax: int = 4, order: str = DEFAULT_SIGNATURE_ORDER
) -> CheckResult:
    """|classify| = sum of p/o over orbits, and the two label sets have equal size."""
    for spec in matrix_specs():
        for n in range(0, nmax + 1):
            report = count_check(n, spec, order)
            if not report.ok:
                return CheckResult(
                    "classification-count",
                    False,
                    f"{_spec_tag(spec)} n={n}: lambda0={report.lambda0} "
                    f"lambda1={report.lambda1} total={report.total} "
                    f"classify={report.classify_count}",
                )
    return CheckResult(
        "classification-count", True, f"n <= {nmax}: all identities hold"
    )


def check_p1_degenerate(nmax: int = 5) -> CheckResult:
    """p = 1: no orbit collapsing, so the labels are exactly the FLOTW set."""
    for row in P1_SPEC_INPUTS:
        spec = build_parameters(*row)
        for n in range(0, nmax + 1):
            labels = classify(n, spec)
            lam1 = enumerate_lambda1(n, spec)
            expected = len(lam1) if n else 1
            if len(labels) != expected or any(
                lb.o_lambda != 1 or lb.eigen_index != 0 for lb in labels
            ):
                return CheckResult(
                    "p1-degenerate",
                    False,
                    f"{_spec_tag(spec)} n={n}: {len(labels)} labels, "
                    f"|Lambda1|={len(lam1)}",
                )
    return CheckResult(
        "p1-degenerate", True, f"n <= {nmax}: classification = FLOTW labels"
    )


def check_golden() -> CheckResult:
    """Byte equality of live classification output against the committed
    brute-force fixtures."""
    for e, p, delta, charges, n, name in GOLDEN_CASES:
        spec = build_parameters(e, p, delta, charges)
        live = dumps_canonical(
            classify_payload(spec, n, classify(n, spec), count_check(n, spec))
        )
        try:
            frozen = (
                resources.files("grpn.golden").joinpath(name).read_text("utf-8")
            )
        except FileNotFoundError:
            return CheckResult("golden-regression", False, f"missing fixture {name}")
        if live != frozen:
            return CheckResult(
                "golden-regression", False, f"{name}: live output differs"
            )
    return CheckResult(
        "golden-regression", True, f"{len(GOLDEN_CASES)} fixtures byte-identical"
    )


def run_all(
    nmax: int = 4,
    order: str = DEFAULT_SIGNATURE_ORDER,
    cap: int = DEFAULT_TABLEAU_CAP,
) -> list[CheckResult]:
    """Run every identity suite with sizes bounded by nmax (negative nmax
    means an empty range: vacuous pass)."""
    if nmax < 0:
        return []
    return [
        check_sum_of_squares(nmax=max(nmax, 0)),
        check_count_bijection(nmax=nmax, order=order),
        check_varpi_stability(nmax=nmax),
        check_a_invariance(nmax=min(nmax, 4)),
        check_tableau_orbit_sizes(nmax=min(nmax, 4), cap=cap),
        check_morita_split(),
        check_semisimple_dimensions(nmax=min(nmax, 4)),
        check_classification_counts(nmax=nmax, order=order),
        check_p1_degenerate(nmax=min(nmax, 5)),
        check_golden(),
    ]
