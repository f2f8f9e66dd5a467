"""Exact rational a-function on multipartitions.

The statistic is built from shifted beta-sets
``B'^(j)_s = mu(j)_s - s + n + m^(j)`` (s = 1..n) and equals

    sum over slot pairs i <= j and (a, b) in B'^(i) x B'^(j), a > b when i = j,
    of min(a, b)
  - sum over all slots i, j, entries a in B'^(i) and integers k in [1, floor(a)]
    of min(k, m^(j)).

Two normalizations are fixed here and documented in the README: the additive
constant depending only on (n, charges) is taken to be 0, and the inner range
"1 <= k <= a" with rational a means integers k in [1, floor(a)].  Every use
in this package (ordering, argmin at fixed n, orbit invariance) is insensitive
to both choices.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import floor

from .combinat import Multipartition
from .errors import ComponentMismatch
from .params import ChargeData, ParameterSpec, blocks, charge_data


def beta_sets(
    mu: Multipartition, n: int, charges: ChargeData
) -> list[tuple[Fraction, ...]]:
    """The f*delta shifted beta-sets of mu, each strictly decreasing of length n."""
    if mu.r != charges.fd:
        raise ComponentMismatch(
            f"expected {charges.fd} components, got {mu.r}"
        )
    if mu.size > n:
        raise ValueError(f"beta-set length n={n} is smaller than |mu|={mu.size}")
    out = []
    for j in range(1, charges.fd + 1):
        comp = mu.component(j)
        mj = charges.m[j - 1]
        out.append(tuple(comp.part(s) - s + n + mj for s in range(1, n + 1)))
    return out


def _min_sum_with_charge(kmax: int, m: Fraction) -> Fraction:
    """Sum of min(k, m) over integers k = 1..kmax (0 when kmax < 1)."""
    if kmax < 1:
        return Fraction(0)
    t = min(kmax, floor(m))
    return Fraction(t * (t + 1), 2) + (kmax - t) * m


def a_value_component(
    mu: Multipartition, n: int, charges: ChargeData
) -> Fraction:
    """The a-value of an f*delta-partition, with beta-sets of length n."""
    B = beta_sets(mu, n, charges)
    fd = charges.fd

    pair_sum = Fraction(0)
    for i in range(fd):
        for a, b in combinations(B[i], 2):
            pair_sum += min(a, b)  # entries strictly decrease, so a > b
        for j in range(i + 1, fd):
            for a in B[i]:
                for b in B[j]:
                    pair_sum += min(a, b)

    charge_sum = Fraction(0)
    for i in range(fd):
        for a in B[i]:
            kmax = floor(a)
            for j in range(fd):
                charge_sum += _min_sum_with_charge(kmax, charges.m[j])

    return pair_sum - charge_sum


def a_value_r(lam: Multipartition, spec: ParameterSpec) -> Fraction:
    """The a-value of an r-partition: the sum of the block values, every block
    evaluated with beta-set length n = |lam|."""
    charges = charge_data(spec)
    n = lam.size
    return sum(
        (a_value_component(block, n, charges) for block in blocks(lam, spec)),
        Fraction(0),
    )
