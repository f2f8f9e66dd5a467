"""The component permutation induced by eta_p, its orbits, and the
semisimple label/dimension tables.

Multiplying the canonical parameter sequence by eta_p permutes its positions;
that permutation acts on r-partitions (and on their standard tableaux) by
relabelling components.  Orbits under this action, their orders o_lambda, and
the resulting eigenspace dimension bookkeeping are what this module computes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .afunction import a_value_r
from .combinat import (
    DEFAULT_TABLEAU_CAP,
    Multipartition,
    StandardTableau,
    empty_multipartition,
    enumerate_multipartitions,
    enumerate_standard_tableaux,
    syt_count,
)
from .errors import ComponentMismatch
from .params import ParameterSpec, q_exponents


@dataclass(frozen=True)
class VarpiAction:
    """A permutation of component positions 1..r with ``images[i-1]`` the
    image of i; a product of r/p disjoint p-cycles."""

    images: tuple[int, ...]
    p: int

    @property
    def r(self) -> int:
        return len(self.images)

    def inverse(self, c: int) -> int:
        return self.images.index(c) + 1

    def power_images(self, k: int) -> tuple[int, ...]:
        k %= self.p
        images = tuple(range(1, self.r + 1))
        for _ in range(k):
            images = tuple(self.images[i - 1] for i in images)
        return images


def varpi(spec: ParameterSpec) -> VarpiAction:
    """The permutation with Q_{varpi(i)} = eta_p * Q_i, in its piecewise form,
    cross-checked against the exponent characterization."""
    r, fd, delta = spec.r, spec.fd, spec.delta
    images = []
    for i in range(1, r + 1):
        if i <= (spec.pprime - 1) * fd:
            images.append(i + fd)
        elif i <= r - delta:
            images.append(i - r + (spec.f + 1) * delta)
        else:
            images.append(i - r + delta)
    exps = q_exponents(spec)
    shift = spec.L // spec.p
    for i in range(1, r + 1):
        if exps[images[i - 1] - 1] != (exps[i - 1] + shift) % spec.L:
            raise RuntimeError(
                "piecewise permutation disagrees with the eta_p shift"
            )
    return VarpiAction(images=tuple(images), p=spec.p)


def apply_varpi(lam: Multipartition, action: VarpiAction) -> Multipartition:
    """Component c of the result is component varpi^{-1}(c) of the input."""
    if lam.r != action.r:
        raise ComponentMismatch(f"expected {action.r} components, got {lam.r}")
    return Multipartition(
        tuple(lam.components[action.inverse(c) - 1] for c in range(1, action.r + 1))
    )


def apply_varpi_tableau(tab: StandardTableau, action: VarpiAction) -> StandardTableau:
    """Relabel tableau components the same way the shape components move."""
    shape = apply_varpi(tab.shape, action)
    entries = tuple(
        tab.entries[action.inverse(c) - 1] for c in range(1, action.r + 1)
    )
    return StandardTableau(shape, entries)


@dataclass(frozen=True)
class OrbitDatum:
    """One orbit of r-partitions: canonical-minimal representative, its order
    o_lambda = min{k > 0 : varpi^k fixes the partition}, and the full orbit."""

    representative: Multipartition
    o_lambda: int
    orbit: tuple[Multipartition, ...]


def orbit(lam: Multipartition, action: VarpiAction) -> OrbitDatum:
    members = [lam]
    current = apply_varpi(lam, action)
    while current != lam:
        members.append(current)
        current = apply_varpi(current, action)
    rep = min(members, key=Multipartition.sort_key)
    return OrbitDatum(representative=rep, o_lambda=len(members), orbit=tuple(members))


def orbit_decomposition(
    universe: list[Multipartition], action: VarpiAction
) -> list[OrbitDatum]:
    """Split a varpi-stable list into orbits, ordered by first occurrence."""
    seen: set[Multipartition] = set()
    out = []
    for lam in universe:
        if lam in seen:
            continue
        datum = orbit(lam, action)
        seen.update(datum.orbit)
        out.append(datum)
    return out


@dataclass(frozen=True)
class SemisimpleLabel:
    """One simple module of the fixed subalgebra in the generic-parameter case:
    an orbit representative plus an eigenvalue index."""

    representative: Multipartition
    o_lambda: int
    eigen_index: int
    dimension: int
    a_value: Fraction


def semisimple_labels(n: int, spec: ParameterSpec) -> list[SemisimpleLabel]:
    """The complete label table at size n: one (lambda, i) per orbit
    representative and i in [0, p/o_lambda - 1], with eigenspace dimension
    syt_count(lambda) * o_lambda / p.

    For n = 0 the algebra is the ground field; the single label
    (empty, i = 0, dimension 1) is emitted by convention.
    """
    action = varpi(spec)
    if n == 0:
        return [
            SemisimpleLabel(
                representative=empty_multipartition(spec.r),
                o_lambda=1,
                eigen_index=0,
                dimension=1,
                a_value=Fraction(0),
            )
        ]
    labels = []
    for datum in orbit_decomposition(enumerate_multipartitions(n, spec.r), action):
        count = syt_count(datum.representative)
        dim, rem = divmod(count * datum.o_lambda, spec.p)
        if rem:
            raise RuntimeError(
                f"eigenspace dimension is not integral for {datum.representative!r}"
            )
        a_val = a_value_r(datum.representative, spec)
        for i in range(spec.p // datum.o_lambda):
            labels.append(
                SemisimpleLabel(
                    representative=datum.representative,
                    o_lambda=datum.o_lambda,
                    eigen_index=i,
                    dimension=dim,
                    a_value=a_val,
                )
            )
    labels.sort(
        key=lambda lb: (lb.a_value, lb.representative.sort_key(), lb.eigen_index)
    )
    return labels


def tableau_orbits(
    lam: Multipartition,
    action: VarpiAction,
    cap: int = DEFAULT_TABLEAU_CAP,
) -> list[tuple[StandardTableau, ...]]:
    """Orbits of the standard lam-tableaux under varpi^{o_lambda}.

    The action is free for nonempty lam, so every orbit has size exactly
    p/o_lambda; this is the combinatorial shadow of the eigenspace split.
    """
    if lam.size < 1:
        raise ValueError("tableau orbits need a nonempty multipartition")
    o_lam = orbit(lam, action).o_lambda
    power = VarpiAction(images=action.power_images(o_lam), p=action.p)
    remaining = set(enumerate_standard_tableaux(lam, cap=cap))
    orbits = []
    for tab in sorted(remaining, key=lambda t: t.entries):
        if tab not in remaining:
            continue
        members = [tab]
        current = apply_varpi_tableau(tab, power)
        while current != tab:
            members.append(current)
            current = apply_varpi_tableau(current, power)
        remaining.difference_update(members)
        orbits.append(tuple(members))
    return orbits
