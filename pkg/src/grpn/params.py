"""Algebra parameters and root-of-unity bookkeeping.

Inputs are ``(e, p, delta, charges)``; everything else is derived.  Roots of
unity are represented purely by exponents modulo L = lcm(e, p), since every
identity we need is an exponent congruence.  No floating point anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .combinat import Multipartition
from .errors import ComponentMismatch, InvalidParameters


@dataclass(frozen=True)
class ParameterSpec:
    """Validated parameter set with its derived constants.

    e       order of the deformation parameter q (a primitive e-th root of 1)
    p       index of the fixed subalgebra; p divides r
    delta   number of base charges
    charges v_1 <= ... <= v_delta in [0, e'-1]
    f = gcd(e, p), e = f*e', p = f*p', r = delta*f*p', L = lcm(e, p)
    """

    e: int
    p: int
    delta: int
    charges: tuple[int, ...]
    f: int
    eprime: int
    pprime: int
    r: int
    L: int

    @property
    def d(self) -> int:
        return self.r // self.p

    @property
    def fd(self) -> int:
        """Block width f*delta: the level of one Morita factor."""
        return self.f * self.delta


def build_parameters(
    e: int, p: int, delta: int, charges: Sequence[int]
) -> ParameterSpec:
    """Validate ``(e, p, delta, charges)`` and derive all constants."""
    if e <= 1:
        raise InvalidParameters(f"order e must exceed 1, got {e}")
    if p < 1 or delta < 1:
        raise InvalidParameters(f"p and delta must be positive, got p={p} delta={delta}")
    charges = tuple(int(v) for v in charges)
    if len(charges) != delta:
        raise InvalidParameters(
            f"expected {delta} charges, got {len(charges)}"
        )
    f = math.gcd(e, p)
    eprime = e // f
    pprime = p // f
    if any(charges[i] > charges[i + 1] for i in range(len(charges) - 1)):
        raise InvalidParameters(f"charges must be sorted ascending: {charges}")
    if charges and not (0 <= charges[0] and charges[-1] <= eprime - 1):
        raise InvalidParameters(
            f"charges must lie in [0, {eprime - 1}]: {charges}"
        )
    r = delta * f * pprime
    L = e * pprime  # lcm(e, p)
    return ParameterSpec(
        e=e, p=p, delta=delta, charges=charges,
        f=f, eprime=eprime, pprime=pprime, r=r, L=L,
    )


@dataclass(frozen=True)
class RootOfUnity:
    """exp(2*pi*i*exponent/modulus), stored as the exponent mod modulus."""

    exponent: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise InvalidParameters(f"modulus must be positive, got {self.modulus}")
        object.__setattr__(self, "exponent", self.exponent % self.modulus)

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        if self.modulus != other.modulus:
            raise InvalidParameters("cannot multiply roots with different moduli")
        return RootOfUnity(self.exponent + other.exponent, self.modulus)

    def times_power(self, exponent: int) -> "RootOfUnity":
        return RootOfUnity(self.exponent + exponent, self.modulus)


@dataclass(frozen=True)
class ChargeData:
    """Extended charges w_j and the exact rational offsets m^(j), j = 1..f*delta.

    w_{(s-1)*delta+k} = v_k + (s-1)*e'   (the e-exponents of the first block)
    m^(j)            = w_j - j*e/(f*delta) + e
    """

    w: tuple[int, ...]
    m: tuple[Fraction, ...]

    @property
    def fd(self) -> int:
        return len(self.w)


def charge_data(spec: ParameterSpec) -> ChargeData:
    fd = spec.fd
    w = tuple(
        spec.charges[k] + s * spec.eprime
        for s in range(spec.f)
        for k in range(spec.delta)
    )
    m = tuple(
        Fraction(w[j - 1]) - Fraction(j * spec.e, fd) + spec.e
        for j in range(1, fd + 1)
    )
    return ChargeData(w=w, m=m)


def q_exponents(spec: ParameterSpec) -> tuple[int, ...]:
    """Exponents (mod L) of the canonical parameter sequence: block j runs
    through eta_p^(j-1) * eta_e^(w_k) for the extended charges w."""
    w = charge_data(spec).w
    step_p = spec.L // spec.p
    step_e = spec.L // spec.e
    return tuple(
        (j * step_p + wk * step_e) % spec.L
        for j in range(spec.pprime)
        for wk in w
    )


def build_Q(spec: ParameterSpec) -> tuple[RootOfUnity, ...]:
    """The canonical ordered sequence Q of r roots of unity (block 1 first).

    Raises InvalidParameters when entries collide, which signals a multicharge
    whose parameter sequence is degenerate for the chosen (e, p).
    """
    exps = q_exponents(spec)
    if len(set(exps)) != len(exps):
        raise InvalidParameters(
            f"duplicate parameters in Q for charges {spec.charges} (e={spec.e}, p={spec.p})"
        )
    return tuple(RootOfUnity(x, spec.L) for x in exps)


def morita_split(Q: Sequence[RootOfUnity], e: int) -> tuple[tuple[int, ...], ...]:
    """Finest partition of the index set of Q closed under
    Q_i ~ Q_j iff Q_i/Q_j is a power of the primitive e-th root of unity.

    At the exponent level the relation reads: the difference is a multiple of
    L/e modulo L.  Classes are returned as 0-based index tuples, ordered by
    first occurrence; for a canonical Q this yields the p' blocks in order.
    """
    if e < 1:
        raise InvalidParameters(f"e must be positive, got {e}")
    if not Q:
        return ()
    L = Q[0].modulus
    if any(root.modulus != L for root in Q):
        raise InvalidParameters("all entries of Q must share one modulus")
    if L % e:
        raise InvalidParameters(f"e={e} must divide the modulus {L}")
    step = L // e
    classes: dict[int, list[int]] = {}
    for idx, root in enumerate(Q):
        classes.setdefault(root.exponent % step, []).append(idx)
    ordered = sorted(classes.values(), key=lambda ids: ids[0])
    return tuple(tuple(ids) for ids in ordered)


def blocks(lam: Multipartition, spec: ParameterSpec) -> tuple[Multipartition, ...]:
    """Split an r-partition into its p' consecutive blocks of f*delta components."""
    if lam.r != spec.r:
        raise ComponentMismatch(
            f"expected {spec.r} components, got {lam.r}"
        )
    fd = spec.fd
    return tuple(
        Multipartition(lam.components[i * fd : (i + 1) * fd])
        for i in range(spec.pprime)
    )
