"""JSON/TSV serialization with byte-stable canonical formatting.

Exact rationals print as "num/den" strings (always with the denominator, so
"0/1" and "-14/1" are valid values).  JSON payloads are dumped with sorted
keys and two-space indentation plus a trailing newline; regression fixtures
compare bytes against this format.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .classify import CountReport, SimpleLabel
from .clifford import SemisimpleLabel
from .combinat import Multipartition
from .params import ParameterSpec, RootOfUnity


def fraction_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def multipartition_json(lam: Multipartition) -> list[list[int]]:
    return lam.to_lists()


def multipartition_str(lam: Multipartition) -> str:
    return json.dumps(lam.to_lists(), separators=(",", ":"))


def spec_json(spec: ParameterSpec) -> dict:
    return {
        "e": spec.e,
        "p": spec.p,
        "delta": spec.delta,
        "charges": list(spec.charges),
        "derived": {
            "f": spec.f,
            "eprime": spec.eprime,
            "pprime": spec.pprime,
            "r": spec.r,
            "L": spec.L,
        },
    }


def simple_label_json(label: SimpleLabel) -> dict:
    return {
        "lambda": multipartition_json(label.lam),
        "o_lambda": label.o_lambda,
        "i": label.eigen_index,
        "a_value": fraction_str(label.a_value),
    }


def classify_payload(
    spec: ParameterSpec, n: int, labels: list[SimpleLabel], report: CountReport
) -> dict:
    return {
        "spec": spec_json(spec),
        "n": n,
        "labels": [simple_label_json(lb) for lb in labels],
        "checks": {
            "lambda0": report.lambda0,
            "lambda1": report.lambda1,
            "orbits": report.orbits,
            "total": report.total,
        },
    }


def semisimple_label_json(label: SemisimpleLabel) -> dict:
    return {
        "representative": multipartition_json(label.representative),
        "o_lambda": label.o_lambda,
        "eigen_index": label.eigen_index,
        "dimension": label.dimension,
        "a_value": fraction_str(label.a_value),
    }


def split_payload(
    spec: ParameterSpec, Q: tuple[RootOfUnity, ...], classes: tuple[tuple[int, ...], ...]
) -> dict:
    return {
        "spec": spec_json(spec),
        "modulus": spec.L,
        "exponents": [root.exponent for root in Q],
        "classes": [list(ids) for ids in classes],
    }


def dumps_canonical(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def labels_tsv(labels: list[SimpleLabel]) -> str:
    lines = ["lambda\to_lambda\ti\ta_value"]
    for lb in labels:
        lines.append(
            f"{multipartition_str(lb.lam)}\t{lb.o_lambda}\t{lb.eigen_index}\t"
            f"{fraction_str(lb.a_value)}"
        )
    return "\n".join(lines) + "\n"


def semisimple_tsv(labels: list[SemisimpleLabel]) -> str:
    lines = ["representative\to_lambda\teigen_index\tdimension\ta_value"]
    for lb in labels:
        lines.append(
            f"{multipartition_str(lb.representative)}\t{lb.o_lambda}\t"
            f"{lb.eigen_index}\t{lb.dimension}\t{fraction_str(lb.a_value)}"
        )
    return "\n".join(lines) + "\n"
