"""Command-line interface.

Commands: classify, enum <target>, avalue, split, semisimple, verify.
Machine-readable output goes to stdout (or --out), diagnostics to stderr.
Exit codes: 0 ok, 1 verification failure, 2 bad input, 3 cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import verify as verify_mod
from .afunction import a_value_r
from .classify import classify, count_check
from .clifford import semisimple_labels
from .combinat import DEFAULT_TABLEAU_CAP, Multipartition, enumerate_multipartitions
from .errors import EnumerationCapExceeded, GrpnError, InvalidParameters
from .flotw import enumerate_flotw, enumerate_lambda1
from .kleshchev import (
    DEFAULT_SIGNATURE_ORDER,
    SIGNATURE_ORDERS,
    enumerate_kleshchev,
    enumerate_lambda0,
)
from .params import build_parameters, build_Q, morita_split
from .serialize import (
    classify_payload,
    dumps_canonical,
    fraction_str,
    labels_tsv,
    multipartition_str,
    semisimple_label_json,
    semisimple_tsv,
    spec_json,
    split_payload,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_CAP_EXCEEDED = 3

ENUM_TARGETS = ("flotw", "kleshchev", "lambda1", "lambda0", "multipartitions")


def _add_spec_arguments(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("--e", type=int, required=required, help="order of the root of unity q")
    parser.add_argument("--p", type=int, default=1, help="index of the fixed subalgebra (default 1)")
    parser.add_argument("--delta", type=int, default=1, help="number of base charges (default 1)")
    parser.add_argument(
        "--charges",
        nargs="+",
        default=None,
        help="base charges, space- or comma-separated, sorted, in [0, e'-1]",
    )


def _add_common_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=("json", "tsv", "pretty"), default="json",
        help="output format (default json)",
    )
    parser.add_argument(
        "--cap", type=int, default=DEFAULT_TABLEAU_CAP,
        help="explicit tableau enumeration cap (default %(default)s)",
    )
    parser.add_argument(
        "--signature-order", default=DEFAULT_SIGNATURE_ORDER,
        help="crystal reading order: asc (default) or desc",
    )
    parser.add_argument("--out", default=None, help="write output to this file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grpn",
        description=(
            "Exact combinatorics of simple-module labels for cyclotomic "
            "Hecke algebras of type G(r,p,n) at roots of unity."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser("classify", help="simple-module labels at size n")
    _add_spec_arguments(p_classify)
    p_classify.add_argument("--n", type=int, required=True)
    _add_common_arguments(p_classify)

    p_enum = sub.add_parser("enum", help="deterministic listings")
    p_enum.add_argument("target", choices=ENUM_TARGETS)
    _add_spec_arguments(p_enum, required=False)
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--r", type=int, default=None,
                        help="tuple length (multipartitions target only)")
    _add_common_arguments(p_enum)

    p_avalue = sub.add_parser("avalue", help="exact a-values of r-partitions")
    _add_spec_arguments(p_avalue)
    p_avalue.add_argument("--n", type=int, default=None,
                          help="list all r-partitions of this size")
    p_avalue.add_argument("--shape", default=None,
                          help='one r-partition as JSON, e.g. "[[2,1],[]]"')
    _add_common_arguments(p_avalue)

    p_split = sub.add_parser("split", help="q-power classes of the parameter sequence")
    _add_spec_arguments(p_split)
    _add_common_arguments(p_split)

    p_semi = sub.add_parser("semisimple", help="generic-case label/dimension table")
    _add_spec_arguments(p_semi)
    p_semi.add_argument("--n", type=int, required=True)
    _add_common_arguments(p_semi)

    p_verify = sub.add_parser("verify", help="run every cross-module identity suite")
    p_verify.add_argument("--n-max", type=int, default=4,
                          help="size bound for the suites; negative = empty range")
    _add_common_arguments(p_verify)

    return parser


def _parse_charges(raw: Optional[Sequence[str]]) -> tuple[int, ...]:
    if raw is None:
        return (0,)
    flat: list[int] = []
    for token in raw:
        for piece in str(token).replace(",", " ").split():
            flat.append(int(piece))
    return tuple(flat)


def _spec_from_args(args: argparse.Namespace):
    return build_parameters(args.e, args.p, args.delta, _parse_charges(args.charges))


def _emit(text: str, out_path: Optional[str]) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _require_order(name: str) -> str:
    if name not in SIGNATURE_ORDERS:
        raise InvalidParameters(
            f"unknown signature order {name!r}; known: {sorted(SIGNATURE_ORDERS)}"
        )
    return name


def _cmd_classify(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    order = _require_order(args.signature_order)
    labels = classify(args.n, spec)
    report = count_check(args.n, spec, order)
    if args.format == "json":
        text = dumps_canonical(classify_payload(spec, args.n, labels, report))
    elif args.format == "tsv":
        text = labels_tsv(labels)
    else:
        lines = [f"labels at n={args.n} for {spec_json(spec)}"]
        for lb in labels:
            lines.append(
                f"  {multipartition_str(lb.lam)}  o={lb.o_lambda}  "
                f"i={lb.eigen_index}  a={fraction_str(lb.a_value)}"
            )
        lines.append(f"count: {len(labels)}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def _enum_items(args: argparse.Namespace) -> tuple[list[Multipartition], Optional[dict]]:
    if args.target == "multipartitions":
        if args.r is None:
            raise InvalidParameters("enum multipartitions needs --r")
        return enumerate_multipartitions(args.n, args.r), None
    if args.r is not None:
        raise InvalidParameters("--r is only valid for the multipartitions target")
    if args.e is None:
        raise InvalidParameters(f"enum {args.target} needs --e/--p/--delta/--charges")
    spec = _spec_from_args(args)
    order = _require_order(args.signature_order)
    if args.target == "flotw":
        return enumerate_flotw(args.n, spec), spec_json(spec)
    if args.target == "kleshchev":
        return enumerate_kleshchev(args.n, spec, order), spec_json(spec)
    if args.target == "lambda1":
        return enumerate_lambda1(args.n, spec), spec_json(spec)
    return enumerate_lambda0(args.n, spec, order), spec_json(spec)


def _cmd_enum(args: argparse.Namespace) -> int:
    items, spec_info = _enum_items(args)
    if args.format == "json":
        payload = {
            "target": args.target,
            "n": args.n,
            "items": [lam.to_lists() for lam in items],
            "count": len(items),
        }
        if spec_info is not None:
            payload["spec"] = spec_info
        text = dumps_canonical(payload)
    else:
        lines = [multipartition_str(lam) for lam in items]
        lines.append(f"count: {len(items)}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def _cmd_avalue(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    if (args.n is None) == (args.shape is None):
        raise InvalidParameters("avalue needs exactly one of --n or --shape")
    if args.shape is not None:
        try:
            rows = json.loads(args.shape)
            lam = Multipartition.from_parts(rows)
        except (ValueError, TypeError) as exc:
            raise InvalidParameters(f"bad --shape: {exc}") from None
        items = [lam]
    else:
        items = enumerate_multipartitions(args.n, spec.r)
    pairs = [(lam, a_value_r(lam, spec)) for lam in items]
    if args.format == "json":
        payload = {
            "spec": spec_json(spec),
            "values": [
                {"lambda": lam.to_lists(), "a_value": fraction_str(a)}
                for lam, a in pairs
            ],
            "count": len(pairs),
        }
        text = dumps_canonical(payload)
    else:
        lines = ["lambda\ta_value"] if args.format == "tsv" else []
        for lam, a in pairs:
            sep = "\t" if args.format == "tsv" else "  a="
            lines.append(f"{multipartition_str(lam)}{sep}{fraction_str(a)}")
        if args.format == "pretty":
            lines.append(f"count: {len(pairs)}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def _cmd_split(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    Q = build_Q(spec)
    classes = morita_split(Q, spec.e)
    if args.format == "json":
        text = dumps_canonical(split_payload(spec, Q, classes))
    else:
        lines = [f"modulus: {spec.L}", f"exponents: {[q.exponent for q in Q]}"]
        for idx, ids in enumerate(classes, start=1):
            lines.append(f"class {idx}: indices {list(ids)}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def _cmd_semisimple(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    labels = semisimple_labels(args.n, spec)
    if args.format == "json":
        payload = {
            "spec": spec_json(spec),
            "n": args.n,
            "labels": [semisimple_label_json(lb) for lb in labels],
            "count": len(labels),
        }
        text = dumps_canonical(payload)
    else:
        text = semisimple_tsv(labels)
    _emit(text, args.out)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    order = _require_order(args.signature_order)
    results = verify_mod.run_all(nmax=args.n_max, order=order, cap=args.cap)
    lines = []
    for res in results:
        status = "PASS" if res.ok else "FAIL"
        lines.append(f"{status}\t{res.name}\t{res.detail}")
    failed = [res for res in results if not res.ok]
    lines.append(f"checked: {len(results)}, failed: {len(failed)}")
    _emit("\n".join(lines) + "\n", args.out)
    if failed:
        print(f"grpn: {len(failed)} identity suite(s) failed", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


_DISPATCH = {
    "classify": _cmd_classify,
    "enum": _cmd_enum,
    "avalue": _cmd_avalue,
    "split": _cmd_split,
    "semisimple": _cmd_semisimple,
    "verify": _cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_BAD_INPUT if exc.code else EXIT_OK
    try:
        return _DISPATCH[args.command](args)
    except EnumerationCapExceeded as exc:
        print(f"grpn: {exc}", file=sys.stderr)
        return EXIT_CAP_EXCEEDED
    except (GrpnError, ValueError) as exc:
        print(f"grpn: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


def run() -> None:
    sys.exit(main())
