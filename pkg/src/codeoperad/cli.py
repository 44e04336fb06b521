"""Command-line surface.

Canonical subcommand names are dashed (codes-enumerate, operad-compose, ...);
the two-word spellings (codes enumerate, loop build, ...) are accepted as
aliases.  Domain errors exit with status 1 and a {"kind", "detail"} JSON
object on stderr; I/O and parse errors exit with status 2.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import verification
from .adinkra import adinkra_to_record, build_adinkra, export_dot, susy_relations
from .codes import code_from_record, code_to_record, enumerate_doubly_even
from .codeloop import (
    build_loop,
    cayley_table,
    is_associative,
    is_moufang,
    verify_extension,
)
from .dessin import (
    dessin_from_chromotopology,
    dessin_to_record,
    genus,
    is_transitive,
    monodromy_order,
    sigma_infinity,
    verify_cycle_structure,
)
from .errors import DomainError
from .operad import gamma, gamma_raw_set, insert, is_xor_closed

ALIASES = {
    ("codes", "enumerate"): "codes-enumerate",
    ("operad", "compose"): "operad-compose",
    ("operad", "insert"): "operad-insert",
    ("adinkra", "build"): "adinkra-build",
    ("loop", "build"): "loop-build",
    ("dessin", "from-code"): "dessin-from-code",
}


def _read_code(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return code_from_record(json.load(fh))


def _emit(payload, out: str | None) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_codes_enumerate(args) -> int:
    found = enumerate_doubly_even(args.length, cap=args.cap)
    _emit([code_to_record(c) for c in found], args.out)
    return 0


def _cmd_operad_compose(args) -> int:
    outer = _read_code(args.outer)
    inners = [_read_code(p) for p in args.inner]
    raw = gamma_raw_set(outer, inners, cap=args.raw_cap)
    composed = gamma(outer, inners)
    payload = {
        "code": code_to_record(composed),
        "raw_set_size": len(raw),
        "span_size": 1 << composed.dimension,
        "raw_set_linear": is_xor_closed(raw),
    }
    _emit(payload, args.out)
    return 0


def _cmd_operad_insert(args) -> int:
    outer = _read_code(args.outer)
    inner = _read_code(args.inner)
    _emit(code_to_record(insert(outer, args.index, inner)), args.out)
    return 0


def _cmd_adinkra_build(args) -> int:
    code = _read_code(args.code)
    a = build_adinkra(code)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(export_dot(a))
    if args.relations:
        records = [r.to_record() for r in susy_relations(a)]
        with open(args.relations, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(records, indent=2) + "\n")
    _emit(adinkra_to_record(a), args.out)
    return 0


def _cmd_loop_build(args) -> int:
    code = _read_code(args.code)
    lp = build_loop(code, element_cap=args.element_cap)
    payload = {"order": lp.order}
    if args.verify:
        report = verify_extension(lp)
        payload["moufang"] = is_moufang(lp)
        payload["associative"] = is_associative(lp)
        payload["extension"] = {
            "z_order": report.z_order,
            "z_central": report.z_central,
            "projection_hom": report.projection_hom,
            "kernel_is_z": report.kernel_is_z,
            "quotient_matches_code": report.quotient_matches_code,
        }
    if args.cayley:
        elements = lp.elements()
        table = cayley_table(lp)
        with open(args.cayley, "w", encoding="utf-8", newline="") as fh:
            import csv

            writer = csv.writer(fh)
            writer.writerow(str(e) for e in elements)
            for row in table:
                writer.writerow(str(e) for e in row)
    _emit(payload, args.out)
    return 0


def _cmd_dessin_from_code(args) -> int:
    code = _read_code(args.code)
    from .adinkra import chromotopology_from_code

    ch = chromotopology_from_code(code)
    d = dessin_from_chromotopology(ch)
    m = len(ch.vertices) // 2
    payload = dessin_to_record(d)
    payload["sigma_infinity"] = list(sigma_infinity(d).images)
    payload["transitive"] = is_transitive(d)
    payload["genus"] = genus(d)
    payload["cycle_check"] = verify_cycle_structure(d, ch.n_colors, m)
    payload["monodromy_order"] = monodromy_order(d, cap=args.monodromy_cap)
    _emit(payload, args.out)
    return 0


def _cmd_verify_all(args) -> int:
    results = verification.run_all(
        args.length,
        gamma_limit=args.gamma_limit,
        equiv_limit=args.equiv_limit,
        element_cap=args.element_cap,
    )
    width = max(len(r.name) for r in results)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        sys.stdout.write(f"{r.name:<{width}}  {status}  checked={r.checked}\n")
        for failure in r.failures[:5]:
            sys.stdout.write(f"  ! {failure}\n")
    passed = sum(r.passed for r in results)
    sys.stdout.write(f"RESULT {'PASS' if passed == len(results) else 'FAIL'} ({passed}/{len(results)} suites)\n")
    return 0 if passed == len(results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="codeoperad",
        description="Doubly-even binary codes: operad composition, Adinkras, code loops, dessins.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("codes-enumerate", help="enumerate doubly-even codes of one length")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--cap", type=int, default=1_000_000)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_codes_enumerate)

    p = sub.add_parser("operad-compose", help="compose an outer code with one inner per slot")
    p.add_argument("--outer", required=True)
    p.add_argument("--inner", nargs="+", required=True)
    p.add_argument("--raw-cap", type=int, default=1 << 16)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_operad_compose)

    p = sub.add_parser("operad-insert", help="insert an inner code into one slot")
    p.add_argument("--outer", required=True)
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--inner", required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_operad_insert)

    p = sub.add_parser("adinkra-build", help="build the quotient Adinkra of a code")
    p.add_argument("--code", required=True)
    p.add_argument("--dot")
    p.add_argument("--relations")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_adinkra_build)

    p = sub.add_parser("loop-build", help="build the code loop of a code")
    p.add_argument("--code", required=True)
    p.add_argument("--cayley")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--element-cap", type=int, default=16)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_loop_build)

    p = sub.add_parser("dessin-from-code", help="extract the dessin permutation pair")
    p.add_argument("--code", required=True)
    p.add_argument("--monodromy-cap", type=int, default=10**6)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_dessin_from_code)

    p = sub.add_parser("verify-all", help="run every invariant suite and print a table")
    p.add_argument("--length", type=int, default=6)
    p.add_argument("--gamma-limit", type=int, default=12)
    p.add_argument("--equiv-limit", type=int, default=10)
    p.add_argument("--element-cap", type=int, default=16)
    p.set_defaults(func=_cmd_verify_all)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if len(argv) >= 2 and (argv[0], argv[1]) in ALIASES:
        argv = [ALIASES[(argv[0], argv[1])]] + argv[2:]
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        sys.stderr.write(json.dumps({"kind": exc.kind, "detail": str(exc)}) + "\n")
        return 1
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        kind = "IOError" if isinstance(exc, OSError) else "ParseError"
        sys.stderr.write(json.dumps({"kind": kind, "detail": str(exc)}) + "\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
