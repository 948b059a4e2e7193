"""Command-line front end.

Exit status: 0 when every check passes, 1 when some check fails, 2 on input
or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .ce_model import ColimitConflict, assemble_colimit, boundary_subalgebra
from .dg_core import graded_dimension
from .ginzburg import build_ginzburg, build_relative_ginzburg
from .quiver import QuiverError, parse_quiver
from .verifier import DEFAULT_N_LIST, path_count, run_random, run_verification

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
ALGEBRAS = ("ginzburg", "relative", "ce", "boundary")


class UsageError(Exception):
    pass


def _load(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        return parse_quiver(text)
    except QuiverError as exc:
        raise UsageError(f"invalid quiver ({exc.code}): {exc}") from exc


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _write(path: str, text: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror or exc}") from exc


def _build(q, n: int, algebra: str):
    if algebra == "ginzburg":
        return build_ginzburg(q, n)
    if algebra == "relative":
        return build_relative_ginzburg(q, n)
    a = assemble_colimit(q, n)
    return a if algebra == "ce" else boundary_subalgebra(a, q, n)


def cmd_validate(args) -> int:
    q = _load(args.path)
    print(
        f"valid: {len(q.vertices)} vertices ({len(q.frozen_vertices)} frozen), "
        f"{len(q.arrows)} arrows ({len(q.frozen_arrows)} frozen)"
    )
    return EXIT_OK


def cmd_build(args) -> int:
    q = _load(args.path)
    p = _build(q, args.n, args.algebra)
    text = _dump(p.to_document())
    if args.out:
        _write(args.out, text)
    else:
        sys.stdout.write(text)
    out = sys.stderr if not args.out else sys.stdout
    print(f"{args.algebra}: {len(p.vertices)} vertices, {len(p.generators)} generators", file=out)
    for g in p.generators.values():
        print(f"  {g.id}: {g.src} -> {g.tgt}  degree {g.degree}", file=out)
    return EXIT_OK


def _parse_n_list(text: str) -> list[int]:
    try:
        ns = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad --n-list {text!r}") from None
    if not ns or any(n < 3 for n in ns):
        raise UsageError("--n-list needs integers >= 3")
    return ns


def cmd_verify(args) -> int:
    q = _load(args.path)
    ns = _parse_n_list(args.n_list)
    if args.random < 0:
        raise UsageError("--random must be >= 0")
    reports = run_verification(q, ns, paper_literal=args.paper_literal)
    for r in reports:
        print(r.render())
    if args.random:
        extra = run_random(args.random, args.seed, ns, paper_literal=args.paper_literal)
        bad = [r for r in extra if not r.passed]
        print(f"random: {len(extra)} runs (seed {args.seed}), {len(bad)} failing")
        for r in bad:
            print(f"  failing instance {r.instance.to_json()}")
            print(r.render())
        reports += extra
    if args.report:
        _write(args.report, _dump([r.to_json() for r in reports]))
    ok = all(r.passed for r in reports)
    print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_hilbert(args) -> int:
    q = _load(args.path)
    if args.max_len < 0:
        raise UsageError("--max-len must be >= 0")
    p = _build(q, args.n, args.algebra)
    count = graded_dimension(p, args.degree, args.max_len)
    print(f"{args.algebra} degree {args.degree} words of length <= {args.max_len}: {count}")
    if args.degree != 0:
        return EXIT_OK
    oracle = path_count(q.frozen_subquiver() if args.algebra == "boundary" else q, args.max_len)
    print(f"path-count oracle: {oracle}  delta {count - oracle}")
    return EXIT_OK if count == oracle else EXIT_FAIL


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="relginz", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and validate a quiver document")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("build", help="export a presentation as JSON")
    p.add_argument("path")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--algebra", choices=ALGEBRAS, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="run the identity suite")
    p.add_argument("path")
    p.add_argument("--n-list", default=",".join(map(str, DEFAULT_N_LIST)))
    p.add_argument("--report")
    p.add_argument("--paper-literal", action="store_true",
                   help="use d(b_{e,v}) = 0 in frozen-edge pieces")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--random", type=int, default=0, metavar="K")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hilbert", help="count words by degree")
    p.add_argument("path")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--algebra", choices=ALGEBRAS, default="ce")
    p.set_defaults(func=cmd_hilbert)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ColimitConflict) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
