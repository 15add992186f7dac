"""Command-line interface.

Partitions are written ``"[1,2];[3]"`` (parts in order), the largest part of
a Type II datum with ``--i0 "[4,5]"``, and signs as a ``+``/``-`` string
indexed 1..n.  A t-root is ``d1-d2``, ``-2d1``, ``d1+d2`` (a sign, an
optional rational coefficient, ``d`` and an index, at most two terms) or a
coordinate list ``[1,-1]``.  Several t-roots are separated by ``;`` or given
by repeating ``-S``.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .classical import DatumError, make_datum, t_root_system
from .notation import NotationError, format_delta, parse_delta
from .report import EXIT_CODES, EXAMPLE_IDS, check, fixed_example, troots_json
from .verify import verify_grid

GRAMMAR = """t-root grammar:
  term   := [+|-] [integer | integer/integer] d<index>
  troot  := term [(+|-) term]  |  [c_1,...,c_k]
examples: d1-d2   -2d1   d1+d2   [1,-1]"""


USAGE_EXIT = 64


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with 64 so that 2 stays reserved for a certified verdict."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_EXIT, f"{self.prog}: error: {message}\n")


def _glue_set_values(argv: list[str]) -> list[str]:
    """Let ``-S -d1`` through: argparse would read ``-d1`` as an option."""
    out, i = [], 0
    while i < len(argv):
        if argv[i] in ("-S", "--set") and i + 1 < len(argv):
            out.append("--set=" + argv[i + 1])
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def parse_parts(text: str) -> list[list[int]]:
    parts = []
    pos = 0
    for chunk in text.split(";"):
        stripped = chunk.strip()
        if not re.fullmatch(r"\[\s*\d+(\s*,\s*\d+)*\s*\]", stripped):
            col = pos + len(chunk) - len(chunk.lstrip()) + 1
            raise UsageError(f"--parts: expected '[i,j,...]' at column {col} of {text!r}")
        parts.append(json.loads(stripped))
        pos += len(chunk) + 1
    return parts


def parse_i0(text: str | None) -> list[int] | None:
    if text is None:
        return None
    body = text.strip().strip("[]")
    try:
        return [int(x) for x in body.split(",")]
    except ValueError:
        raise UsageError(f"--i0: expected a list of indices, got {text!r}") from None


def build_datum(args) -> object:
    try:
        parts = parse_parts(args.parts) if args.parts else []
        i0 = parse_i0(args.i0)
        return make_datum(args.type, args.rank, parts, args.signs, i0)
    except DatumError as exc:
        raise UsageError(str(exc)) from None


def parse_set(items: list[str], k: int) -> list:
    out = []
    for item in items:
        for piece in re.split(r";", item):
            if piece.strip():
                try:
                    out.append(parse_delta(piece, k))
                except NotationError as exc:
                    raise UsageError(f"-S: {exc}") from None
    return out


def _emit(payload: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        sys.stdout.write(json.dumps(payload, sort_keys=True, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write("\n".join(lines) + "\n")


def cmd_troots(args) -> int:
    datum = build_datum(args)
    payload = troots_json(datum)
    lines = [f"{datum.lie_type}{datum.n} {datum.ptype}, k = {datum.k}"]
    for r in t_root_system(datum):
        label = " (x) ".join(f"{kind}[{i}]" for i, kind in r.label)
        lines.append(f"  {format_delta(r.delta):>10}  dim {r.dim:>3}  {label}")
    _emit(payload, args.json, lines)
    return 0


def cmd_check(args) -> int:
    datum = build_datum(args)
    s = parse_set(args.S or [], datum.k)
    rsh = t_root_system(datum)
    for nu in s:
        if nu not in rsh:
            raise UsageError(f"-S: {format_delta(nu)} is not a t-root of this datum")
    rep = check(datum, s, args.max_degree)
    payload = rep.to_json()
    lines = [
        f"S = {{{', '.join(payload['S'])}}}",
        f"saturated: {rep.saturated}",
        f"cone: {json.dumps(payload['cone'])}",
        f"order: {json.dumps(payload['order'])}",
        "invariants: " + " ".join(f"k={k}:{d}" for k, d in rep.invariants.degrees),
        f"verdict: {rep.verdict}",
    ]
    _emit(payload, args.json, lines)
    return rep.exit_code


def cmd_paper(args) -> int:
    payload, verdict = fixed_example(args.example_id, args.max_degree)
    lines = [json.dumps(payload, sort_keys=True, indent=2), f"verdict: {verdict}"]
    _emit(payload, args.json, lines)
    return EXIT_CODES[verdict]


def cmd_verify(args) -> int:
    types = [t.strip() for t in args.types.split(",") if t.strip()]
    grid = []
    for t in types:
        low = 4 if t.upper() == "D" else 1
        grid += [(t, n) for n in range(low, args.max_rank + 1)]
    result = verify_grid(grid, args.max_degree, args.saturated_only, args.jobs)
    payload = result.to_json()
    lines = [
        f"instances {result.instances}, sets {result.sets}, orbits {result.orbits}",
        f"direct {result.direct}, inferred zero {result.inferred_zero}, inferred nonzero {result.inferred_nonzero}",
        f"violations {len(result.violations)}, flagged {len(result.flagged)}, refused {len(result.refused)}",
    ]
    for entry in result.violations:
        lines.append(f"VIOLATION {json.dumps(entry)}")
    for entry in result.flagged:
        lines.append(f"flagged {entry['datum']} S={{{', '.join(entry['S'])}}}")
    for entry in result.refused:
        lines.append(f"REFUSED {json.dumps(entry)}")
    _emit(payload, args.json, lines)
    return 0 if not result.violations and not result.refused else 1


def _datum_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", required=True, help="gl, B, C or D")
    p.add_argument("--rank", required=True, type=int)
    p.add_argument("--parts", default="", help='ordered parts, e.g. "[1,2];[3]"')
    p.add_argument("--i0", default=None, help='largest part of a Type II datum, e.g. "[4,5]"')
    p.add_argument("--signs", default=None, help='"+"/"-" string indexed 1..n (default all +)')


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kostant", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter, epilog=GRAMMAR)
    parser.add_argument("--json", action="store_true", help="one JSON document on stdout")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("troots", help="list the t-roots of a parabolic datum")
    _datum_args(p)
    p.set_defaults(func=cmd_troots)

    p = sub.add_parser("check", help="decide whether a parabolic contains the t-root spaces over S",
                       epilog=GRAMMAR, formatter_class=argparse.RawDescriptionHelpFormatter)
    _datum_args(p)
    p.add_argument("-S", "--set", dest="S", action="append", help="t-roots, ';'-separated; may be repeated")
    p.add_argument("--max-degree", type=int, default=None, help="invariant degree bound (default 4k+4)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("paper", help="reproduce a fixed example")
    p.add_argument("example_id", choices=EXAMPLE_IDS)
    p.add_argument("--max-degree", type=int, default=None)
    p.set_defaults(func=cmd_paper)

    p = sub.add_parser("verify-main-theorem", help="exhaustive grid check")
    p.add_argument("--types", default="gl,B,C", help="comma-separated types")
    p.add_argument("--max-rank", type=int, default=3)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--saturated-only", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    for sp in sub.choices.values():
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="JSON output")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_set_values(list(sys.argv[1:] if argv is None else argv)))
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"kostant: error: {exc}\n")
        return USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
