"""Command-line front end.

Verbs: convert (between path/order encodings), map (apply a named
bijection), verify (run a harness check), enumerate (stream objects one per
line), render (draw a path).  Exit status: 0 success or verification passed,
1 verification found failures, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import PreconditionError, SizeLimitError, ValidationError
from . import harness
from .lattice import (
    AreaSequence,
    DyckWord,
    Step,
    area_sequence_from_area_set,
    area_sequence_from_word,
    area_set_from_area_sequence,
    enumerate_dyck,
    parse_area_sequence,
    parse_area_set,
    parse_word,
    word_from_area_sequence,
)
from .partlist import p_map, q_map
from .uio import (
    UnitIntervalOrder,
    a_inverse,
    a_map,
    enumerate_uio,
    parse_intervals,
    parse_pred,
    uio_from_intervals,
)
from .zeta import zeta, zeta_inverse

JOBS_ENV_VAR = "DYCKZETA_JOBS"

_CONVERT_SOURCES = ("word", "areaseq", "areaset", "pred", "intervals")
#: interval realizations of an order are not canonical, so intervals is
#: accepted as input only
_CONVERT_TARGETS = ("word", "areaseq", "areaset", "pred")


def _default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV_VAR, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


# ------------------------------------------------------------- conversion

def _to_area_sequence(kind: str, text: str) -> AreaSequence:
    """Parse any source encoding down to the area-sequence hub.

    Order encodings (pred, intervals) cross over via the incomparability
    correspondence pred[j] = j - 1 - a_j, i.e. the area bijection; the
    part-listing bijection stays available as `map --name p`.
    """
    if kind == "word":
        return area_sequence_from_word(parse_word(text))
    if kind == "areaseq":
        return parse_area_sequence(text)
    if kind == "areaset":
        return area_sequence_from_area_set(parse_area_set(text))
    if kind == "pred":
        u = parse_pred(text)
        return AreaSequence(tuple(j - 1 - p for j, p in enumerate(u.pred, start=1)))
    if kind == "intervals":
        u = uio_from_intervals(parse_intervals(text))
        return AreaSequence(tuple(j - 1 - p for j, p in enumerate(u.pred, start=1)))
    raise ValidationError(f"unknown encoding {kind!r}")


def _from_area_sequence(kind: str, seq: AreaSequence) -> str:
    if kind == "word":
        return str(word_from_area_sequence(seq))
    if kind == "areaseq":
        return str(seq)
    if kind == "areaset":
        return str(area_set_from_area_sequence(seq))
    if kind == "pred":
        pred = tuple(j - 1 - a for j, a in enumerate(seq.entries, start=1))
        return str(UnitIntervalOrder(pred))
    raise ValidationError(f"unknown encoding {kind!r}")


def _each_value(value):
    """The positional argument, or stdin lines when it is omitted; this is
    what lets verbs compose under shell pipes (enumerate | map | ...)."""
    if value is not None:
        yield value
        return
    for line in sys.stdin:
        yield line.rstrip("\n")


def _cmd_convert(args) -> int:
    for value in _each_value(args.value):
        seq = _to_area_sequence(args.src, value)
        print(_from_area_sequence(args.dst, seq))
    return 0


# ------------------------------------------------------------------- maps

def _apply_named_map(name: str, value: str) -> str:
    if name == "a":
        return str(a_map(parse_pred(value)))
    if name == "p":
        return str(p_map(parse_pred(value)))
    if name == "q":
        listing, _ = q_map(parse_pred(value))
        return str(listing)
    if name == "zeta":
        return str(zeta(parse_word(value)))
    if name == "unzeta":
        return str(zeta_inverse(parse_word(value)))
    return str(a_inverse(parse_word(value)))


def _cmd_map(args) -> int:
    for value in _each_value(args.value):
        print(_apply_named_map(args.name, value))
    return 0


# ----------------------------------------------------------------- verify

def _cmd_verify(args) -> int:
    check = args.check
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    if check == "theorem":
        report = harness.check_theorem(args.n, jobs=jobs, max_n=args.max_n)
    elif check == "induction":
        report = harness.check_induction_step(args.n, jobs=jobs, max_n=args.max_n)
    elif check == "bijections":
        report = harness.check_bijections(args.n, jobs=jobs, max_n=args.max_n)
    else:
        report = harness.check_grevlex(args.n, max_n=args.max_n)
    if args.json:
        print(json.dumps(report.to_json_dict()))
    else:
        print(report.render_text())
    return 0 if report.passed else 1


# -------------------------------------------------------------- enumerate

def _cmd_enumerate(args) -> int:
    if args.kind == "dyck":
        for word in enumerate_dyck(args.n):
            print(word)
    else:
        for u in enumerate_uio(args.n):
            print(u)
    return 0


# ----------------------------------------------------------------- render

def render_ascii(d: DyckWord) -> str:
    """Draw the path on an n x n grid, origin bottom left, diagonal marked."""
    n = d.n
    size = 2 * n + 1
    canvas = [[" "] * size for _ in range(size)]
    for y in range(n + 1):
        for x in range(n + 1):
            canvas[2 * (n - y)][2 * x] = "+"
    for i in range(1, n + 1):
        canvas[2 * (n - i) + 1][2 * i - 1] = "/"
    x = y = 0
    for step in d.steps:
        if step is Step.UP:
            canvas[2 * (n - y) - 1][2 * x] = "|"
            y += 1
        else:
            canvas[2 * (n - y)][2 * x + 1] = "-"
            x += 1
    return "\n".join("".join(row).rstrip() for row in canvas)


def render_svg(d: DyckWord, diagonals: bool = False) -> str:
    """Standalone SVG: grid, main diagonal, the path, and optionally the
    reading diagonals y = x + t."""
    n = d.n
    unit = 40
    pad = 10
    side = n * unit + 2 * pad

    def px(x: float, y: float) -> tuple[float, float]:
        return (pad + x * unit, pad + (n - y) * unit)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{side}" '
        f'height="{side}" viewBox="0 0 {side} {side}">'
    ]
    for i in range(n + 1):
        x0, y0 = px(i, 0)
        x1, y1 = px(i, n)
        parts.append(
            f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" '
            f'stroke="#cccccc" stroke-width="1"/>'
        )
        x0, y0 = px(0, i)
        x1, y1 = px(n, i)
        parts.append(
            f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" '
            f'stroke="#cccccc" stroke-width="1"/>'
        )
    x0, y0 = px(0, 0)
    x1, y1 = px(n, n)
    parts.append(
        f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" '
        f'stroke="#555555" stroke-width="1" stroke-dasharray="6,4"/>'
    )
    if diagonals:
        for t in range(1, n):
            x0, y0 = px(0, t)
            x1, y1 = px(n - t, n)
            parts.append(
                f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" '
                f'stroke="#999999" stroke-width="1" stroke-dasharray="2,4"/>'
            )
    points = []
    x = y = 0
    points.append("%s,%s" % px(x, y))
    for step in d.steps:
        if step is Step.UP:
            y += 1
        else:
            x += 1
        points.append("%s,%s" % px(x, y))
    parts.append(
        f'<polyline points="{" ".join(points)}" fill="none" '
        f'stroke="#1f4fd8" stroke-width="4" stroke-linecap="square"/>'
    )
    parts.append("</svg>")
    return "\n".join(parts)


def _cmd_render(args) -> int:
    word = parse_word(args.value)
    if args.format == "ascii":
        print(render_ascii(word))
    else:
        print(render_svg(word, diagonals=args.diagonals))
    return 0


# ------------------------------------------------------------------ entry

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dyckzeta",
        description="Unit interval orders, Dyck paths, and the zeta map.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    convert = sub.add_parser("convert", help="losslessly convert encodings")
    convert.add_argument("--from", dest="src", required=True, choices=_CONVERT_SOURCES)
    convert.add_argument("--to", dest="dst", required=True, choices=_CONVERT_TARGETS)
    convert.add_argument("value", nargs="?", default=None,
                         help="object text; omit to stream stdin lines")
    convert.set_defaults(func=_cmd_convert)

    mp = sub.add_parser("map", help="apply a named map to objects")
    mp.add_argument(
        "--name",
        required=True,
        choices=("a", "p", "q", "zeta", "unzeta", "a-inverse"),
    )
    mp.add_argument(
        "value",
        nargs="?",
        default=None,
        help="pred vector for a/p/q, step word for zeta/unzeta/a-inverse; "
        "omit to stream stdin lines",
    )
    mp.set_defaults(func=_cmd_map)

    verify = sub.add_parser("verify", help="run one verification check")
    verify.add_argument(
        "--check",
        required=True,
        choices=("theorem", "induction", "bijections", "grevlex"),
    )
    verify.add_argument("--n", type=int, required=True)
    verify.add_argument(
        "--jobs",
        type=int,
        default=None,
        help=f"worker processes (default from ${JOBS_ENV_VAR}, else 1)",
    )
    verify.add_argument("--max-n", type=int, default=None, dest="max_n",
                        help="raise the default size ceiling")
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(func=_cmd_verify)

    enum = sub.add_parser("enumerate", help="stream all objects of one size")
    enum.add_argument("--kind", required=True, choices=("dyck", "uio"))
    enum.add_argument("--n", type=int, required=True)
    enum.set_defaults(func=_cmd_enumerate)

    render = sub.add_parser("render", help="draw a path on its grid")
    render.add_argument("value")
    render.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    render.add_argument(
        "--diagonals",
        action="store_true",
        help="svg only: also draw the reading diagonals y = x + t",
    )
    render.set_defaults(func=_cmd_render)
    return parser


_PARSER = build_parser()


def main(argv=None) -> int:
    try:
        args = _PARSER.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (ValidationError, PreconditionError, SizeLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        # downstream closed the pipe (enumerate | head ...); exit quietly
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
