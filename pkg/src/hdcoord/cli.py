"""The ``hd`` command.

Exit codes: 0 success, 2 parse or validation failure, 3 ``whitney``
answered no, 4 unknown generator or fixture, 5 precondition failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import floer
from .diagram import parse_diagram, serialize_diagram, validate
from .errors import DiagramParseError, InvalidInputError, NoDiskError, UnknownFixtureError
from .fixtures import fixture

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NO = 3
EXIT_UNKNOWN = 4
EXIT_PRECONDITION = 5

FORMATS = ("table", "json", "dot")


class _Exit(Exception):
    def __init__(self, code, message):
        self.code = code
        self.message = message


def _load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise _Exit(EXIT_PARSE, f"{path}: {exc.strerror}")
    except UnicodeDecodeError:
        raise _Exit(EXIT_PARSE, f"{path}: not valid UTF-8")
    try:
        return parse_diagram(text)
    except DiagramParseError as exc:
        raise _Exit(EXIT_PARSE, f"{path}: {exc}")


def _generator(d, labels):
    try:
        return floer.find_generator(d, labels)
    except InvalidInputError as exc:
        raise _Exit(EXIT_UNKNOWN, f"unknown generator {labels!r}: {exc}")


def _sign(s):
    return "+1" if s > 0 else "-1"


def _table(headers, rows):
    widths = [max(len(str(c)) for c in col) for col in zip(headers, *rows)]
    fmt = "  ".join("{:<%d}" % w for w in widths)
    lines = [fmt.format(*headers).rstrip()]
    lines += [fmt.format(*map(str, r)).rstrip() for r in rows]
    return "\n".join(lines)


def h1_json(q):
    return {"rank": q.free_rank, "torsion": list(q.invariant_factors)}


def report_json(d, report):
    return {
        "genus": d.genus,
        "h1": h1_json(report.quotient),
        "generators": [
            {"id": x.id, "coordinate": report.coordinates[x.id].as_dict(), "sign": report.signs[x.id]}
            for x in report.generators
        ],
        "classes": [{"coordinate": c.as_dict(), "members": list(ids)} for c, ids in report.classes],
    }


def report_dot(report):
    lines = ["graph classes {"]
    for x in report.generators:
        lines.append(f'  "{x.id}" [label="{x.id}\\n{_sign(report.signs[x.id])}"];')
    for n, (c, ids) in enumerate(report.classes):
        lines.append(f'  // class {n}: {c}')
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                lines.append(f'  "{ids[a]}" -- "{ids[b]}";')
    lines.append("}")
    return "\n".join(lines)


def cmd_h1(args):
    q = floer.manifold_h1(_load(args.file))
    if args.format == "json":
        return json.dumps(h1_json(q)), EXIT_OK
    return f"H1 = {q}", EXIT_OK


def cmd_gens(args):
    d = _load(args.file)
    report = floer.partition_classes(d)
    if args.format == "json":
        return json.dumps(report_json(d, report)["generators"], indent=2), EXIT_OK
    rows = [
        (x.id, ",".join(map(str, x.sigma)), _sign(report.signs[x.id]), report.coordinates[x.id])
        for x in report.generators
    ]
    return _table(("generator", "sigma", "sign", "coordinate"), rows), EXIT_OK


def cmd_classes(args):
    d = _load(args.file)
    report = floer.partition_classes(d)
    if args.format == "json":
        return json.dumps(report_json(d, report), indent=2), EXIT_OK
    if args.format == "dot":
        return report_dot(report), EXIT_OK
    rows = [
        (c, len(ids), " ".join(ids), " ".join(_sign(report.signs[i]) for i in ids))
        for c, ids in report.classes
    ]
    return _table(("coordinate", "size", "generators", "signs"), rows), EXIT_OK


def cmd_whitney(args):
    d = _load(args.file)
    x, y = _generator(d, args.x), _generator(d, args.y)
    if floer.whitney_exists(d, x, y):
        return "yes", EXIT_OK
    return "no", EXIT_NO


def cmd_parity(args):
    d = _load(args.file)
    x, y = _generator(d, args.x), _generator(d, args.y)
    try:
        return str(floer.maslov_parity(d, x, y)), EXIT_OK
    except NoDiskError:
        raise _Exit(EXIT_PRECONDITION, f"no Whitney disk connects {x.id} and {y.id}")


def cmd_fixture(args):
    try:
        text = serialize_diagram(fixture(args.name))
    except UnknownFixtureError as exc:
        raise _Exit(EXIT_UNKNOWN, str(exc))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        return None, EXIT_OK
    return text.rstrip("\n"), EXIT_OK


def cmd_validate(args):
    warnings = validate(_load(args.file))
    if args.format == "json":
        return json.dumps({"warnings": warnings}), EXIT_OK
    return "\n".join(f"warning: {w}" for w in warnings) if warnings else "ok", EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="hd", description="Heegaard diagram homology coordinates and Whitney disks")
    parser.add_argument("--format", choices=FORMATS, default="table")
    # accept --format after the subcommand too without clobbering the global value
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("h1", parents=[fmt], help="first homology of the manifold")
    p.add_argument("file")
    p.set_defaults(func=cmd_h1)

    p = sub.add_parser("gens", parents=[fmt], help="list generators with sign and coordinate")
    p.add_argument("file")
    p.set_defaults(func=cmd_gens)

    p = sub.add_parser("classes", parents=[fmt], help="partition generators into classes")
    p.add_argument("file")
    p.set_defaults(func=cmd_classes)

    for name, func, text in (
        ("whitney", cmd_whitney, "is there a Whitney disk from x to y"),
        ("parity", cmd_parity, "Maslov index mod 2 of a disk from x to y"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("file")
        p.add_argument("x", help="comma-joined point labels, e.g. a,b")
        p.add_argument("y")
        p.set_defaults(func=func)

    p = sub.add_parser("fixture", help="write a built-in diagram")
    p.add_argument("name")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_fixture)

    p = sub.add_parser("validate", parents=[fmt], help="report non-fatal diagram warnings")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        out, code = args.func(args)
    except _Exit as exc:
        print(f"hd: {exc.message}", file=sys.stderr)
        return exc.code
    if out is not None:
        print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
