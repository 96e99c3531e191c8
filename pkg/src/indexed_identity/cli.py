"""Command-line interface.

Every verb reads canonical documents (``-`` means standard input) and writes
a canonical document, or a bare rational, to standard output or ``--out``.
Exit status: 0 success, 1 domain error (or a failed audit), 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from fractions import Fraction
from pathlib import Path

from . import documents
from .core import distinction_of
from .documents import Document, format_rational, serialize
from .errors import DocumentError, IndexedSystemError
from .ifuzzy import intersection, set_distinction, system_of_sets, union
from .indexing import PredicateExtension, distinction_to_set, index_to_set, indexed_extension
from .metric import metric_from_system, system_from_metric
from .profile import build_system
from .verify import AxiomReport, audit, audit_metric

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class CliError(Exception):
    def __init__(self, code, message):
        self.code = code
        super().__init__(message)


class _Inputs:
    """Loads documents by path; standard input can be consumed once."""

    def __init__(self, stdin):
        self.stdin = stdin
        self._stdin_text = None

    def load(self, path, strict=True):
        if path == "-":
            if self._stdin_text is None:
                self._stdin_text = self.stdin.read()
            text, base, source = self._stdin_text, Path.cwd(), "<stdin>"
        else:
            p = Path(path)
            try:
                text = p.read_text(encoding="utf-8")
            except OSError as exc:
                raise CliError(EXIT_USAGE, f"{path}: cannot read: {exc.strerror}") from None
            base, source = p.parent, path
        try:
            return documents.parse(text, base_dir=base, strict=strict, source=source)
        except DocumentError as exc:
            raise CliError(EXIT_USAGE, str(exc)) from None
        except IndexedSystemError as exc:
            raise CliError(EXIT_DOMAIN, f"{source}: {exc}") from None

    def expect(self, path, kind):
        doc = self.load(path)
        if doc.kind != kind:
            raise CliError(EXIT_USAGE, f"{path}: expected a {kind} document, got {doc.kind}")
        return doc.payload


def _render_report(report: AxiomReport) -> str:
    rows = [("axiom", "verdict", "witness")]
    for axiom, ok in report.verdicts.items():
        if ok:
            rows.append((axiom, "pass", report.notes.get(axiom, "")))
        else:
            w = report.witnesses[axiom]
            values = ", ".join(format_rational(v) for v in w.values)
            where = f"({', '.join(w.labels)}) " if w.labels else ""
            rows.append((axiom, "FAIL", f"{where}{w.detail}: {values}".rstrip(": ")))
    widths = [max(len(r[i]) for r in rows) for i in range(2)]
    return "\n".join(f"{a:<{widths[0]}}  {v:<{widths[1]}}  {w}".rstrip()
                     for a, v, w in rows) + "\n"


def _doc_text(payload, pretty):
    return serialize(Document.of(payload), pretty=pretty)


def _members(text):
    return tuple(m for m in (s.strip() for s in text.split(",")) if m)


def cmd_build(args, inputs):
    if args.table:
        table = inputs.expect(args.table, "predicate-table")
        return build_system(table)
    return system_from_metric(inputs.expect(args.metric, "distance-matrix"))


def cmd_audit(args, inputs):
    doc = inputs.load(args.document, strict=False)
    if doc.kind == "index-system":
        report = audit(doc.payload)
    elif doc.kind == "distance-matrix":
        report = audit_metric(doc.payload)
    else:
        raise CliError(EXIT_USAGE, f"{args.document}: cannot audit a {doc.kind} document")
    return report


def cmd_dist(args, inputs):
    system = inputs.expect(args.system, "index-system")
    return distinction_of(system, args.a, args.b)


def cmd_fuzzy_pair(args, inputs):
    f = inputs.expect(args.first, "ifuzzy-set")
    g = inputs.expect(args.second, "ifuzzy-set")
    op = {"fuzzy-union": union, "fuzzy-intersect": intersection,
          "fuzzy-dist": set_distinction}[args.verb]
    return op(f, g)


def cmd_fuzzy_system(args, inputs):
    sets = [inputs.expect(p, "ifuzzy-set") for p in args.sets]
    names = list(_members(args.names)) if args.names else None
    return system_of_sets(sets, names)


def cmd_indexate(args, inputs):
    if args.extension:
        ext = inputs.expect(args.extension, "extension")
    elif args.system:
        if args.members is None:
            raise CliError(EXIT_USAGE, "--system needs --members")
        base = inputs.expect(args.system, "index-system")
        ext = PredicateExtension(base, _members(args.members))
    else:
        if args.predicate is None:
            raise CliError(EXIT_USAGE, "--table needs --predicate")
        table = inputs.expect(args.table, "predicate-table")
        ext = PredicateExtension.from_table(build_system(table), table, args.predicate)
    if args.element is None:
        return indexed_extension(ext)
    return (distinction_to_set(ext, args.element), index_to_set(ext, args.element))


def cmd_convert(args, inputs):
    doc = inputs.load(args.document)
    if doc.kind == "index-system":
        return metric_from_system(doc.payload)
    if doc.kind == "distance-matrix":
        return system_from_metric(doc.payload)
    raise CliError(EXIT_USAGE, f"{args.document}: convert needs an index-system or "
                               f"distance-matrix document, got {doc.kind}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", "-o", help="write output here instead of standard output")
    common.add_argument("--pretty", action="store_true",
                        help="human-readable output (reports render as tables)")

    parser = argparse.ArgumentParser(
        prog="ixsys", description="Indexed identity systems: build, audit, and compute.")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    p = sub.add_parser("build", parents=[common],
                       help="build an index system from a predicate table or a metric")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--table", help="predicate-table document")
    src.add_argument("--metric", help="distance-matrix document")
    p.set_defaults(func=cmd_build, files=("table", "metric"))

    p = sub.add_parser("audit", parents=[common],
                       help="check an index matrix against F1-F7, or a distance matrix "
                            "against the metric axioms")
    p.add_argument("document")
    p.set_defaults(func=cmd_audit, files=("document",))

    p = sub.add_parser("dist", parents=[common], help="print the distinction D(a,b)")
    p.add_argument("system")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_dist, files=("system",))

    for verb, what in (("fuzzy-union", "pointwise max"), ("fuzzy-intersect", "pointwise min"),
                       ("fuzzy-dist", "sup distance")):
        p = sub.add_parser(verb, parents=[common], help=f"{what} of two i-fuzzy sets")
        p.add_argument("first")
        p.add_argument("second")
        p.set_defaults(func=cmd_fuzzy_pair, files=("first", "second"))

    p = sub.add_parser("fuzzy-system", parents=[common],
                       help="index system over a family of i-fuzzy sets")
    p.add_argument("sets", nargs="+")
    p.add_argument("--names", help="comma-separated labels (default S0,S1,...)")
    p.set_defaults(func=cmd_fuzzy_system, files=("sets",))

    p = sub.add_parser("indexate", parents=[common],
                       help="degree to which an element satisfies a predicate")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--system", help="index-system document (with --members)")
    src.add_argument("--table", help="predicate-table document (with --predicate)")
    src.add_argument("--extension", help="extension document")
    p.add_argument("--members", help="comma-separated labels satisfying the predicate")
    p.add_argument("--predicate", help="predicate name in the table")
    p.add_argument("element", nargs="?",
                   help="element to index; omitted, all elements are graded")
    p.set_defaults(func=cmd_indexate, files=("system", "table", "extension"))

    p = sub.add_parser("convert", parents=[common],
                       help="index system to distance matrix, or the reverse")
    p.add_argument("document")
    p.set_defaults(func=cmd_convert, files=("document",))
    return parser


def _check_files(args):
    paths = []
    for name in args.files:
        value = getattr(args, name, None)
        if value is None:
            continue
        paths.extend(value if isinstance(value, list) else [value])
    if sum(1 for p in paths if p == "-") > 1:
        raise CliError(EXIT_USAGE, "standard input ('-') can be used only once")
    for p in paths:
        if p != "-" and not Path(p).is_file():
            raise CliError(EXIT_USAGE, f"{p}: no such file")


def _format(result, args):
    if isinstance(result, AxiomReport) and args.pretty:
        return _render_report(result)
    if isinstance(result, tuple):
        d, r = result
        return f"distinction {format_rational(d)}\nindex {format_rational(r)}\n"
    if isinstance(result, Fraction):
        return format_rational(result) + "\n"
    return _doc_text(result, args.pretty)


def run(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        _check_files(args)
        result = args.func(args, _Inputs(stdin))
        text = _format(result, args)
    except CliError as exc:
        print(f"error: {exc}", file=stderr)
        return exc.code
    except DocumentError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    except IndexedSystemError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_DOMAIN

    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        stdout.write(text)
    if isinstance(result, AxiomReport) and not result.passed:
        print(f"error: audit failed: {', '.join(result.failed)}", file=stderr)
        return EXIT_DOMAIN
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
