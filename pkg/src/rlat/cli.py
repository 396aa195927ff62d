"""The ``rlat`` command.

Exit codes: 0 success or found, 1 nothing found or audit failures, 2 parse
or usage errors, 3 axiom failures, 4 capacity limits, 5 internal
inconsistencies.
"""

import argparse
import json
import sys
from importlib import resources
from pathlib import Path
from typing import List, Optional

from .algebra import dump_lattice, load_lattice, read_lattice
from .audit import audit
from .errors import ParseError, RlatError
from .filters import default_cap, filter_lattice
from .modelgen import MAX_ORDER, canonical_form, enumerate_lattices, parse_query, search
from .report import analyze, filter_label, filters_dot, spec_dot, to_structured, to_text


def fixture_names() -> List[str]:
    folder = resources.files("rlat") / "fixtures"
    return sorted(p.name[: -len(".rlat")] for p in folder.iterdir() if p.name.endswith(".rlat"))


def resolve(source: str):
    """Load a lattice from a path, or from a bundled fixture name."""
    path = Path(source)
    if path.exists():
        try:
            return read_lattice(path), path.stem
        except OSError as exc:
            raise ParseError(f"cannot read {source}: {exc}") from exc
    stem = source[:-5] if source.endswith(".rlat") else source
    if stem in fixture_names():
        text = (resources.files("rlat") / "fixtures" / f"{stem}.rlat").read_text()
        return load_lattice(text), stem
    raise ParseError(f"no such file or bundled fixture: {source}")


def _print_error(exc: RlatError):
    print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
    witness = getattr(exc, "witness", None)
    if witness:
        print(f"witness: {' '.join(str(w) for w in witness)}", file=sys.stderr)


# -- subcommands ----------------------------------------------------------------


def cmd_validate(args) -> int:
    L, name = resolve(args.file)
    print(f"{name}: valid residuated lattice with {L.n} elements")
    return 0


def cmd_analyze(args) -> int:
    L, name = resolve(args.file)
    report = analyze(L, name)
    sys.stdout.write(to_structured(report) if args.format == "structured" else to_text(report))
    return 0


def _cap(value: Optional[int]) -> int:
    return default_cap() if value is None else value


def _universe(max_order: int, cap: int):
    for n in range(2, max_order + 1):
        stream = enumerate_lattices(n, cap)
        for k, L in enumerate(stream, start=1):
            yield L, f"order{n}-{k:03d}"
        if stream.truncated:
            print(f"note: order {n} truncated at {cap} classes", file=sys.stderr)


def cmd_audit(args) -> int:
    if args.file is None and args.enumerate is None:
        raise ParseError("audit needs a lattice file or --enumerate N")
    if args.file is not None:
        items = [resolve(args.file)]
    else:
        items = _universe(args.enumerate, _cap(args.cap))
    lattices = checked = failed = skipped = 0
    structured = []
    for L, name in items:
        report = audit(L, name)
        lattices += 1
        s = report.summary()
        checked += s["checked"]
        failed += s["fails"]
        skipped += s["not_applicable"]
        if args.format == "structured":
            structured.append(report.to_dict())
        elif args.file is not None:
            print(report.to_text())
        else:
            print(f"{name}: {s['checked']} claims, {s['fails']} failed, {s['not_applicable']} not applicable")
            for e in report.failures:
                print(f"  FAILED {e.claim}: {e.witness or ''} {e.note or ''}".rstrip())
    summary = {"lattices": lattices, "checked": checked, "failed": failed, "not_applicable": skipped}
    if args.format == "structured":
        print(json.dumps({"reports": structured, "summary": summary}, indent=2, ensure_ascii=False))
    else:
        print(
            f"audited {lattices} lattice(s): {checked} claims checked, "
            f"{failed} failed, {skipped} not applicable"
        )
    return 1 if failed else 0


def cmd_search(args) -> int:
    query = parse_query(args.query)
    hits = search(query, args.max_order, args.cap)
    current = None
    for hit in hits:
        if hit.form != current:
            current = hit.form
            L = hit.lattice
            print(f"order {hit.order} class {hit.form.hex()}")
            print(f"  elements: {' '.join(L.names)}")
            if args.dump:
                for line in dump_lattice(L).splitlines():
                    print(f"  | {line}")
        if hit.witness is not None:
            fl = filter_lattice(hit.lattice)
            i = fl.idx(hit.witness)
            print(f"  witness {filter_label(fl, i)} = {{{','.join(hit.witness.names)}}}")
    classes = len({h.form for h in hits})
    if not hits:
        print(f"no witnesses for {query} up to order {args.max_order}")
        return 1
    print(f"{len(hits)} witness(es) in {classes} class(es) for {query}")
    return 0


def cmd_export(args) -> int:
    L, _ = resolve(args.file)
    sys.stdout.write(filters_dot(L) if args.what == "filters" else spec_dot(L))
    return 0


def cmd_enumerate(args) -> int:
    stream = enumerate_lattices(args.order, _cap(args.cap))
    out = Path(args.out) if args.out else None
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
    for k, L in enumerate(stream, start=1):
        name = f"order{args.order}-{k:03d}"
        cert = canonical_form(L).hex()
        if out is not None:
            (out / f"{name}.rlat").write_text(dump_lattice(L, comment=f"class {cert}"))
        print(f"{name} {cert}")
    print(f"{len(stream)} class(es) of order {args.order}" + (" (truncated)" if stream.truncated else ""))
    return 0


# -- argument parsing -------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        sys.exit(2)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rlat", description="Finite residuated lattice toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", help="check that a file describes a residuated lattice")
    p.add_argument("file", help="lattice file or bundled fixture name")
    p.set_defaults(run=cmd_validate)

    p = sub.add_parser("analyze", help="filters, spectra, socle, semi-simplicity")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(run=cmd_analyze)

    p = sub.add_parser("audit", help="check the structural theory on a lattice or a universe")
    p.add_argument("file", nargs="?")
    p.add_argument("--enumerate", type=int, metavar="N", help="audit every class of order 2..N")
    p.add_argument("--cap", type=int, help="at most K classes per order")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(run=cmd_audit)

    p = sub.add_parser("search", help="find lattices and filters satisfying a query")
    p.add_argument("query", help="e.g. 'simple & !prime'")
    p.add_argument("--max-order", type=int, default=5)
    p.add_argument("--cap", type=int, help="stop after K witnesses")
    p.add_argument("--dump", action="store_true", help="print each class in file format")
    p.set_defaults(run=cmd_search)

    p = sub.add_parser("export", help="Graphviz output")
    p.add_argument("file")
    p.add_argument("--what", choices=("filters", "spec"), default="filters")
    p.add_argument("--format", choices=("dot",), default="dot")
    p.set_defaults(run=cmd_export)

    p = sub.add_parser("enumerate", help=f"list isomorphism classes of order N (2..{MAX_ORDER})")
    p.add_argument("order", type=int)
    p.add_argument("--cap", type=int)
    p.add_argument("--out", help="write one lattice file per class into this directory")
    p.set_defaults(run=cmd_enumerate)

    p = sub.add_parser("fixtures", help="list bundled fixture names")
    p.set_defaults(run=lambda args: print("\n".join(fixture_names())) or 0)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except RlatError as exc:
        _print_error(exc)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
