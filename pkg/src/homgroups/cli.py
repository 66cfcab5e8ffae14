"""Command-line surface: verify, classify, subgroups, cosets, lagrange,
cauchy, twist, hopf, cayley.

Documents are flat JSON objects with keys order, unit, alpha, table and
optional labels, zero-based throughout.  All output is byte-deterministic.
Exit status is 0 exactly when the requested check passed; any nonzero exit
prints a machine-parsable ``error: <tag>`` as the last line.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import classify as _classify
from . import constructions as _constructions
from . import homhopf as _homhopf
from . import subgroups as _subgroups
from .core import (
    AxiomReport,
    FiniteGroup,
    HomGroup,
    InvalidStructureError,
    Permutation,
    verify,
)

TAG_PARSE = "parse-error"
TAG_INVALID = "invalid-structure"
TAG_DOMAIN = "domain-error"
TAG_USAGE = "usage-error"
TAG_GUARD = "guard-refused"
TAG_NOT_AUTOMORPHISM = "not-automorphism"

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_ERROR = 2


class DocumentError(ValueError):
    """Malformed document: bad JSON or bad shape."""


class CliFailure(Exception):
    """Abort command with a message, tag, and exit code."""

    def __init__(self, message: str, tag: str, code: int = EXIT_ERROR):
        super().__init__(message)
        self.tag = tag
        self.code = code


_DOCUMENT_KEYS = {"order", "unit", "alpha", "table", "labels"}


def parse_document(path: str) -> dict:
    """Read and shape-check a Hom-group document; no axiom checking here."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(
            f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from None
    if not isinstance(doc, dict):
        raise DocumentError(f"{path}: document must be a JSON object")
    unknown = sorted(set(doc) - _DOCUMENT_KEYS)
    if unknown:
        raise DocumentError(f"{path}: unknown keys {unknown}")
    for key in ("order", "unit", "alpha", "table"):
        if key not in doc:
            raise DocumentError(f"{path}: missing key {key!r}")
    order = doc["order"]
    if not isinstance(order, int) or order < 1:
        raise DocumentError(f"{path}: order must be a positive integer")
    if not isinstance(doc["unit"], int):
        raise DocumentError(f"{path}: unit must be an integer")
    alpha = doc["alpha"]
    if not isinstance(alpha, list) or len(alpha) != order or not all(
        isinstance(v, int) for v in alpha
    ):
        raise DocumentError(f"{path}: alpha must be a list of {order} integers")
    table = doc["table"]
    if (
        not isinstance(table, list)
        or len(table) != order
        or not all(
            isinstance(row, list) and len(row) == order and all(isinstance(v, int) for v in row)
            for row in table
        )
    ):
        raise DocumentError(f"{path}: table must be a {order}x{order} integer matrix")
    labels = doc.get("labels")
    if labels is not None and (
        not isinstance(labels, list)
        or len(labels) != order
        or not all(isinstance(s, str) for s in labels)
    ):
        raise DocumentError(f"{path}: labels must be a list of {order} strings")
    return doc


def document_to_hom_group(doc: dict) -> HomGroup:
    return HomGroup(doc["table"], doc["alpha"], unit=doc["unit"], labels=doc.get("labels"))


def hom_group_to_document(G: HomGroup) -> dict:
    doc = {
        "order": G.n,
        "unit": G.unit,
        "alpha": list(G.alpha.images),
        "table": [list(row) for row in G.table.entries],
    }
    if G.labels is not None:
        doc["labels"] = list(G.labels)
    return doc


def dumps_document(doc: dict) -> str:
    return json.dumps(doc, indent=2)


def load_hom_group(path: str) -> HomGroup:
    """Parse a document and construct the verified structure it describes."""
    doc = parse_document(path)
    try:
        return document_to_hom_group(doc)
    except InvalidStructureError as exc:
        tags = ", ".join(exc.report.tags())
        raise CliFailure(
            f"{path}: document does not describe a Hom-group ({tags})", TAG_INVALID
        ) from None


def format_subset(members: Sequence[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(members)) + "}"


def report_lines(report: AxiomReport) -> list[str]:
    lines = [f"valid: {'true' if report.valid else 'false'}"]
    for tag, witness in report.violations:
        lines.append(f"violation: {tag} ({','.join(str(i) for i in witness)})")
    return lines


def render_text(G: HomGroup) -> str:
    """Unit-first bordered table, using labels when present."""
    n = G.n
    display = [G.unit] + [i for i in range(n) if i != G.unit]
    names = [G.label(i) for i in range(n)]
    w = max(len(s) for s in names + ["*"])
    pad = lambda s: s.ljust(w)
    header = pad("*") + " | " + " ".join(pad(names[j]) for j in display)
    sep = "-" * (w + 1) + "+" + "-" * (len(header) - w - 2)
    lines = [header.rstrip(), sep]
    t = G.table.entries
    for i in display:
        cells = " ".join(pad(names[t[i][j]]) for j in display)
        lines.append((pad(names[i]) + " | " + cells).rstrip())
    return "\n".join(lines)


def render_csv(G: HomGroup) -> str:
    return "\n".join(",".join(str(v) for v in row) for row in G.table.entries) + "\n"


def _parse_subset(spec: str) -> list[int]:
    try:
        return [int(part) for part in spec.split(",")]
    except ValueError:
        raise CliFailure(f"bad subset syntax {spec!r}: comma-separated indices expected", TAG_DOMAIN)


def _parse_perm_spec(spec: str, n: int) -> Permutation:
    images = _parse_subset(spec)
    if len(images) != n:
        raise CliFailure(f"map has {len(images)} images, carrier has {n}", TAG_DOMAIN)
    try:
        return Permutation(tuple(images))
    except ValueError as exc:
        raise CliFailure(f"bad map: {exc}", TAG_DOMAIN)


def _load_group_operand(spec: str) -> FiniteGroup:
    """Group operand for twisting: zn:k, dn:k, or a document path whose
    structure has the identity twist."""
    if spec.startswith("zn:") or spec.startswith("dn:"):
        kind, _, num = spec.partition(":")
        try:
            k = int(num)
        except ValueError:
            raise CliFailure(f"bad group spec {spec!r}", TAG_DOMAIN)
        try:
            return (
                _constructions.cyclic_group(k) if kind == "zn" else _constructions.dihedral_group(k)
            )
        except ValueError as exc:
            raise CliFailure(str(exc), TAG_DOMAIN)
    G = load_hom_group(spec)
    if not G.alpha.is_identity:
        raise CliFailure(
            f"{spec}: twisting needs a plain group, but the document's twist is not the identity",
            TAG_DOMAIN,
        )
    return FiniteGroup(G.table, unit=G.unit, labels=G.labels)


def _require_subgroup(G: HomGroup, members: Sequence[int]) -> _subgroups.SubsetHandle:
    try:
        defect = _subgroups.subgroup_defect(G, members)
    except ValueError as exc:
        raise CliFailure(str(exc), TAG_DOMAIN)
    if defect is not None:
        raise CliFailure(f"subset {format_subset(members)} is not a Hom-subgroup: {defect}", TAG_DOMAIN)
    return _subgroups.SubsetHandle(G, frozenset(members))


def cmd_verify(args: argparse.Namespace) -> int:
    doc = parse_document(args.path)
    report = verify(doc["table"], doc["alpha"], doc["unit"])
    print(f"order: {doc['order']}")
    for line in report_lines(report):
        print(line)
    if not report.valid:
        print(f"error: {TAG_INVALID}")
        return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    guard = args.order if args.force else 6
    try:
        cfg = _classify.SearchConfig(
            order=args.order, include_groups=args.include_groups, max_order_guard=guard
        )
        raw = _classify.enumerate_hom_groups(cfg)
    except _classify.OrderGuardError as exc:
        raise CliFailure(str(exc), TAG_GUARD)
    except ValueError as exc:
        raise CliFailure(str(exc), TAG_DOMAIN)
    classes = _classify.reduce_to_classes(raw)
    shown = classes if args.up_to_iso else raw
    kind = "class" if args.up_to_iso else "structure"
    print(f"order: {args.order}")
    print(f"include-groups: {'true' if args.include_groups else 'false'}")
    print(f"structures: {len(raw)}")
    print(f"iso-classes: {len(classes)}")
    for idx, G in enumerate(shown, start=1):
        print(f"{kind} {idx}:")
        print(render_text(G))
    if args.emit is not None:
        out = Path(args.emit)
        out.mkdir(parents=True, exist_ok=True)
        for idx, G in enumerate(shown, start=1):
            name = f"homgroup_order{args.order}_{idx:03d}.json"
            (out / name).write_text(dumps_document(hom_group_to_document(G)) + "\n")
        print(f"emitted: {len(shown)} documents to {args.emit}")
    return EXIT_OK


def cmd_subgroups(args: argparse.Namespace) -> int:
    G = load_hom_group(args.path)
    for handle in _subgroups.enumerate_hom_subgroups(G):
        print(format_subset(handle.sorted_members()))
    return EXIT_OK


def cmd_cosets(args: argparse.Namespace) -> int:
    G = load_hom_group(args.path)
    H = _require_subgroup(G, _parse_subset(args.subgroup))
    try:
        if args.element is not None:
            block = _subgroups.coset(G, H, args.element, args.side)
            print(format_subset(block.sorted_members()))
        else:
            for block in _subgroups.coset_partition(G, H, args.side):
                print(format_subset(block.sorted_members()))
    except ValueError as exc:
        raise CliFailure(str(exc), TAG_DOMAIN)
    return EXIT_OK


def cmd_lagrange(args: argparse.Namespace) -> int:
    G = load_hom_group(args.path)
    report = _subgroups.lagrange_check(G)
    print(f"|G| = {G.n}")
    for entry in report.entries:
        print(
            f"H={format_subset(entry.subgroup.sorted_members())} "
            f"|H|={entry.order} index={entry.index}"
        )
    print("divisors: " + ", ".join(str(d) for d in report.divisors))
    return EXIT_OK


def cmd_cauchy(args: argparse.Namespace) -> int:
    G = load_hom_group(args.path)
    report = _subgroups.cauchy_search(G)
    print(f"|G| = {G.n}")
    for entry in report.entries:
        witness = (
            format_subset(entry.witness.sorted_members()) if entry.witness is not None else "none"
        )
        print(f"p={entry.prime}: {witness}")
    return EXIT_OK


def cmd_twist(args: argparse.Namespace) -> int:
    G = _load_group_operand(args.group)
    if args.list_autos:
        for p in _constructions.automorphisms_of(G):
            print(",".join(str(v) for v in p.images))
        return EXIT_OK
    if args.conjugate is not None:
        if not 0 <= args.conjugate < G.n:
            raise CliFailure(f"index {args.conjugate} outside 0..{G.n - 1}", TAG_DOMAIN)
        alpha = _constructions.inner_automorphism(G, args.conjugate)
    else:
        alpha = _parse_perm_spec(args.auto, G.n)
    try:
        twisted = _constructions.twist(G, alpha)
    except _constructions.NotAutomorphismError as exc:
        g, k = exc.witness
        raise CliFailure(
            f"map is not an automorphism: witness pair ({g},{k})", TAG_NOT_AUTOMORPHISM
        )
    print(dumps_document(hom_group_to_document(twisted)))
    return EXIT_OK


def cmd_hopf(args: argparse.Namespace) -> int:
    G = load_hom_group(args.path)
    if args.dims:
        dims = _homhopf.sub_hopf_dims(G)
        print("dims: " + ", ".join(str(d) for d in dims))
        print(f"|G| = {G.n}")
        ok = all(G.n % d == 0 for d in dims)
        print(f"all divide |G|: {'true' if ok else 'false'}")
        return EXIT_OK
    report = _homhopf.verify_hom_hopf(_homhopf.build_group_hopf(G))
    for line in report_lines(report):
        print(line)
    if not report.valid:
        print(f"error: {TAG_INVALID}")
        return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_cayley(args: argparse.Namespace) -> int:
    G = load_hom_group(args.path)
    if args.format == "text":
        print(render_text(G))
    elif args.format == "csv":
        sys.stdout.write(render_csv(G))
    else:
        print(dumps_document(hom_group_to_document(G)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homgroups", description="Exact toolkit for finite Hom-groups."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check every axiom on a document")
    p.add_argument("path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="enumerate Hom-groups of one order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--include-groups", action="store_true")
    p.add_argument("--up-to-iso", action="store_true")
    p.add_argument("--force", action="store_true", help="override the order guard")
    p.add_argument("--emit", metavar="DIR", help="write shown structures as documents")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("subgroups", help="list all Hom-subgroups")
    p.add_argument("path")
    p.set_defaults(func=cmd_subgroups)

    p = sub.add_parser("cosets", help="one coset, or the full partition")
    p.add_argument("path")
    p.add_argument("--subgroup", required=True, metavar="CSV")
    p.add_argument("--element", type=int, default=None)
    p.add_argument("--side", choices=["left", "right"], default="left")
    p.set_defaults(func=cmd_cosets)

    p = sub.add_parser("lagrange", help="divisibility and partition audit")
    p.add_argument("path")
    p.set_defaults(func=cmd_lagrange)

    p = sub.add_parser("cauchy", help="search prime-order Hom-subgroups")
    p.add_argument("path")
    p.set_defaults(func=cmd_cauchy)

    p = sub.add_parser("twist", help="twist a group by an automorphism")
    p.add_argument("--group", required=True, metavar="zn:K|dn:K|PATH")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--auto", metavar="CSV", help="image list of the automorphism")
    mode.add_argument("--conjugate", type=int, metavar="S", help="conjugation by element S")
    mode.add_argument("--list-autos", action="store_true")
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("hopf", help="Hopf-algebra checks on the span")
    p.add_argument("path")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--check", action="store_true")
    mode.add_argument("--dims", action="store_true")
    p.set_defaults(func=cmd_hopf)

    p = sub.add_parser("cayley", help="render the table")
    p.add_argument("path")
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.set_defaults(func=cmd_cayley)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code in (0, None):
            return EXIT_OK
        print(f"error: {TAG_USAGE}")
        return EXIT_ERROR
    try:
        return args.func(args)
    except CliFailure as exc:
        print(str(exc))
        print(f"error: {exc.tag}")
        return exc.code
    except DocumentError as exc:
        print(str(exc))
        print(f"error: {TAG_PARSE}")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
