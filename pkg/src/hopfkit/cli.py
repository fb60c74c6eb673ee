"""Command-line interface: build, check and classify presentations.

Every run writes exactly one JSON document to stdout (or nothing when the
input itself cannot be processed); diagnostics go to stderr.  Exit codes:

    0  all requested checks passed
    1  a mathematical check failed
    2  malformed input (bad flags, bad document, invalid catalog id)
    3  a resource guard stopped the computation

Files given to the document subcommands may hold either a presentation
document or a restricted Lie document; the latter is replaced by its
p-restricted enveloping algebra before the command runs.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .catalog import CatalogId, Fingerprint, build, fingerprint, verify_classification
from .cobar import build_complex, cohomology
from .errors import InputError, ResourceLimitError, HopfkitError
from .hopf import HopfPresentation, check_hopf, coradical_filtration, dual, is_connected, primitives
from .rlie import enveloping
from .schema import is_lie_document, parse, parse_lie, read_document, serialize

log = logging.getLogger("hopfkit")


def _load_presentation(path: str) -> HopfPresentation:
    doc = read_document(path)
    if is_lie_document(doc):
        log.info("loaded restricted Lie document from %s, building enveloping algebra", path)
        return enveloping(parse_lie(doc))
    h = parse(doc)
    log.info("loaded presentation from %s (p=%d, dim=%d)", path, h.p, h.dim)
    return h


def _fingerprint_payload(fp: Fingerprint) -> dict:
    return {
        "p": fp.p,
        "dim": fp.dim,
        "dim_primitives": fp.dim_primitives,
        "commutative": fp.commutative,
        "cocommutative": fp.cocommutative,
        "local": fp.local,
        "min_alg_generators": fp.min_alg_generators,
        "coradical_dims": list(fp.coradical_dims),
    }


def _sparse_pairs(vec) -> list[list[int]]:
    return [[int(i), int(c)] for i, c in enumerate(vec) if c]


def cmd_catalog(args) -> tuple[dict, int]:
    h = build(args.p, CatalogId(args.family, args.case))
    return serialize(h), 0


def cmd_verify(args) -> tuple[dict, int]:
    rep = check_hopf(_load_presentation(args.file))
    return {"ok": rep.ok, "failures": list(rep.failures)}, 0 if rep.ok else 1


def cmd_primitives(args) -> tuple[dict, int]:
    space = primitives(_load_presentation(args.file))
    return {"dimension": space.dim, "basis": [[int(c) for c in row] for row in space.basis]}, 0


def cmd_coradical(args) -> tuple[dict, int]:
    h = _load_presentation(args.file)
    res = coradical_filtration(h)
    return {"dims": list(res.dims), "connected": is_connected(h)}, 0


def cmd_dual(args) -> tuple[dict, int]:
    return serialize(dual(_load_presentation(args.file))), 0


def cmd_fingerprint(args) -> tuple[dict, int]:
    return _fingerprint_payload(fingerprint(_load_presentation(args.file))), 0


def cmd_cohomology(args) -> tuple[dict, int]:
    if not 0 <= args.degree <= 2:
        raise InputError("degree must be 0, 1 or 2")
    h = _load_presentation(args.file)
    complex_ = build_complex(h, args.degree + 1)
    dim, classes = cohomology(complex_, args.degree)
    log.info("degree-%d cohomology has dimension %d", args.degree, dim)
    return {
        "degree": args.degree,
        "dimension": dim,
        "representatives": [_sparse_pairs(cls.representative) for cls in classes],
    }, 0


def cmd_classify(args) -> tuple[dict, int]:
    report = verify_classification(args.p)
    payload = {
        "p": report.p,
        "full_run": report.full_run,
        "ok": report.ok,
        "checks": {name: ok for name, ok in report.checks},
        "failures": [name for name, ok in report.checks if not ok],
        "fingerprints": {label: _fingerprint_payload(fp) for label, fp in report.fingerprints},
    }
    if args.report_dir:
        from .report import write_report

        payload["report_files"] = write_report(report, args.report_dir)
        log.info("wrote %d report files to %s", len(payload["report_files"]), args.report_dir)
    return payload, 0 if report.ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopfkit",
        description="Exact computations on finite-dimensional Hopf algebra presentations over GF(p).",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("catalog", parents=[common], help="emit a catalog entry as a presentation document")
    c.add_argument("--p", type=int, required=True, help="field characteristic")
    c.add_argument("--family", required=True, choices=["D1", "D2", "L1", "L2"])
    c.add_argument("--case", type=int, required=True)
    c.set_defaults(handler=cmd_catalog)

    for name, handler, blurb in (
        ("verify", cmd_verify, "run the full axiom suite on a document"),
        ("primitives", cmd_primitives, "basis of the primitive subspace"),
        ("coradical", cmd_coradical, "coradical filtration dimensions"),
        ("dual", cmd_dual, "emit the dual presentation"),
        ("fingerprint", cmd_fingerprint, "isomorphism-invariant summary"),
    ):
        s = sub.add_parser(name, parents=[common], help=blurb)
        s.add_argument("file", help="presentation or restricted Lie document (JSON)")
        s.set_defaults(handler=handler)

    c = sub.add_parser("cohomology", parents=[common], help="trivial-coefficient cohomology of a document")
    c.add_argument("file", help="presentation or restricted Lie document (JSON)")
    c.add_argument("--degree", type=int, required=True, help="cohomology degree (at most 2)")
    c.set_defaults(handler=cmd_cohomology)

    c = sub.add_parser("classify", parents=[common], help="verify the dimension-p and p^2 tables at one prime")
    c.add_argument("--p", type=int, required=True, help="field characteristic")
    c.add_argument("--report-dir", help="also render fingerprint CSV and figures into this directory")
    c.set_defaults(handler=cmd_classify)
    return parser


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        payload, code = args.handler(args)
    except InputError as exc:
        print(f"hopfkit: input error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"hopfkit: resource guard: {exc}", file=sys.stderr)
        return 3
    except HopfkitError as exc:
        print(f"hopfkit: check failed: {exc}", file=sys.stderr)
        return 1
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return code
