"""
Command-line front end.

Usage:
    tsimplicial validate DOC
    tsimplicial nerve DOC
    tsimplicial segal DOC
    tsimplicial hom SOURCE TARGET [--degree K]
    tsimplicial two-cells SOURCE TARGET
    tsimplicial compose SOURCE TARGET
    tsimplicial power-delta1 DOC [--no-samples]
    tsimplicial copower DOC --weight simplex:K | horn:K,J [--require-segal]
    tsimplicial comonad DOC
    tsimplicial counts DOC

Every command accepts --depth, --json, --excel PATH, --plot PATH and
--log-level. Exit codes: 0 all checks pass, 1 a check fails (or a
construction fails), 2 the document is malformed, 3 the monad cannot
materialize what the command needs.
"""

import argparse
import logging
import sys
import time

import pandas as pd

from ..base_category.sets import FiniteSet, is_bijection
from ..comonad.comonad_k import (
    K_levels,
    check_coalgebra,
    check_comonad_laws,
    check_lifted_comonad,
    check_roundtrip,
    tsimp_to_coalgebra,
)
from ..enrichment.hom import (
    check_composition_laws,
    check_fully_faithful,
    compose_by_search,
    compose_one_simplices,
    enumerate_hom_simplices,
    hom_face,
    hom_segal_report,
    two_simplex_index,
)
from ..enrichment.two_cells import (
    alpha_to_hat,
    enumerate_hat_cells,
    enumerate_two_cells,
    hat_to_alpha,
    hat_to_hom,
    hom_to_hat,
    validate_hat_cell,
)
from ..monads.monad_engine import require_finiteness
from ..powers.copower import copower
from ..powers.delta_one import (
    check_hexagon_oracle,
    check_universal_diagrams,
    check_universal_property,
    delta1_power,
)
from ..powers.power_g import check_power_g
from ..powers.simplicial_sets import check_simplicial_identities, horn, standard_simplex
from ..tcategories.nerve import nerve
from ..tcategories.simplicial import check_sa_axioms, check_well_typed, segal_report, summarize
from ..tcategories.tcat_core import (
    LADDER,
    bar_resolution,
    check_all,
    classify,
    discrete_tcat,
    enumerate_tfunctors,
    ordinal_category,
)
from ..tcategories.truncation import coskeletal_comparison, coskeletal_step, degenerate_step
from ..utils.config import DEFAULT_DEPTH, configure_logging
from ..utils.errors import DocumentError, TCatError
from ..visualizations.report_visuals import save_report_figure, sizes_frame
from .documents import load_document
from .reports import Report, render_text, to_excel, to_json

logger = logging.getLogger(__name__)

# Hom simplices and the universal property need three stored levels
MIN_HOM_DEPTH = 3


def _depth(args, *workspaces):
    if args.depth is not None:
        return args.depth
    declared = [ws.depth for ws in workspaces if ws.depth is not None]
    return max(declared) if declared else DEFAULT_DEPTH


def _identity_summary(report):
    """The per-axiom summary with a passed column."""
    summary = summarize(report)
    return summary.assign(passed=summary["failures"] == 0)


# Commands

def cmd_validate(args):
    ws = load_document(args.document)
    depth = _depth(args, ws)
    report = Report("validate", (args.document,), depth)

    # Step 1: CA1-CA4 and the ladder
    report.add("axioms", check_all(ws.data))
    structure = classify(ws.data)
    report.add("ladder", pd.DataFrame(
        [{"level": name, "reached": name in structure} for name in LADDER]
    ), required=False)
    report.note(f"{ws.name} is a {structure.top}")
    if structure.top != "T-category":
        report.fail()

    # Step 2: the identities and the Segal condition on the nerve
    X = ws.build(depth)
    report.add("identities", _identity_summary(check_sa_axioms(X)))
    report.add("segal", segal_report(X))

    # Step 3: for algebras, the bar resolution as well
    if ws.kind == "algebra":
        carrier, action = ws.algebra
        bar = bar_resolution(carrier, action, ws.monad, depth, f"bar({ws.name})")
        report.add("bar sizes", sizes_frame([(bar.name, bar)]), required=False)
        report.add("bar identities", _identity_summary(check_sa_axioms(bar)))
        report.add("bar segal", segal_report(bar))
    return report


def cmd_nerve(args):
    ws = load_document(args.document)
    depth = _depth(args, ws)
    report = Report("nerve", (args.document,), depth)
    X = ws.build(depth)
    report.add("sizes", sizes_frame([(X.name, X)]), required=False)
    report.add("typing", check_well_typed(X))
    report.add("identities", check_sa_axioms(X))
    return report


def cmd_segal(args):
    ws = load_document(args.document)
    depth = _depth(args, ws)
    report = Report("segal", (args.document,), depth)
    X = ws.build(depth)
    report.add("sizes", sizes_frame([(X.name, X)]), required=False)
    report.add("segal", segal_report(X))
    return report


def _pair(args, command):
    source, target = load_document(args.source), load_document(args.target)
    depth = max(_depth(args, source, target), MIN_HOM_DEPTH)
    if source.monad_kind != target.monad_kind:
        raise DocumentError(f"{args.source} and {args.target} use different monads")
    report = Report(command, (args.source, args.target), depth)
    return source, target, source.build(depth), target.build(depth), report


def cmd_hom(args):
    source, target, Y, X, report = _pair(args, "hom")
    report.add("hom segal", hom_segal_report(Y, X, args.degree))
    if not source.mutations and not target.mutations:
        report.add("fully faithful", check_fully_faithful(source.data, target.data, report.depth))
    return report


def cmd_two_cells(args):
    source, target, A, B, report = _pair(args, "two-cells")
    functors = enumerate_tfunctors(source.data, target.data)
    rows = []
    for p, f in enumerate(functors):
        for q, g in enumerate(functors):
            cells = enumerate_two_cells(A, B, f, g)
            hats = enumerate_hat_cells(A, B, f, g)
            roundtrip = all(hat_to_alpha(alpha_to_hat(t)).key() == t.key() for t in cells)
            hat_roundtrip = all(alpha_to_hat(hat_to_alpha(c)).key() == c.key() for c in hats)
            hom_roundtrip = all(hom_to_hat(hat_to_hom(c), f, g).key() == c.key()
                                and validate_hat_cell(c)["passed"].all() for c in hats)
            rows.append({
                "f": p, "g": q, "two_cells": len(cells), "hat_cells": len(hats),
                "roundtrip": roundtrip and hat_roundtrip, "hom": hom_roundtrip,
                "passed": len(cells) == len(hats) and roundtrip and hat_roundtrip and hom_roundtrip,
            })
    report.note(f"{len(functors)} T-functors {source.name} -> {target.name}")
    report.add("two-cells", pd.DataFrame(
        rows, columns=["f", "g", "two_cells", "hat_cells", "roundtrip", "hom", "passed"]
    ))
    return report


def cmd_compose(args):
    _, _, Y, X, report = _pair(args, "compose")
    ones = enumerate_hom_simplices(Y, X, 1)
    index = two_simplex_index(Y, X)
    rows = []
    for a, x in enumerate(ones):
        for b, y in enumerate(ones):
            if hom_face(x, 0).key() != hom_face(y, 1).key():
                continue
            _, constructed = compose_one_simplices(x, y)
            _, searched = compose_by_search(x, y, index)
            rows.append({"x": a, "y": b, "passed": constructed.key() == searched.key()})
    report.add("composites", pd.DataFrame(rows, columns=["x", "y", "passed"]))
    report.add("laws", check_composition_laws(Y, X))
    return report


def _samples(T, depth):
    """Sample objects for the universal property of Δ[1]⋔X."""
    samples = [nerve(discrete_tcat(FiniteSet(("a", "b"), "ab"), T, "discrete{a,b}"), depth)]
    if T.name == "identity":
        samples = [nerve(ordinal_category(0, T), depth), nerve(ordinal_category(1, T), depth)] + samples
    return samples


def cmd_power_delta1(args):
    ws = load_document(args.document)
    depth = _depth(args, ws)
    report = Report("power-delta1", (args.document,), depth)
    X = ws.build(depth + 2)
    report.note(f"{ws.name} built at depth {depth + 2} for Δ[1]⋔{ws.name} at depth {depth}")
    P = delta1_power(X, depth)
    report.add("sizes", sizes_frame([(P.L.name, P.L), (X.name, X.truncate(depth))]), required=False)
    report.add("cylinders", check_power_g(P.power_g))
    report.add("hexagon oracle", check_hexagon_oracle(P))
    report.add("identities", _identity_summary(check_sa_axioms(P.L)))
    report.add("segal", segal_report(P.L))
    if depth >= MIN_HOM_DEPTH:
        report.add("universal diagrams", check_universal_diagrams(P))
        if not args.no_samples:
            report.add("universal property", check_universal_property(P, _samples(ws.monad, depth)))
    else:
        report.note(f"universal property needs depth >= {MIN_HOM_DEPTH}")
    return report


def _weight(text, depth):
    kind, _, spec = text.partition(":")
    try:
        numbers = [int(part) for part in spec.split(",")]
    except ValueError:
        raise DocumentError(f"--weight {text!r}: expected simplex:K or horn:K,J") from None
    if kind == "simplex" and len(numbers) == 1:
        return standard_simplex(numbers[0], depth)
    if kind == "horn" and len(numbers) == 2:
        return horn(numbers[0], numbers[1], depth)
    raise DocumentError(f"--weight {text!r}: expected simplex:K or horn:K,J")


def cmd_copower(args):
    ws = load_document(args.document)
    depth = _depth(args, ws)
    report = Report("copower", (args.document, args.weight), depth)
    A = _weight(args.weight, depth)
    Y = ws.build(depth)
    Z = copower(A, Y)
    report.add("sizes", sizes_frame([(Z.name, Z), (Y.name, Y)]), required=False)
    report.add("weight identities", check_simplicial_identities(A))
    report.add("identities", _identity_summary(check_sa_axioms(Z)))
    report.add("segal", segal_report(Z), required=args.require_segal)
    return report


def cmd_comonad(args):
    ws = load_document(args.document)
    depth = _depth(args, ws)
    report = Report("comonad", (args.document,), depth)
    T = require_finiteness(ws.monad, "comonad")
    X = ws.build(depth)
    KX = K_levels(X, T)
    report.add("sizes", sizes_frame([(X.name, X), (KX.name, KX)]), required=False)
    report.add("comonad laws", check_comonad_laws(X, T))
    report.add("lifted comonad", check_lifted_comonad(X.presheaf(), T))
    report.add("coalgebra", check_coalgebra(tsimp_to_coalgebra(X)))
    report.add("roundtrip", check_roundtrip(X))
    return report


def cmd_counts(args):
    ws = load_document(args.document)
    depth = _depth(args, ws)
    report = Report("counts", (args.document,), depth)
    X = ws.build(depth)
    objects = [(X.name, X)]
    if ws.monad.preserves_finiteness:
        KX = K_levels(X, ws.monad)
        objects.append((KX.name, KX))
    report.add("sizes", sizes_frame(objects), required=False)
    if not ws.monad.preserves_finiteness:
        report.note(f"truncations need a finiteness-preserving monad, {ws.monad.name} is not")
        return report
    rows = []
    for n in range(depth):
        cosk = coskeletal_step(X, n)
        iso, _ = is_bijection(coskeletal_comparison(X, n, cosk))
        rows.append({"n": n, "level": len(X.level(n + 1)), "coskeletal": len(cosk.level),
                     "coskeletal_iso": iso, "degenerate": len(degenerate_step(X, n).level)})
    report.add("truncations", pd.DataFrame(
        rows, columns=["n", "level", "coskeletal", "coskeletal_iso", "degenerate"]
    ), required=False)
    return report


# Parser

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--depth", type=int, default=None,
                        help=f"Truncation depth (default: the document's, else {DEFAULT_DEPTH})")
    common.add_argument("--json", action="store_true", help="Print the report as JSON")
    common.add_argument("--excel", default=None, help="Also write the report tables to this .xlsx file")
    common.add_argument("--plot", default=None, help="Also save a report figure to this path")
    common.add_argument("--log-level", default="WARNING", help="Logging level for stderr (default: WARNING)")

    parser = argparse.ArgumentParser(
        prog="tsimplicial",
        description="Build and check nerves of T-categories, their homs, comonads and powers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, help_text in (
        ("validate", cmd_validate, "Axioms, ladder level, identities and Segal condition"),
        ("nerve", cmd_nerve, "Level sizes and identities of the nerve"),
        ("segal", cmd_segal, "Segal squares of the nerve"),
        ("counts", cmd_counts, "Cardinality tables"),
        ("comonad", cmd_comonad, "Comonad laws and the coalgebra roundtrip"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("document")
        p.set_defaults(func=func)

    for name, func, help_text in (
        ("hom", cmd_hom, "Hom simplices and their Segal squares"),
        ("two-cells", cmd_two_cells, "T-natural transformations and hat 2-cells"),
        ("compose", cmd_compose, "Composition of hom 1-simplices"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("source")
        p.add_argument("target")
        p.set_defaults(func=func)
        if name == "hom":
            p.add_argument("--degree", type=int, default=2, choices=(0, 1, 2),
                           help="Highest hom degree to enumerate (default: 2)")

    p = sub.add_parser("power-delta1", parents=[common], help="The power Δ[1]⋔X and its universal property")
    p.add_argument("document")
    p.add_argument("--no-samples", action="store_true", help="Skip the universal property enumeration")
    p.set_defaults(func=cmd_power_delta1)

    p = sub.add_parser("copower", parents=[common], help="The copower of the nerve by a finite simplicial set")
    p.add_argument("document")
    p.add_argument("--weight", default="simplex:1", help="simplex:K or horn:K,J (default: simplex:1)")
    p.add_argument("--require-segal", action="store_true", help="Fail when the copower is not Segal")
    p.set_defaults(func=cmd_copower)
    return parser


def run(argv=None):
    """
    Parses arguments and runs one command.

    Returns:
        Tuple (report or None, exit code)
    """
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level.upper())
    start = time.perf_counter()
    try:
        report = args.func(args)
    except TCatError as exc:
        logger.info("%s failed after %.2fs", args.command, time.perf_counter() - start)
        print(str(exc), file=sys.stderr)
        return None, exc.exit_code
    logger.info("%s finished in %.2fs", args.command, time.perf_counter() - start)

    sys.stdout.write(to_json(report) if args.json else render_text(report))
    if args.excel:
        to_excel(report, args.excel)
    if args.plot:
        save_report_figure(report, args.plot)
    return report, report.exit_code


def main(argv=None):
    _, code = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
