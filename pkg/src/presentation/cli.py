"""Command-line driver: every operation and law suite on presentation files."""

import argparse
import logging
import random
import sys
from dataclasses import replace
from typing import Optional

from ..algebras.one_alg import check_algebra_laws, nerve
from ..algebras.paths import check_monad_laws
from ..categories.equivalence import pseudo_inverse
from ..categories.laws import (
    check_adjoint_equivalence,
    check_category_laws,
    check_functor_laws,
    check_naturality,
    structure_errors,
)
from ..categories.search import are_equivalent_bruteforce
from ..fusion.fusion import (
    equivalence_fusion,
    fuse_to_span,
    fusion_pattern,
    projection_u,
    projection_v,
    span_profile,
    span_to_equivalence,
)
from ..globular.core import (
    equivalence_profile,
    is_faithful_on,
    is_full_on,
    is_injective_on,
    is_surjective_on,
)
from ..globular.limits import check_transfer, pullback_globular
from ..models.report import PropertyReport
from ..models.span import Span
from ..spans.equivalence import compose_spans, identity_span, is_span_equivalence, swap_span
from ..utils.config import Settings, load_settings
from ..utils.generators import (
    random_adjoint_equivalence,
    random_cospan,
    random_globular,
    random_span_equivalence,
)
from ..utils.validators import (
    DomainError,
    EquivalenceError,
    MismatchError,
    ParseError,
    SearchLimitError,
    StructureError,
)
from .parser import Presentation, parse_file
from .printer import dumps

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT = 2


class InputError(Exception):
    """A file holds the wrong kind of structure for the subcommand."""


def _load(path: str, *kinds: str) -> Presentation:
    p = parse_file(path)
    if kinds and p.kind not in kinds:
        raise InputError(f"{path}: expected {' or '.join(kinds)}, found {p.kind}")
    return p


def _write(path: Optional[str], structure, name: str) -> None:
    if not path:
        return
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps(structure, name))
    logger.info(f"Wrote {path}")


def _report(report: PropertyReport) -> int:
    for line in report.to_lines():
        print(line)
    return EXIT_OK if report.verdict else EXIT_FALSE


def cmd_validate(args, settings: Settings) -> int:
    p = _load(args.file)
    limit = args.witness_limit
    if p.kind == "category":
        partial = bool(structure_errors(p.body)) and not structure_errors(p.body, True)
        return _report(check_category_laws(p.body, allow_partial=partial, witness_limit=limit))
    if p.kind == "functor":
        return _report(check_functor_laws(p.body, witness_limit=limit))
    if p.kind == "nat":
        return _report(check_naturality(p.body, limit))
    if p.kind == "adjequiv":
        return _report(check_adjoint_equivalence(p.body, limit))
    if p.kind == "algebra":
        return _report(check_algebra_laws(p.body, args.bound, limit))
    # globular sets, maps and spans are fully checked while parsing
    print(f"{p.kind} {p.name}: valid")
    return EXIT_OK


def cmd_props(args, settings: Settings) -> int:
    f = _load(args.map, "map").body
    limit = args.witness_limit
    if args.k is None:
        return _report(equivalence_profile(f, limit))
    wanted = args.prop or (["surjective", "full", "faithful"] if args.k >= 1 else ["surjective"])
    if args.k == 0 and {"full", "faithful"} & set(wanted):
        raise InputError("full and faithful need --k 1 or higher")
    parts = [
        replace(is_surjective_on(f, args.k, limit), name="surjective"),
        replace(is_injective_on(f, args.k, limit), name="injective"),
    ]
    if args.k >= 1:
        parts.append(replace(is_full_on(f, args.k, limit), name="full"))
        parts.append(replace(is_faithful_on(f, args.k, limit), name="faithful"))
    # every property is printed; only the selected ones decide the exit status
    for part in parts:
        for line in part.to_lines():
            print(line)
    selected = PropertyReport.aggregate(
        f"props_{args.k}", [p for p in parts if p.name in wanted], limit
    )
    print(f"{selected.name}: {str(selected.verdict).lower()}")
    return EXIT_OK if selected.verdict else EXIT_FALSE


def cmd_pullback(args, settings: Settings) -> int:
    f = _load(args.f, "map").body
    g = _load(args.g, "map").body
    pb = pullback_globular(f, g)
    sizes = " ".join(str(pb.apex.size(k)) for k in range(pb.apex.dimension + 1))
    print(f"pullback: cells per dimension {sizes}")
    if args.transfer:
        transfer = check_transfer(f, g)
        for line in transfer.to_lines():
            print(line)
        if not transfer.verdict:
            return EXIT_FALSE
    _write(args.out, Span(pb.apex, pb.left_leg, pb.right_leg), "pullback")
    return EXIT_OK


def cmd_span(args, settings: Settings) -> int:
    if args.span_command == "check":
        s = _load(args.file, "span").body
        if isinstance(s, Span):
            return _report(is_span_equivalence(s, args.witness_limit))
        return _report(span_profile(s, args.witness_limit))
    s1 = _load(args.s1, "span").body
    s2 = _load(args.s2, "span").body
    if not isinstance(s1, Span) or not isinstance(s2, Span):
        raise InputError("span compose needs spans of globular maps")
    composite = compose_spans(s1, s2)
    _write(args.out, composite, "composite")
    return _report(is_span_equivalence(composite, args.witness_limit))


def cmd_laws(args, settings: Settings) -> int:
    return cmd_validate(args, settings)


def cmd_fuse(args, settings: Settings) -> int:
    e = _load(args.adjequiv, "adjequiv").body
    fusion = equivalence_fusion(e)
    print(f"fusion: {len(fusion.objects)} objects, {len(fusion.morphisms)} morphisms")
    _write(args.out, fusion, "fusion")
    return _report(check_category_laws(fusion, fusion_pattern, witness_limit=args.witness_limit))


def cmd_project(args, settings: Settings) -> int:
    e = _load(args.adjequiv, "adjequiv").body
    F = projection_u(e) if args.side == "u" else projection_v(e)
    _write(args.out, F, args.side)
    return _report(check_functor_laws(F, fusion_pattern, args.witness_limit))


def cmd_pseudo_inverse(args, settings: Settings) -> int:
    F = _load(args.functor, "functor").body
    e = pseudo_inverse(F, args.witness_limit)
    _write(args.out, e, "pseudo_inverse")
    return _report(check_adjoint_equivalence(e, args.witness_limit))


def cmd_nerve(args, settings: Settings) -> int:
    C = _load(args.file, "category").body
    alg = nerve(C)
    _write(args.out, alg, "N")
    return _report(check_algebra_laws(alg, args.bound, args.witness_limit))


def cmd_alg(args, settings: Settings) -> int:
    alg = _load(args.file, "algebra").body
    return _report(check_algebra_laws(alg, args.bound, args.witness_limit))


def cmd_equiv_search(args, settings: Settings) -> int:
    A = _load(args.a, "category").body
    B = _load(args.b, "category").body
    e = are_equivalent_bruteforce(A, B, settings.max_objects, settings.max_morphisms)
    if e is None:
        print("equivalent: false")
        return EXIT_FALSE
    print("equivalent: true")
    _write(args.out, e, "e")
    return EXIT_OK


def _suite_transfer(rng, count: int) -> list:
    failures = []
    for i in range(count):
        f, g = random_cospan(rng)
        report = check_transfer(f, g)
        if not report.verdict:
            failures.append((i, report.violations))
    return failures


def _suite_spans(rng, count: int) -> list:
    failures = []
    for i in range(count):
        s1, s2 = random_span_equivalence(rng)
        checks = {
            "reflexive": is_span_equivalence(identity_span(s1.apex)),
            "symmetric": is_span_equivalence(swap_span(s1)),
            "transitive": is_span_equivalence(compose_spans(s1, s2)),
        }
        failures.extend((i, name) for name, report in checks.items() if not report)
    return failures


def _suite_fusion(rng, count: int) -> list:
    failures = []
    for i in range(count):
        e = random_adjoint_equivalence(rng)
        span = fuse_to_span(e)
        checks = {
            "category": check_category_laws(span.apex, fusion_pattern),
            "u": check_functor_laws(span.left, fusion_pattern),
            "v": check_functor_laws(span.right, fusion_pattern),
            "profile": span_profile(span),
            "round_trip": check_adjoint_equivalence(span_to_equivalence(span)),
        }
        failures.extend((i, name) for name, report in checks.items() if not report)
    return failures


def _suite_monad(rng, count: int, bound: int) -> list:
    failures = []
    for i in range(count):
        G = random_globular(1, rng, max_cells=3)
        if not check_monad_laws(G, bound):
            failures.append((i, "monad"))
    return failures


def cmd_suite(args, settings: Settings) -> int:
    seed = settings.seed if args.seed is None else args.seed
    count = args.count or settings.suite_counts.get(args.name, 100)
    rng = random.Random(seed)
    logger.info(f"Running suite {args.name} with {count} instances, seed {seed}")
    if args.name == "transfer":
        failures = _suite_transfer(rng, count)
    elif args.name == "spans":
        failures = _suite_spans(rng, count)
    elif args.name == "fusion":
        failures = _suite_fusion(rng, count)
    else:
        failures = _suite_monad(rng, count, args.bound)
    print(f"{args.name}: {count} instances, {len(failures)} failures")
    for failure in failures[: args.witness_limit]:
        print(f"  witness: {failure!r}")
    return EXIT_OK if not failures else EXIT_FALSE


def _common_flags(settings: Settings) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--settings", help="Path to settings.yaml")
    common.add_argument("--verbose", "-v", action="store_true", help="Log at DEBUG level")
    common.add_argument(
        "--witness-limit", type=int, default=settings.witness_limit, help="Witnesses per report"
    )
    common.add_argument(
        "--bound", type=int, default=settings.path_bound, help="Path length bound"
    )
    common.add_argument("--seed", type=int, default=None, help="Seed for randomized suites")
    return common


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    common = _common_flags(settings)
    parser = argparse.ArgumentParser(
        prog="spaneq", description="Check span equivalences, fusions and categorical laws"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(subparsers, name: str, handler, help_text: Optional[str] = None):
        p = subparsers.add_parser(name, help=help_text, parents=[common])
        p.set_defaults(handler=handler)
        return p

    p = command(sub, "validate", cmd_validate, "Parse a file and run the checks for its kind")
    p.add_argument("file")

    p = command(sub, "props", cmd_props, "Cell-wise properties of a globular map")
    p.add_argument("--map", required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument(
        "--prop",
        action="append",
        choices=["surjective", "injective", "full", "faithful"],
        help="Property deciding the exit status (repeatable; default surjective, full, faithful)",
    )

    p = command(sub, "pullback", cmd_pullback, "Pullback of two globular maps")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("--out")
    p.add_argument("--transfer", action="store_true", help="Also check property transfer")

    span_sub = sub.add_parser("span", help="Check or compose spans").add_subparsers(
        dest="span_command", required=True
    )
    p = command(span_sub, "check", cmd_span)
    p.add_argument("file")
    p = command(span_sub, "compose", cmd_span)
    p.add_argument("s1")
    p.add_argument("s2")
    p.add_argument("--out")

    p = command(sub, "laws", cmd_laws, "Law suite of a category, functor, nat or algebra")
    p.add_argument("file")

    p = command(sub, "fuse", cmd_fuse, "Equivalence fusion of an adjoint equivalence")
    p.add_argument("--adjequiv", required=True)
    p.add_argument("--out")

    p = command(sub, "project", cmd_project, "Projection u or v out of the fusion")
    p.add_argument("--adjequiv", required=True)
    p.add_argument("--side", choices=["u", "v"], required=True)
    p.add_argument("--out")

    p = command(
        sub, "pseudo-inverse", cmd_pseudo_inverse, "Complete a functor to an adjoint equivalence"
    )
    p.add_argument("--functor", required=True)
    p.add_argument("--out")

    p = command(sub, "nerve", cmd_nerve, "The path algebra of a category")
    p.add_argument("file")
    p.add_argument("--out")

    alg_sub = sub.add_parser("alg", help="Algebra checks").add_subparsers(
        dest="alg_command", required=True
    )
    p = command(alg_sub, "check", cmd_alg)
    p.add_argument("file")

    p = command(sub, "equiv-search", cmd_equiv_search, "Brute-force search for an equivalence")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--out")

    p = command(sub, "suite", cmd_suite, "Run a randomized suite")
    p.add_argument("name", choices=["transfer", "spans", "fusion", "monad"])
    p.add_argument("--count", type=int, default=None)
    return parser


def _settings_path(argv: Optional[list[str]]) -> Optional[str]:
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--settings")
    known, _ = pre.parse_known_args(argv)
    return known.settings


def run_cli(argv: Optional[list[str]] = None) -> int:
    """Run one subcommand; returns 0 (true), 1 (false) or 2 (input error)."""
    settings = load_settings(_settings_path(argv))
    parser = build_parser(settings)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else getattr(logging, settings.log_level, logging.INFO),
        format=settings.log_format,
        stream=sys.stderr,
    )
    try:
        return args.handler(args, settings)
    except ParseError as e:
        for diagnostic in e.diagnostics:
            print(f"error: {diagnostic}", file=sys.stderr)
        return EXIT_INPUT
    except EquivalenceError as e:
        print(f"{e.prop}: false")
        print(f"  reason: {e}")
        return EXIT_FALSE
    except (
        OSError,
        InputError,
        StructureError,
        MismatchError,
        DomainError,
        SearchLimitError,
    ) as e:
        logger.error(f"Input error: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


def main():
    """CLI entrypoint."""
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
