"""Command-line front end.

Thin dispatch over the library: load algebra JSON, run one query or
construction, print a report or an algebra back.  Reports go to
standard output, diagnostics to standard error.  Exit codes: 0 success,
1 the input algebra fails the axioms, 2 the verify run found
violations, 3 unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import AlgebraError, MalformedInput, ValidationFailed
from .blp import algebra_has_blp, classify, filter_has_blp, projection_injective_on_booleans
from .construct import (
    boolean_algebra,
    direct_product,
    godel_chain,
    interval_algebra,
    lukasiewicz_chain,
    stack_chain,
)
from .enumerator import enumerate_algebras
from .filters import generated_filter, quotient, radical, spectra
from .harness import (
    render_findings,
    render_report,
    search_open_problems,
    standard_corpus,
    verify_corpus,
)
from .io import algebra_to_dict, dump_algebra, dumps_algebra, load_algebra


class _Parser(argparse.ArgumentParser):
    """Argparse with usage errors mapped to the malformed-input exit code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(3)


def _parse_element(a, token: str) -> int:
    token = token.strip()
    if a.labels is not None and token in a.labels:
        return a.labels.index(token)
    try:
        idx = int(token)
    except ValueError:
        raise MalformedInput(f"unknown element {token!r}") from None
    if not 0 <= idx < a.size:
        raise MalformedInput(f"element index {idx} out of range for size {a.size}")
    return idx


def _parse_elements(a, text: str) -> tuple[int, ...]:
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise MalformedInput("empty element list")
    return tuple(_parse_element(a, p) for p in parts)


def _members_text(a, members) -> str:
    return " ".join(a.label(i) for i in sorted(members))


def _yesno(value: bool) -> str:
    return "yes" if value else "no"


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _filter_line(a, p) -> str:
    flags = []
    if p.proper:
        flags.append("proper")
    if p.prime:
        flags.append("prime")
    if p.maximal:
        flags.append("maximal")
    if p.has_blp:
        flags.append("blp")
    else:
        flags.append(f"no-blp(witness={a.label(p.blp_witness)})")
    if p.projection_injective:
        flags.append("injective")
    return f"[{_members_text(a, p.members)}] {' '.join(flags)}"


def cmd_validate(args) -> int:
    a = load_algebra(args.file)
    what = a.name if a.name else f"size-{a.size} algebra"
    print(f"ok: {what} satisfies the residuated lattice axioms")
    return 0


def cmd_analyze(args) -> int:
    a = load_algebra(args.file)
    rep = classify(a)
    if args.json:
        _print_json(rep.to_json_dict())
        return 0
    lines = [
        f"name: {a.name if a.name else '(unnamed)'}",
        f"size: {a.size}",
        f"labels: {' '.join(a.label(i) for i in a.elements)}",
        f"has_blp: {_yesno(rep.has_blp)}",
        f"quasi_local: {_yesno(rep.quasi_local)}",
        f"b_normal: {_yesno(rep.b_normal)}",
        f"star: {_yesno(rep.star.holds)}",
        f"star_star: {_yesno(rep.star_star.holds)}",
        f"local: {_yesno(rep.local)}",
        f"semilocal_degree: {rep.semilocal}",
        f"simple: {_yesno(rep.simple)}",
        f"hyperarchimedean: {_yesno(rep.hyperarchimedean)}",
        f"semiperfect: {_yesno(rep.semiperfect)}",
        f"mult_is_meet: {_yesno(rep.classes.mult_is_meet)}",
        f"involutive: {_yesno(rep.classes.involutive)}",
        f"boolean_center_trivial: {_yesno(rep.boolean_center_trivial)}",
        f"booleans: {_members_text(a, rep.classes.booleans)}",
        f"nilpotents: {_members_text(a, rep.classes.nilpotents)}",
        f"dense: {_members_text(a, rep.classes.dense)}",
        f"regular: {_members_text(a, rep.classes.regular)}",
        f"idempotents: {_members_text(a, rep.classes.idempotents)}",
        f"archimedeans: {_members_text(a, rep.classes.archimedeans)}",
        f"s_set: {_members_text(a, rep.s_set)}",
        f"radical: {_members_text(a, rep.radical_members)}",
    ]
    lines.append(f"filters ({len(rep.filters)}):")
    lines.extend(f"  {_filter_line(a, p)}" for p in rep.filters)
    lines.append(
        "prime_filters: "
        + " ".join(f"[{_members_text(a, m)}]" for m in rep.prime_filters)
    )
    lines.append(
        "maximal_filters: "
        + " ".join(f"[{_members_text(a, m)}]" for m in rep.maximal_filters)
    )
    if rep.decomposition is None:
        lines.append("decomposition: none")
    else:
        d = rep.decomposition
        sizes = " ".join(str(p.algebra.size) for p in d.factors)
        lines.append(
            f"decomposition: pieces {_members_text(a, d.complete_set)}"
            f" (interval sizes {sizes})"
        )
    if rep.blp_failing_filter is not None:
        lines.append(
            f"blp_failing_filter: [{_members_text(a, rep.blp_failing_filter)}]"
            f" witness {a.label(rep.blp_witness)}"
        )
    print("\n".join(lines))
    return 0


def cmd_filters(args) -> int:
    a = load_algebra(args.file)
    rep = classify(a)
    print(f"{len(rep.filters)} filters")
    for p in rep.filters:
        print(_filter_line(a, p))
    return 0


def cmd_spectrum(args) -> int:
    a = load_algebra(args.file)
    sp = spectra(a)
    print(
        "prime: "
        + " ".join(f"[{_members_text(a, f.members)}]" for f in sp.prime)
    )
    print(
        "maximal: "
        + " ".join(f"[{_members_text(a, f.members)}]" for f in sp.maximal)
    )
    return 0


def cmd_radical(args) -> int:
    a = load_algebra(args.file)
    print(f"radical: {_members_text(a, radical(a).members)}")
    return 0


def cmd_quotient(args) -> int:
    a = load_algebra(args.file)
    f = generated_filter(a, _parse_elements(a, args.by))
    print(dumps_algebra(quotient(a, f).algebra), end="")
    return 0


def cmd_blp(args) -> int:
    a = load_algebra(args.file)
    if args.filter is not None:
        f = generated_filter(a, _parse_elements(a, args.filter))
        v = filter_has_blp(a, f)
        print(f"filter: [{_members_text(a, f.members)}]")
        print(f"has_blp: {_yesno(v.holds)}")
        if v.witness is not None:
            print(f"witness: {a.label(v.witness)}")
        print(f"quotient_boolean_classes: {len(v.quotient_boolean_classes)}")
        print(f"lifted_boolean_classes: {len(v.lifted_boolean_classes)}")
        print(
            "projection_injective: "
            f"{_yesno(projection_injective_on_booleans(a, f))}"
        )
        return 0
    v = algebra_has_blp(a)
    print(f"has_blp: {_yesno(v.holds)}")
    print(f"via_s_set: {_yesno(v.via_s_set)}")
    print(f"via_filters: {_yesno(v.via_filters)}")
    if v.failing_filter is not None:
        w = filter_has_blp(a, v.failing_filter).witness
        print(f"failing_filter: [{_members_text(a, v.failing_filter.members)}]")
        print(f"witness: {a.label(w)}")
    return 0


def cmd_product(args) -> int:
    left = load_algebra(args.file1)
    right = load_algebra(args.file2)
    pp = direct_product((left, right))
    dump_algebra(pp.algebra, args.output)
    return 0


def cmd_interval(args) -> int:
    a = load_algebra(args.file)
    e = _parse_element(a, args.element)
    print(dumps_algebra(interval_algebra(a, e).algebra), end="")
    return 0


def cmd_mkchain(args) -> int:
    make = godel_chain if args.variety == "godel" else lukasiewicz_chain
    print(dumps_algebra(make(args.size)), end="")
    return 0


def cmd_mkbool(args) -> int:
    print(dumps_algebra(boolean_algebra(args.atoms)), end="")
    return 0


def cmd_stack(args) -> int:
    a = load_algebra(args.file)
    print(dumps_algebra(stack_chain(a, args.chain, args.position)), end="")
    return 0


def cmd_enumerate(args) -> int:
    if args.count_only:
        for n in range(1, args.size + 1):
            print(f"size {n}: {len(enumerate_algebras(n))}")
        return 0
    for n in range(1, args.size + 1):
        for a in enumerate_algebras(n):
            print(json.dumps(algebra_to_dict(a), sort_keys=True))
    return 0


def cmd_verify(args) -> int:
    corpus = standard_corpus(
        size_max=args.size_max, fixtures_only=args.fixtures_only
    )
    theorems = None
    if args.theorems is not None:
        theorems = [t.strip() for t in args.theorems.split(",") if t.strip()]
    report = verify_corpus(corpus, theorems=theorems, jobs=args.jobs)
    if args.json:
        _print_json(report.to_json_dict())
    else:
        print(render_report(report))
    return 2 if report.violation_count else 0


def cmd_openproblems(args) -> int:
    corpus = standard_corpus(
        size_max=args.size_max, fixtures_only=args.fixtures_only
    )
    findings = search_open_problems(corpus)
    if args.json:
        _print_json(findings.to_json_dict())
    else:
        print(render_findings(findings))
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="reslat", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", help="check a file against the axioms")
    p.add_argument("file", help="algebra JSON path, - for stdin")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("analyze", help="full structural report")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("filters", help="list every filter with its flags")
    p.add_argument("file")
    p.set_defaults(func=cmd_filters)

    p = sub.add_parser("spectrum", help="prime and maximal filters")
    p.add_argument("file")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("radical", help="intersection of the maximal filters")
    p.add_argument("file")
    p.set_defaults(func=cmd_radical)

    p = sub.add_parser("quotient", help="divide by a generated filter")
    p.add_argument("file")
    p.add_argument("--by", required=True, metavar="E1,E2,...",
                   help="generator elements, by index or label")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("blp", help="Boolean lifting verdict")
    p.add_argument("file")
    p.add_argument("--filter", metavar="E1,E2,...",
                   help="restrict to the filter generated by these elements")
    p.set_defaults(func=cmd_blp)

    p = sub.add_parser("product", help="direct product of two algebras")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("interval", help="up-set of a complemented element")
    p.add_argument("file")
    p.add_argument("--element", required=True)
    p.set_defaults(func=cmd_interval)

    p = sub.add_parser("mkchain", help="build a chain algebra")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--variety", choices=("godel", "lukasiewicz"), default="godel")
    p.set_defaults(func=cmd_mkchain)

    p = sub.add_parser("mkbool", help="build the algebra of subsets of k atoms")
    p.add_argument("--atoms", type=int, required=True)
    p.set_defaults(func=cmd_mkbool)

    p = sub.add_parser("stack", help="glue a chain above or below an algebra")
    p.add_argument("file")
    p.add_argument("--chain", type=int, required=True, metavar="K")
    p.add_argument("--position", choices=("top", "bottom"), required=True)
    p.set_defaults(func=cmd_stack)

    p = sub.add_parser("enumerate", help="stream all algebras up to a size")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run the theorem checks over a corpus")
    p.add_argument("--size-max", type=int, default=5)
    p.add_argument("--fixtures-only", action="store_true")
    p.add_argument("--theorems", metavar="ID1,ID2,...")
    p.add_argument("--json", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser(
        "open-problems", help="search a corpus for the unresolved separations"
    )
    p.add_argument("--size-max", type=int, default=5)
    p.add_argument("--fixtures-only", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_openproblems)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationFailed as exc:
        print(f"validation failure: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 0
    except AlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
