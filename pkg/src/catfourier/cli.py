"""Command-line entry point: ``catfourier check|convolve|transform|classify|gallery``.

Exit codes: 0 when every check passes, 1 when at least one fails, 2 for
malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .enriched import EnrichedError, Functor
from .report import CheckRecord, Report, emit_report
from .spec_io import SpecDocument, SpecError, build_document, dump_spec, load_spec
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def default_seed() -> int:
    raw = os.environ.get("CATFOURIER_SEED")
    if raw is None or raw == "":
        return 1
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"CATFOURIER_SEED must be an integer, got {raw!r}") from None


def _load(path: str) -> SpecDocument:
    try:
        return load_spec(path)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    except SpecError as e:
        raise InputError(str(e)) from None


def _lookup(table: dict, name: str, what: str):
    if name not in table:
        known = ", ".join(sorted(table)) or "none"
        raise InputError(f"unknown {what} {name!r} (known: {known})")
    return table[name]


def _print_dims(title: str, f: Functor, keys, fmt: str) -> None:
    table = {str(k if len(k) > 1 else k[0]): f.dim(k) for k in keys}
    if fmt == "json":
        print(json.dumps({"functor": title, "dims": table}, indent=2, sort_keys=True))
    else:
        print(title)
        for k, d in table.items():
            print(f"  {k}: {d}")


# ---------------------------------------------------------------------------
# subcommands


def cmd_check(args) -> int:
    doc = _load(args.spec)
    report = run_suite(doc, args.suite, args.seed)
    print(emit_report(report, args.format, timings=args.timings))
    return EXIT_OK if report.passed else EXIT_FAIL


def _structure_for(doc: SpecDocument, f: Functor, name: str | None):
    if name is not None:
        return _lookup(doc.promonoidal, name, "promonoidal structure")
    for n in sorted(doc.promonoidal):
        ps = doc.promonoidal[n]
        if len(ps.cats) == len(f.cats) and all(a is b for a, b in zip(ps.cats, f.cats)):
            return ps
    raise InputError(f"no promonoidal structure on the categories of {f.name}")


def cmd_convolve(args) -> int:
    from .promonoidal import lower_convolution, upper_convolution
    doc = _load(args.spec)
    f = _lookup(doc.functors, args.f, "functor")
    g = _lookup(doc.functors, args.g, "functor")
    ps = _structure_for(doc, f, args.structure)
    if any(a is not b for a, b in zip(f.cats, g.cats)) or len(f.cats) != len(g.cats):
        raise InputError(f"{args.f} and {args.g} live on different categories")
    if args.lower:
        s = next((doc.antipodes[n] for n in sorted(doc.antipodes) if doc.antipodes[n].base_cat is ps.base), None)
        if s is None:
            raise InputError("lower convolution needs an antipode on the base category")
        h = lower_convolution(ps, s, f, g)
        title = f"{args.f} ⊛_lower {args.g}"
    else:
        h = upper_convolution(ps, f, g)
        title = f"{args.f} ⊛ {args.g}"
    _print_dims(title, h, list(ps.keys()), args.format)
    return EXIT_OK


def cmd_transform(args) -> int:
    from .kernels import transform
    doc = _load(args.spec)
    k = _lookup(doc.kernels, args.kernel, "kernel")
    f = _lookup(doc.functors, args.functor, "functor")
    if len(f.cats) != k.na or any(a is not b for a, b in zip(f.cats, k.a_cats)):
        raise InputError(f"{args.functor} is not a functor on the source of {args.kernel}")
    _print_dims(f"{args.kernel}({args.functor})", transform(k, f), list(k.x_keys()), args.format)
    return EXIT_OK


def cmd_classify(args) -> int:
    from .kernels import classify_transform, default_family
    doc = _load(args.spec)
    k = _lookup(doc.kernels, args.kernel, "kernel")
    cl = classify_transform(k, default_family(k, seed=args.seed, size=args.family_size))
    if args.format == "json":
        print(json.dumps({"kernel": args.kernel, "summary": cl.summary,
                          "verdicts": {n: v for n, v, _ in cl.verdicts}}, indent=2, sort_keys=True))
    else:
        print(f"{args.kernel}: {cl}")
        for n, v, _ in cl.verdicts:
            print(f"  {n}: {v}")
    return EXIT_OK


def cmd_gallery(args) -> int:
    from .gallery.catalog import build_entry
    try:
        entry = build_entry(args.name, args)
    except EnrichedError as e:
        raise InputError(str(e)) from None
    report = Report()
    for cid, anchor, fn in entry.checks:
        t0 = time.perf_counter()
        report.add(CheckRecord.from_result(cid, anchor, fn(), time.perf_counter() - t0))
    if args.suite:
        try:
            doc = build_document(json.loads(json.dumps(entry.document)))
        except SpecError as e:
            raise InputError(str(e)) from None
        report.records.extend(run_suite(doc, args.suite, args.seed).records)
    report = report.sorted()
    if args.emit:
        dump_spec(entry.document, args.emit)
    print(emit_report(report, args.format, timings=args.timings))
    return EXIT_OK if report.passed else EXIT_FAIL


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="seed for random functor families "
                        "(default: $CATFOURIER_SEED or 1)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--timings", action="store_true", help="include elapsed times in reports")

    p = argparse.ArgumentParser(prog="catfourier", description="Exact verification for finite "
                                "Vect-enriched promonoidal categories.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="run a verification suite on a spec file")
    c.add_argument("spec")
    c.add_argument("--suite", choices=SUITES + ("all",), default="all")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("convolve", parents=[common], help="dimensions of a convolution of two functors")
    c.add_argument("spec")
    c.add_argument("f")
    c.add_argument("g")
    c.add_argument("--lower", action="store_true", help="lower convolution via the antipode")
    c.add_argument("--structure", help="promonoidal structure name (default: first on the right base)")
    c.set_defaults(func=cmd_convolve)

    c = sub.add_parser("transform", parents=[common], help="dimensions of the transform of a functor")
    c.add_argument("spec")
    c.add_argument("kernel")
    c.add_argument("functor")
    c.set_defaults(func=cmd_transform)

    c = sub.add_parser("classify", parents=[common], help="classify a transform on a seeded family")
    c.add_argument("spec")
    c.add_argument("kernel")
    c.add_argument("--family-size", type=int, default=8)
    c.set_defaults(func=cmd_classify)

    g = sub.add_parser("gallery", help="build a gallery example, verify it, optionally emit its spec")
    gs = g.add_subparsers(dest="name", required=True)

    def entry(name, help_):
        e = gs.add_parser(name, parents=[common], help=help_)
        e.add_argument("--emit", metavar="SPEC.json", help="write the example as a spec document")
        e.add_argument("--suite", choices=SUITES + ("all",), help="also run a suite on the emitted document")
        e.set_defaults(func=cmd_gallery)
        return e

    e = entry("hopf", "group Hopf algebra")
    e.add_argument("--group", default="z3", help="z<n>, s<n> or 1")
    e = entry("hamming", "Hamming association scheme")
    e.add_argument("--n", type=int, default=2)
    e.add_argument("--q", type=int, default=2)
    e = entry("cyclic-scheme", "scheme of Z/n acting on itself")
    e.add_argument("--n", type=int, default=4)
    e = entry("group", "discrete monoidal (or closed) group")
    e.add_argument("--order", type=int, default=3)
    e.add_argument("--closed", action="store_true")
    e.add_argument("--symmetric", action="store_true", help="use S_3 instead of Z/order")
    e = entry("restriction", "restriction kernel between cyclic groups")
    e.add_argument("--kind", choices=("inclusion", "quotient"), default="quotient")
    e.add_argument("--small", type=int, default=2)
    e.add_argument("--big", type=int, default=4)
    e = entry("species", "truncated species")
    e.add_argument("--trunc", type=int, default=4)
    e = entry("bool", "kernels over the two-element quantale")
    e.add_argument("--mode", choices=("submodule", "convexity"), default="submodule")
    e.add_argument("--modulus", type=int, default=4)
    e.add_argument("--points", type=int, default=4)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.seed is None:
            args.seed = default_seed()
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except SpecError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
