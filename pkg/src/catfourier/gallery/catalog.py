"""Named gallery entries: each builds a JSON document plus its own verification checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from ..report import DIMENSION, EXACT, CheckResult
from ..spec_io import boolean_section, emit_document, species_section
from . import boolean, discrete, groups, hopf, schemes, species


@dataclass
class GalleryEntry:
    name: str
    document: dict
    checks: list = field(default_factory=list)    # (check id, anchor, thunk returning CheckResult)


def _hopf(args) -> GalleryEntry:
    g = groups.by_name(args.group)
    gal = hopf.build_group_hopf(g)
    doc = emit_document(promonoidal=[("hopf", gal.promonoidal)], antipodes=[("S", gal.antipode)],
                        kernels=[("hom", gal.kernel)], meta={"gallery": "hopf", "group": args.group})
    checks = [
        ("gallery/hopf/axioms", "hopf-axioms", lambda: hopf.check_hopf_axioms(gal.hopf)),
        ("gallery/hopf/fourier", "hopf-fourier", lambda: hopf.hopf_fourier_iso(gal.hopf)[2]),
    ]
    return GalleryEntry(f"hopf[{g.name}]", doc, checks)


def _scheme_entry(data: schemes.SchemeData, label: str) -> GalleryEntry:
    gal = schemes.build_scheme(data)
    doc = emit_document(promonoidal=[("scheme", gal.promonoidal)], antipodes=[("star", gal.antipode)],
                        kernels=[("M", gal.kernel), ("p", gal.pair_kernel)], meta={"gallery": label})

    def table():
        res = CheckResult("intersection-numbers", level=EXACT)
        res.evidence["p"] = {str(k): v for k, v in sorted(data.p.items())}
        return res

    checks = [("gallery/scheme/bose-mesner", "scheme-bose-mesner", lambda: schemes.verify_scheme_kernel(data)),
              ("gallery/scheme/intersection-numbers", "scheme-bose-mesner", table)]
    return GalleryEntry(label, doc, checks)


def _hamming(args) -> GalleryEntry:
    return _scheme_entry(schemes.hamming_scheme(args.n, args.q), f"hamming[{args.n},{args.q}]")


def _cyclic_scheme(args) -> GalleryEntry:
    return _scheme_entry(schemes.cyclic_scheme(args.n), f"cyclic-scheme[{args.n}]")


def _group(args) -> GalleryEntry:
    g = groups.symmetric(3) if args.symmetric else groups.cyclic(args.order)
    gal = discrete.build_discrete_monoidal_group(g, closed=args.closed)
    from ..promonoidal import check_s_autonomy
    doc = emit_document(promonoidal=[("group", gal.promonoidal)], antipodes=[("inverse", gal.antipode)],
                        kernels=[("p", gal.kernel), ("hom", gal.hom_kernel)],
                        meta={"gallery": "group", "order": g.order, "closed": args.closed})
    checks = [("gallery/group/s-autonomy", "s-autonomy-cyclic-condition",
               lambda: check_s_autonomy(gal.promonoidal, gal.antipode))]
    return GalleryEntry(f"group[{g.name}]", doc, checks)


def _restriction(args) -> GalleryEntry:
    small = discrete.build_discrete_monoidal_group(groups.cyclic(args.small))
    big = discrete.build_discrete_monoidal_group(groups.cyclic(args.big))
    if args.kind == "inclusion":
        psi = discrete.cyclic_inclusion(small, big)
        src, tgt = big, small
    else:
        psi = discrete.cyclic_quotient(big, small)
        src, tgt = small, big
    rk = discrete.build_restriction_kernel(psi, src.promonoidal, tgt.promonoidal)
    from ..kernels import check_kernel_multiplicative
    doc = emit_document(promonoidal=[("source", src.promonoidal), ("target", tgt.promonoidal)],
                        kernels=[("restrict", rk.kernel)],
                        meta={"gallery": "restriction", "kind": args.kind,
                              "surjective_on_objects": rk.surjective_on_objects})

    def mult():
        res = check_kernel_multiplicative(rk.kernel)
        res.evidence["surjective_on_objects"] = rk.surjective_on_objects
        return res

    return GalleryEntry(f"restriction[{args.kind}]", doc,
                        [("gallery/restriction/multiplicative", "multiplicative-kernel", mult)])


def _species(args) -> GalleryEntry:
    cat, ps = species.build_species_category(args.trunc)
    members = {"E": species.exponential_species(cat), "X": species.singleton_species(cat),
               "r1": species.random_species(cat, args.seed, name="r1"),
               "r2": species.random_species(cat, args.seed + 1, name="r2")}
    doc = {"scalar": "rational", "species": species_section(args.trunc, members),
           "meta": {"gallery": "species", "truncation": args.trunc}}

    def analytic():
        res = CheckResult("species-analytic", level=DIMENSION)
        got = species.analytic_evaluate(members["E"], 2)
        for n, d in enumerate(got):
            res.compare((n,), d, n + 1, "dim of symmetric power")
        res.evidence["dims"] = got
        return res

    return GalleryEntry(f"species[{args.trunc}]", doc,
                        [("gallery/species/analytic-E-2", "species-analytic-functor", analytic)])


def _bool(args) -> GalleryEntry:
    if args.mode == "submodule":
        b = boolean.submodule_instance(args.modulus)
        expected = set(boolean.submodules(args.modulus)) | {frozenset()}
    else:
        b = boolean.convexity_instance(args.points)
        pts = b.carrier
        expected = {frozenset(pts[i:j]) for i in range(len(pts)) for j in range(i + 1, len(pts) + 1)} | {frozenset()}
    doc = {"scalar": "rational", "boolean": boolean_section({args.mode: b}), "meta": {"gallery": "bool"}}

    def enum():
        res = CheckResult("boolean-enum", level=EXACT)
        found = set(boolean.bool_enumerate_kernels(b))
        res.compare(("kernels",), sorted(map(sorted, found)), sorted(map(sorted, expected)))
        res.evidence["kernels"] = sorted(map(sorted, found))
        res.evidence["empty_set_passes"] = frozenset() in found
        return res

    return GalleryEntry(f"bool[{args.mode}]", doc, [("gallery/bool/enumerate", "boolean-kernel-enumeration", enum)])


BUILDERS: dict[str, Callable] = {
    "hopf": _hopf,
    "hamming": _hamming,
    "cyclic-scheme": _cyclic_scheme,
    "group": _group,
    "restriction": _restriction,
    "species": _species,
    "bool": _bool,
}


def build_entry(name: str, args) -> GalleryEntry:
    return BUILDERS[name](args)
