"""Verification suites over a loaded input document."""

from __future__ import annotations

import itertools
import time
from math import comb
from typing import Callable, Iterator

from .enriched import (
    EnrichedError,
    Functor,
    Representable,
    Tensor,
    check_category_axioms,
    check_functor,
    nat_hom_dim,
)
from .kernels import (
    Kernel,
    PreconditionError,
    TransformPair,
    check_kernel_module,
    check_kernel_multiplicative,
    classify_transform,
    default_family,
    joy_hom,
    parseval_check,
    verify_gamma_left_inverse,
    verify_transform_multiplicativity,
)
from .promonoidal import (
    BaseMismatch,
    PromonoidalStructure,
    check_antipode,
    check_s_autonomy,
    convolution_unit,
    upper_convolution,
    verify_star_autonomy,
)
from .randomgen import gen_random_functor
from .report import DIMENSION, EXACT, CheckRecord, CheckResult, Report
from .spec_io import SpecDocument

SUITES = ("axioms", "convolution", "star-autonomy", "kernel", "transform-theorem", "classify", "joy",
          "parseval", "gamma")

# descriptive anchors naming the statement each check certifies
ANCHORS = {
    "category": "enriched-category-axioms",
    "functor": "enriched-functor-axioms",
    "promonoidal": "promonoidal-structure",
    "antipode": "antipode-axioms",
    "kernel-module": "kernel-two-sided-module",
    "unit-law": "convolution-unit",
    "associativity": "convolution-associativity",
    "s-autonomy": "s-autonomy-cyclic-condition",
    "star-autonomy": "star-autonomy-theorem",
    "multiplicative": "multiplicative-kernel",
    "transform": "transform-theorem-convolution",
    "classify": "conservative-vs-fully-faithful",
    "joy": "joyal-wiener-hom",
    "parseval": "parseval-pairing",
    "gamma": "gamma-left-inverse",
    "species": "species-convolution-law",
    "species-rep": "species-symmetric-group-action",
    "boolean": "boolean-multiplicative-kernel",
    "boolean-enum": "boolean-kernel-enumeration",
}

_SOFT = (PreconditionError, BaseMismatch)


class UnknownSuiteError(EnrichedError):
    pass


def _record(report: Report, check_id: str, anchor: str, fn: Callable[[], CheckResult]) -> None:
    t0 = time.perf_counter()
    try:
        res = fn()
    except _SOFT as e:
        res = CheckResult(check_id, skipped=f"precondition: {e}")
    report.add(CheckRecord.from_result(check_id, ANCHORS[anchor], res, time.perf_counter() - t0))


def _from_failures(name: str, fails, level=EXACT) -> CheckResult:
    res = CheckResult(name, level=level)
    for f in fails:
        res.fail(f.locus, f.equation, "holds")
    return res


def random_functor_on(cats: tuple, max_dim: int, seed: int, name: str) -> Functor:
    """Seeded functor on a product of categories: a tensor of per-factor random functors."""
    parts = [gen_random_functor(c, max_dim, seed * 10 + i, name=f"{name}.{i}") for i, c in enumerate(cats)]
    if len(parts) == 1:
        parts[0].name = name
        return parts[0]
    out = parts[0]
    for p in parts[1:]:
        out = Tensor(out, p, name=name)
    return out


def _pairs(cats: tuple, seed: int, count: int = 2, max_dim: int = 3) -> Iterator[tuple[Functor, Functor]]:
    for i in range(count):
        yield (random_functor_on(cats, max_dim, seed * 100 + 2 * i, f"f{i}"),
               random_functor_on(cats, max_dim, seed * 100 + 2 * i + 1, f"g{i}"))


def _antipode_for(doc: SpecDocument, c):
    for name in sorted(doc.antipodes):
        if doc.antipodes[name].base_cat is c:
            return doc.antipodes[name]
    return None


def _dims_compare(name: str, keys, lhs: Functor, rhs: Functor) -> CheckResult:
    res = CheckResult(name, level=DIMENSION)
    table = {}
    for x in keys:
        l_, r_ = lhs.dim(x), rhs.dim(x)
        table[x] = (l_, r_)
        res.compare(x, l_, r_)
    res.evidence["dims"] = {str(k): list(v) for k, v in table.items()}
    return res


# ---------------------------------------------------------------------------
# suites


def _axioms(doc: SpecDocument, seed: int, rep: Report):
    for n, c in sorted(doc.categories.items()):
        _record(rep, f"axioms/category/{n}", "category",
                lambda c=c: _from_failures("category", check_category_axioms(c)))
    for n, f in sorted(doc.functors.items()):
        _record(rep, f"axioms/functor/{n}", "functor", lambda f=f: _from_failures("functor", check_functor(f)))
    for n, s in sorted(doc.antipodes.items()):
        _record(rep, f"axioms/antipode/{n}", "antipode", lambda s=s: check_antipode(s))
    for n, k in sorted(doc.kernels.items()):
        _record(rep, f"axioms/kernel/{n}", "kernel-module", lambda k=k: check_kernel_module(k))
    if doc.species:
        for n, f in sorted(doc.species["members"].items()):
            _record(rep, f"axioms/species/{n}", "species-rep", lambda f=f: _species_rep(f))


def _species_rep(f) -> CheckResult:
    res = CheckResult("species-rep", level=EXACT)
    for n in sorted(f.gens):
        try:
            f.rho(n)
        except EnrichedError as e:
            res.fail((n,), str(e), "group homomorphism")
    res.evidence["dims"] = f.dims_list()
    return res


def _convolution(doc: SpecDocument, seed: int, rep: Report):
    for n, ps in sorted(doc.promonoidal.items()):
        keys = list(ps.keys())
        for i, (f, g) in enumerate(_pairs(ps.cats, seed, count=1)):
            if ps.j is not None:
                u = convolution_unit(ps)
                _record(rep, f"convolution/{n}/unit-left/{i}", "unit-law",
                        lambda ps=ps, f=f, u=u: _dims_compare("unit-left", keys, upper_convolution(ps, u, f), f))
                _record(rep, f"convolution/{n}/unit-right/{i}", "unit-law",
                        lambda ps=ps, f=f, u=u: _dims_compare("unit-right", keys, upper_convolution(ps, f, u), f))
            h = random_functor_on(ps.cats, 2, seed * 100 + 99, "h")
            _record(rep, f"convolution/{n}/associativity/{i}", "associativity",
                    lambda ps=ps, f=f, g=g, h=h: _dims_compare(
                        "associativity", keys,
                        upper_convolution(ps, upper_convolution(ps, f, g), h),
                        upper_convolution(ps, f, upper_convolution(ps, g, h))))
    if doc.species:
        _species_law(doc, rep)


def _species_law(doc: SpecDocument, rep: Report):
    from .gallery.species import species_convolve
    sp = doc.species
    ps, members = sp["promonoidal"], sp["members"]
    for (a, f), (b, g) in itertools.product(sorted(members.items()), repeat=2):
        def run(f=f, g=g):
            res = CheckResult("species-law", level=DIMENSION)
            conv = species_convolve(ps, f, g)
            got, want = [], []
            for n in sp["category"].objects:
                w = sum(comb(n, k) * f.dim((k,)) * g.dim((n - k,)) for k in range(n + 1))
                got.append(conv.dim((n,)))
                want.append(w)
                res.compare((n,), got[-1], w, "dim (f∗g)(n) vs binomial sum")
            res.evidence["dims"] = got
            return res
        _record(rep, f"convolution/species/{a}*{b}", "species", run)


def _star(doc: SpecDocument, seed: int, rep: Report):
    for n, ps in sorted(doc.promonoidal.items()):
        if ps.n != 1:
            continue
        s = _antipode_for(doc, ps.base)
        if s is None:
            continue
        cyc = check_s_autonomy(ps, s)
        if not cyc.passed:
            # the structure is not S-autonomous for this antipode: the theorem does not apply
            why = f"precondition: p(a,b,Sc) and p(b,c,Sa) differ, first {cyc.failures[0]}"
            cyc.skipped = why
            rep.add(CheckRecord.from_result(f"star-autonomy/{n}/cyclic", ANCHORS["s-autonomy"], cyc))
            for i, _ in enumerate(_pairs(ps.cats, seed)):
                rep.add(CheckRecord.from_result(f"star-autonomy/{n}/dims/{i}", ANCHORS["star-autonomy"],
                                                CheckResult("star-autonomy", skipped=why)))
            continue
        _record(rep, f"star-autonomy/{n}/cyclic", "s-autonomy", lambda cyc=cyc: cyc)
        for i, (f, g) in enumerate(_pairs(ps.cats, seed)):
            _record(rep, f"star-autonomy/{n}/dims/{i}", "star-autonomy",
                    lambda ps=ps, s=s, f=f, g=g: verify_star_autonomy(ps, s, f, g))


def _with_structures(k: Kernel) -> bool:
    return k.source is not None and k.target is not None


def _kernel(doc: SpecDocument, seed: int, rep: Report):
    for n, k in sorted(doc.kernels.items()):
        if _with_structures(k):
            _record(rep, f"kernel/{n}/multiplicative", "multiplicative", lambda k=k: check_kernel_multiplicative(k))
        else:
            rep.add(CheckRecord.from_result(f"kernel/{n}/multiplicative", ANCHORS["multiplicative"], CheckResult(
                "multiplicative", skipped="kernel declares no source or target structure")))
    from .gallery.boolean import bool_enumerate_kernels, bool_kernel_check
    for n, b in sorted(doc.boolean.items()):
        if b.candidate is not None:
            def run(b=b):
                res = CheckResult("boolean", level=EXACT)
                res.compare(("candidate",), bool_kernel_check(b), True, "K ⊛ K = K")
                res.evidence["candidate"] = sorted(b.candidate)
                return res
            _record(rep, f"kernel/boolean/{n}/candidate", "boolean", run)

        def enum(b=b):
            res = CheckResult("boolean-enum", level=EXACT)
            found = bool_enumerate_kernels(b)
            res.evidence["kernels"] = sorted(sorted(s) for s in found)
            res.evidence["empty_set_passes"] = frozenset() in found
            return res
        _record(rep, f"kernel/boolean/{n}/enumerate", "boolean-enum", enum)


def _transform(doc: SpecDocument, seed: int, rep: Report):
    for n, k in sorted(doc.kernels.items()):
        if not _with_structures(k):
            continue
        mult = check_kernel_multiplicative(k)
        for i, (f, g) in enumerate(_pairs(k.a_cats, seed)):
            cid = f"transform-theorem/{n}/{i}"
            if not mult.passed:
                rep.add(CheckRecord.from_result(cid, ANCHORS["transform"], CheckResult(
                    "transform", skipped="precondition: kernel is not multiplicative")))
                continue
            _record(rep, cid, "transform", lambda k=k, f=f, g=g: verify_transform_multiplicativity(k, f, g))


def _classify(doc: SpecDocument, seed: int, rep: Report, size: int = 8):
    for n, k in sorted(doc.kernels.items()):
        def run(k=k):
            cl = classify_transform(k, default_family(k, seed=seed, size=size))
            res = CheckResult("classify", level=DIMENSION)
            res.evidence["summary"] = cl.summary
            res.evidence["verdicts"] = {name: v for name, v, _ in cl.verdicts}
            res.evidence["eta_ranks"] = {name: {str(a): list(r) for a, r in ranks.items()}
                                         for name, _, ranks in cl.verdicts}
            return res
        _record(rep, f"classify/{n}", "classify", run)


def _family_pairs(k: Kernel, seed: int) -> list:
    fam = default_family(k, seed=seed, size=2, max_dim=2)
    return [(fam[i], fam[(i + 1) % len(fam)]) for i in range(len(fam))]


def _joy(doc: SpecDocument, seed: int, rep: Report):
    for n, k in sorted(doc.kernels.items()):
        def run(k=k):
            res = CheckResult("joy", level=DIMENSION)
            pair = TransformPair(k)
            for f, g in _family_pairs(k, seed):
                d, _ = joy_hom(k, f, g, pair)
                res.compare((f.name, g.name), d, nat_hom_dim(f, g), "dim Joy(K)(f,g) vs dim [A,V](f,g)")
                res.evidence[f"{f.name},{g.name}"] = d
            return res
        _record(rep, f"joy/{n}", "joy", run)


def _parseval(doc: SpecDocument, seed: int, rep: Report):
    for n, k in sorted(doc.kernels.items()):
        if k.na != 1:
            continue
        s = _antipode_for(doc, k.a_cats[0])
        for i, (f, g) in enumerate(_pairs(k.a_cats, seed)):
            _record(rep, f"parseval/{n}/{i}", "parseval", lambda k=k, s=s, f=f, g=g: parseval_check(k, s, f, g))


def _gamma(doc: SpecDocument, seed: int, rep: Report):
    for n, ps in sorted(doc.promonoidal.items()):
        if ps.n != 1 or ps.j is None:
            continue
        for i, (f, _) in enumerate(_pairs(ps.cats, seed)):
            cid = f"gamma/{n}/{i}"
            if not ps.right_unit:
                rep.add(CheckRecord.from_result(cid, ANCHORS["gamma"], CheckResult(
                    "gamma", skipped="no right-unit witnesses declared")))
                continue
            _record(rep, cid, "gamma", lambda ps=ps, f=f: verify_gamma_left_inverse(ps, f))


_RUNNERS = {
    "axioms": _axioms,
    "convolution": _convolution,
    "star-autonomy": _star,
    "kernel": _kernel,
    "transform-theorem": _transform,
    "classify": _classify,
    "joy": _joy,
    "parseval": _parseval,
    "gamma": _gamma,
}


def run_suite(doc: SpecDocument, suite: str = "all", seed: int = 1) -> Report:
    """Run one suite (or ``all``); records are ordered by check id."""
    if suite != "all" and suite not in _RUNNERS:
        raise UnknownSuiteError(f"unknown suite {suite!r}; choose from {', '.join(SUITES + ('all',))}")
    rep = Report()
    for name in (SUITES if suite == "all" else (suite,)):
        _RUNNERS[name](doc, seed, rep)
    return rep.sorted()
