"""The twelve acceptance criteria, each run exactly and timed against its limit.

Every criterion prints one line ``criterion N: PASS|FAIL ...``.  Run directly
with ``python tests/test_acceptance.py`` for just the summary lines.
"""

import itertools
import time
from math import comb

import pytest

from catfourier.enriched import (
    Dual,
    HomBimodule,
    Representable,
    Tensor,
    coend,
    end,
    nat_hom_dim,
    yoneda_coend,
    yoneda_end,
)
from catfourier.gallery import boolean
from catfourier.gallery.discrete import (
    build_discrete_monoidal_group,
    build_restriction_kernel,
    cyclic_inclusion,
    cyclic_quotient,
)
from catfourier.gallery.groups import by_name, cyclic, group_algebra_category, symmetric
from catfourier.gallery.hopf import build_group_hopf, character_functor, hopf_fourier_iso
from catfourier.gallery.schemes import build_scheme, cyclic_scheme, hamming_scheme, verify_scheme_kernel
from catfourier.gallery.species import (
    analytic_evaluate,
    build_species_category,
    exponential_species,
    random_species,
    species_convolve,
)
from catfourier.kernels import (
    CONSERVATIVE,
    TransformPair,
    check_kernel_multiplicative,
    classify_transform,
    default_family,
    joy_hom,
    parseval_check,
    transform,
    verify_gamma_left_inverse,
    verify_transform_multiplicativity,
)
from catfourier.linalg import RationalMatrix, is_isomorphism, rank
from catfourier.promonoidal import internal_hom, upper_convolution, verify_star_autonomy
from catfourier.randomgen import gen_random_functor

from oracles import binomial_convolution, dense_mul

SEED = 1


class Outcome:
    """Collects failures for one criterion; ``ok`` iff nothing was recorded."""

    def __init__(self):
        self.problems = []
        self.notes = []

    def expect(self, cond, what):
        if not cond:
            self.problems.append(what)

    def note(self, what):
        self.notes.append(what)

    @property
    def ok(self):
        return not self.problems

    def detail(self):
        if self.problems:
            return "; ".join(map(str, self.problems[:3]))
        return "; ".join(self.notes)


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


# ---------------------------------------------------------------------------
# 1. Hopf Fourier isomorphism and transform dims


def hopf_for_group(name):
    out = Outcome()
    g = by_name(name)
    gal = build_group_hopf(g)
    phi, phi_inv, res = hopf_fourier_iso(gal.hopf)
    out.expect(res.passed, f"{name}: Fourier composites not inverse")
    one = RationalMatrix.identity(g.order ** 2)
    out.expect(phi @ phi_inv == one and phi_inv @ phi == one, f"{name}: direct product check")
    fs = [gen_random_functor(gal.category, 4, SEED * 10 + i) for i in range(3)]
    fs.append(character_functor(g, gal.category, lambda x: 1, name="trivial"))
    k = gal.kernel
    for f, h in zip(fs, fs[1:] + fs[:1]):
        lhs = transform(k, upper_convolution(k.source, f, h))
        for x in k.x_keys():
            out.expect(lhs.dim(x) == f.dim(x) * h.dim(x), f"{name}: {f.name}*{h.name} at {x}")
    return out


def criterion_1():
    out = Outcome()
    for name in ("z2", "z3", "z4", "s3"):
        sub, t = timed(hopf_for_group, name)
        out.problems += sub.problems
        out.expect(t < 5, f"{name} took {t:.2f}s")
        out.note(f"{name} {t:.2f}s")
    return out


# ---------------------------------------------------------------------------
# 2. association schemes


def full_table_against_dense(data, out, label):
    dense = [m.to_lists() for m in data.matrices]
    r, n = data.n_classes, len(data.points)
    for a, b in itertools.product(range(r), repeat=2):
        prod = dense_mul(dense[a], dense[b])
        expect = [[sum(data.p.get((a, b, c), 0) * dense[c][i][j] for c in range(r)) for j in range(n)]
                  for i in range(n)]
        out.expect(prod == expect, f"{label}: p-table row ({a},{b})")


def criterion_2():
    out = Outcome()
    h = hamming_scheme(2, 2)
    row = tuple(h.p.get((1, 1, c), 0) for c in range(3))
    out.expect(row == (2, 0, 2), f"p(1,1,.) = {row}")
    m = h.matrices
    out.expect(m[1] @ m[1] == m[0].scale(2) + m[2].scale(2), "M1 M1 != 2 M0 + 2 M2")
    for data, label in ((h, "H(2,2)"), (cyclic_scheme(4), "Z/4")):
        res = verify_scheme_kernel(data)
        out.expect(res.passed, f"{label}: {res}")
        full_table_against_dense(data, out, label)
        st = data.star
        for a, b, c in itertools.product(range(data.n_classes), repeat=3):
            out.expect(data.p.get((a, b, c), 0) == data.p.get((st[b], st[a], st[c]), 0),
                       f"{label}: antipode identity at {(a, b, c)}")
    out.note(f"p(1,1,.)={row}")
    return out


# ---------------------------------------------------------------------------
# 3. transform theorem over the gallery


def gallery_kernels():
    ks = []
    for name in ("z2", "z3", "z4", "s3"):
        ks.append(build_group_hopf(by_name(name)).kernel)
    for g in (cyclic(2), cyclic(3), symmetric(3)):
        for closed in (False, True):
            gal = build_discrete_monoidal_group(g, closed=closed)
            ks += [gal.kernel, gal.hom_kernel]
    for data in (hamming_scheme(2, 2), cyclic_scheme(4)):
        gal = build_scheme(data)
        ks += [gal.kernel, gal.pair_kernel]
    small, big = build_discrete_monoidal_group(cyclic(2)), build_discrete_monoidal_group(cyclic(4))
    ks.append(build_restriction_kernel(cyclic_inclusion(small, big), big.promonoidal, small.promonoidal).kernel)
    ks.append(build_restriction_kernel(cyclic_quotient(big, small), small.promonoidal, big.promonoidal).kernel)
    return ks


def family_of_eight(k):
    """Representables first, then seeded random functors, eight in all."""
    c = k.a_cats[0]
    reps = default_family(k, seed=SEED, size=0, max_dim=4)[:8]
    extra = default_family(k, seed=SEED, size=8 - len(reps), max_dim=4)[len(c.objects):]
    return reps + extra


def criterion_3():
    out = Outcome()
    tested = skipped = 0
    for k in gallery_kernels():
        if not check_kernel_multiplicative(k):
            skipped += 1
            continue
        tested += 1
        fam = family_of_eight(k)
        out.expect(len(fam) == 8, f"{k.name}: family size {len(fam)}")
        for f, h in zip(fam, fam[1:] + fam[:1]):
            res = verify_transform_multiplicativity(k, f, h)
            out.expect(res.passed, f"{k.name}: {f.name},{h.name}: {res}")
    out.note(f"{tested} multiplicative kernels, {skipped} not multiplicative")
    return out


# ---------------------------------------------------------------------------
# 4. star-autonomy on discrete groups


def criterion_4():
    out = Outcome()
    for g in (cyclic(2), cyclic(3)):
        gal = build_discrete_monoidal_group(g)
        for s in range(4):
            f = gen_random_functor(gal.category, 3, 2 * s + SEED)
            h = gen_random_functor(gal.category, 3, 2 * s + SEED + 1)
            res = verify_star_autonomy(gal.promonoidal, gal.antipode, f, h)
            out.expect(res.passed, f"{g.name}: {res}")
            ih = internal_hom(gal.promonoidal, f, h)
            for c in g.elements:
                oracle = sum(f.dim((a,)) * h.dim((g.mul(c, a),)) for a in g.elements)
                out.expect(ih.dim((c,)) == oracle, f"{g.name}: [f,g]({c}) {ih.dim((c,))} vs {oracle}")
    return out


# ---------------------------------------------------------------------------
# 5. left inverse of the pair-kernel transform


def criterion_5():
    out = Outcome()
    structures = [build_discrete_monoidal_group(g).promonoidal for g in (cyclic(2), cyclic(3), symmetric(3))]
    structures += [build_scheme(d).promonoidal for d in (hamming_scheme(2, 2), cyclic_scheme(4))]
    for ps in structures:
        for s in range(2):
            res = verify_gamma_left_inverse(ps, gen_random_functor(ps.base, 3, SEED + s))
            out.expect(res.passed, f"{ps.name}: {res}")
    out.note(f"{len(structures)} structures")
    return out


# ---------------------------------------------------------------------------
# 6. closed Z/3: unit is a split mono, transform conservative


def criterion_6():
    out = Outcome()
    gal = build_discrete_monoidal_group(cyclic(3), closed=True)
    pair = TransformPair(gal.kernel)
    fam = default_family(gal.kernel, seed=SEED)
    for f in fam:
        eta = pair.unit(f)
        for a in gal.category.objects:
            m = eta.component((a,))
            out.expect(rank(m) == f.dim((a,)), f"{f.name}({a}): rank {rank(m)} vs {f.dim((a,))}")
    cl = classify_transform(gal.kernel, fam)
    out.expect(cl.summary == CONSERVATIVE, f"summary {cl.summary}")
    out.note(f"summary {cl.summary} on {len(fam)} functors")
    return out


# ---------------------------------------------------------------------------
# 7. Joyal-Wiener hom-spaces


def criterion_7():
    out = Outcome()
    kernels = [build_group_hopf(cyclic(2)).kernel, build_group_hopf(cyclic(3)).kernel,
               build_discrete_monoidal_group(cyclic(3), closed=True).kernel]
    n = 0
    for k in kernels:
        fam = default_family(k, seed=SEED, size=3, max_dim=2)
        for f, h in zip(fam, fam[1:] + fam[:1]):
            d, basis = joy_hom(k, f, h)
            ref = nat_hom_dim(f, h)
            out.expect(d == ref == len(basis), f"{k.name}: {f.name},{h.name}: {d} vs {ref}")
            n += 1
    out.note(f"{n} pairs")
    return out


# ---------------------------------------------------------------------------
# 8. restriction kernels


def criterion_8():
    out = Outcome()
    small, big = build_discrete_monoidal_group(cyclic(2)), build_discrete_monoidal_group(cyclic(4))
    inc = build_restriction_kernel(cyclic_inclusion(small, big), big.promonoidal, small.promonoidal)
    res = check_kernel_multiplicative(inc.kernel)
    if not res.passed:
        m = res.failures[0]
        out.expect(False, f"inclusion not multiplicative at {m.locus}: {m.lhs} vs {m.rhs}")
    quo = build_restriction_kernel(cyclic_quotient(big, small), small.promonoidal, big.promonoidal)
    res = check_kernel_multiplicative(quo.kernel)
    out.expect(not res.passed, "quotient passed")
    if not res.passed:
        m = res.failures[0]
        out.expect((m.lhs, m.rhs) == (2, 1), f"quotient reported {m.lhs} vs {m.rhs}")
        out.note(f"quotient fails at {m.locus}: {m.lhs} vs {m.rhs}")
    return out


# ---------------------------------------------------------------------------
# 9. boolean kernels


def criterion_9():
    out = Outcome()
    found = set(boolean.bool_enumerate_kernels(boolean.submodule_instance(4)))
    want = {frozenset(), frozenset({0}), frozenset({0, 2}), frozenset(range(4))}
    out.expect(found == want, f"Z/4 kernels {sorted(map(sorted, found))}")
    conv = set(boolean.bool_enumerate_kernels(boolean.convexity_instance(4)))
    intervals = {frozenset(range(i, j)) for i in range(4) for j in range(i + 1, 5)} | {frozenset()}
    out.expect(conv == intervals, f"convexity kernels {sorted(map(sorted, conv))}")
    return out


# ---------------------------------------------------------------------------
# 10. species


def criterion_10():
    out = Outcome()
    cat, ps = build_species_category(5)
    members = [exponential_species(cat)] + [random_species(cat, SEED + i, name=f"r{i}") for i in range(4)]
    for f, g in itertools.combinations(members, 2):
        conv = species_convolve(ps, f, g)
        for n in range(6):
            oracle = binomial_convolution(f.dims_list(), g.dims_list(), n)
            out.expect(conv.dim((n,)) == oracle, f"{f.name}*{g.name}({n}) {conv.dim((n,))} vs {oracle}")
    got = analytic_evaluate(exponential_species(cat), 2)
    out.expect(got == [comb(n + 1, n) for n in range(6)], f"E at 2: {got}")
    return out


# ---------------------------------------------------------------------------
# 11. engine oracles


def gallery_categories():
    cats = [build_group_hopf(by_name(n), validate=False).category for n in ("z2", "z3", "z4", "s3")]
    cats += [build_discrete_monoidal_group(g).category for g in (cyclic(2), cyclic(3), symmetric(3))]
    cats += [build_scheme(d).category for d in (hamming_scheme(2, 2), cyclic_scheme(4))]
    cats.append(build_species_category(4)[0])
    return cats


def criterion_11():
    out = Outcome()
    c = group_algebra_category(symmetric(3))
    h = HomBimodule(c)
    co, en = coend(h).dim(()), end(h).dim(())
    out.expect(co == 3 and en == 3, f"S3 regular bimodule coend {co}, end {en}")
    cats = gallery_categories()
    for cat in cats:
        f = gen_random_functor(cat, 3, SEED)
        for a in cat.objects:
            yc, m = yoneda_coend(cat, a, f)
            ye, m2 = yoneda_end(cat, a, f)
            out.expect(yc.dim(()) == f.dim((a,)) and is_isomorphism(m), f"{cat.name}: Yoneda coend at {a}")
            out.expect(ye.dim(()) == f.dim((a,)) and is_isomorphism(m2), f"{cat.name}: Yoneda end at {a}")
    small = cats[:9]
    for i in range(50):
        cat = small[i % len(small)]
        t = Tensor(gen_random_functor(cat.op(), 2, 2 * i), gen_random_functor(cat, 2, 2 * i + 1))
        if i % 2:
            t = Tensor(Representable(cat, cat.objects[i % len(cat.objects)], contravariant=True),
                       gen_random_functor(cat, 2, i))
        d1, d2 = coend(t, [(0, 1)]).dim(()), end(Dual(t), [(1, 0)]).dim(())
        out.expect(d1 == d2, f"duality #{i} on {cat.name}: {d1} vs {d2}")
    out.note(f"Yoneda on {len(cats)} categories, 50 duality bimodules")
    return out


# ---------------------------------------------------------------------------
# 12. Parseval


def criterion_12():
    out = Outcome()
    for g in (cyclic(2), cyclic(3)):
        gal = build_group_hopf(g)
        for s in range(3):
            f = gen_random_functor(gal.category, 3, SEED + s)
            h = gen_random_functor(gal.category, 3, SEED + s + 10)
            res = parseval_check(gal.kernel, gal.antipode, f, h)
            out.expect(res.passed and res.status != "skipped", f"{g.name}: {res}")
    return out


# ---------------------------------------------------------------------------

CRITERIA = [
    (1, "Hopf Fourier isomorphism and transform dims", 20.0, criterion_1),
    (2, "association scheme tables", 2.0, criterion_2),
    (3, "transform theorem on gallery kernels", 30.0, criterion_3),
    (4, "star-autonomy on discrete groups", 5.0, criterion_4),
    (5, "left inverse of the pair-kernel transform", 10.0, criterion_5),
    (6, "closed Z/3 unit split mono, conservative", 5.0, criterion_6),
    (7, "Joyal-Wiener hom dimensions", 10.0, criterion_7),
    (8, "restriction kernel discrimination", 2.0, criterion_8),
    (9, "boolean kernels", 1.0, criterion_9),
    (10, "species convolution and analytic functor", 60.0, criterion_10),
    (11, "engine oracles", 30.0, criterion_11),
    (12, "Parseval pairing", 5.0, criterion_12),
]


def run_criterion(number, title, limit, fn):
    out, elapsed = timed(fn)
    ok = out.ok and elapsed < limit
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}  ({elapsed:.2f}s, limit {limit:g}s)"
    detail = out.detail()
    if elapsed >= limit:
        detail = f"over time limit; {detail}"
    if detail:
        line += f"  [{detail}]"
    return ok, line


@pytest.mark.parametrize("number,title,limit,fn", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, limit, fn, capsys):
    ok, line = run_criterion(number, title, limit, fn)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    for spec in CRITERIA:
        print(run_criterion(*spec)[1], flush=True)
