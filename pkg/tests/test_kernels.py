import pytest
from hypothesis import given, settings, strategies as st

from catfourier.enriched import Representable, TableFunctor, check_natural, discrete, nat_hom_dim
from catfourier.gallery.discrete import (
    build_discrete_monoidal_group,
    build_restriction_kernel,
    cyclic_inclusion,
    cyclic_quotient,
    group_hom_functor,
)
from catfourier.gallery.groups import InvalidGroupError, cyclic, symmetric
from catfourier.gallery.hopf import build_group_hopf, character_functor
from catfourier.kernels import (
    CONSERVATIVE,
    FULLY_FAITHFUL,
    PreconditionError,
    TransformPair,
    check_kernel_module,
    check_kernel_multiplicative,
    classify_transform,
    conservativity_sufficient_conditions,
    default_family,
    joy_hom,
    parseval_check,
    transform,
    verify_faithfulness_proposition,
    verify_gamma_left_inverse,
    verify_transform_multiplicativity,
)
from catfourier.linalg import rank
from catfourier.promonoidal import discrete_promonoidal
from catfourier.randomgen import gen_random_functor

from oracles import cyclic_multiplicative_violations


@pytest.mark.parametrize("g", [cyclic(2), cyclic(3)], ids=lambda g: g.name)
def test_hopf_kernel_multiplicative_and_transform_theorem(g):
    gal = build_group_hopf(g)
    k = gal.kernel
    assert check_kernel_module(k)
    assert check_kernel_multiplicative(k)
    for s in range(3):
        f = gen_random_functor(gal.category, 4, 2 * s)
        h = gen_random_functor(gal.category, 4, 2 * s + 1)
        res = verify_transform_multiplicativity(k, f, h)
        assert res.passed, res


def test_hopf_transform_is_pointwise_tensor_on_characters():
    """With K = hom the transform is Yoneda; convolving in the target multiplies dims."""
    g = cyclic(2)
    gal = build_group_hopf(g)
    sign = character_functor(g, gal.category, lambda x: -1 if x else 1, name="sign")
    assert transform(gal.kernel, sign).dim(("*",)) == 1


@pytest.mark.parametrize("closed", [False, True])
def test_discrete_group_unit_is_coretraction(closed):
    gal = build_discrete_monoidal_group(cyclic(3), closed=closed)
    pair = TransformPair(gal.kernel)
    for f in default_family(gal.kernel, seed=1, size=4):
        eta = pair.unit(f)
        assert check_natural(eta) == []
        for a in gal.category.objects:
            if f.dim((a,)):
                assert rank(eta.component((a,))) == f.dim((a,))


def test_closed_group_classification_is_conservative():
    gal = build_discrete_monoidal_group(cyclic(3), closed=True)
    cl = classify_transform(gal.kernel, default_family(gal.kernel, seed=1))
    assert cl.summary == CONSERVATIVE
    assert any(v == CONSERVATIVE for _, v, _ in cl.verdicts)


def test_hom_kernel_is_fully_faithful():
    gal = build_group_hopf(cyclic(3))
    cl = classify_transform(gal.kernel, default_family(gal.kernel, seed=2, size=4))
    assert cl.summary == FULLY_FAITHFUL


@pytest.mark.parametrize("g", [cyclic(2), cyclic(3)], ids=lambda g: g.name)
def test_triangle_identities(g):
    gal = build_group_hopf(g)
    pair = TransformPair(gal.kernel)
    f = gen_random_functor(gal.category, 3, 4)
    h = gen_random_functor(gal.category, 3, 5)
    assert pair.triangle_identities(f, h)


@pytest.mark.parametrize("builder", ["hopf", "closed"])
def test_joy_hom_matches_functor_category(builder):
    if builder == "hopf":
        k = build_group_hopf(cyclic(2)).kernel
    else:
        k = build_discrete_monoidal_group(cyclic(3), closed=True).kernel
    fam = default_family(k, seed=1, size=2, max_dim=2)
    for f, h in zip(fam, fam[1:] + fam[:1]):
        d, basis = joy_hom(k, f, h)
        assert d == nat_hom_dim(f, h) == len(basis)


@pytest.mark.parametrize("g", [cyclic(2), cyclic(3)], ids=lambda g: g.name)
def test_parseval_for_hom_kernel(g):
    gal = build_group_hopf(g)
    for s in range(2):
        res = parseval_check(gal.kernel, gal.antipode, gen_random_functor(gal.category, 3, s),
                             gen_random_functor(gal.category, 3, s + 10))
        assert res.passed, res


def test_parseval_skipped_without_full_faithfulness():
    gal = build_discrete_monoidal_group(cyclic(3), closed=True)
    f = Representable(gal.category, 0)
    res = parseval_check(gal.kernel, gal.antipode, f, f)
    assert res.status == "skipped"


@pytest.mark.parametrize("g", [cyclic(2), cyclic(3), symmetric(3)], ids=lambda g: g.name)
def test_gamma_left_inverse_on_groups(g):
    gal = build_discrete_monoidal_group(g)
    for s in range(2):
        res = verify_gamma_left_inverse(gal.promonoidal, gen_random_functor(gal.category, 3, s))
        assert res.passed, res


def test_gamma_on_hopf_gallery():
    gal = build_group_hopf(cyclic(3))
    assert verify_gamma_left_inverse(gal.promonoidal, gen_random_functor(gal.category, 3, 1))


def test_faithfulness_proposition_needs_faithful_unit():
    # j = δ_e kills the hom at the non-identity element
    gal = build_discrete_monoidal_group(cyclic(2))
    f = TableFunctor((gal.category.op(), gal.category), {(0, 0): 1, (1, 0): 2})
    res = verify_faithfulness_proposition(gal.promonoidal, f)
    assert not res.evidence["j_faithful"]
    assert [(m.locus, m.lhs, m.rhs) for m in res.failures] == [((1, 0), 0, 2)]


def test_faithfulness_proposition_with_faithful_unit():
    a = discrete([0, 1])
    ps = discrete_promonoidal(a, {(x, x, x): 1 for x in a.objects}, {0: 1, 1: 1})
    f = TableFunctor((a.op(), a), {(0, 0): 1, (1, 0): 2, (1, 1): 3})
    res = verify_faithfulness_proposition(ps, f)
    assert res.passed and res.evidence["j_faithful"]


def test_coprojections_injective_for_closed_group():
    gal = build_discrete_monoidal_group(cyclic(3), closed=True)
    assert conservativity_sufficient_conditions(gal.kernel, gen_random_functor(gal.category, 3, 1))


def _restriction(kind):
    small = build_discrete_monoidal_group(cyclic(2))
    big = build_discrete_monoidal_group(cyclic(4))
    if kind == "quotient":
        return build_restriction_kernel(cyclic_quotient(big, small), small.promonoidal, big.promonoidal), 2, 4, \
            lambda a, x: int(a == x % 2)
    return build_restriction_kernel(cyclic_inclusion(small, big), big.promonoidal, small.promonoidal), 4, 2, \
        lambda a, x: int(a == 2 * x % 4)


@pytest.mark.parametrize("kind", ["quotient", "inclusion"])
def test_restriction_multiplicativity_agrees_with_brute_force(kind):
    rk, n, m, oracle_kernel = _restriction(kind)
    res = check_kernel_multiplicative(rk.kernel)
    oracle = {(a, b, z): (lhs, rhs) for a, b, z, lhs, rhs in cyclic_multiplicative_violations(n, m, oracle_kernel)}
    engine = {m_.locus: (m_.lhs, m_.rhs) for m_ in res.failures if m_.locus[0] != "unit"}
    assert engine == oracle


def test_quotient_restriction_fails_two_vs_one():
    rk, *_ = _restriction("quotient")
    res = check_kernel_multiplicative(rk.kernel)
    assert not res.passed
    assert (res.failures[0].lhs, res.failures[0].rhs) == (2, 1)
    assert rk.surjective_on_objects


def test_identity_restriction_is_hom_and_multiplicative():
    a = build_discrete_monoidal_group(cyclic(3))
    psi = group_hom_functor(a, a, {x: x for x in a.group.elements})
    rk = build_restriction_kernel(psi, a.promonoidal, a.promonoidal)
    assert check_kernel_multiplicative(rk.kernel)


def test_non_homomorphism_rejected():
    a = build_discrete_monoidal_group(cyclic(3))
    with pytest.raises(InvalidGroupError):
        group_hom_functor(a, a, {0: 0, 1: 2, 2: 2})


def test_multiplicativity_needs_structures():
    gal = build_group_hopf(cyclic(2))
    from catfourier.kernels import Kernel
    k = Kernel(gal.kernel.data, None, None, a_cats=(gal.category,))
    with pytest.raises(PreconditionError):
        check_kernel_multiplicative(k)


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10_000), st.integers(0, 10_000))
def test_transform_theorem_closed_group_property(s1, s2):
    gal = build_discrete_monoidal_group(cyclic(3), closed=True)
    f = gen_random_functor(gal.category, 3, s1)
    h = gen_random_functor(gal.category, 3, s2)
    assert verify_transform_multiplicativity(gal.kernel, f, h).passed
