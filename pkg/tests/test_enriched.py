import pytest
from hypothesis import given, settings, strategies as st

from catfourier.enriched import (
    DirectSum,
    Dual,
    EnrichedError,
    FinVCat,
    HomBimodule,
    Representable,
    TableFunctor,
    Tensor,
    UnknownObjectError,
    check_category_axioms,
    check_functor,
    coend,
    discrete,
    end,
    nat_hom,
    nat_hom_dim,
    one_object,
    yoneda_coend,
    yoneda_end,
)
from catfourier.gallery.groups import cyclic, group_algebra_category, symmetric
from catfourier.linalg import RationalMatrix, is_isomorphism
from catfourier.randomgen import gen_random_functor

from oracles import group_coend_dim

I1 = RationalMatrix.identity(1)


def arrow_category():
    """Objects 0, 1 and a single non-identity arrow 0 -> 1."""
    hom = {(0, 0): 1, (1, 1): 1, (0, 1): 1}
    comp = {(a, b, c): I1 for a, b, c in [(0, 0, 0), (1, 1, 1), (0, 0, 1), (0, 1, 1)]}
    return FinVCat("arrow", [0, 1], hom, comp, {0: I1, 1: I1})


def chain_category(n):
    """The poset 0 < 1 < ... < n-1, linearised."""
    objs = list(range(n))
    hom = {(a, b): 1 for a in objs for b in objs if a <= b}
    comp = {(a, b, c): I1 for a in objs for b in objs for c in objs if a <= b <= c}
    return FinVCat(f"chain{n}", objs, hom, comp, {a: I1 for a in objs})


CATEGORIES = [
    discrete([0, 1, 2], name="D3"),
    arrow_category(),
    chain_category(3),
    group_algebra_category(cyclic(3)),
    group_algebra_category(symmetric(3)),
]


@pytest.mark.parametrize("c", CATEGORIES, ids=lambda c: c.name)
def test_gallery_categories_satisfy_axioms(c):
    assert check_category_axioms(c) == []
    assert check_category_axioms(c.op()) == []
    assert c.op().op() is c


def test_broken_associativity_is_reported():
    # basis e, x, y with x*x = y, x*y = 0, y*x = x: (xx)x = x but x(xx) = 0
    table = {(1, 1): {2: 1}, (1, 2): {}, (2, 1): {1: 1}, (2, 2): {}}

    def mult(i, j):
        if i == 0:
            return {j: 1}
        if j == 0:
            return {i: 1}
        return table[(i, j)]

    c = one_object("bad", 3, mult, [1, 0, 0])
    fails = check_category_axioms(c)
    assert fails and all(f.locus for f in fails)


def test_unknown_object():
    with pytest.raises(UnknownObjectError):
        discrete([0, 1]).index(5)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_cyclic_regular_bimodule_coend_and_end(n):
    g = cyclic(n)
    c = group_algebra_category(g)
    h = HomBimodule(c)
    assert coend(h).dim(()) == group_coend_dim(g.elements, g.mul, g.inv)
    assert end(h).dim(()) == n


def test_s3_regular_bimodule_coend_end_dim_three():
    g = symmetric(3)
    c = group_algebra_category(g)
    h = HomBimodule(c)
    assert coend(h).dim(()) == 3 == group_coend_dim(g.elements, g.mul, g.inv)
    assert end(h).dim(()) == 3


@pytest.mark.parametrize("c", CATEGORIES, ids=lambda c: c.name)
@pytest.mark.parametrize("seed", [1, 2, 3])
def test_random_functors_are_functors(c, seed):
    f = gen_random_functor(c, 4, seed)
    assert check_functor(f) == []


def test_random_functor_is_deterministic_and_zero_at_max_dim_zero():
    c = group_algebra_category(cyclic(3))
    a, b = gen_random_functor(c, 4, 7), gen_random_functor(c, 4, 7)
    assert a.dims() == b.dims()
    assert all(gen_random_functor(c, 0, s).dim(("*",)) == 0 for s in range(3))


def test_broken_functor_detected():
    c = group_algebra_category(cyclic(2))
    # the generator acting by 2 is not an involution
    bad = TableFunctor((c,), {("*",): 1}, {(0, ("*",), "*"): RationalMatrix.from_rows([[1, 2]])})
    assert check_functor(bad)


@pytest.mark.parametrize("c", CATEGORIES, ids=lambda c: c.name)
@pytest.mark.parametrize("seed", [1, 2])
def test_yoneda_reductions_are_isomorphisms(c, seed):
    f = gen_random_functor(c, 3, seed)
    for a in c.objects:
        co, m = yoneda_coend(c, a, f)
        assert co.dim(()) == f.dim((a,))
        assert is_isomorphism(m)
        en, m2 = yoneda_end(c, a, f)
        assert en.dim(()) == f.dim((a,))
        assert is_isomorphism(m2)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(CATEGORIES), st.integers(0, 10_000), st.integers(0, 10_000))
def test_coend_end_duality(c, s1, s2):
    """dim ∫^c T(c,c) = dim ∫_c T*(c,c) for T = g ⊗ f on C^op ⊗ C."""
    t = Tensor(gen_random_functor(c.op(), 2, s1), gen_random_functor(c, 2, s2))
    co = coend(t, [(0, 1)])
    en = end(Dual(t), [(1, 0)])
    assert co.dim(()) == en.dim(())


@settings(max_examples=20, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=3, max_size=3), st.lists(st.integers(0, 3), min_size=3, max_size=3))
def test_nat_hom_on_discrete(fd, gd):
    c = discrete([0, 1, 2])
    f = TableFunctor((c,), {(a,): d for a, d in enumerate(fd)})
    g = TableFunctor((c,), {(a,): d for a, d in enumerate(gd)})
    assert nat_hom_dim(f, g) == sum(x * y for x, y in zip(fd, gd))


@pytest.mark.parametrize("m,n", [(1, 1), (1, 2), (2, 2)])
def test_nat_hom_of_regular_representations(m, n):
    """End(k[G]^m, k[G]^n) has dimension m·n·|G|."""
    g = cyclic(3)
    c = group_algebra_category(g)
    r = Representable(c, "*")
    f = DirectSum([r] * m)
    h = DirectSum([r] * n)
    assert nat_hom_dim(f, h) == m * n * g.order


def test_nat_hom_basis_round_trip():
    c = arrow_category()
    f = gen_random_functor(c, 2, 3)
    g = gen_random_functor(c, 2, 4)
    space = nat_hom(f, g)
    for alpha in space.basis():
        assert space.to_nat(space.to_vector(alpha)).components.keys() == alpha.components.keys()


def test_arity_mismatch_rejected():
    c = discrete([0])
    with pytest.raises(EnrichedError):
        TableFunctor((c,), {(0, 0): 1})
