import itertools
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from catfourier.enriched import check_category_axioms, check_functor
from catfourier.gallery.boolean import (
    OversizedCarrierError,
    bool_enumerate_kernels,
    bool_kernel_check,
    convexity_instance,
    from_predicate,
    submodule_instance,
    submodules,
)
from catfourier.gallery.groups import InvalidGroupError, FiniteGroup, by_name, cyclic, symmetric, trivial
from catfourier.gallery.hopf import build_group_hopf, check_hopf_axioms, hopf_data, hopf_fourier_iso
from catfourier.gallery.schemes import (
    NotASchemeError,
    build_scheme,
    cyclic_scheme,
    hamming_scheme,
    scheme_from_action,
    scheme_from_labels,
    verify_scheme_kernel,
)
from catfourier.gallery.species import (
    InvalidRepresentation,
    Species,
    TruncationOverflow,
    analytic_evaluate,
    build_species_category,
    exponential_species,
    random_species,
    singleton_species,
    species_convolve,
    species_dim,
    species_hadamard,
)
from catfourier.linalg import RationalMatrix

from oracles import binomial_convolution, closed_subsets, dense_mul

# ---------------------------------------------------------------------------
# groups and Hopf algebras


def test_group_validation():
    with pytest.raises(InvalidGroupError):
        FiniteGroup("bad", ((0, 1), (0, 1)))
    assert by_name("z4").order == 4 and by_name("s3").order == 6 and by_name("1").order == 1
    assert not symmetric(3).is_abelian() and cyclic(4).is_abelian()


@pytest.mark.parametrize("g", [trivial(), cyclic(2), cyclic(3), cyclic(4), symmetric(3)], ids=lambda g: g.name)
def test_hopf_axioms_and_fourier_iso(g):
    h = hopf_data(g)
    assert check_hopf_axioms(h)
    phi, phi_inv, res = hopf_fourier_iso(h)
    assert res.passed
    assert phi @ phi_inv == RationalMatrix.identity(g.order ** 2)


def test_fourier_on_z2_is_the_expected_permutation():
    g = cyclic(2)
    phi, _, _ = hopf_fourier_iso(hopf_data(g))
    # x⊗y ↦ xy⁻¹⊗y on basis index 2x+y
    for x, y in itertools.product(range(2), repeat=2):
        image = 2 * g.mul(x, g.inv(y)) + y
        col = [phi[i, 2 * x + y] for i in range(4)]
        assert col == [1 if i == image else 0 for i in range(4)]


@pytest.mark.parametrize("g", [cyclic(2), symmetric(3)], ids=lambda g: g.name)
def test_group_hopf_gallery_dims(g):
    gal = build_group_hopf(g)
    assert gal.category.hom_dim("*", "*") == g.order
    assert gal.promonoidal.p_dim("*", "*", "*") == g.order ** 2


def test_trivial_group_hopf_is_one_dimensional():
    gal = build_group_hopf(trivial())
    assert gal.category.hom_dim("*", "*") == 1 == gal.promonoidal.p_dim("*", "*", "*")


# ---------------------------------------------------------------------------
# association schemes


def test_hamming_intersection_numbers():
    d = hamming_scheme(2, 2)
    assert [d.p.get((1, 1, c), 0) for c in range(3)] == [2, 0, 2]
    m = d.matrices
    assert m[1] @ m[1] == m[0].scale(2) + m[2].scale(2)
    assert verify_scheme_kernel(d)


@pytest.mark.parametrize("data", [hamming_scheme(2, 2), hamming_scheme(3, 2), cyclic_scheme(4), cyclic_scheme(5)],
                         ids=["H22", "H32", "Z4", "Z5"])
def test_scheme_tables_against_dense_products(data):
    n = len(data.points)
    dense = [m.to_lists() for m in data.matrices]
    r = data.n_classes
    for a, b in itertools.product(range(r), repeat=2):
        prod = dense_mul(dense[a], dense[b])
        expect = [[sum(data.p.get((a, b, c), 0) * dense[c][i][j] for c in range(r)) for j in range(n)]
                  for i in range(n)]
        assert prod == expect
    assert sum(data.matrices, RationalMatrix.zeros(n, n)) == RationalMatrix.from_rows([[1] * n] * n)
    assert data.matrices[0] == RationalMatrix.identity(n)
    for a in range(r):
        assert data.matrices[a].T == data.matrices[data.star[a]]


def test_trivial_scheme():
    d = scheme_from_labels([0], lambda x, y: 0)
    assert d.n_classes == 1 and d.p == {(0, 0, 0): 1}


def test_non_scheme_detected_with_witness():
    # on 3 points, one off-diagonal pair in its own class breaks well-definedness
    def label(x, y):
        if x == y:
            return "d"
        return "a" if (x, y) in ((0, 1), (1, 0)) else "b"
    with pytest.raises(NotASchemeError) as e:
        scheme_from_labels(range(3), label)
    assert e.value.witness is not None


def test_orbital_scheme_matches_cyclic_labels():
    rot = {x: (x + 1) % 4 for x in range(4)}
    d = scheme_from_action(range(4), [rot])
    assert d.p == cyclic_scheme(4).p


@pytest.mark.parametrize("data", [hamming_scheme(2, 2), cyclic_scheme(4)], ids=["H22", "Z4"])
def test_scheme_gallery_structures(data):
    gal = build_scheme(data)
    assert check_category_axioms(gal.category) == []
    assert check_functor(gal.kernel.data) == []
    a = data.star
    for x, y, z in itertools.product(range(data.n_classes), repeat=3):
        assert data.p.get((x, y, z), 0) == data.p.get((a[y], a[x], a[z]), 0)


# ---------------------------------------------------------------------------
# boolean kernels


@pytest.mark.parametrize("modulus", range(1, 9))
def test_submodule_kernels_are_submodules_plus_empty(modulus):
    found = set(bool_enumerate_kernels(submodule_instance(modulus)))
    assert found == set(submodules(modulus)) | {frozenset()}


def test_z4_kernels_exactly():
    found = set(bool_enumerate_kernels(submodule_instance(4)))
    assert found == {frozenset(), frozenset({0}), frozenset({0, 2}), frozenset(range(4))}


@pytest.mark.parametrize("npoints", [1, 2, 3, 4, 5])
def test_convexity_kernels_are_intervals(npoints):
    b = convexity_instance(npoints)

    def convex(s):
        return not s or set(range(min(s), max(s) + 1)) == set(s)

    assert set(bool_enumerate_kernels(b)) == set(closed_subsets(range(npoints), convex))


def test_whole_carrier_passes_for_total_predicate():
    b = from_predicate("total", range(5), lambda x, y, z: True)
    assert bool_kernel_check(b, range(5))


def test_oversized_carrier_rejected():
    with pytest.raises(OversizedCarrierError):
        bool_enumerate_kernels(from_predicate("big", range(13), lambda x, y, z: False))


# ---------------------------------------------------------------------------
# species


@pytest.fixture(scope="module")
def species5():
    return build_species_category(5)


def test_singleton_squared(species5):
    cat, ps = species5
    x = singleton_species(cat)
    conv = species_convolve(ps, x, x)
    assert [conv.dim((n,)) for n in range(6)] == [0, 0, 2, 0, 0, 0]


def test_exponential_squared_is_powers_of_two(species5):
    cat, ps = species5
    e = exponential_species(cat)
    conv = species_convolve(ps, e, e)
    assert [conv.dim((n,)) for n in range(6)] == [2 ** n for n in range(6)]


@settings(max_examples=8, deadline=None)
@given(st.integers(0, 10_000), st.integers(0, 10_000))
def test_species_dimension_law(s1, s2):
    cat, ps = build_species_category(4)
    f, g = random_species(cat, s1), random_species(cat, s2)
    conv = species_convolve(ps, f, g)
    for n in range(5):
        assert conv.dim((n,)) == binomial_convolution(f.dims_list(), g.dims_list(), n)


def test_analytic_evaluation_of_exponential(species5):
    cat, _ = species5
    assert analytic_evaluate(exponential_species(cat), 2) == [comb(n + 1, n) for n in range(6)]
    assert analytic_evaluate(exponential_species(cat), 3) == [comb(n + 2, n) for n in range(6)]


def test_analytic_evaluation_of_sign_is_exterior_power(species5):
    cat, _ = species5
    sign = Species(cat, {n: [RationalMatrix.from_rows([[-1]])] * (n - 1 if n else 0) for n in range(6)},
                   {n: 1 for n in range(6)}, name="sign")
    assert analytic_evaluate(sign, 3) == [comb(3, n) for n in range(6)]


def test_hadamard_multiplies_dims(species5):
    cat, _ = species5
    f, g = random_species(cat, 1), random_species(cat, 2)
    h = species_hadamard(f, g)
    assert h.dims_list() == [a * b for a, b in zip(f.dims_list(), g.dims_list())]
    assert check_functor(h) == []


def test_truncation_overflow(species5):
    cat, _ = species5
    with pytest.raises(TruncationOverflow):
        species_dim(exponential_species(cat), 6)
    with pytest.raises(TruncationOverflow):
        build_species_category(7)


def test_invalid_representation_rejected():
    cat, _ = build_species_category(3)
    # s1 and s2 acting by a non-involution
    bad = Species(cat, {3: [RationalMatrix.from_rows([[2]]), RationalMatrix.from_rows([[1]])]}, {3: 1})
    with pytest.raises(InvalidRepresentation):
        bad.rho(3)
    # the braid relation fails for two different involutions that do not satisfy it
    s = RationalMatrix.from_rows([[0, 1], [1, 0]])
    t = RationalMatrix.from_rows([[1, 0], [0, -1]])
    with pytest.raises(InvalidRepresentation):
        Species(cat, {3: [s, t]}, {3: 2}).rho(3)
