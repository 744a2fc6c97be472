"""Groups as discrete promonoidal categories, and restriction kernels between them."""

from __future__ import annotations

from dataclasses import dataclass

from ..enriched import (
    CatFunctor,
    FinVCat,
    HomBimodule,
    Precomposed,
    check_cat_functor,
    discrete,
)
from ..kernels import Kernel, pair_kernel
from ..linalg import RationalMatrix
from ..promonoidal import (
    Antipode,
    PromonoidalStructure,
    bimodule_composition,
    discrete_promonoidal,
)
from .groups import FiniteGroup, InvalidGroupError

ONE = RationalMatrix.identity(1)


@dataclass
class DiscreteGroupGallery:
    group: FiniteGroup
    category: FinVCat
    promonoidal: PromonoidalStructure
    antipode: Antipode
    kernel: Kernel          # K = p into A^op ⊗ A with bimodule composition
    hom_kernel: Kernel      # K = hom, A to itself
    closed: bool


def discrete_group_promonoidal(g: FiniteGroup, a: FinVCat, closed: bool = False) -> PromonoidalStructure:
    """``p(a,b,c) = [ab = c]``; the closed form ``p(a,x,y) = [a = y x⁻¹]``
    (``[x,y] = y x⁻¹`` is the internal hom) describes the same table."""
    els = g.elements
    if closed:
        table = {(x, y, z): 1 for x in els for y in els for z in els if x == g.mul(z, g.inv(y))}
    else:
        table = {(x, y, g.mul(x, y)): 1 for x in els for y in els}
    ps = discrete_promonoidal(a, table, {g.identity: 1}, name=f"{'closed' if closed else 'mon'}[{g.name}]")
    e = g.identity
    ps.right_unit = {(x, e, x): ONE for x in els}
    ps.left_unit = {(e, x, x): ONE for x in els}
    return ps


def group_antipode(g: FiniteGroup, a: FinVCat) -> Antipode:
    """``Sa = a⁻¹`` with the canonical (identity) witnesses."""
    els = g.elements
    return Antipode(a, {x: g.inv(x) for x in els}, {(x, x): ONE for x in els},
                    nu={(x, g.inv(x)): ONE for x in els}, u={x: ONE for x in els})


def build_discrete_monoidal_group(g: FiniteGroup, closed: bool = False) -> DiscreteGroupGallery:
    a = discrete(list(g.elements), name=g.name)
    ps = discrete_group_promonoidal(g, a, closed)
    s = group_antipode(g, a)
    target = bimodule_composition(a, matrix_order=False, name=f"{g.name}-bimod")
    k = pair_kernel(ps, target, name=f"p[{g.name}]")
    hk = Kernel(HomBimodule(a), ps, ps, name=f"hom[{g.name}]")
    return DiscreteGroupGallery(g, a, ps, s, k, hk, closed)


# ---------------------------------------------------------------------------
# restriction kernels


@dataclass
class RestrictionKernel:
    kernel: Kernel
    psi: CatFunctor
    surjective_on_objects: bool


def group_hom_functor(src: DiscreteGroupGallery, dst: DiscreteGroupGallery, images: dict) -> CatFunctor:
    """The functor between discrete group categories given by a map of elements."""
    gs, gt = src.group, dst.group
    for x in gs.elements:
        for y in gs.elements:
            if images[gs.mul(x, y)] != gt.mul(images[x], images[y]):
                raise InvalidGroupError(f"not a homomorphism at {(x, y)}")
    return CatFunctor(src.category, dst.category, images, {(x, x): ONE for x in gs.elements}, name="ψ")


def build_restriction_kernel(psi: CatFunctor, source: PromonoidalStructure | None = None,
                             target: PromonoidalStructure | None = None) -> RestrictionKernel:
    """``K(a,x) = A(a, ψx)`` on ``A^op ⊗ X`` for ``ψ: X -> A``."""
    bad = check_cat_functor(psi)
    if bad:
        raise InvalidGroupError(f"ψ is not a functor: {bad[0]}")
    a = psi.target
    data = Precomposed(HomBimodule(a), 1, psi, name=f"{a.name}(-,ψ-)")
    k = Kernel(data, source, target, name="restrict", a_cats=(a,))
    return RestrictionKernel(k, psi, psi.is_surjective_on_objects())


def cyclic_inclusion(small: DiscreteGroupGallery, big: DiscreteGroupGallery) -> CatFunctor:
    """``Z/m -> Z/n``, ``x ↦ (n/m)·x``."""
    m, n = small.group.order, big.group.order
    if n % m:
        raise InvalidGroupError(f"Z/{m} does not embed in Z/{n}")
    return group_hom_functor(small, big, {x: (n // m) * x for x in small.group.elements})


def cyclic_quotient(big: DiscreteGroupGallery, small: DiscreteGroupGallery) -> CatFunctor:
    """``Z/n -> Z/m``, ``x ↦ x mod m``."""
    m, n = small.group.order, big.group.order
    if n % m:
        raise InvalidGroupError(f"Z/{n} does not map onto Z/{m}")
    return group_hom_functor(big, small, {x: x % m for x in big.group.elements})
