"""Promonoidal structures, convolution, antipodes and star-autonomy."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .enriched import (
    CatFunctor,
    CoendFunctor,
    EndFunctor,
    EnrichedError,
    FinVCat,
    Functor,
    HomBimodule,
    Precomposed,
    TableFunctor,
    Tensor,
    Dual,
    Permuted,
    check_cat_functor,
    check_functor,
)
from .linalg import RationalMatrix, is_isomorphism, mat_kron, solve, swap_matrix
from .report import DIMENSION, ISOMORPHISM, CheckResult

I = RationalMatrix.identity


class BaseMismatch(EnrichedError):
    pass


def _cats_tuple(base) -> tuple:
    return tuple(base) if isinstance(base, (tuple, list)) else (base,)


def _require_on(f: Functor, cats: tuple, what: str):
    if len(f.cats) != len(cats) or any(a is not b for a, b in zip(f.cats, cats)):
        raise BaseMismatch(f"{f.name} is not a functor on {what} "
                           f"({[c.name for c in f.cats]} vs {[c.name for c in cats]})")


class PromonoidalStructure:
    """``(A, p, j)`` with ``p`` on ``A^op ⊗ A^op ⊗ A`` and ``j`` on ``A``.

    ``base`` may be a single category or a tuple of categories (a product
    such as ``B^op ⊗ B``); ``p`` then has three blocks of variables.
    ``right_unit[(x, a, b)]``, when given, is a matrix
    ``hom(x,b) x (p(x,a,b)*j(a))`` exhibiting ``∫^a p(x,a,b) ⊗ j(a) ≅ A(x,b)``
    (single-category bases only).
    """

    def __init__(self, base, p: Functor, j: Functor | None = None, name: str = "P",
                 right_unit: dict | None = None, left_unit: dict | None = None):
        self.cats = _cats_tuple(base)
        n = len(self.cats)
        ops = tuple(c.op() for c in self.cats)
        _require_on(p, ops + ops + self.cats, "A^op⊗A^op⊗A")
        if j is not None:
            _require_on(j, self.cats, "A")
        self.p = p
        self.j = j
        self.name = name
        self.n = n
        self.right_unit = right_unit
        self.left_unit = left_unit

    @property
    def base(self) -> FinVCat:
        if self.n != 1:
            raise EnrichedError(f"{self.name} has a product base")
        return self.cats[0]

    def keys(self):
        return itertools.product(*[c.objects for c in self.cats])

    def p_dim(self, a, b, c) -> int:
        return self.p.dim(_k(a) + _k(b) + _k(c))

    def j_dim(self, a) -> int:
        return self.j.dim(_k(a)) if self.j is not None else 0

    def __repr__(self):
        return f"<PromonoidalStructure {self.name}>"


def _k(a) -> tuple:
    return a if isinstance(a, tuple) else (a,)


def discrete_promonoidal(a: FinVCat, table: dict, unit: dict | None, name="P") -> PromonoidalStructure:
    """Promonoidal structure on a discrete category from dimension tables.

    ``table[(a, b, c)]`` is ``dim p(a,b,c)``; ``unit[a]`` is ``dim j(a)``
    (``None`` for a unitless structure).
    """
    p = TableFunctor((a.op(), a.op(), a), table, name=f"{name}.p")
    j = None if unit is None else TableFunctor((a,), {(x,): d for x, d in unit.items()}, name=f"{name}.j")
    return PromonoidalStructure(a, p, j, name=name)


def check_promonoidal(ps: PromonoidalStructure) -> CheckResult:
    res = CheckResult("promonoidal-modules", level="exact matrix identity")
    for f in (ps.p, ps.j):
        if f is None:
            continue
        for fail in check_functor(f):
            res.fail(fail.locus, fail.equation, "holds", f.name)
    return res


# ---------------------------------------------------------------------------
# antipodes


class Antipode:
    """A contravariant ``S`` on ``A``, stored as a functor ``A^op -> A``.

    ``nu[(a, b)]``: iso ``hom(Sa,b) -> hom(Sb,a)``; ``u[a]``: vector of
    ``hom(S²a, a)``.
    """

    def __init__(self, base: FinVCat, obj_map: dict, hom_maps: dict, nu: dict | None = None,
                 u: dict | None = None, name="S"):
        self.base_cat = base
        self.functor = CatFunctor(base.op(), base, obj_map,
                                  {(b, a): m for (a, b), m in hom_maps.items()}, name=name)
        self.nu = nu
        self.u = u
        self.name = name

    def __call__(self, a):
        return self.functor(a)

    def hom(self, a, b) -> RationalMatrix:
        """``hom(a,b) -> hom(Sb,Sa)``."""
        return self.functor.hom(b, a)

    def square_hom(self, a, b) -> RationalMatrix:
        """``S²`` on ``hom(a,b) -> hom(S²a,S²b)``."""
        return self.hom(self(b), self(a)) @ self.hom(a, b)


def check_antipode(s: Antipode) -> CheckResult:
    A = s.base_cat
    res = CheckResult("antipode", level="exact matrix identity")
    for fail in check_cat_functor(s.functor):
        res.fail(fail.locus, fail.equation, "holds", "S is not a contravariant functor")
    obs = A.objects
    if s.nu is not None:
        for a, b in itertools.product(obs, repeat=2):
            nu = s.nu.get((a, b))
            h = A.hom_dim(s(a), b)
            if nu is None:
                nu = RationalMatrix.zeros(A.hom_dim(s(b), a), h)
            if not is_isomorphism(nu):
                res.fail((a, b), "ν not invertible", nu.shape)
                continue
        for a, b, b2 in itertools.product(obs, repeat=3):
            hbb, hx = A.hom_dim(b, b2), A.hom_dim(s(a), b)
            if not (hbb and hx):
                continue
            lhs = _nu(s, a, b2) @ A.comp(s(a), b, b2)
            rhs = A.comp(s(b2), s(b), a) @ mat_kron(_nu(s, a, b), s.hom(b, b2)) @ swap_matrix(hbb, hx)
            if lhs != rhs:
                res.fail((a, b, b2), "ν natural in the second variable", "fails")
        for a, a2, b in itertools.product(obs, repeat=3):
            haa, hx = A.hom_dim(a, a2), A.hom_dim(s(a), b)
            if not (haa and hx):
                continue
            lhs = _nu(s, a2, b) @ A.comp(s(a2), s(a), b) @ mat_kron(I(hx), s.hom(a, a2)) @ swap_matrix(haa, hx)
            rhs = A.comp(s(b), a, a2) @ mat_kron(I(haa), _nu(s, a, b))
            if lhs != rhs:
                res.fail((a, a2, b), "ν natural in the first variable", "fails")
    if s.u is not None:
        for a in obs:
            ua = s.u[a]
            ssa = s(s(a))
            # invertibility: some v with u∘v = 1_a and v∘u = 1_{S²a}
            left = A.comp(a, ssa, a) @ mat_kron(ua, I(A.hom_dim(a, ssa)))
            v = solve(left, A.ident(a))
            if v is None or A.comp(ssa, a, ssa) @ mat_kron(v, ua) != A.ident(ssa):
                res.fail((a,), "u invertible", "no inverse")
        for a, b in itertools.product(obs, repeat=2):
            h = A.hom_dim(a, b)
            if not h:
                continue
            sa, sb = s(s(a)), s(s(b))
            lhs = A.comp(sa, a, b) @ mat_kron(I(h), s.u[a])
            rhs = A.comp(sa, sb, b) @ mat_kron(s.u[b], s.square_hom(a, b))
            if lhs != rhs:
                res.fail((a, b), "u natural", "fails")
    return res


def _nu(s, a, b):
    m = s.nu.get((a, b))
    if m is None:
        A = s.base_cat
        return RationalMatrix.zeros(A.hom_dim(s(b), a), A.hom_dim(s(a), b))
    return m


def dual_functor(s: Antipode, f: Functor) -> Functor:
    """``f*(a) = f(Sa)*``, again a functor on ``A``."""
    _require_on(f, (s.base_cat,), s.base_cat.name)
    return Dual(Precomposed(f, 0, s.functor), name=f"{f.name}*")


# ---------------------------------------------------------------------------
# convolution


def upper_convolution(ps: PromonoidalStructure, f: Functor, g: Functor) -> CoendFunctor:
    """``c ↦ ∫^{ab} f(a) ⊗ g(b) ⊗ p(a,b,c)``."""
    _require_on(f, ps.cats, ps.name)
    _require_on(g, ps.cats, ps.name)
    n = ps.n
    t = Tensor(Tensor(f, g), ps.p)
    pairs = [(2 * n + k, k) for k in range(n)] + [(3 * n + k, n + k) for k in range(n)]
    return CoendFunctor(t, pairs, name=f"({f.name}⊛{g.name})")


def convolution_unit(ps: PromonoidalStructure) -> Functor:
    if ps.j is None:
        raise EnrichedError(f"{ps.name} has no unit")
    return ps.j


def lower_convolution(ps: PromonoidalStructure, s: Antipode, h: Functor, k: Functor) -> Functor:
    """``(h* ⊛ k*)*`` with duals taken through the antipode."""
    inner = upper_convolution(ps, dual_functor(s, h), dual_functor(s, k))
    out = dual_functor(s, inner)
    out.name = f"({h.name}⊛̲{k.name})"
    return out


def internal_hom(ps: PromonoidalStructure, f: Functor, g: Functor) -> EndFunctor:
    """``c ↦ ∫_{ab} [f(a) ⊗ p(c,a,b), g(b)]``."""
    _require_on(f, ps.cats, ps.name)
    _require_on(g, ps.cats, ps.name)
    n = ps.n
    # variables: f* (n) | p*: c, a, b (3n) | g (n)
    t = Tensor(Dual(Tensor(f, ps.p)), g)
    pairs = [(k, 2 * n + k) for k in range(n)] + [(3 * n + k, 4 * n + k) for k in range(n)]
    return EndFunctor(t, pairs, name=f"[{f.name},{g.name}]")


def inner_pairing(s: Antipode | None, f: Functor, g: Functor) -> CoendFunctor:
    """``⟨f,g⟩ = ∫^a f(a)* ⊗ g(a)`` with vector-space duals.

    The antipode is not used: the pairing dualises values only.
    """
    if len(f.cats) != len(g.cats) or any(a is not b for a, b in zip(f.cats, g.cats)):
        raise BaseMismatch("pairing of functors on different categories")
    n = f.arity
    return CoendFunctor(Tensor(Dual(f), g), [(k, n + k) for k in range(n)],
                        name=f"⟨{f.name},{g.name}⟩")


def check_s_autonomy(ps: PromonoidalStructure, s: Antipode, cyclic: dict | None = None) -> CheckResult:
    """``p(a,b,Sc)`` versus ``p(b,c,Sa)`` at every triple."""
    A = ps.base
    res = CheckResult("s-autonomy", level=DIMENSION)
    table = {}
    for a, b, c in itertools.product(A.objects, repeat=3):
        lhs, rhs = ps.p_dim(a, b, s(c)), ps.p_dim(b, c, s(a))
        table[(a, b, c)] = (lhs, rhs)
        res.compare((a, b, c), lhs, rhs)
    if cyclic is not None:
        res.level = ISOMORPHISM
        for key, m in cyclic.items():
            if not is_isomorphism(m):
                res.fail(key, "cyclic witness invertible", "singular")
    res.evidence["table"] = {str(k): list(v) for k, v in table.items()}
    return res


def derive_opposite_promonoidal(ps: PromonoidalStructure, s: Antipode) -> PromonoidalStructure:
    """``q(a,b,c) = p(Sa,Sb,Sc)``, ``k(c) = j(Sc)`` on ``A^op``."""
    A = ps.base
    if s.base_cat is not A:
        raise BaseMismatch("antipode on another category")
    sop = s.functor.opposite()  # A -> A^op, same data
    q = Precomposed(Precomposed(Precomposed(ps.p, 0, sop), 1, sop), 2, s.functor, name=f"{ps.name}.q")
    k = None if ps.j is None else Precomposed(ps.j, 0, s.functor, name=f"{ps.name}.k")
    return PromonoidalStructure(A.op(), q, k, name=f"{ps.name}^S")


def verify_star_autonomy(ps: PromonoidalStructure, s: Antipode, f: Functor, g: Functor) -> CheckResult:
    """``dim [f,g](c) = dim (f ⊛ g*)*(c)`` at every object."""
    res = CheckResult("star-autonomy", level=DIMENSION)
    lhs_f = internal_hom(ps, f, g)
    rhs_f = dual_functor(s, upper_convolution(ps, f, dual_functor(s, g)))
    table = {}
    for c in ps.base.objects:
        lhs, rhs = lhs_f.dim((c,)), rhs_f.dim((c,))
        table[c] = (lhs, rhs)
        res.compare((c,), lhs, rhs)
    res.evidence["dims"] = {str(k): list(v) for k, v in table.items()}
    return res


def check_multiplicative_functor(ps: PromonoidalStructure, phi: Functor) -> CheckResult:
    """``∫^c φ(c) ⊗ p(a,b,c) ≅ φ(a) ⊗ φ(b)`` and ``∫^c φ(c) ⊗ j(c) ≅ I``, by dimension."""
    n = ps.n
    ops = tuple(c.op() for c in ps.cats)
    _require_on(phi, ops, "A^op")
    res = CheckResult("multiplicative-functor", level=DIMENSION)
    t = Tensor(phi, ps.p)
    co = CoendFunctor(t, [(k, 3 * n + k) for k in range(n)])
    for a in ps.keys():
        for b in ps.keys():
            res.compare(a + b, co.dim(a + b), phi.dim(a) * phi.dim(b), "∫^c φ(c)⊗p(a,b,c) vs φ(a)⊗φ(b)")
    if ps.j is not None:
        cu = CoendFunctor(Tensor(phi, ps.j), [(k, n + k) for k in range(n)])
        res.compare(("unit",), cu.dim(()), 1, "∫^c φ(c)⊗j(c) vs I")
    return res


# ---------------------------------------------------------------------------
# bimodule composition on B^op ⊗ B


def bimodule_composition(b: FinVCat, matrix_order: bool = True, name=None) -> PromonoidalStructure:
    """Promonoidal structure on ``B^op ⊗ B`` convolving by bimodule composition.

    With ``matrix_order`` the convolution of ``F`` and ``G`` is
    ``(u,v) ↦ ∫^z F(u,z) ⊗ G(z,v)`` (so class matrices multiply as
    ``M_a M_b``); otherwise it is ``∫^z F(z,v) ⊗ G(u,z)``.
    """
    h = HomBimodule(b)
    t = Tensor(Tensor(h, h), h)
    # tensor variables come in pairs (B^op, B); reorder to s,t,s',t',u,v
    order = (1, 2, 3, 4, 0, 5) if matrix_order else (1, 4, 3, 0, 2, 5)
    p = Permuted(t, order, name=f"∘[{b.name}]")
    return PromonoidalStructure((b.op(), b), p, HomBimodule(b), name=name or f"{b.name}-bimod")
