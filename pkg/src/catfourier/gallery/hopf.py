"""Group Hopf algebras: the one-object promonoidal category and its Fourier isomorphism."""

from __future__ import annotations

from dataclasses import dataclass

from ..enriched import FinVCat, Functor, HomBimodule, TableFunctor, check_category_axioms, check_functor
from ..kernels import Kernel
from ..linalg import RationalMatrix, mat_compose, mat_kron, swap_matrix
from ..promonoidal import Antipode, PromonoidalStructure, check_antipode
from ..report import EXACT, CheckResult
from .groups import FiniteGroup, group_algebra_category

I = RationalMatrix.identity
OBJ = "*"


@dataclass
class HopfData:
    group: FiniteGroup
    mu: RationalMatrix       # n x n²
    delta: RationalMatrix    # n² x n
    antipode: RationalMatrix  # n x n
    unit: RationalMatrix     # n x 1
    counit: RationalMatrix   # 1 x n

    @property
    def n(self) -> int:
        return self.group.order


def hopf_data(g: FiniteGroup) -> HopfData:
    n = g.order
    mu = RationalMatrix.from_dict(n, n * n, {(g.mul(x, y), x * n + y): 1 for x in g.elements for y in g.elements})
    delta = RationalMatrix.from_dict(n * n, n, {(x * n + x, x): 1 for x in g.elements})
    s = RationalMatrix.permutation([g.inv(x) for x in g.elements], n)
    unit = RationalMatrix.from_dict(n, 1, {(g.identity, 0): 1})
    counit = RationalMatrix.from_rows([[1] * n])
    return HopfData(g, mu, delta, s, unit, counit)


def check_hopf_axioms(h: HopfData) -> CheckResult:
    n = h.n
    one = I(n)
    res = CheckResult("hopf-axioms", level=EXACT)
    eqs = {
        "associativity": (h.mu @ mat_kron(h.mu, one), h.mu @ mat_kron(one, h.mu)),
        "coassociativity": (mat_kron(h.delta, one) @ h.delta, mat_kron(one, h.delta) @ h.delta),
        "unit": (h.mu @ mat_kron(h.unit, one), one),
        "counit": (mat_kron(h.counit, one) @ h.delta, one),
        "bialgebra": (h.delta @ h.mu,
                      mat_kron(h.mu, h.mu) @ mat_kron(mat_kron(one, swap_matrix(n, n)), one)
                      @ mat_kron(h.delta, h.delta)),
        "antipode-left": (h.mu @ mat_kron(h.antipode, one) @ h.delta, h.unit @ h.counit),
        "antipode-right": (h.mu @ mat_kron(one, h.antipode) @ h.delta, h.unit @ h.counit),
    }
    for name, (lhs, rhs) in eqs.items():
        if lhs != rhs:
            res.fail((name,), "lhs", "rhs")
    return res


def hopf_fourier_iso(h: HopfData) -> tuple[RationalMatrix, RationalMatrix, CheckResult]:
    """``Φ = (μ⊗1)(1⊗S⊗1)(1⊗δ)`` and ``Φ' = (μ⊗1)(1⊗δ)``, certified mutually inverse."""
    one = I(h.n)
    phi = mat_kron(h.mu, one) @ mat_kron(mat_kron(one, h.antipode), one) @ mat_kron(one, h.delta)
    phi_inv = mat_kron(h.mu, one) @ mat_kron(one, h.delta)
    res = CheckResult("hopf-fourier", level=EXACT)
    ident = I(h.n * h.n)
    res.compare(("Φ∘Φ'",), mat_compose(phi, phi_inv) == ident, True)
    res.compare(("Φ'∘Φ",), mat_compose(phi_inv, phi) == ident, True)
    res.evidence["size"] = h.n * h.n
    return phi, phi_inv, res


@dataclass
class HopfGallery:
    group: FiniteGroup
    category: FinVCat
    promonoidal: PromonoidalStructure
    antipode: Antipode
    kernel: Kernel
    hopf: HopfData
    target: PromonoidalStructure


def _table_action(n: int, rows: int, cols: int, image) -> RationalMatrix:
    """Action matrix with column ``k*cols + v`` sent to basis vector ``image(k, v)``."""
    return RationalMatrix.from_dict(rows, n * cols, {(image(k, v), k * cols + v): 1
                                                     for k in range(n) for v in range(cols)})


def hopf_promonoidal(g: FiniteGroup, a: FinVCat) -> PromonoidalStructure:
    """``p(a,b,c) = A(a,Sb) ⊗ A(b,c)``, ``j`` the trivial representation."""
    n = g.order
    key = (OBJ, OBJ, OBJ)
    nn = n * n
    mul, inv = g.mul, g.inv

    def split(v):
        return divmod(v, n)

    acts = {
        # precomposition on the first factor: x ↦ x k
        (0, key, OBJ): _table_action(n, nn, nn, lambda k, v: mul(split(v)[0], k) * n + split(v)[1]),
        # (x, y) ↦ (k⁻¹ x, y k)
        (1, key, OBJ): _table_action(n, nn, nn, lambda k, v: mul(inv(k), split(v)[0]) * n
                                     + mul(split(v)[1], k)),
        # postcomposition on the second factor: y ↦ k y
        (2, key, OBJ): _table_action(n, nn, nn, lambda k, v: split(v)[0] * n + mul(k, split(v)[1])),
    }
    p = TableFunctor((a.op(), a.op(), a), {key: nn}, acts, name=f"p[{g.name}]")
    j = TableFunctor((a,), {(OBJ,): 1}, {(0, (OBJ,), OBJ): RationalMatrix.from_rows([[1] * n])},
                     name="ε")
    right = {(OBJ, OBJ, OBJ): _table_action(1, n, nn, lambda k, v: mul(split(v)[1], split(v)[0]))
             .col_block(0, nn)}
    left = {(OBJ, OBJ, OBJ): _table_action(1, n, nn, lambda k, v: split(v)[1]).col_block(0, nn)}
    return PromonoidalStructure(a, p, j, name=f"hopf[{g.name}]", right_unit=right, left_unit=left)


def pointwise_promonoidal(g: FiniteGroup, x: FinVCat) -> PromonoidalStructure:
    """``p(y,z,x) = X(y,x) ⊗ X(z,x)``: convolution is the pointwise tensor product."""
    n = g.order
    key = (OBJ, OBJ, OBJ)
    nn = n * n
    mul = g.mul
    acts = {
        (0, key, OBJ): _table_action(n, nn, nn, lambda k, v: mul(v // n, k) * n + v % n),
        (1, key, OBJ): _table_action(n, nn, nn, lambda k, v: (v // n) * n + mul(v % n, k)),
        (2, key, OBJ): _table_action(n, nn, nn, lambda k, v: mul(k, v // n) * n + mul(k, v % n)),
    }
    p = TableFunctor((x.op(), x.op(), x), {key: nn}, acts, name=f"⊗[{g.name}]")
    j = TableFunctor((x,), {(OBJ,): 1}, {(0, (OBJ,), OBJ): RationalMatrix.from_rows([[1] * n])},
                     name="ε")
    return PromonoidalStructure(x, p, j, name=f"pointwise[{g.name}]")


def hopf_antipode(g: FiniteGroup, a: FinVCat) -> Antipode:
    s = RationalMatrix.permutation([g.inv(x) for x in g.elements], g.order)
    e = RationalMatrix.from_dict(g.order, 1, {(g.identity, 0): 1})
    return Antipode(a, {OBJ: OBJ}, {(OBJ, OBJ): s}, nu={(OBJ, OBJ): s}, u={OBJ: e})


def build_group_hopf(g: FiniteGroup, validate: bool = True) -> HopfGallery:
    a = group_algebra_category(g)
    ps = hopf_promonoidal(g, a)
    s = hopf_antipode(g, a)
    px = pointwise_promonoidal(g, a)
    k = Kernel(HomBimodule(a), ps, px, name=f"hom[{g.name}]")
    h = hopf_data(g)
    if validate:
        problems = [str(x) for x in check_category_axioms(a)]
        problems += [str(x) for f in (ps.p, ps.j, px.p, px.j) for x in check_functor(f)]
        if not check_antipode(s):
            problems.append(str(check_antipode(s)))
        if not check_hopf_axioms(h):
            problems.append(str(check_hopf_axioms(h)))
        if problems:
            raise AssertionError(f"Hopf gallery for {g.name} is inconsistent: {problems[:3]}")
    return HopfGallery(g, a, ps, s, k, h, px)


def character_functor(g: FiniteGroup, a: FinVCat, chi, name="χ") -> Functor:
    """A one-dimensional representation ``g ↦ chi(g)`` as a functor on ``A``."""
    row = RationalMatrix.from_rows([[chi(x) for x in g.elements]])
    return TableFunctor((a,), {(OBJ,): 1}, {(0, (OBJ,), OBJ): row}, name=name)
