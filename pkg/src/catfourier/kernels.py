"""Kernels ``K: A^op ⊗ X -> V`` and the transforms they induce."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .enriched import (
    CoendFunctor,
    Dual,
    EndFunctor,
    EnrichedError,
    FactorizationError,
    FinVCat,
    Functor,
    NatHom,
    NatTransform,
    Permuted,
    Representable,
    TableFunctor,
    Tensor,
    _replace,
    check_functor,
    induced_map_on_coend,
    induced_map_on_end,
)
from .linalg import (
    RationalMatrix,
    hstack,
    is_injective,
    is_isomorphism,
    kernel_subspace,
    mat_kron,
    rank,
    swap_matrix,
    vstack,
)
from .promonoidal import BaseMismatch, PromonoidalStructure, _require_on, inner_pairing
from .report import DIMENSION, EXACT, ISOMORPHISM, CheckResult

I = RationalMatrix.identity

FULLY_FAITHFUL = "FULLY_FAITHFUL"
CONSERVATIVE = "CONSERVATIVE"
NEITHER = "NEITHER"


class PreconditionError(EnrichedError):
    pass


class Kernel:
    """A module ``K`` on ``A^op ⊗ X`` with the promonoidal structures it relates."""

    def __init__(self, data: Functor, source: PromonoidalStructure | None = None,
                 target: PromonoidalStructure | None = None, name: str = "K",
                 a_cats: Sequence[FinVCat] | None = None):
        if a_cats is None:
            if source is None:
                raise EnrichedError("kernel needs a source structure or explicit source categories")
            a_cats = source.cats
        self.a_cats = tuple(a_cats)
        na = len(self.a_cats)
        ops = tuple(c.op() for c in self.a_cats)
        if any(x is not y for x, y in zip(data.cats[:na], ops)):
            raise BaseMismatch(f"{name}: first variables must be on A^op")
        self.x_cats = tuple(data.cats[na:])
        if target is not None and any(x is not y for x, y in zip(target.cats, self.x_cats)):
            raise BaseMismatch(f"{name}: target structure on different categories")
        self.data = data
        self.source = source
        self.target = target
        self.name = name
        self.na = na
        self.nx = len(self.x_cats)

    def a_keys(self):
        return itertools.product(*[c.objects for c in self.a_cats])

    def x_keys(self):
        return itertools.product(*[c.objects for c in self.x_cats])

    def dim(self, a, x) -> int:
        return self.data.dim(tuple(a) + tuple(x))

    def __repr__(self):
        return f"<Kernel {self.name}>"


def hom_kernel(ps: PromonoidalStructure, name="hom") -> Kernel:
    from .enriched import HomBimodule
    return Kernel(HomBimodule(ps.base), ps, ps, name=name)


def check_kernel_module(k: Kernel) -> CheckResult:
    res = CheckResult("kernel-module", level=EXACT)
    for fail in check_functor(k.data):
        res.fail(fail.locus, fail.equation, "holds")
    return res


# ---------------------------------------------------------------------------
# transforms


def transform(k: Kernel, f: Functor) -> CoendFunctor:
    """``x ↦ ∫^a K(a,x) ⊗ f(a)``."""
    _require_on(f, k.a_cats, "the kernel's source")
    na, nx = k.na, k.nx
    t = Tensor(k.data, f)
    return CoendFunctor(t, [(i, na + nx + i) for i in range(na)], name=f"{k.name}̄({f.name})")


def right_adjoint(k: Kernel, f: Functor) -> EndFunctor:
    """``a ↦ ∫_x [K(a,x), f(x)]``."""
    _require_on(f, k.x_cats, "the kernel's target")
    na, nx = k.na, k.nx
    t = Tensor(Dual(k.data), f)
    return EndFunctor(t, [(na + i, na + nx + i) for i in range(nx)], name=f"{k.name}̲({f.name})")


def dual_transform(k: Kernel, h: Functor) -> EndFunctor:
    """``x ↦ ∫_a [K(a,x), h(a)]`` for ``h`` on ``A^op``; a functor on ``X^op``."""
    _require_on(h, tuple(c.op() for c in k.a_cats), "the opposite of the kernel's source")
    na, nx = k.na, k.nx
    t = Tensor(Dual(k.data), h)
    return EndFunctor(t, [(na + nx + i, i) for i in range(na)], name=f"{k.name}^∨({h.name})")


class _TensorLeft(NatTransform):
    """``1_M ⊗ n`` between the integrands ``M ⊗ F`` and ``M ⊗ G``, computed on demand."""

    def __init__(self, m: Functor, n: NatTransform, src: Functor, dst: Functor):
        super().__init__(src, dst, {}, name=f"1⊗{n.name}")
        self.m, self.n = m, n

    def component(self, key):
        key = tuple(key)
        got = self.components.get(key)
        if got is None:
            nm = self.m.arity
            got = mat_kron(I(self.m.dim(key[:nm])), self.n.component(key[nm:]))
            self.components[key] = got
        return got


def transform_map(k: Kernel, n: NatTransform, src: CoendFunctor | None = None,
                  dst: CoendFunctor | None = None) -> NatTransform:
    """``K̄(n): K̄f -> K̄g``."""
    src = src or transform(k, n.source)
    dst = dst or transform(k, n.target)
    return induced_map_on_coend(src, dst, _TensorLeft(k.data, n, src.t, dst.t))


def right_adjoint_map(k: Kernel, n: NatTransform, src: EndFunctor | None = None,
                      dst: EndFunctor | None = None) -> NatTransform:
    """``K̲(n): K̲f -> K̲g``."""
    src = src or right_adjoint(k, n.source)
    dst = dst or right_adjoint(k, n.target)
    return induced_map_on_end(src, dst, _TensorLeft(src.t.f, n, src.t, dst.t))


# ---------------------------------------------------------------------------
# the adjunction


class TransformPair:
    """``K̄ ⊣ K̲`` with memoised transforms, unit and counit components."""

    def __init__(self, k: Kernel):
        self.k = k
        self._bar: dict = {}
        self._under: dict = {}

    def bar(self, f: Functor) -> CoendFunctor:
        got = self._bar.get(id(f))
        if got is None:
            got = (f, transform(self.k, f))
            self._bar[id(f)] = got
        return got[1]

    def under(self, f: Functor) -> EndFunctor:
        got = self._under.get(id(f))
        if got is None:
            got = (f, right_adjoint(self.k, f))
            self._under[id(f)] = got
        return got[1]

    def unit(self, f: Functor) -> NatTransform:
        """``η_f: f -> K̲K̄f`` built from the coprojections of ``K̄f``."""
        k = self.k
        kf = self.bar(f)
        kkf = self.under(kf)
        comps = {}
        for a in k.a_keys():
            da = f.dim(a)
            if not da:
                continue
            offs, total = kkf.blocks(a)
            if not total:
                comps[a] = RationalMatrix.zeros(0, da)
                continue
            blocks = []
            for x, (o, d) in sorted(offs.items(), key=lambda kv: kv[1][0]):
                dk = k.dim(a, x)
                dkf = kf.dim(x)
                q = kf.projection(x, a)  # dkf x (dk*da)
                entries = {}
                for o2, col, v in q.nonzero():
                    kk, v0 = divmod(col, da)
                    entries[(kk * dkf + o2, v0)] = v
                blocks.append(RationalMatrix.from_dict(dk * dkf, da, entries))
            big = vstack(blocks, cols=da)
            m = kkf.retraction(a) @ big
            if kkf.inclusion(a) @ m != big:
                raise FactorizationError(f"unit does not factor through the end at {a}")
            comps[a] = m
        return NatTransform(f, kkf, comps, name=f"η_{f.name}")

    def counit(self, g: Functor) -> NatTransform:
        """``ε_g: K̄K̲g -> g`` by evaluation."""
        k = self.k
        kg = self.under(g)
        kkg = self.bar(kg)
        comps = {}
        for x in k.x_keys():
            dg = g.dim(x)
            offs, total = kkg.blocks(x)
            if not total:
                continue
            blocks = []
            for a, (o, d) in sorted(offs.items(), key=lambda kv: kv[1][0]):
                dk = k.dim(a, x)
                inc = kg.inclusion(a, x)  # (dk*dg) x dim K̲g(a)
                dka = inc.cols
                # ε on K(a,x) ⊗ K̲g(a): e_k ⊗ w ↦ Σ_v inc[k*dg+v, w] e_v
                entries = {}
                for row, w, val in inc.nonzero():
                    kk, v = divmod(row, dg)
                    entries[(v, kk * dka + w)] = val
                blocks.append(RationalMatrix.from_dict(dg, dk * dka, entries))
            big = hstack(blocks, rows=dg)
            m = big @ kkg.section(x)
            if m @ kkg.projection(x) != big:
                raise FactorizationError(f"counit does not factor through the coend at {x}")
            comps[x] = m
        return NatTransform(kkg, g, comps, name=f"ε_{g.name}")

    def triangle_identities(self, f: Functor, g: Functor) -> CheckResult:
        """``ε_{K̄f} ∘ K̄(η_f) = 1`` and ``K̲(ε_g) ∘ η_{K̲g} = 1`` as matrix equations."""
        res = CheckResult("triangle-identities", level=EXACT)
        kf = self.bar(f)
        eta = self.unit(f)
        kbar_eta = transform_map(self.k, eta, kf, self.bar(eta.target))
        eps = self.counit(kf)
        for x in self.k.x_keys():
            d = kf.dim(x)
            if d and eps.component(x) @ kbar_eta.component(x) != I(d):
                res.fail(("left",) + tuple(x), "ε∘K̄η", "identity")
        kg = self.under(g)
        eta_g = self.unit(kg)
        eps_g = self.counit(g)
        kunder_eps = right_adjoint_map(self.k, eps_g, self.under(eps_g.source), kg)
        for a in self.k.a_keys():
            d = kg.dim(a)
            if d and kunder_eps.component(a) @ eta_g.component(a) != I(d):
                res.fail(("right",) + tuple(a), "K̲ε∘η", "identity")
        return res


def adjunction_unit(k: Kernel, f: Functor) -> NatTransform:
    return TransformPair(k).unit(f)


def adjunction_counit(k: Kernel, g: Functor) -> NatTransform:
    return TransformPair(k).counit(g)


# ---------------------------------------------------------------------------
# multiplicativity


def check_kernel_multiplicative(k: Kernel) -> CheckResult:
    """Compare ``∫^{yz} K(a,y)⊗K(b,z)⊗P(y,z,x)`` with ``∫^c K(c,x)⊗p(a,b,c)``,
    and ``j_X(x)`` with ``∫^c K(c,x)⊗j(c)``, by dimension."""
    if k.source is None or k.target is None:
        raise PreconditionError(f"{k.name}: multiplicativity needs both promonoidal structures")
    na, nx = k.na, k.nx
    ps, px = k.source, k.target
    # K1: a y | K2: b z | P: y z x
    lhs = CoendFunctor(Tensor(Tensor(k.data, k.data), px.p),
                       [(2 * na + 2 * nx + i, na + i) for i in range(nx)]
                       + [(2 * na + 3 * nx + i, 2 * na + nx + i) for i in range(nx)],
                       name="K∘K∘P")
    # K: c x | p: a b c
    rhs = CoendFunctor(Tensor(k.data, ps.p), [(i, na + nx + 2 * na + i) for i in range(na)], name="K∘p")
    res = CheckResult("kernel-multiplicative", level=DIMENSION)
    table = {}
    for a in k.a_keys():
        for b in k.a_keys():
            for x in k.x_keys():
                l_ = lhs.dim(a + b + x)
                r_ = rhs.dim(x + a + b)
                if l_ or r_:
                    table[(a, b, x)] = (l_, r_)
                res.compare(_flat(a, b, x), l_, r_, "LHS vs RHS")
    if px.j is not None and ps.j is not None:
        unit = CoendFunctor(Tensor(k.data, ps.j), [(i, na + nx + i) for i in range(na)], name="K∘j")
        for x in k.x_keys():
            res.compare(("unit",) + tuple(x), px.j.dim(x), unit.dim(x), "j_X vs K∘j")
    elif (px.j is None) != (ps.j is None):
        res.fail(("unit",), "unit present on one side", "unit absent on the other")
    res.evidence["nonzero"] = {str(_flat(*key)): list(v) for key, v in table.items()}
    return res


def _flat(a, b, x):
    def one(t):
        return t[0] if len(t) == 1 else t
    return (one(a), one(b), one(x))


def verify_transform_multiplicativity(k: Kernel, f: Functor, g: Functor) -> CheckResult:
    """``dim K̄(f⊛g)(x) = dim (K̄f ⊛ K̄g)(x)`` at every ``x``."""
    from .promonoidal import upper_convolution

    res = CheckResult("transform-multiplicativity", level=DIMENSION)
    lhs = transform(k, upper_convolution(k.source, f, g))
    rhs = upper_convolution(k.target, transform(k, f), transform(k, g))
    dims = {}
    for x in k.x_keys():
        l_, r_ = lhs.dim(x), rhs.dim(x)
        dims[x] = (l_, r_)
        res.compare(x, l_, r_)
    res.evidence["dims"] = {str(x): list(v) for x, v in dims.items()}
    return res


def compose_kernels(k1: Kernel, k2: Kernel, name=None) -> Kernel:
    """``(a, y) ↦ ∫^x K2(x,y) ⊗ K1(a,x)``."""
    if any(x is not y for x, y in zip(k1.x_cats, k2.a_cats)) or k1.nx != k2.na:
        raise BaseMismatch("kernels do not compose: middle categories differ")
    n1a, nx, ny = k1.na, k1.nx, k2.nx
    # K2: x y | K1: a x
    t = Tensor(k2.data, k1.data)
    co = CoendFunctor(t, [(i, nx + ny + n1a + i) for i in range(nx)])
    # coend variables are (y, a); reorder to (a, y)
    data = Permuted(co, list(range(ny, ny + n1a)) + list(range(ny)), name=name or f"{k2.name}∘{k1.name}")
    return Kernel(data, k1.source, k2.target, name=data.name, a_cats=k1.a_cats)


# ---------------------------------------------------------------------------
# classification


def classify_functor(pair: TransformPair, f: Functor) -> tuple[str, dict]:
    eta = pair.unit(f)
    ranks = {}
    iso = inj = True
    for a in pair.k.a_keys():
        d = f.dim(a)
        if not d:
            continue
        m = eta.component(a)
        r = rank(m)
        ranks[a] = (r, d, m.rows)
        inj = inj and r == d
        iso = iso and r == d == m.rows
    for a in pair.k.a_keys():
        if not f.dim(a) and eta.target.dim(a):
            iso = False
            ranks[a] = (0, 0, eta.target.dim(a))
    verdict = FULLY_FAITHFUL if iso else CONSERVATIVE if inj else NEITHER
    return verdict, ranks


@dataclass
class Classification:
    verdicts: list  # (functor name, verdict, ranks)
    summary: str
    family: list = field(default_factory=list)

    def __str__(self) -> str:
        return f"{self.summary} (relative to a tested family of {len(self.verdicts)} functors)"


def classify_transform(k: Kernel, family: Sequence[Functor]) -> Classification:
    """Per-functor verdicts from the rank of ``η_f``; the summary is the weakest."""
    pair = TransformPair(k)
    verdicts = []
    for f in family:
        v, ranks = classify_functor(pair, f)
        verdicts.append((f.name, v, ranks))
    order = [FULLY_FAITHFUL, CONSERVATIVE, NEITHER]
    summary = max((v for _, v, _ in verdicts), key=order.index, default=FULLY_FAITHFUL)
    return Classification(verdicts, summary, [f.name for f in family])


def default_family(k: Kernel, seed: int = 1, size: int = 8, max_dim: int = 4) -> list[Functor]:
    """All representables plus ``size`` seeded random functors."""
    from .randomgen import gen_random_functor

    if k.na != 1:
        raise PreconditionError("default family needs a single-category source")
    c = k.a_cats[0]
    fam = [Representable(c, a) for a in c.objects]
    for i in range(size):
        fam.append(gen_random_functor(c, max_dim, seed * 1000 + i, name=f"r{i}"))
    return fam


def conservativity_sufficient_conditions(k: Kernel, f: Functor, pairing: dict | None = None) -> CheckResult:
    """Injectivity of every coprojection ``K(a,x)⊗f(a) -> K̄f(x)``."""
    res = CheckResult("coprojections-injective", level=EXACT)
    kf = transform(k, f)
    ranks = {}
    for x in k.x_keys():
        for a in k.a_keys():
            d = k.dim(a, x) * f.dim(a)
            if not d:
                continue
            q = kf.projection(x, a)
            r = rank(q)
            ranks[(a, x)] = (r, d)
            res.compare(tuple(a) + tuple(x), r, d, "coprojection rank vs source dim")
    if pairing is not None and k.na == 1:
        c = k.a_cats[0]
        for fail in check_pairing(c, pairing):
            res.fail(fail[0], fail[1], "holds", "pairing hypothesis")
    res.evidence["ranks"] = {str(key): list(v) for key, v in ranks.items()}
    return res


# ---------------------------------------------------------------------------
# Joyal-Wiener homs and Parseval


def joy_hom(k: Kernel, f: Functor, g: Functor, pair: TransformPair | None = None) -> tuple[int, list]:
    """Maps ``α: K̄f -> K̄g`` with ``K̄K̲(α)∘K̄(η_f) = K̄(η_g)∘α``; returns (dim, basis)."""
    pair = pair or TransformPair(k)
    kf, kg = pair.bar(f), pair.bar(g)
    eta_f, eta_g = pair.unit(f), pair.unit(g)
    kkf, kkg = eta_f.target, eta_g.target
    kkkf, kkkg = pair.bar(kkf), pair.bar(kkg)
    bar_eta_f = transform_map(k, eta_f, kf, kkkf)
    bar_eta_g = transform_map(k, eta_g, kg, kkkg)
    space = NatHom(kf, kg)
    basis = space.basis()
    if not basis:
        return 0, []
    cols = []
    for alpha in basis:
        und = right_adjoint_map(k, alpha, kkf, kkg)
        bar_und = transform_map(k, und, kkkf, kkkg)
        entries = []
        for x in k.x_keys():
            if not kf.dim(x) or not kkkg.dim(x):
                continue
            d = bar_und.component(x) @ bar_eta_f.component(x) - bar_eta_g.component(x) @ alpha.component(x)
            entries.extend(d.entries)
        cols.append(entries)
    n = len(cols[0])
    diff = RationalMatrix.from_rows([[c[i] for c in cols] for i in range(n)]) if n else \
        RationalMatrix.zeros(0, len(cols))
    ker = kernel_subspace(diff)
    out = []
    for j in range(ker.dim):
        vec = ker.section.col_block(j, j + 1)
        comps = {}
        for idx, alpha in enumerate(basis):
            c = vec[idx, 0]
            if not c:
                continue
            for key, m in alpha.components.items():
                comps[key] = comps[key] + m.scale(c) if key in comps else m.scale(c)
        out.append(NatTransform(kf, kg, comps, name=f"joy{j}"))
    return ker.dim, out


def parseval_check(k: Kernel, s, f: Functor, g: Functor, pair: TransformPair | None = None) -> CheckResult:
    """``dim ⟨f,g⟩ = dim ⟨K̄f,K̄g⟩``, gated on ``η`` being iso at ``f`` and ``g``."""
    pair = pair or TransformPair(k)
    res = CheckResult("parseval", level=DIMENSION)
    for h in (f, g):
        v, _ = classify_functor(pair, h)
        if v != FULLY_FAITHFUL:
            res.skipped = f"precondition: transform not fully faithful on {h.name} ({v})"
            return res
    lhs = inner_pairing(s, f, g).dim(())
    rhs = inner_pairing(s, pair.bar(f), pair.bar(g)).dim(())
    res.evidence["dims"] = [lhs, rhs]
    res.compare(("pairing",), lhs, rhs)
    return res


# ---------------------------------------------------------------------------
# the left inverse Γ for K = p


def pair_kernel(ps: PromonoidalStructure, target: PromonoidalStructure | None = None, name="p") -> Kernel:
    """``K = p`` viewed as a kernel from ``A`` to ``A^op ⊗ A``."""
    A = ps.base
    return Kernel(ps.p, ps, target, name=name, a_cats=(A,))


def gamma_transform(ps: PromonoidalStructure, F: Functor) -> CoendFunctor:
    """``Γ(F)(b) = ∫^a F(a,b) ⊗ j(a)``."""
    A = ps.base
    if F.arity != 2 or F.cats[0] is not A.op() or F.cats[1] is not A:
        raise BaseMismatch("Γ needs a functor on A^op ⊗ A")
    if ps.j is None:
        raise PreconditionError(f"{ps.name} has no unit")
    return CoendFunctor(Tensor(F, ps.j), [(0, 2)], name=f"Γ({F.name})")


def verify_gamma_left_inverse(ps: PromonoidalStructure, f: Functor) -> CheckResult:
    """Whether the canonical ``ΓK̄(f) -> f`` is an isomorphism at every object."""
    A = ps.base
    k = pair_kernel(ps)
    kf = transform(k, f)
    gk = gamma_transform(ps, kf)
    res = CheckResult("gamma-left-inverse", level=DIMENSION)
    witness = ps.right_unit
    for b in A.objects:
        db = f.dim((b,))
        dg = gk.dim((b,))
        if witness is None:
            res.compare((b,), dg, db, "dim ΓK̄f vs dim f")
            continue
        res.level = ISOMORPHISM
        offs, total = gk.blocks((b,))
        outer = []
        for (a,), (o, d) in sorted(offs.items(), key=lambda kv: kv[1][0]):
            dj = ps.j.dim((a,))
            inner_offs, _ = kf.blocks((a, b))
            blocks = []
            for (x,), (io, idim) in sorted(inner_offs.items(), key=lambda kv: kv[1][0]):
                dp = ps.p_dim(x, a, b)
                df = f.dim((x,))
                w = witness.get((x, a, b))
                if w is None:
                    w = RationalMatrix.zeros(A.hom_dim(x, b), dp * dj)
                act = f.action(0, (x,), b)
                blocks.append(act @ mat_kron(w, I(df)) @ mat_kron(I(dp), swap_matrix(df, dj)))
            ba = hstack(blocks, rows=db)
            s = kf.section((a, b))
            sq = s @ kf.projection((a, b))
            if ba @ mat_kron(sq, I(dj)) != ba:
                raise FactorizationError(f"unit witness not natural: inner coend at {(a, b)}")
            outer.append(ba @ mat_kron(s, I(dj)))
        if not total:
            res.compare((b,), 0, db, "ΓK̄f vanishes")
            continue
        big = hstack(outer, rows=db)
        m = big @ gk.section((b,))
        if m @ gk.projection((b,)) != big:
            raise FactorizationError(f"unit witness not dinatural: outer coend at {b}")
        if not is_isomorphism(m):
            res.fail((b,), f"rank {rank(m)}", f"dims {dg}->{db}", "canonical map not invertible")
    return res


def verify_faithfulness_proposition(ps: PromonoidalStructure, F: Functor) -> CheckResult:
    """Injectivity of ``F(d,c) -> ∫^x F(x,c) ⊗ [j(d), j(x)]`` at every ``(d, c)``."""
    A = ps.base
    if ps.j is None:
        raise PreconditionError(f"{ps.name} has no unit")
    j = ps.j
    res = CheckResult("gamma-faithful", level=EXACT)
    # j faithful: A(d,x) -> [j(d), j(x)] injective
    faithful = True
    for d, x in itertools.product(A.objects, repeat=2):
        h = A.hom_dim(d, x)
        if not h:
            continue
        act = j.action(0, (d,), x)
        dd = j.dim((d,))
        # one column per hom basis element: the matrix it acts by, flattened
        cols = []
        for t in range(h):
            blk = act.col_block(t * dd, (t + 1) * dd) if dd else RationalMatrix.zeros(j.dim((x,)), 0)
            cols.append(list(blk.entries))
        m = RationalMatrix.from_rows([[c[i] for c in cols] for i in range(len(cols[0]))]) if cols[0] else \
            RationalMatrix.zeros(0, h)
        if not is_injective(m):
            faithful = False
    res.evidence["j_faithful"] = faithful
    # integrand: F(x,c) ⊗ j(d)* ⊗ j(x); variables x c | d | x
    t = Tensor(Tensor(F, Dual(j)), j)
    co = CoendFunctor(t, [(0, 3)], name="F⊗[j,j]")
    for d in A.objects:
        dd = j.dim((d,))
        for c in A.objects:
            dF = F.dim((d, c))
            if not dF:
                continue
            q = co.projection((c, d), (d,))
            entries = {}
            for v in range(dF):
                for kk in range(dd):
                    entries[(v * dd * dd + kk * dd + kk, v)] = 1
            vec = RationalMatrix.from_dict(dF * dd * dd, dF, entries)
            m = q @ vec
            res.compare((d, c), rank(m), dF, "rank vs dim F(d,c)")
    return res


# ---------------------------------------------------------------------------
# dual hom lemma


def check_pairing(c: FinVCat, pairing: dict) -> list:
    """Nondegeneracy and naturality of ``⟨-,-⟩: hom(a,b) ⊗ hom(b,a) -> k``.

    ``pairing[(a, b)]`` is a ``1 x (hom(a,b)*hom(b,a))`` row.
    """
    out = []
    obs = c.objects

    def row(a, b):
        m = pairing.get((a, b))
        return m if m is not None else RationalMatrix.zeros(1, c.hom_dim(a, b) * c.hom_dim(b, a))

    for a, b in itertools.product(obs, repeat=2):
        h1, h2 = c.hom_dim(a, b), c.hom_dim(b, a)
        if h1 != h2:
            out.append(((a, b), "hom dims differ"))
            continue
        if not h1:
            continue
        r = row(a, b)
        sq = RationalMatrix.from_rows([[r[0, i * h2 + j] for j in range(h2)] for i in range(h1)])
        if not is_isomorphism(sq):
            out.append(((a, b), "degenerate"))
    for a, b, b2 in itertools.product(obs, repeat=3):
        hab, hbb, hba = c.hom_dim(a, b), c.hom_dim(b, b2), c.hom_dim(b2, a)
        if not (hab and hbb and hba):
            continue
        # ⟨ψφ, χ⟩_{a,b2} = ⟨φ, χψ⟩_{a,b} on ψ ⊗ φ ⊗ χ
        lhs = row(a, b2) @ mat_kron(c.comp(a, b, b2), I(hba))
        rhs = row(a, b) @ mat_kron(I(hab), c.comp(b, b2, a) @ swap_matrix(hbb, hba)) \
            @ mat_kron(swap_matrix(hbb, hab), I(hba))
        if lhs != rhs:
            out.append(((a, b, b2), "not natural"))
    return out


def lemma_dual_hom(c: FinVCat, pairing: dict, g: Functor, a) -> CheckResult:
    """``dim ∫_b [g(b), A(a,b)] = dim g(a)`` under a natural pairing."""
    bad = check_pairing(c, pairing)
    if bad:
        raise PreconditionError(f"pairing is not natural and nondegenerate: {bad[0]}")
    res = CheckResult("dual-hom", level=DIMENSION)
    h = NatHom(g, Representable(c, a))
    res.compare((a,), h.dim, g.dim((a,)))
    return res
