"""Finite Vect-enriched categories, functors on products of them, and (co)ends.

A :class:`Functor` is a functor on a product ``C_0 ⊗ ... ⊗ C_{n-1}`` of finite
categories, presented variable by variable: ``action(i, key, target)`` is the
matrix of ``hom_{C_i}(key[i], target) ⊗ F(key) -> F(key with key[i]=target)``
with the hom factor major in the Kronecker ordering.  Contravariance is
expressed by using ``C.op()`` as the variable's category, so a bimodule
``A^op ⊗ X -> V`` is simply a functor on ``(A.op(), X)``.

Functors are evaluated lazily and memoised per key: products such as
``A^op ⊗ A^op ⊗ A`` are never materialised as categories.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence

from .linalg import (
    DimensionError,
    RationalMatrix,
    SubquotientPresentation,
    cokernel,
    hstack,
    kernel_subspace,
    mat_direct_sum,
    mat_dual,
    mat_kron,
    swap_matrix,
    vstack,
)

Obj = Hashable
Key = tuple


class EnrichedError(ValueError):
    pass


class UnknownObjectError(EnrichedError, KeyError):
    pass


class FactorizationError(RuntimeError):
    """A canonical map failed to factor through a (co)limit presentation.

    On valid input this never happens; it marks non-natural data or an
    internal inconsistency rather than a recoverable condition.
    """


I = RationalMatrix.identity


def _col(vec: Sequence) -> RationalMatrix:
    return RationalMatrix.from_rows([[x] for x in vec])


@dataclass(frozen=True)
class AxiomFailure:
    equation: str
    locus: tuple

    def __str__(self) -> str:
        return f"{self.equation} at {self.locus}"


# ---------------------------------------------------------------------------
# categories


class FinVCat:
    """A finite Vect-enriched category.

    ``comp[(a, b, c)]`` has shape ``hom(a,c) x (hom(b,c)*hom(a,b))``;
    ``ident[a]`` has shape ``hom(a,a) x 1``.  ``generators[(a, b)]``, when
    given, is a list of vectors of ``hom(a,b)`` which together with identities
    generate every morphism under composition and linear combination.  (Co)end
    relations only need to be imposed along generators.
    """

    def __init__(self, name: str, objects: Sequence[Obj], hom_dims: dict, comp: dict,
                 ident: dict, generators: dict | None = None):
        self.name = name
        self.objects = tuple(objects)
        self._index = {a: i for i, a in enumerate(self.objects)}
        if len(self._index) != len(self.objects):
            raise EnrichedError(f"duplicate objects in {name}")
        self._hom = {k: int(v) for k, v in hom_dims.items() if v}
        self._comp = dict(comp)
        self._ident = dict(ident)
        self._generators = None if generators is None else dict(generators)
        self._op = None

    def __repr__(self) -> str:
        return f"FinVCat({self.name!r}, {len(self.objects)} objects)"

    def _check(self, a):
        if a not in self._index:
            raise UnknownObjectError(f"{a!r} is not an object of {self.name}")

    def index(self, a) -> int:
        self._check(a)
        return self._index[a]

    def hom_dim(self, a, b) -> int:
        return self._hom.get((a, b), 0)

    def comp(self, a, b, c) -> RationalMatrix:
        m = self._comp.get((a, b, c))
        if m is None:
            return RationalMatrix.zeros(self.hom_dim(a, c), self.hom_dim(b, c) * self.hom_dim(a, b))
        return m

    def ident(self, a) -> RationalMatrix:
        m = self._ident.get(a)
        if m is None:
            return RationalMatrix.zeros(self.hom_dim(a, a), 1)
        return m

    def generators(self, a, b) -> list[RationalMatrix]:
        h = self.hom_dim(a, b)
        if not h:
            return []
        if self._generators is None:
            return [_basis_vector(h, k) for k in range(h)]
        return list(self._generators.get((a, b), ()))

    def op(self) -> "FinVCat":
        if self._op is None:
            self._op = _Opposite(self)
        return self._op

    @property
    def is_opposite(self) -> bool:
        return False

    def with_data(self, comp: dict | None = None, ident: dict | None = None) -> "FinVCat":
        """Copy with some composition/identity data replaced (mutation testing)."""
        c = dict(self._comp)
        c.update(comp or {})
        i = dict(self._ident)
        i.update(ident or {})
        return FinVCat(self.name, self.objects, self._hom, c, i, self._generators)


class _Opposite(FinVCat):
    def __init__(self, base: FinVCat):
        self.name = base.name + "^op"
        self.objects = base.objects
        self._index = base._index
        self._base = base
        self._op = base
        self._cache: dict = {}

    @property
    def is_opposite(self) -> bool:
        return True

    def hom_dim(self, a, b) -> int:
        return self._base.hom_dim(b, a)

    def comp(self, a, b, c) -> RationalMatrix:
        m = self._cache.get((a, b, c))
        if m is None:
            base = self._base
            m = base.comp(c, b, a) @ swap_matrix(base.hom_dim(c, b), base.hom_dim(b, a))
            self._cache[(a, b, c)] = m
        return m

    def ident(self, a) -> RationalMatrix:
        return self._base.ident(a)

    def generators(self, a, b) -> list[RationalMatrix]:
        return self._base.generators(b, a)

    def with_data(self, comp=None, ident=None):
        raise EnrichedError("mutate the underlying category instead")


def _basis_vector(n: int, k: int) -> RationalMatrix:
    return RationalMatrix.from_dict(n, 1, {(k, 0): 1})


def discrete(objects: Sequence[Obj], name: str = "D") -> FinVCat:
    """The free Vect-category on a set: ``hom(a,b) = δ_ab k``."""
    one = RationalMatrix.identity(1)
    return FinVCat(
        name,
        objects,
        {(a, a): 1 for a in objects},
        {(a, a, a): one for a in objects},
        {a: one for a in objects},
        generators={},
    )


def one_object(name: str, dim: int, mult: Callable[[int, int], dict], unit: Sequence,
               generators: Sequence[Sequence] | None = None, obj: Obj = "*") -> FinVCat:
    """One-object category whose endomorphisms form an algebra.

    ``mult(i, j)`` gives the product ``e_i ∘ e_j`` as ``{k: coeff}``.
    """
    entries = {}
    for i in range(dim):
        for j in range(dim):
            for k, x in mult(i, j).items():
                entries[(k, i * dim + j)] = x
    comp = RationalMatrix.from_dict(dim, dim * dim, entries)
    gens = None if generators is None else {(obj, obj): [_col(g) for g in generators]}
    return FinVCat(name, [obj], {(obj, obj): dim}, {(obj, obj, obj): comp},
                   {obj: _col(unit)}, generators=gens)


def check_category_axioms(c: FinVCat) -> list[AxiomFailure]:
    """Associativity and unit equations, one failure record per object tuple."""
    out = []
    obs = c.objects
    for a, b in itertools.product(obs, repeat=2):
        hab = c.hom_dim(a, b)
        if not hab:
            continue
        if c.comp(a, a, b) @ mat_kron(I(hab), c.ident(a)) != I(hab):
            out.append(AxiomFailure("right unit", (a, a, b)))
        if c.comp(a, b, b) @ mat_kron(c.ident(b), I(hab)) != I(hab):
            out.append(AxiomFailure("left unit", (a, b, b)))
    bad_triples = set()
    for a, b, x, d in itertools.product(obs, repeat=4):
        hab, hbx, hxd = c.hom_dim(a, b), c.hom_dim(b, x), c.hom_dim(x, d)
        if not (hab and hbx and hxd):
            continue
        lhs = c.comp(a, x, d) @ mat_kron(I(hxd), c.comp(a, b, x))
        rhs = c.comp(a, b, d) @ mat_kron(c.comp(b, x, d), I(hab))
        if lhs != rhs:
            bad_triples.add((a, b, x, d))
    for t in sorted(bad_triples, key=lambda t: tuple(c.index(o) for o in t)):
        out.append(AxiomFailure("associativity", t))
    return out


# ---------------------------------------------------------------------------
# functors between categories


class CatFunctor:
    """A V-functor ``source -> target`` between finite categories.

    ``hom_map[(a, b)]`` has shape ``hom_T(Fa, Fb) x hom_S(a, b)``.
    """

    def __init__(self, source: FinVCat, target: FinVCat, obj_map: dict, hom_map: dict, name="F"):
        self.source = source
        self.target = target
        self.obj_map = dict(obj_map)
        self._hom = dict(hom_map)
        self.name = name

    def __call__(self, a):
        return self.obj_map[a]

    def hom(self, a, b) -> RationalMatrix:
        m = self._hom.get((a, b))
        if m is None:
            return RationalMatrix.zeros(self.target.hom_dim(self(a), self(b)), self.source.hom_dim(a, b))
        return m

    def opposite(self) -> "CatFunctor":
        """The same data viewed as ``source^op -> target^op``."""
        return CatFunctor(self.source.op(), self.target.op(), self.obj_map,
                          {(b, a): m for (a, b), m in self._hom.items()}, name=self.name + "^op")

    def is_surjective_on_objects(self) -> bool:
        return set(self.obj_map.values()) >= set(self.target.objects)


def identity_functor(c: FinVCat) -> CatFunctor:
    return CatFunctor(c, c, {a: a for a in c.objects},
                      {(a, b): I(c.hom_dim(a, b)) for a in c.objects for b in c.objects}, name="1")


def check_cat_functor(f: CatFunctor) -> list[AxiomFailure]:
    out = []
    s, t = f.source, f.target
    for a in s.objects:
        if f.hom(a, a) @ s.ident(a) != t.ident(f(a)):
            out.append(AxiomFailure("identity", (a,)))
    for a, b, c in itertools.product(s.objects, repeat=3):
        if not (s.hom_dim(a, b) and s.hom_dim(b, c)):
            continue
        lhs = f.hom(a, c) @ s.comp(a, b, c)
        rhs = t.comp(f(a), f(b), f(c)) @ mat_kron(f.hom(b, c), f.hom(a, b))
        if lhs != rhs:
            out.append(AxiomFailure("composition", (a, b, c)))
    return out


# ---------------------------------------------------------------------------
# functors into Vect


class Functor:
    """Base class: a functor ``cats[0] ⊗ ... ⊗ cats[n-1] -> Vect``."""

    cats: tuple
    name: str = "F"

    def dim(self, key: Key) -> int:
        raise NotImplementedError

    def vanishes(self, partial: tuple) -> bool:
        """True if every completion of ``partial`` (``None`` = unassigned) has dim 0."""
        return None not in partial and self.dim(partial) == 0

    def _action(self, i: int, key: Key, target) -> RationalMatrix | None:
        raise NotImplementedError

    def action(self, i: int, key: Key, target) -> RationalMatrix:
        key = tuple(key)
        cache = self.__dict__.setdefault("_action_cache", {})
        ck = (i, key, target)
        m = cache.get(ck)
        if m is None:
            h = self.cats[i].hom_dim(key[i], target)
            d = self.dim(key)
            d2 = self.dim(_replace(key, i, target))
            if h == 0 or d == 0 or d2 == 0:
                m = RationalMatrix.zeros(d2, h * d)
            else:
                m = self._action(i, key, target)
                if m is None:
                    m = RationalMatrix.zeros(d2, h * d)
                elif m.shape != (d2, h * d):
                    raise DimensionError(
                        f"{self.name}: action {i} at {key}->{target} has shape {m.shape}, "
                        f"expected {(d2, h * d)}")
            cache[ck] = m
        return m

    def action_on(self, i: int, key: Key, target, vec: RationalMatrix) -> RationalMatrix:
        """The action restricted to one morphism: ``action(i, key, target) ∘ (vec ⊗ 1)``."""
        key = tuple(key)
        cache = self.__dict__.setdefault("_action_on_cache", {})
        ck = (i, key, target, vec)
        m = cache.get(ck)
        if m is None:
            d = self.dim(key)
            d2 = self.dim(_replace(key, i, target))
            if not d or not d2 or vec.is_zero:
                m = RationalMatrix.zeros(d2, d)
            else:
                m = self._action_on(i, key, target, vec)
            cache[ck] = m
        return m

    def _action_on(self, i, key, target, vec):
        return self.action(i, key, target) @ mat_kron(vec, I(self.dim(key)))

    @property
    def arity(self) -> int:
        return len(self.cats)

    def keys(self) -> Iterable[Key]:
        return itertools.product(*[c.objects for c in self.cats])

    def support(self) -> list[Key]:
        return [k for k in self.keys() if self.dim(k)]

    def dims(self) -> dict:
        return {k: self.dim(k) for k in self.keys()}

    def dim1(self, a) -> int:
        """Dimension at an object of a one-variable functor."""
        return self.dim((a,))

    def total_dim(self) -> int:
        return sum(self.dim(k) for k in self.keys())

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name} on {[c.name for c in self.cats]}>"


def _replace(key: Key, i: int, v) -> Key:
    return key[:i] + (v,) + key[i + 1:]


class TableFunctor(Functor):
    """Functor given by explicit dimension and action tables.

    A missing action defaults to the identity on an endomorphism space that
    is one-dimensional (where the unit law forces it), and to zero otherwise.
    """

    def __init__(self, cats: Sequence[FinVCat], dims: dict, actions: dict | None = None, name="F"):
        self.cats = tuple(cats)
        self.name = name
        self._dims = {}
        for k, v in dims.items():
            k = k if isinstance(k, tuple) else (k,)
            if len(k) != len(self.cats):
                raise EnrichedError(f"{name}: key {k} has wrong arity")
            for c, o in zip(self.cats, k):
                c.index(o)
            if v:
                self._dims[k] = int(v)
        self._actions = {}
        for (i, key, target), m in (actions or {}).items():
            key = key if isinstance(key, tuple) else (key,)
            self._actions[(i, key, target)] = m

    def dim(self, key):
        return self._dims.get(tuple(key), 0)

    def _action(self, i, key, target):
        m = self._actions.get((i, key, target))
        if m is None and target == key[i] and self.cats[i].hom_dim(target, target) == 1:
            c = self.cats[i]
            if c.ident(target) == I(1):
                return I(self.dim(key))
        return m


def zero_functor(cats: Sequence[FinVCat], name="0") -> Functor:
    return TableFunctor(cats, {}, {}, name=name)


def discrete_functor(c: FinVCat, dims: dict, name="F") -> Functor:
    """Functor on a discrete category, given by its dimensions."""
    return TableFunctor([c], {(a,): d for a, d in dims.items()}, name=name)


class Representable(Functor):
    """``C(a, -)`` (covariant) or ``C(-, a)`` (on ``C^op``)."""

    def __init__(self, c: FinVCat, a, contravariant: bool = False):
        c.index(a)
        self.base = c
        self.a = a
        self.contravariant = contravariant
        self.cats = (c.op(),) if contravariant else (c,)
        self.name = f"{c.name}(-,{a})" if contravariant else f"{c.name}({a},-)"

    def dim(self, key):
        b = key[0]
        return self.base.hom_dim(b, self.a) if self.contravariant else self.base.hom_dim(self.a, b)

    def _action(self, i, key, target):
        b = key[0]
        if self.contravariant:
            # hom_{C^op}(b, t) ⊗ C(b, a) -> C(t, a) is composition in C^op
            return self.cats[0].comp(self.a, b, target)
        return self.base.comp(self.a, b, target)


def representable(c: FinVCat, a, contravariant: bool = False) -> Functor:
    return Representable(c, a, contravariant)


class HomBimodule(Functor):
    """``C(-, -)`` as a functor on ``(C^op, C)``."""

    def __init__(self, c: FinVCat):
        self.base = c
        self.cats = (c.op(), c)
        self.name = f"{c.name}(-,-)"

    def dim(self, key):
        return self.base.hom_dim(key[0], key[1])

    def _action(self, i, key, target):
        a, b = key
        c = self.base
        if i == 1:
            return c.comp(a, b, target)
        # φ ∈ C(t, a) acts by precomposition: C(a,b) ⊗ C(t,a) -> C(t,b)
        return c.comp(target, a, b) @ swap_matrix(c.hom_dim(target, a), c.hom_dim(a, b))


def hom_bimodule(c: FinVCat) -> Functor:
    return HomBimodule(c)


class Tensor(Functor):
    def __init__(self, f: Functor, g: Functor, name=None):
        self.f, self.g = f, g
        self.cats = f.cats + g.cats
        self.name = name or f"({f.name}⊗{g.name})"
        self._n = len(f.cats)
        self._dims: dict = {}

    def dim(self, key):
        key = tuple(key)
        d = self._dims.get(key)
        if d is None:
            n = self._n
            df = self.f.dim(key[:n])
            d = df * self.g.dim(key[n:]) if df else 0
            self._dims[key] = d
        return d

    def vanishes(self, partial):
        if None not in partial:
            return self.dim(partial) == 0
        n = self._n
        return self.f.vanishes(partial[:n]) or self.g.vanishes(partial[n:])

    def _action(self, i, key, target):
        n = self._n
        kf, kg = key[:n], key[n:]
        if i < n:
            return mat_kron(self.f.action(i, kf, target), I(self.g.dim(kg)))
        h = self.cats[i].hom_dim(key[i], target)
        df = self.f.dim(kf)
        act = self.g.action(i - n, kg, target)
        return mat_kron(I(df), act) @ mat_kron(swap_matrix(h, df), I(self.g.dim(kg)))

    def _action_on(self, i, key, target, vec):
        n = self._n
        kf, kg = key[:n], key[n:]
        if i < n:
            return mat_kron(self.f.action_on(i, kf, target, vec), I(self.g.dim(kg)))
        return mat_kron(I(self.f.dim(kf)), self.g.action_on(i - n, kg, target, vec))


def tensor(*fs: Functor) -> Functor:
    out = fs[0]
    for g in fs[1:]:
        out = Tensor(out, g)
    return out


class DirectSum(Functor):
    """``F_0 ⊕ ... ⊕ F_m`` on a common product of categories."""

    def __init__(self, fs: Sequence[Functor], name=None):
        if not fs:
            raise EnrichedError("empty direct sum")
        for g in fs[1:]:
            _same_cats(fs[0], g)
        self.fs = tuple(fs)
        self.cats = fs[0].cats
        self.name = name or "⊕".join(f.name for f in fs)

    def dim(self, key):
        return sum(f.dim(key) for f in self.fs)

    def _action(self, i, key, target):
        h = self.cats[i].hom_dim(key[i], target)
        cols = []
        for hk in range(h):
            blocks = []
            for f in self.fs:
                d = f.dim(key)
                blocks.append(f.action(i, key, target).col_block(hk * d, (hk + 1) * d))
            cols.append(mat_direct_sum(*blocks))
        return hstack(cols, rows=self.dim(_replace(key, i, target)))

    def _action_on(self, i, key, target, vec):
        return mat_direct_sum(*[f.action_on(i, key, target, vec) for f in self.fs])


def direct_sum(*fs: Functor) -> Functor:
    return DirectSum(fs)


class Dual(Functor):
    """``F*``: values dualised, every variable replaced by its opposite."""

    def __init__(self, f: Functor, name=None):
        self.f = f
        self.cats = tuple(c.op() for c in f.cats)
        self.name = name or f"{f.name}*"

    def dim(self, key):
        return self.f.dim(key)

    def _action(self, i, key, target):
        # F(target -> key[i]) blocks, transposed
        src = _replace(key, i, target)
        m = self.f.action(i, src, key[i])
        d = self.f.dim(src)
        h = self.cats[i].hom_dim(key[i], target)
        return hstack([mat_dual(m.col_block(k * d, (k + 1) * d)) for k in range(h)], rows=d)

    def _action_on(self, i, key, target, vec):
        return mat_dual(self.f.action_on(i, _replace(key, i, target), key[i], vec))


def dual(f: Functor) -> Functor:
    if isinstance(f, Dual):
        return f.f
    return Dual(f)


class Permuted(Functor):
    """Variables reordered: new variable ``k`` is old variable ``order[k]``."""

    def __init__(self, f: Functor, order: Sequence[int], name=None):
        if sorted(order) != list(range(f.arity)):
            raise EnrichedError(f"bad permutation {order}")
        self.f = f
        self.order = tuple(order)
        self.cats = tuple(f.cats[o] for o in order)
        self.name = name or f.name

    def _old(self, key):
        old = [None] * len(key)
        for k, o in enumerate(self.order):
            old[o] = key[k]
        return tuple(old)

    def dim(self, key):
        return self.f.dim(self._old(key))

    def vanishes(self, partial):
        return self.f.vanishes(self._old(partial))

    def _action(self, i, key, target):
        return self.f.action(self.order[i], self._old(key), target)

    def _action_on(self, i, key, target, vec):
        return self.f.action_on(self.order[i], self._old(key), target, vec)


def permute(f: Functor, order: Sequence[int]) -> Functor:
    return Permuted(f, order)


class Precomposed(Functor):
    """Variable ``i`` of ``f`` precomposed with a functor ``phi: D -> cats[i]``."""

    def __init__(self, f: Functor, i: int, phi: CatFunctor, name=None):
        if phi.target is not f.cats[i]:
            raise EnrichedError(f"cannot precompose variable {i} of {f.name} along {phi.name}")
        self.f, self.i, self.phi = f, i, phi
        self.cats = _replace(f.cats, i, phi.source)
        self.name = name or f"{f.name}∘{phi.name}"

    def _map(self, key):
        return _replace(tuple(key), self.i, self.phi(key[self.i]))

    def dim(self, key):
        return self.f.dim(self._map(key))

    def _action(self, i, key, target):
        k2 = self._map(key)
        if i != self.i:
            return self.f.action(i, k2, target)
        act = self.f.action(i, k2, self.phi(target))
        return act @ mat_kron(self.phi.hom(key[i], target), I(self.dim(key)))

    def _action_on(self, i, key, target, vec):
        k2 = self._map(key)
        if i != self.i:
            return self.f.action_on(i, k2, target, vec)
        return self.f.action_on(i, k2, self.phi(target), self.phi.hom(key[i], target) @ vec)


def precompose(f: Functor, i: int, phi: CatFunctor) -> Functor:
    return Precomposed(f, i, phi)


# ---------------------------------------------------------------------------
# natural transformations


@dataclass
class NatTransform:
    source: Functor
    target: Functor
    components: dict = field(default_factory=dict)
    name: str = "α"

    def component(self, key) -> RationalMatrix:
        key = tuple(key)
        m = self.components.get(key)
        if m is None:
            return RationalMatrix.zeros(self.target.dim(key), self.source.dim(key))
        return m

    def then(self, other: "NatTransform") -> "NatTransform":
        """Vertical composite ``other ∘ self``."""
        keys = set(self.components) | set(other.components)
        return NatTransform(self.source, other.target,
                            {k: other.component(k) @ self.component(k) for k in keys},
                            name=f"{other.name}∘{self.name}")


def identity_nat(f: Functor) -> NatTransform:
    return NatTransform(f, f, {k: I(f.dim(k)) for k in f.support()}, name="1")


def check_functor(f: Functor, full: bool = True) -> list[AxiomFailure]:
    """Unit, composition and interchange equations for every variable."""
    out = []
    n = f.arity
    keys = list(f.keys())
    for key in keys:
        d = f.dim(key)
        if not d:
            continue
        for i, c in enumerate(f.cats):
            a = key[i]
            if c.hom_dim(a, a):
                if f.action(i, key, a) @ mat_kron(c.ident(a), I(d)) != I(d):
                    out.append(AxiomFailure(f"unit[{i}]", key))
            for b in c.objects:
                hab = c.hom_dim(a, b)
                if not hab:
                    continue
                kb = _replace(key, i, b)
                for t in c.objects:
                    hbt = c.hom_dim(b, t)
                    if not hbt:
                        continue
                    lhs = f.action(i, kb, t) @ mat_kron(I(hbt), f.action(i, key, b))
                    rhs = f.action(i, key, t) @ mat_kron(c.comp(a, b, t), I(d))
                    if lhs != rhs:
                        out.append(AxiomFailure(f"composition[{i}]", key + (b, t)))
        if not full:
            continue
        for i, j in itertools.combinations(range(n), 2):
            ci, cj = f.cats[i], f.cats[j]
            for ti in ci.objects:
                hi = ci.hom_dim(key[i], ti)
                if not hi:
                    continue
                for tj in cj.objects:
                    hj = cj.hom_dim(key[j], tj)
                    if not hj:
                        continue
                    ki = _replace(key, i, ti)
                    kj = _replace(key, j, tj)
                    lhs = f.action(j, ki, tj) @ mat_kron(I(hj), f.action(i, key, ti)) @ \
                        mat_kron(swap_matrix(hi, hj), I(d))
                    rhs = f.action(i, kj, ti) @ mat_kron(I(hi), f.action(j, key, tj))
                    if lhs != rhs:
                        out.append(AxiomFailure(f"interchange[{i},{j}]", key + (ti, tj)))
    return out


check_bimodule = check_functor


def check_natural(n: NatTransform) -> list[AxiomFailure]:
    f, g = n.source, n.target
    if f.cats != g.cats and [c.name for c in f.cats] != [c.name for c in g.cats]:
        raise EnrichedError("natural transformation between functors on different categories")
    out = []
    for key in f.keys():
        for i, c in enumerate(f.cats):
            for t in c.objects:
                h = c.hom_dim(key[i], t)
                if not h:
                    continue
                kt = _replace(key, i, t)
                lhs = g.action(i, key, t) @ mat_kron(I(h), n.component(key))
                rhs = n.component(kt) @ f.action(i, key, t)
                if lhs.shape != rhs.shape or lhs != rhs:
                    out.append(AxiomFailure(f"naturality[{i}]", key + (t,)))
    return out


# ---------------------------------------------------------------------------
# coends and ends


def _check_pairs(t: Functor, pairs):
    used = set()
    for op_i, cov_i in pairs:
        if t.cats[op_i] is not t.cats[cov_i].op():
            raise EnrichedError(
                f"variables {op_i},{cov_i} of {t.name} are not an opposite pair "
                f"({t.cats[op_i].name} vs {t.cats[cov_i].name})")
        if op_i in used or cov_i in used:
            raise EnrichedError("variable used twice")
        used |= {op_i, cov_i}
    return [k for k in range(t.arity) if k not in used]


def _generator_table(c: FinVCat) -> tuple[dict, dict]:
    """``a -> [b with generators a->b]`` and ``b -> [a with generators a->b]``, cached."""
    tab = c.__dict__.get("_gen_table")
    if tab is None:
        out, inn = {}, {}
        for a in c.objects:
            for b in c.objects:
                if c.generators(a, b):
                    out.setdefault(a, []).append(b)
                    inn.setdefault(b, []).append(a)
        tab = (out, inn)
        c.__dict__["_gen_table"] = tab
    return tab


class _Limit(Functor):
    """Shared machinery for coend and end functors over chosen variable pairs."""

    def __init__(self, t: Functor, pairs, name):
        self.t = t
        self.pairs = [tuple(p) for p in pairs]
        self.rest = _check_pairs(t, self.pairs)
        self.cats = tuple(t.cats[k] for k in self.rest)
        self.name = name
        self._pres: dict = {}

    def full_key(self, r: Key, diag: Key) -> Key:
        key = [None] * self.t.arity
        for k, v in zip(self.rest, r):
            key[k] = v
        for (op_i, cov_i), v in zip(self.pairs, diag):
            key[op_i] = v
            key[cov_i] = v
        return tuple(key)

    def _with_pair(self, r, diag, k, op_v, cov_v):
        key = list(self.full_key(r, diag))
        op_i, cov_i = self.pairs[k]
        key[op_i] = op_v
        key[cov_i] = cov_v
        return tuple(key)

    def _live_diagonals(self, r: Key):
        """Diagonals in product order, pruning prefixes on which ``t`` vanishes."""
        key = [None] * self.t.arity
        for k, v in zip(self.rest, r):
            key[k] = v
        objs = [self.t.cats[c].objects for _, c in self.pairs]
        n = len(self.pairs)
        diag = []

        def walk(k):
            if k == n:
                yield tuple(diag)
                return
            op_i, cov_i = self.pairs[k]
            for v in objs[k]:
                key[op_i] = key[cov_i] = v
                if not self.t.vanishes(tuple(key)):
                    diag.append(v)
                    yield from walk(k + 1)
                    diag.pop()
            key[op_i] = key[cov_i] = None

        return walk(0)

    def blocks(self, r: Key) -> tuple[dict, int]:
        """Offsets of the diagonal summands ``T(c, c, r)`` and their total dimension."""
        r = tuple(r)
        cache = self.__dict__.setdefault("_blocks", {})
        got = cache.get(r)
        if got is None:
            offs = {}
            total = 0
            for diag in self._live_diagonals(r):
                d = self.t.dim(self.full_key(r, diag))
                if d:
                    offs[diag] = (total, d)
                    total += d
            got = (offs, total)
            cache[r] = got
        return got

    def presentation(self, r: Key) -> SubquotientPresentation:
        r = tuple(r)
        p = self._pres.get(r)
        if p is None:
            p = self._present(r)
            self._pres[r] = p
        return p

    def dim(self, key):
        if not self.blocks(key)[1]:
            return 0
        return self.presentation(key).dim

    def _relation_sites(self, offs):
        """``(diag, k, b)`` for every relation touching a live summand, in a fixed order."""
        sites = set()
        gens = [_generator_table(self.t.cats[c]) for _, c in self.pairs]
        for diag in offs:
            for k in range(len(self.pairs)):
                out_k, in_k = gens[k]
                for b in out_k.get(diag[k], ()):
                    sites.add((diag, k, b))
                for a in in_k.get(diag[k], ()):
                    sites.add((diag[:k] + (a,) + diag[k + 1:], k, diag[k]))
        return sorted(sites, key=lambda s: (self._order(s[0]), s[1], self._order((s[2],), s[1])))

    def _order(self, diag, k0=0):
        return tuple(self.t.cats[self.pairs[k0 + i][1]].index(v) for i, v in enumerate(diag))

    def _blockwise(self, i: int, r: Key, target, h: int) -> list[RationalMatrix]:
        """Per hom-basis element, the map ``⊕_c T(c,c,r) -> ⊕_c T(c,c,r')``."""
        offs, total = self.blocks(r)
        r2 = _replace(tuple(r), i, target)
        offs2, total2 = self.blocks(r2)
        ti = self.rest[i]
        out = []
        for hk in range(h):
            entries = {}
            for diag, (o, d) in offs.items():
                if diag not in offs2:
                    continue
                o2, _ = offs2[diag]
                act = self.t.action(ti, self.full_key(r, diag), target)
                for a, b, x in act.col_block(hk * d, (hk + 1) * d).nonzero():
                    entries[(o2 + a, o + b)] = x
            out.append(RationalMatrix.from_dict(total2, total, entries))
        return out


class CoendFunctor(_Limit):
    """``∫^c T(c, c, -)`` over the chosen pairs, as a functor in the rest."""

    def _relation_rows(self, r: Key) -> list[dict]:
        offs, total = self.blocks(r)
        rows = []
        t = self.t
        for diag, k, b in self._relation_sites(offs):
            op_i, cov_i = self.pairs[k]
            c = t.cats[cov_i]
            a = diag[k]
            db = diag[:k] + (b,) + diag[k + 1:]
            src = self._with_pair(r, diag, k, b, a)
            d = t.dim(src)
            if not d:
                continue
            lo = offs.get(diag)
            ro = offs.get(db)
            for g in c.generators(a, b):
                lm = t.action_on(op_i, src, a, g)   # lands in T(a, a)
                rm = t.action_on(cov_i, src, b, g)  # lands in T(b, b)
                # one relation per basis vector of T(b, a)
                cols = [dict() for _ in range(d)]
                if lo is not None:
                    for x, y, v in lm.nonzero():
                        cols[y][lo[0] + x] = v
                if ro is not None:
                    for x, y, v in rm.nonzero():
                        col = cols[y]
                        w = col.get(ro[0] + x, 0) - v
                        if w:
                            col[ro[0] + x] = w
                        else:
                            col.pop(ro[0] + x, None)
                rows.extend(c_ for c_ in cols if c_)
        return rows

    def _present(self, r):
        _, total = self.blocks(r)
        rows = self._relation_rows(r)
        rel = RationalMatrix(len(rows), total, rows)
        return cokernel(mat_dual(rel))

    def projection(self, r: Key, diag: Key | None = None) -> RationalMatrix:
        """``q``: the whole projection, or its component at one diagonal summand."""
        offs, total = self.blocks(r)
        pres = self.presentation(r) if total else None
        dim = pres.dim if pres else 0
        if diag is None:
            return pres.projection if pres else RationalMatrix.zeros(0, 0)
        diag = tuple(diag)
        if diag not in offs:
            return RationalMatrix.zeros(dim, self.t.dim(self.full_key(r, diag)))
        o, d = offs[diag]
        return pres.projection.col_block(o, o + d)

    def section(self, r: Key) -> RationalMatrix:
        _, total = self.blocks(r)
        if not total:
            return RationalMatrix.zeros(0, 0)
        return self.presentation(r).section

    def _action(self, i, key, target):
        h = self.cats[i].hom_dim(key[i], target)
        r2 = _replace(tuple(key), i, target)
        q2 = self.projection(r2)
        s = self.section(key)
        return hstack([q2 @ n @ s for n in self._blockwise(i, key, target, h)])


class EndFunctor(_Limit):
    """``∫_c T(c, c, -)`` over the chosen pairs, as a functor in the rest."""

    def _constraint(self, r: Key) -> RationalMatrix:
        offs, total = self.blocks(r)
        t = self.t
        rows = []
        for da, k, b in self._relation_sites(offs):
            op_i, cov_i = self.pairs[k]
            c = t.cats[cov_i]
            a = da[k]
            db = da[:k] + (b,) + da[k + 1:]
            tgt = self._with_pair(r, da, k, a, b)  # T(op=a, cov=b)
            dt = t.dim(tgt)
            if not dt:
                continue
            ka = self.full_key(r, da)
            kb = self.full_key(r, db)
            ao = offs.get(da)
            bo = offs.get(db)
            for g in c.generators(a, b):
                blk = [dict() for _ in range(dt)]
                if ao is not None:
                    m = t.action_on(cov_i, ka, b, g)
                    for x, y, v in m.nonzero():
                        blk[x][ao[0] + y] = v
                if bo is not None:
                    m = t.action_on(op_i, kb, a, g)
                    for x, y, v in m.nonzero():
                        w = blk[x].get(bo[0] + y, 0) - v
                        if w:
                            blk[x][bo[0] + y] = w
                        else:
                            blk[x].pop(bo[0] + y, None)
                rows.extend(b_ for b_ in blk if b_)
        return RationalMatrix(len(rows), total, rows)

    def _present(self, r):
        return kernel_subspace(self._constraint(r))

    def inclusion(self, r: Key, diag: Key | None = None) -> RationalMatrix:
        offs, total = self.blocks(r)
        if not total:
            return RationalMatrix.zeros(0, 0)
        inc = self.presentation(r).section
        if diag is None:
            return inc
        diag = tuple(diag)
        if diag not in offs:
            return RationalMatrix.zeros(self.t.dim(self.full_key(r, diag)), inc.cols)
        o, d = offs[diag]
        return inc.row_block(o, o + d)

    def retraction(self, r: Key) -> RationalMatrix:
        _, total = self.blocks(r)
        if not total:
            return RationalMatrix.zeros(0, 0)
        return self.presentation(r).projection

    def _action(self, i, key, target):
        h = self.cats[i].hom_dim(key[i], target)
        r2 = _replace(tuple(key), i, target)
        ret = self.retraction(r2)
        inc = self.inclusion(key)
        return hstack([ret @ n @ inc for n in self._blockwise(i, key, target, h)])


def coend(t: Functor, pairs: Sequence[tuple[int, int]] | None = None, name=None) -> CoendFunctor:
    """Coend of ``t`` over ``(op_var, cov_var)`` pairs (default: the only pair of a bimodule)."""
    if pairs is None:
        pairs = [(0, 1)]
    return CoendFunctor(t, pairs, name or f"∫^{t.name}")


def end(t: Functor, pairs: Sequence[tuple[int, int]] | None = None, name=None) -> EndFunctor:
    if pairs is None:
        pairs = [(0, 1)]
    return EndFunctor(t, pairs, name or f"∫_{t.name}")


def induced_map_on_coend(src: CoendFunctor, dst: CoendFunctor, n: NatTransform) -> NatTransform:
    """The map ``∫^c S -> ∫^c T`` induced by a natural ``n: S -> T``."""
    comps = {}
    for r in src.keys():
        offs, total = src.blocks(r)
        offs2, total2 = dst.blocks(r)
        if not total or not total2:
            continue
        entries = {}
        for diag, (o, d) in offs.items():
            if diag not in offs2:
                continue
            o2, _ = offs2[diag]
            for a, b, x in n.component(src.full_key(r, diag)).nonzero():
                entries[(o2 + a, o + b)] = x
        big = RationalMatrix.from_dict(total2, total, entries)
        q2 = dst.projection(r)
        m = q2 @ big @ src.section(r)
        if m @ src.projection(r) != q2 @ big:
            raise FactorizationError(f"map does not factor through the coend at {r}")
        comps[r] = m
    return NatTransform(src, dst, comps, name=f"∫^{n.name}")


def induced_map_on_end(src: EndFunctor, dst: EndFunctor, n: NatTransform) -> NatTransform:
    comps = {}
    for r in src.keys():
        offs, total = src.blocks(r)
        offs2, total2 = dst.blocks(r)
        if not total or not total2:
            continue
        entries = {}
        for diag, (o, d) in offs.items():
            if diag not in offs2:
                continue
            o2, _ = offs2[diag]
            for a, b, x in n.component(src.full_key(r, diag)).nonzero():
                entries[(o2 + a, o + b)] = x
        big = RationalMatrix.from_dict(total2, total, entries)
        inc = src.inclusion(r)
        m = dst.retraction(r) @ big @ inc
        if dst.inclusion(r) @ m != big @ inc:
            raise FactorizationError(f"map does not factor through the end at {r}")
        comps[r] = m
    return NatTransform(src, dst, comps, name=f"∫_{n.name}")


# ---------------------------------------------------------------------------
# hom-spaces of functor categories


def _same_cats(f: Functor, g: Functor):
    if len(f.cats) != len(g.cats) or any(a is not b for a, b in zip(f.cats, g.cats)):
        raise EnrichedError(f"{f.name} and {g.name} live on different categories")


class NatHom:
    """``[C,V](F, G)`` computed as the end of ``F(c)* ⊗ G(c)``."""

    def __init__(self, f: Functor, g: Functor):
        _same_cats(f, g)
        self.f, self.g = f, g
        n = f.arity
        self.end = EndFunctor(Tensor(Dual(f), g), [(k, n + k) for k in range(n)],
                              name=f"[{f.name},{g.name}]")

    @property
    def dim(self) -> int:
        return self.end.dim(())

    def basis(self) -> list[NatTransform]:
        if not self.dim:
            return []
        inc = self.end.inclusion(())
        return [self.to_nat(inc.col_block(k, k + 1)) for k in range(inc.cols)]

    def to_nat(self, vec: RationalMatrix) -> NatTransform:
        """Turn a vector of ``⊕_c F(c)*⊗G(c)`` into components ``G(c) x F(c)``."""
        offs, _ = self.end.blocks(())
        comps = {}
        for diag, (o, _) in offs.items():
            df, dg = self.f.dim(diag), self.g.dim(diag)
            entries = {}
            for idx in range(df * dg):
                x = vec[o + idx, 0]
                if x:
                    entries[(idx % dg, idx // dg)] = x
            comps[diag] = RationalMatrix.from_dict(dg, df, entries)
        return NatTransform(self.f, self.g, comps)

    def to_vector(self, n: NatTransform) -> RationalMatrix:
        offs, total = self.end.blocks(())
        entries = {}
        for diag, (o, _) in offs.items():
            dg = self.g.dim(diag)
            for a, b, x in n.component(diag).nonzero():
                entries[(o + b * dg + a, 0)] = x
        return RationalMatrix.from_dict(total, 1, entries)

    def coordinates(self, n: NatTransform) -> RationalMatrix:
        """Coordinates of a natural transformation in :meth:`basis`."""
        return self.end.retraction(()) @ self.to_vector(n)


def nat_hom(f: Functor, g: Functor) -> NatHom:
    return NatHom(f, g)


def nat_hom_dim(f: Functor, g: Functor) -> int:
    return NatHom(f, g).dim


def yoneda_coend(c: FinVCat, a, f: Functor) -> tuple[CoendFunctor, RationalMatrix]:
    """``∫^b C(b,a) ⊗ F(b)`` and the canonical map from it to ``F(a)``."""
    if f.arity != 1 or f.cats[0] is not c:
        raise EnrichedError("Yoneda coend needs a one-variable functor on the category")
    co = CoendFunctor(Tensor(Representable(c, a, contravariant=True), f), [(0, 1)],
                      name=f"∫^b {c.name}(b,{a})⊗{f.name}(b)")
    offs, total = co.blocks(())
    da = f.dim((a,))
    if not total:
        return co, RationalMatrix.zeros(da, 0)
    big = hstack([f.action(0, (b,), a) for (b,), _ in sorted(offs.items(), key=lambda kv: kv[1][0])],
                 rows=da)
    m = big @ co.section(())
    if m @ co.projection(()) != big:
        raise FactorizationError("action does not factor through the Yoneda coend")
    return co, m


def yoneda_end(c: FinVCat, a, f: Functor) -> tuple[EndFunctor, RationalMatrix]:
    """``∫_b [C(a,b), F(b)]`` and the canonical map into it from ``F(a)``."""
    if f.arity != 1 or f.cats[0] is not c:
        raise EnrichedError("Yoneda end needs a one-variable functor on the category")
    en = EndFunctor(Tensor(Dual(Representable(c, a)), f), [(0, 1)],
                    name=f"∫_b [{c.name}({a},b),{f.name}(b)]")
    offs, total = en.blocks(())
    da = f.dim((a,))
    if not total:
        return en, RationalMatrix.zeros(0, da)
    # x ↦ (φ ↦ φ·x), stored in hom(a,b)* ⊗ F(b) with index φ*db + v
    blocks = []
    for (b,), (o, d) in sorted(offs.items(), key=lambda kv: kv[1][0]):
        db = f.dim((b,))
        act = f.action(0, (a,), b)
        h = c.hom_dim(a, b)
        blocks.append(vstack([act.col_block(k * da, (k + 1) * da) for k in range(h)], cols=da))
    big = vstack(blocks, cols=da)
    inc = en.inclusion(())
    m = en.retraction(()) @ big
    if inc @ m != big:
        raise FactorizationError("evaluation does not factor through the Yoneda end")
    return en, m
