"""Truncated species: functors on the free linear category of finite bijections."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from ..enriched import CoendFunctor, EnrichedError, FinVCat, Functor, TableFunctor, Tensor
from ..linalg import RationalMatrix, hstack, mat_direct_sum, mat_kron
from ..promonoidal import PromonoidalStructure, upper_convolution
from .groups import FiniteGroup, symmetric

MAX_TRUNCATION = 6
_ONE = Fraction(1)


class TruncationOverflow(EnrichedError):
    pass


class InvalidRepresentation(EnrichedError):
    pass


def _compose(p: tuple, q: tuple) -> tuple:
    return tuple(p[i] for i in q)


class SpeciesCategory(FinVCat):
    """Objects ``0..N``; ``hom(n,n) = k[S_n]`` with adjacent transpositions as generators."""

    def __init__(self, n: int):
        if not 0 <= n <= MAX_TRUNCATION:
            raise TruncationOverflow(f"truncation {n} outside 0..{MAX_TRUNCATION}")
        self.truncation = n
        self.groups = [symmetric(k) for k in range(n + 1)]
        self.perm_index = [{p: i for i, p in enumerate(g.labels)} for g in self.groups]
        super().__init__(f"Bij≤{n}", list(range(n + 1)), {(k, k): factorial(k) for k in range(n + 1)}, {}, {})
        self._lazy_comp: dict = {}

    def comp(self, a, b, c):
        if not (a == b == c):
            return super().comp(a, b, c)
        m = self._lazy_comp.get(a)
        if m is None:
            g = self.groups[a]
            n = g.order
            m = RationalMatrix.from_dict(n, n * n, {(g.mul(i, j), i * n + j): _ONE
                                                    for i in range(n) for j in range(n)})
            self._lazy_comp[a] = m
        return m

    def ident(self, a):
        g = self.groups[a]
        return RationalMatrix.from_dict(g.order, 1, {(g.identity, 0): 1})

    def generators(self, a, b):
        if a != b:
            return []
        g = self.groups[a]
        return [RationalMatrix.from_dict(g.order, 1, {(s, 0): 1}) for s in g.gens()]

    def with_data(self, comp=None, ident=None):
        raise EnrichedError("species categories are fixed")

    def check_object(self, n: int):
        if not 0 <= n <= self.truncation:
            raise TruncationOverflow(f"degree {n} exceeds truncation {self.truncation}")


class Species(Functor):
    """A species given by generator images ``gens[n] = [ρ(s_1), ..., ρ(s_{n-1})]``."""

    def __init__(self, cat: SpeciesCategory, gens: dict, dims: dict | None = None, name="f"):
        self.cats = (cat,)
        self.cat = cat
        self.name = name
        self.gens = {}
        self._dims = {}
        self._rho = {}
        for n in cat.objects:
            g = gens.get(n)
            d = (dims or {}).get(n)
            if g is None and not d:
                continue
            if d is None:
                d = g[0].rows if g else 0
            g = list(g or [])
            ngen = len(cat.groups[n].gens())
            if len(g) != ngen or any(m.shape != (d, d) for m in g):
                raise InvalidRepresentation(f"{name}({n}): need {ngen} generator images of size {d}")
            if d:
                self._dims[n] = d
                self.gens[n] = g
        for n in list(gens) + list(dims or {}):
            cat.check_object(n)

    def dim(self, key):
        return self._dims.get(key[0], 0)

    def rho(self, n: int) -> list:
        """Images of every group element, validated against the group law."""
        got = self._rho.get(n)
        if got is None:
            grp = self.cat.groups[n]
            d = self._dims[n]
            gens = grp.gens()
            images = {grp.identity: RationalMatrix.identity(d)}
            frontier = [grp.identity]
            while frontier:
                x = frontier.pop()
                for s, m in zip(gens, self.gens[n]):
                    y = grp.mul(s, x)
                    if y not in images:
                        images[y] = m @ images[x]
                        frontier.append(y)
            for x in grp.elements:
                for s, m in zip(gens, self.gens[n]):
                    if images[grp.mul(s, x)] != m @ images[x]:
                        raise InvalidRepresentation(f"{self.name}({n}): generator images violate S_{n} relations")
            got = [images[x] for x in grp.elements]
            self._rho[n] = got
        return got

    def _action(self, i, key, target):
        n = key[0]
        return hstack(self.rho(n), rows=self._dims[n])

    def _action_on(self, i, key, target, vec):
        n = key[0]
        grp = self.cat.groups[n]
        nz = list(vec.nonzero())
        if len(nz) == 1 and nz[0][0] in grp.gens() and nz[0][2] == 1:
            return self.gens[n][grp.gens().index(nz[0][0])]
        rho = self.rho(n)
        out = RationalMatrix.zeros(self._dims[n], self._dims[n])
        for k, _, x in nz:
            out = out + rho[k].scale(x)
        return out

    def dims_list(self) -> list:
        return [self.dim((n,)) for n in self.cat.objects]

    def concentrated(self, n: int) -> "Species":
        self.cat.check_object(n)
        if n not in self._dims:
            return Species(self.cat, {}, name=f"{self.name}[{n}]")
        return Species(self.cat, {n: self.gens[n]}, {n: self._dims[n]}, name=f"{self.name}[{n}]")


class SpeciesProduct(Functor):
    """``p(a,b,c) = k[Bij(a ⊔ b, c)]`` on ``A^op ⊗ A^op ⊗ A``; basis = ``S_c`` for ``a+b = c``."""

    def __init__(self, cat: SpeciesCategory):
        self.cat = cat
        self.cats = (cat.op(), cat.op(), cat)
        self.name = "Bij(⊔,-)"

    def dim(self, key):
        a, b, c = key
        return factorial(c) if a + b == c else 0

    def _perm(self, i, key, h: tuple, sigma: tuple) -> tuple:
        a, b, c = key
        if i == 0:
            return _compose(sigma, h + tuple(range(a, c)))
        if i == 1:
            return _compose(sigma, tuple(range(a)) + tuple(a + x for x in h))
        return _compose(h, sigma)

    def _image_matrix(self, i, key, hk: int) -> RationalMatrix:
        a, b, c = key
        n = key[i]
        h = self.cat.groups[n].labels[hk]
        labels = self.cat.groups[c].labels
        idx = self.cat.perm_index[c]
        return RationalMatrix.permutation([idx[self._perm(i, key, h, s)] for s in labels], len(labels))

    def _action(self, i, key, target):
        n = key[i]
        return hstack([self._image_matrix(i, key, hk) for hk in range(factorial(n))], rows=self.dim(key))

    def _action_on(self, i, key, target, vec):
        d = self.dim(key)
        out = RationalMatrix.zeros(d, d)
        for hk, _, x in vec.nonzero():
            m = self._image_matrix(i, key, hk)
            out = m if out.is_zero and x == 1 else out + m.scale(x)
        return out


def build_species_category(n: int) -> tuple[SpeciesCategory, PromonoidalStructure]:
    cat = SpeciesCategory(n)
    p = SpeciesProduct(cat)
    j = TableFunctor((cat,), {(0,): 1}, name="δ₀")
    return cat, PromonoidalStructure(cat, p, j, name="species")


def _trivial_gens(cat, n, sign=False):
    k = len(cat.groups[n].gens())
    v = -1 if sign else 1
    return [RationalMatrix.from_rows([[v]]) for _ in range(k)]


def exponential_species(cat: SpeciesCategory) -> Species:
    """``E``: the trivial representation in every degree."""
    return Species(cat, {n: _trivial_gens(cat, n) for n in cat.objects}, {n: 1 for n in cat.objects}, name="E")


def singleton_species(cat: SpeciesCategory) -> Species:
    """``X``: one structure on a one-element set."""
    return Species(cat, {1: []}, {1: 1}, name="X")


def regular_gens(cat: SpeciesCategory, n: int) -> list:
    g = cat.groups[n]
    return [RationalMatrix.permutation([g.mul(s, x) for x in g.elements], g.order) for s in g.gens()]


def random_species(cat: SpeciesCategory, seed: int, max_mult: int = 2, name="r") -> Species:
    """Sums of trivial and sign representations, plus regular ones in low degree."""
    rng = random.Random(f"species|{cat.truncation}|{seed}")
    gens, dims = {}, {}
    for n in cat.objects:
        blocks = []
        for _ in range(rng.randint(0, max_mult)):
            blocks.append(_trivial_gens(cat, n))
        if n >= 2 and rng.random() < 0.4:
            blocks.append(_trivial_gens(cat, n, sign=True))
        if 2 <= n <= 3 and rng.random() < 0.3:
            blocks.append(regular_gens(cat, n))
        if not blocks:
            continue
        k = len(cat.groups[n].gens())
        d = sum((b[0].rows if b else 1) for b in blocks)
        if k == 0:
            gens[n] = []
        else:
            gens[n] = [mat_direct_sum(*[b[t] for b in blocks]) for t in range(k)]
        dims[n] = d
    return Species(cat, gens, dims, name=name)


def species_convolve(ps: PromonoidalStructure, f: Functor, g: Functor) -> CoendFunctor:
    """``(f ∗ g)(n) = ∫^{ab} f(a) ⊗ g(b) ⊗ k[Bij(a⊔b, n)]``, exact up to the truncation."""
    return upper_convolution(ps, f, g)


def species_dim(f: Functor, n: int) -> int:
    f.cats[0].check_object(n)
    return f.dim((n,))


def species_hadamard(f: Species, g: Species) -> Species:
    """Pointwise tensor product with the diagonal action."""
    cat = f.cat
    gens, dims = {}, {}
    for n in cat.objects:
        if f.dim((n,)) and g.dim((n,)):
            dims[n] = f.dim((n,)) * g.dim((n,))
            gens[n] = [mat_kron(a, b) for a, b in zip(f.gens[n], g.gens[n])]
    return Species(cat, gens, dims, name=f"{f.name}⊙{g.name}")


class TensorPower(Functor):
    """``n ↦ (k^d)^{⊗n}`` on ``A^op``, permutations acting on tensor positions."""

    def __init__(self, cat: SpeciesCategory, d: int):
        self.cat = cat
        self.d = d
        self.cats = (cat.op(),)
        self.name = f"(k^{d})^⊗"
        self._words = {}

    def words(self, n):
        w = self._words.get(n)
        if w is None:
            w = list(itertools.product(range(self.d), repeat=n))
            self._words[n] = ({x: i for i, x in enumerate(w)}, w)
        return self._words[n]

    def dim(self, key):
        return self.d ** key[0]

    def _perm_matrix(self, n, hk):
        sigma = self.cat.groups[n].labels[hk]
        idx, words = self.words(n)
        return RationalMatrix.permutation([idx[tuple(w[sigma[j]] for j in range(n))] for w in words],
                                          len(words)).T

    def _action(self, i, key, target):
        n = key[0]
        return hstack([self._perm_matrix(n, hk) for hk in range(factorial(n))], rows=self.dim(key))

    def _action_on(self, i, key, target, vec):
        d = self.dim(key)
        out = RationalMatrix.zeros(d, d)
        for hk, _, x in vec.nonzero():
            out = out + self._perm_matrix(key[0], hk).scale(x)
        return out


def analytic_evaluate(f: Species, d: int) -> list[int]:
    """``n ↦ dim f(n) ⊗_{S_n} (k^d)^{⊗n}`` for every ``n`` up to the truncation."""
    if not 0 <= d <= 4:
        raise EnrichedError("analytic evaluation supports 0 ≤ d ≤ 4")
    cat = f.cat
    x = TensorPower(cat, d)
    out = []
    for n in cat.objects:
        fn = f.concentrated(n)
        co = CoendFunctor(Tensor(fn, x), [(1, 0)], name=f"{f.name}({d})")
        out.append(co.dim(()))
    return out
