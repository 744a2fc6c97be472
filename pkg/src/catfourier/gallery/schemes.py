"""Association schemes as discrete promonoidal categories with a class-matrix kernel."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Hashable, Sequence

from ..enriched import EnrichedError, FinVCat, TableFunctor, discrete
from ..kernels import Kernel, pair_kernel
from ..linalg import RationalMatrix
from ..promonoidal import Antipode, PromonoidalStructure, bimodule_composition, discrete_promonoidal
from ..report import EXACT, CheckResult

ONE = RationalMatrix.identity(1)


class NotASchemeError(EnrichedError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


@dataclass
class SchemeData:
    points: tuple
    classes: tuple             # class labels, identity first
    cls: dict                  # (x, y) -> class index
    matrices: tuple            # M_a as RationalMatrix
    p: dict                    # (a, b, c) -> intersection number
    identity: int
    star: tuple                # a ↦ a*

    @property
    def n_classes(self) -> int:
        return len(self.classes)


@dataclass
class SchemeGallery:
    data: SchemeData
    category: FinVCat                  # discrete on class indices
    promonoidal: PromonoidalStructure
    antipode: Antipode
    points: FinVCat                    # discrete on X
    target: PromonoidalStructure       # bimodule composition on X^op ⊗ X
    kernel: Kernel                     # K(a, (x, y)) = M_a(x, y)
    pair_kernel: Kernel                # K = p, for the left-inverse construction


def scheme_from_labels(points: Sequence[Hashable], label) -> SchemeData:
    """Build and validate a scheme from a class-labelling ``label(x, y)``."""
    points = tuple(points)
    n = len(points)
    order = []
    seen = {}
    # the diagonal class first, then labels in order of appearance
    for x, y in [(x, x) for x in points] + list(itertools.product(points, repeat=2)):
        lab = label(x, y)
        if lab not in seen:
            seen[lab] = len(order)
            order.append(lab)
    cls = {(x, y): seen[label(x, y)] for x, y in itertools.product(points, repeat=2)}
    if any(cls[(x, x)] != 0 for x in points):
        raise NotASchemeError("the diagonal is not a single class", witness=[x for x in points if cls[(x, x)]])
    if any(cls[(x, y)] == 0 for x, y in itertools.product(points, repeat=2) if x != y):
        raise NotASchemeError("the identity class contains off-diagonal pairs")
    r = len(order)
    idx = {x: i for i, x in enumerate(points)}
    mats = []
    for a in range(r):
        mats.append(RationalMatrix.from_dict(n, n, {(idx[x], idx[y]): 1 for (x, y), c in cls.items() if c == a}))
    star = []
    for a in range(r):
        t = mats[a].T
        match = [b for b in range(r) if mats[b] == t]
        if not match:
            raise NotASchemeError(f"class {order[a]!r} has no transpose class")
        star.append(match[0])
    p = {}
    for (x, y), c in cls.items():
        for a, b in itertools.product(range(r), repeat=2):
            cnt = sum(1 for z in points if cls[(x, z)] == a and cls[(z, y)] == b)
            key = (a, b, c)
            if key in p and p[key] != cnt:
                raise NotASchemeError(
                    f"intersection number p{key} depends on the representative pair",
                    witness=((x, y), cnt, p[key]))
            p[key] = cnt
    p = {k: v for k, v in p.items() if v}
    return SchemeData(points, tuple(order), cls, tuple(mats), p, 0, tuple(star))


def scheme_from_action(points: Sequence[Hashable], generators: Sequence[dict]) -> SchemeData:
    """Orbitals of a transitive permutation group given by generator maps."""
    points = tuple(points)
    orbit_of = {}
    k = 0
    for pair in [(x, x) for x in points] + list(itertools.product(points, repeat=2)):
        if pair in orbit_of:
            continue
        stack = [pair]
        orbit_of[pair] = k
        while stack:
            x, y = stack.pop()
            for g in generators:
                q = (g[x], g[y])
                if q not in orbit_of:
                    orbit_of[q] = k
                    stack.append(q)
        k += 1
    return scheme_from_labels(points, lambda x, y: orbit_of[(x, y)])


def hamming_scheme(n: int, q: int) -> SchemeData:
    words = list(itertools.product(range(q), repeat=n))
    return scheme_from_labels(words, lambda x, y: sum(1 for s, t in zip(x, y) if s != t))


def cyclic_scheme(n: int) -> SchemeData:
    return scheme_from_labels(range(n), lambda x, y: (y - x) % n)


def build_scheme(data: SchemeData) -> SchemeGallery:
    r = data.n_classes
    a = discrete(list(range(r)), name="classes")
    ps = discrete_promonoidal(a, data.p, {data.identity: 1}, name="scheme")
    e = data.identity
    ps.right_unit = {(x, e, x): ONE for x in range(r)}
    ps.left_unit = {(e, x, x): ONE for x in range(r)}
    s = Antipode(a, {c: data.star[c] for c in range(r)}, {(c, c): ONE for c in range(r)},
                 nu={(c, data.star[c]): ONE for c in range(r)}, u={c: ONE for c in range(r)}, name="*")
    b = discrete(list(data.points), name="X")
    target = bimodule_composition(b, matrix_order=True, name="X-bimod")
    dims = {(c, x, y): 1 for (x, y), c in data.cls.items()}
    k = Kernel(TableFunctor((a.op(), b.op(), b), dims, name="M"), ps, target, name="M")
    pk = pair_kernel(ps, bimodule_composition(a, matrix_order=False), name="p")
    return SchemeGallery(data, a, ps, s, b, target, k, pk)


def verify_scheme_kernel(data: SchemeData) -> CheckResult:
    """``M_a M_b = Σ_c p(a,b,c) M_c`` exactly, the antipode identity, and valencies."""
    res = CheckResult("scheme-kernel", level=EXACT)
    r = data.n_classes
    m = data.matrices
    n = len(data.points)
    for a, b in itertools.product(range(r), repeat=2):
        rhs = RationalMatrix.zeros(n, n)
        for c in range(r):
            k = data.p.get((a, b, c), 0)
            if k:
                rhs = rhs + m[c].scale(k)
        if m[a] @ m[b] != rhs:
            res.fail((a, b), "M_a M_b", "Σ p(a,b,c) M_c")
    st = data.star
    for a, b, c in itertools.product(range(r), repeat=3):
        res.compare((a, b, c), data.p.get((a, b, c), 0), data.p.get((st[b], st[a], st[c]), 0),
                    "p(a,b,c) vs p(b*,a*,c*)")
    for a in range(r):
        sums = {sum(row) for row in m[a].to_lists()}
        if len(sums) != 1:
            res.fail((a,), "row sums", sorted(sums), "valency not constant")
    res.evidence["p"] = {str(k): v for k, v in sorted(data.p.items())}
    return res
