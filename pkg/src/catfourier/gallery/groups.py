"""Finite groups by multiplication table, and their group-algebra categories."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Hashable, Sequence

from ..enriched import EnrichedError, FinVCat, one_object


class InvalidGroupError(EnrichedError):
    pass


@dataclass(frozen=True)
class FiniteGroup:
    """Elements ``0..n-1`` with ``table[i][j] = i*j``; ``labels`` for display."""

    name: str
    table: tuple
    labels: tuple = ()
    generators: tuple = ()

    def __post_init__(self):
        n = len(self.table)
        if n == 0:
            raise InvalidGroupError("empty group")
        for row in self.table:
            if len(row) != n or any(not (0 <= x < n) for x in row):
                raise InvalidGroupError(f"{self.name}: table is not {n}x{n} over 0..{n - 1}")
        e = self.identity
        if e is None:
            raise InvalidGroupError(f"{self.name}: no identity element")
        for i in range(n):
            if sorted(self.table[i]) != list(range(n)) or sorted(r[i] for r in self.table) != list(range(n)):
                raise InvalidGroupError(f"{self.name}: row/column {i} is not a permutation")
        for a, b, c in itertools.product(range(n), repeat=3):
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                raise InvalidGroupError(f"{self.name}: not associative at {(a, b, c)}")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(n)))

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(self.order)

    @property
    def identity(self):
        n = len(self.table)
        for e in range(n):
            if all(self.table[e][x] == x and self.table[x][e] == x for x in range(n)):
                return e
        return None

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        e = self.identity
        return next(b for b in range(self.order) if self.table[a][b] == e)

    def gens(self) -> list[int]:
        """Generators (given, or a greedy generating set)."""
        if self.generators:
            return list(self.generators)
        out, span = [], {self.identity}
        for g in range(self.order):
            if g in span:
                continue
            out.append(g)
            span = _closure(self, out)
        return out

    def is_abelian(self) -> bool:
        return all(self.mul(a, b) == self.mul(b, a) for a in self.elements for b in self.elements)


def _closure(g: FiniteGroup, gens) -> set:
    span = {g.identity}
    frontier = list(span)
    while frontier:
        x = frontier.pop()
        for s in gens:
            y = g.mul(x, s)
            if y not in span:
                span.add(y)
                frontier.append(y)
    return span


def from_elements(name: str, elements: Sequence[Hashable], mul) -> FiniteGroup:
    elements = list(elements)
    idx = {x: i for i, x in enumerate(elements)}
    try:
        table = tuple(tuple(idx[mul(a, b)] for b in elements) for a in elements)
    except KeyError as exc:
        raise InvalidGroupError(f"{name}: product leaves the element set ({exc})") from None
    return FiniteGroup(name, table, tuple(elements))


def cyclic(n: int) -> FiniteGroup:
    g = from_elements(f"Z/{n}", range(n), lambda a, b: (a + b) % n)
    return FiniteGroup(g.name, g.table, g.labels, (1,) if n > 1 else ())


def symmetric(n: int) -> FiniteGroup:
    perms = list(itertools.permutations(range(n)))
    g = from_elements(f"S_{n}", perms, lambda p, q: tuple(p[q[i]] for i in range(n)))
    idx = {p: i for i, p in enumerate(perms)}
    gens = []
    for k in range(n - 1):
        t = list(range(n))
        t[k], t[k + 1] = t[k + 1], t[k]
        gens.append(idx[tuple(t)])
    return FiniteGroup(g.name, g.table, g.labels, tuple(gens))


def trivial() -> FiniteGroup:
    return FiniteGroup("1", ((0,),), ("e",))


def by_name(name: str) -> FiniteGroup:
    name = name.lower().replace("/", "")
    if name in ("1", "trivial", "e"):
        return trivial()
    if name.startswith("z") and name[1:].isdigit():
        return cyclic(int(name[1:]))
    if name.startswith("s") and name[1:].isdigit():
        return symmetric(int(name[1:]))
    raise InvalidGroupError(f"unknown group {name!r}")


def group_algebra_category(g: FiniteGroup, name=None) -> FinVCat:
    """One object with endomorphism algebra ``k[G]`` (basis = group elements)."""
    e = g.identity
    unit = [1 if x == e else 0 for x in g.elements]
    gens = []
    for s in g.gens():
        gens.append([1 if x == s else 0 for x in g.elements])
    return one_object(name or f"k[{g.name}]", g.order, lambda i, j: {g.mul(i, j): 1}, unit,
                      generators=gens)
