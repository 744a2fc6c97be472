"""Kernels over the two-element quantale ``0 ≤ 1`` on a discrete carrier.

With ``A = 1`` a kernel is a subset ``K`` of the carrier, and it is
multiplicative when ``K ⊛ K = K``: ``z ∈ K`` exactly when some ``x, y ∈ K``
have ``p(x, y, z)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Hashable, Sequence

from ..enriched import EnrichedError

MAX_CARRIER = 12


class OversizedCarrierError(EnrichedError):
    pass


@dataclass
class BoolInstance:
    mode: str
    carrier: tuple
    p: frozenset                       # triples (x, y, z) with p(x,y,z) = 1
    candidate: frozenset | None = None

    def holds(self, x, y, z) -> bool:
        return (x, y, z) in self.p


def from_predicate(mode: str, carrier: Sequence[Hashable], pred: Callable) -> BoolInstance:
    carrier = tuple(carrier)
    table = frozenset(t for t in itertools.product(carrier, repeat=3) if pred(*t))
    return BoolInstance(mode, carrier, table)


def submodule_instance(modulus: int) -> BoolInstance:
    """``Z/n`` as a ``Z``-module: ``p(x,y,z) = [∃ r,s: z = rx + sy]``."""
    n = modulus

    def spans(x, y, z):
        return any((r * x + s * y) % n == z for r in range(n) for s in range(n))

    return from_predicate("submodule", range(n), spans)


def convexity_instance(npoints: int) -> BoolInstance:
    """Collinear points ``0..n-1``; ``p(x,y,z)`` says ``z`` lies between ``x`` and ``y``."""
    return from_predicate("convexity", range(npoints), lambda x, y, z: min(x, y) <= z <= max(x, y))


def bool_kernel_check(b: BoolInstance, k=None) -> bool:
    k = frozenset(b.candidate if k is None else k)
    for z in b.carrier:
        reached = any(b.holds(x, y, z) for x in k for y in k)
        if reached != (z in k):
            return False
    return True


def bool_enumerate_kernels(b: BoolInstance) -> list[frozenset]:
    """Every subset of the carrier passing :func:`bool_kernel_check`."""
    if len(b.carrier) > MAX_CARRIER:
        raise OversizedCarrierError(f"carrier has {len(b.carrier)} > {MAX_CARRIER} elements")
    out = []
    for r in range(len(b.carrier) + 1):
        for sub in itertools.combinations(b.carrier, r):
            if bool_kernel_check(b, sub):
                out.append(frozenset(sub))
    return out


def submodules(modulus: int) -> list[frozenset]:
    """Subgroups of ``Z/n`` (these are its ``Z``-submodules), one per divisor."""
    return [frozenset(range(0, modulus, d)) for d in range(1, modulus + 1) if modulus % d == 0]
