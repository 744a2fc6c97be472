"""Seeded random functors, built so that functoriality holds by construction."""

from __future__ import annotations

import random

from .enriched import DirectSum, FinVCat, Functor, Representable, TableFunctor, zero_functor


def _is_discrete(c: FinVCat) -> bool:
    return all(c.hom_dim(a, b) == (1 if a == b else 0) for a in c.objects for b in c.objects)


def gen_random_functor(c: FinVCat, max_dim: int, seed: int, name: str = "r") -> Functor:
    """A functor on ``c`` with values of dimension at most ``max_dim``.

    On a discrete category the dimensions are drawn directly.  Otherwise the
    result is a direct sum of representables ``c(a,-)`` with random
    multiplicities; a representable larger than ``max_dim`` is still allowed
    once (as the only summand) so that big hom-spaces do not force the zero
    functor.
    """
    rng = random.Random(f"{c.name}|{max_dim}|{seed}")
    if max_dim <= 0:
        return zero_functor((c,), name=name)
    if _is_discrete(c):
        return TableFunctor((c,), {(a,): rng.randint(0, max_dim) for a in c.objects}, name=name)
    reps = {a: Representable(c, a) for a in c.objects}
    dims = {b: 0 for b in c.objects}
    summands = []
    order = list(c.objects)
    rng.shuffle(order)
    for a in order:
        for _ in range(rng.randint(0, 2)):
            new = {b: dims[b] + c.hom_dim(a, b) for b in c.objects}
            if max(new.values()) > max_dim and summands:
                break
            summands.append(reps[a])
            dims = new
            if max(new.values()) > max_dim:
                break
    if not summands:
        summands.append(reps[order[0]])
    return DirectSum(summands, name=name)
