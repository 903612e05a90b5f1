"""Seeded random automorphisms shared by the diffop, ncsym and acceptance tests."""

from __future__ import annotations

import random

from treehopf.diffop import automorphism_from_strings, random_automorphism
from treehopf.ncseries import Truncation


def random_maps(count, seed=2024, max_vars=3, t_order=5, z_degree=5, max_deg=3):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(1, max_vars)
        W = sorted(rng.sample([1, 2, 3], rng.randint(1, 3)))
        F = random_automorphism(rng, nvars=n, max_deg=max_deg, t_order=t_order,
                                z_degree=z_degree, W=W, alpha=1, terms=3)
        # skip maps whose components all came out empty
        if F.components:
            out.append(F)
    return out


def catalan_map(N=8, D=None):
    D = N + 1 if D is None else D
    return automorphism_from_strings(Truncation(D, N, 1), {1: ["z1^2"]}, alpha=2)


def small_random_map(seed, n=2, N=4, Dz=4, W=(1, 2)):
    return random_automorphism(random.Random(seed), nvars=n, max_deg=3, t_order=N, z_degree=Dz, W=W,
                               alpha=1, terms=2)
