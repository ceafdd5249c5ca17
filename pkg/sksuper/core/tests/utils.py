"""Random inputs shared by the core tests."""
from __future__ import absolute_import, division, print_function

import itertools

import numpy as np

from sksuper.core.grassmann import GrassmannNumber, Superfunction, _degrees
from sksuper.core.chartgeom import Chart, GradedMetric


def random_grassmann(m, rng, parity=None, invertible=False):
    coeffs = rng.uniform(-1, 1, 2 ** m)
    if parity is not None:
        coeffs[_degrees(m) % 2 != parity] = 0.
    if invertible:
        coeffs[0] = rng.choice([-1, 1]) * rng.uniform(1., 2.)
    return GrassmannNumber(m, coeffs)


def random_polynomial(n, rng, degree=2, scale=1.):
    exps = [e for e in itertools.product(range(degree + 1), repeat=n)
            if sum(e) <= degree]
    return dict((e, scale * rng.uniform(-1, 1)) for e in exps)


def random_superfunction(n, m, rng, parity=None, degree=2, scale=1.):
    terms = {}
    for mask in range(2 ** m):
        if parity is not None and _degrees(m)[mask] % 2 != parity:
            continue
        terms[mask] = random_polynomial(n, rng, degree, scale)
    return Superfunction(n, m, terms, parity)


def random_graded_metric(n, m, rng, scale=0.1, degree=2):
    """
    Polynomial graded metric near the flat one; non-degenerate on the box
    ``[-0.5, 0.5]**n``.
    """
    N = n + m
    entries = [[0.] * N for _ in range(N)]
    for a, b in itertools.combinations_with_replacement(range(N), 2):
        odd_a, odd_b = a >= n, b >= n
        if not odd_a and not odd_b:
            f = random_superfunction(n, m, rng, 0, degree, scale)
            if a == b:
                f = f + 2.
            entries[a][b] = entries[b][a] = f
        elif odd_a and odd_b:
            if a == b:
                continue
            f = random_superfunction(n, m, rng, 0, degree, scale)
            if (a - n) % 2 == 0 and b == a + 1:
                f = f + 1.
            entries[a][b] = f
            entries[b][a] = -f
        else:
            f = random_superfunction(n, m, rng, 1, degree, scale)
            entries[a][b] = entries[b][a] = f
    return GradedMetric(Chart(n, m), entries)


def random_points(n, rng, count=5, radius=0.5):
    return [rng.uniform(-radius, radius, n) for _ in range(count)]
