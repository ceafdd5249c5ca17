# ######################################################################
# Copyright (c) 2014, Brookhaven Science Associates, Brookhaven        #
# National Laboratory. All rights reserved.                            #
#                                                                      #
# Redistribution and use in source and binary forms, with or without   #
# modification, are permitted provided that the following conditions   #
# are met:                                                             #
#                                                                      #
# * Redistributions of source code must retain the above copyright     #
#   notice, this list of conditions and the following disclaimer.      #
#                                                                      #
# * Redistributions in binary form must reproduce the above copyright  #
#   notice this list of conditions and the following disclaimer in     #
#   the documentation and/or other materials provided with the         #
#   distribution.                                                      #
#                                                                      #
# * Neither the name of the Brookhaven Science Associates, Brookhaven  #
#   National Laboratory nor the names of its contributors may be used  #
#   to endorse or promote products derived from this software without  #
#   specific prior written permission.                                 #
#                                                                      #
# THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS  #
# "AS IS" AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT    #
# LIMITED TO, THE IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS    #
# FOR A PARTICULAR PURPOSE ARE DISCLAIMED. IN NO EVENT SHALL THE       #
# COPYRIGHT HOLDER OR CONTRIBUTORS BE LIABLE FOR ANY DIRECT,           #
# INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR CONSEQUENTIAL DAMAGES   #
# (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR   #
# SERVICES; LOSS OF USE, DATA, OR PROFITS; OR BUSINESS INTERRUPTION)   #
# HOWEVER CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN CONTRACT,  #
# STRICT LIABILITY, OR TORT (INCLUDING NEGLIGENCE OTHERWISE) ARISING   #
# IN ANY WAY OUT OF THE USE OF THIS SOFTWARE, EVEN IF ADVISED OF THE   #
# POSSIBILITY OF SUCH DAMAGE.                                          #
########################################################################
from __future__ import absolute_import, division, print_function

import numpy as np
import pytest
from numpy.testing import assert_array_equal, assert_allclose

from sksuper.core.grassmann import Superfunction, Polynomial, SmoothFunction
from sksuper.core.chartgeom import (Chart, GradedMetric, flat_metric,
                                    validate_metric, christoffel_at,
                                    connection_residuals_at, curvature_at,
                                    curvature_symmetry_residuals,
                                    sectional_curvature, killing_residual_at,
                                    covariant_derivatives_at,
                                    reduced_christoffel_at)
from sksuper.core.utils import DomainError, SingularMetricError
from sksuper.core.tests.utils import random_graded_metric, random_points


def poly(n, m, coeffs):
    return Superfunction(n, m, {(): Polynomial(n, coeffs)})


def hyperbolic():
    y2 = poly(2, 0, {(0, -2): 1.})
    return GradedMetric(Chart(2, 0, ['x', 'y'], lower=[None, 0.]),
                        [[y2, 0.], [0., y2]])


def sphere():
    """Round metric dtheta**2 + sin(theta)**2 dphi**2, exact partials."""
    zero = SmoothFunction(2, lambda p: 0.)
    d2 = SmoothFunction(2, lambda p: np.sin(2 * p[0]),
                        partials={0: lambda p: 2 * np.cos(2 * p[0]),
                                  1: zero})
    g = SmoothFunction(2, lambda p: np.sin(p[0]) ** 2,
                       partials={0: d2, 1: zero})
    chart = Chart(2, 0, ['theta', 'phi'], lower=[0., None],
                  upper=[np.pi, None])
    return GradedMetric(chart, [[1., 0.], [0., Superfunction(2, 0, {(): g})]])


def classical_christoffel(G, dG):
    """Gamma[i, j, k] = 1/2 g^kl (d_i g_jl + d_j g_il - d_l g_ij)."""
    Ginv = np.linalg.inv(G)
    L = 0.5 * (np.einsum('ijl->ijl', dG) + np.einsum('jil->ijl', dG) -
               np.einsum('lij->ijl', dG))
    return np.einsum('ijl,lk->ijk', L, Ginv)


def constant_curvature(G, K):
    """R[a, b, c, e] for R(X, Y)Z = K (<Y, Z> X - <X, Z> Y)."""
    eye = np.eye(len(G))
    return K * (np.einsum('bc,ae->abce', G, eye) -
                np.einsum('ac,be->abce', G, eye))


def test_chart():
    chart = Chart(2, 2, lower=[None, 0.])
    assert chart.dim == 4
    assert_array_equal(chart.parities, [0, 0, 1, 1])
    assert chart.names == ['x1', 'x2', 'xi1', 'xi2']
    assert chart.contains([5., 1.])
    assert not chart.contains([5., -1.])
    with pytest.raises(DomainError):
        chart.check_point([0., 0.])
    with pytest.raises(ValueError):
        chart.check_point([1.])
    with pytest.raises(ValueError):
        Chart(2, 1, even_names=['x'])


def test_validate_metric():
    g = flat_metric(2, 2)
    pts = [np.zeros(2), np.ones(2)]
    assert validate_metric(g, pts)['passed']
    with pytest.raises(ValueError):
        flat_metric(2, 1)

    entries = [[1., 0., 0., 0.], [0., 1., 0., 0.],
               [0., 0., 0., 1.], [0., 0., 1., 0.]]
    report = validate_metric(GradedMetric(Chart(2, 2), entries), pts)
    assert not report['passed']
    assert report['symmetry'][0]['indices'] == [2, 3]

    entries = [[1., 0., 1., 0.], [0., 1., 0., 0.],
               [1., 0., 0., 1.], [0., 0., -1., 0.]]
    report = validate_metric(GradedMetric(Chart(2, 2), entries), pts)
    assert not report['passed']
    assert report['parity']

    singular = GradedMetric(Chart(1, 0), [[poly(1, 0, {(1, ): 1.})]])
    report = validate_metric(singular, [np.zeros(1)])
    assert report['nondegeneracy']


def test_flat():
    g = flat_metric(2, 2)
    p = np.array([0.3, -0.2])
    assert_array_equal(christoffel_at(g, p).values, 0.)
    assert connection_residuals_at(g, p) == (0., 0.)
    assert_array_equal(curvature_at(g, p).values, 0.)


def test_hyperbolic_christoffel():
    g = hyperbolic()
    gamma = christoffel_at(g, [0., 1.]).reduced
    assert_allclose(gamma[0, 1, 0], -1.)
    assert_allclose(gamma[0, 0, 1], 1.)
    assert_allclose(gamma[1, 1, 1], -1.)
    torsion, metricity = connection_residuals_at(g, [0., 1.])
    assert torsion <= 1e-10 and metricity <= 1e-10
    with pytest.raises(DomainError):
        christoffel_at(g, [0., -1.])


def test_perturbed_connection():
    g = hyperbolic()
    p = [0.2, 1.5]
    values = np.array(christoffel_at(g, p).values)
    values[0, 1, 0, 0] += 0.1
    assert max(connection_residuals_at(g, p, values)) >= 0.05


@pytest.mark.parametrize('build, K, points', [
    (hyperbolic, -1., [[0., 1.], [0.7, 0.4], [-2., 3.]]),
    (sphere, 1., [[0.4, 0.], [1.2, 2.], [2.5, -1.]])])
def test_classical_reduction(build, K, points):
    g = build()
    for p in points:
        p = np.asarray(p)
        G = g.reduced_at(p)
        dG = np.array([g.values_at(p, (i, ))[..., 0] for i in range(2)])
        assert_allclose(christoffel_at(g, p).reduced,
                        classical_christoffel(G, dG), atol=1e-10)
        R = curvature_at(g, p)
        assert_allclose(R.reduced, constant_curvature(G, K), atol=1e-8)
        assert_allclose(sectional_curvature(g, p, 0, 1, R), K, atol=1e-8)


def test_sectional_curvature_errors():
    g = hyperbolic()
    with pytest.raises(ValueError):
        sectional_curvature(g, [0., 1.], [1., 0.], [2., 0.])


def test_singular_metric():
    x = poly(1, 0, {(1, ): 1.})
    g = GradedMetric(Chart(1, 0), [[x]])
    with pytest.raises(SingularMetricError):
        christoffel_at(g, [0.])


def test_random_metrics():
    rng = np.random.RandomState(0)
    shapes = [(n, m) for n in (1, 2, 3) for m in (0, 2)]
    for trial in range(50):
        n, m = shapes[trial % len(shapes)]
        g = random_graded_metric(n, m, rng)
        points = random_points(n, rng)
        assert validate_metric(g, points)['passed']
        for k, p in enumerate(points):
            gamma = christoffel_at(g, p)
            assert gamma.parity_violation() == 0.
            torsion, metricity = connection_residuals_at(g, p, gamma)
            assert torsion <= 1e-9 and metricity <= 1e-9
            assert_allclose(reduced_christoffel_at(g, p), gamma.reduced,
                            atol=1e-12)
            if k < 2:
                res = curvature_symmetry_residuals(g, p)
                assert max(res.values()) <= 1e-8, res


def test_reduced_christoffel_matches_reduced_metric():
    rng = np.random.RandomState(4)
    g = random_graded_metric(2, 2, rng)
    p = np.array([0.1, -0.3])
    G = g.reduced_at(p)[:2, :2]
    dG = np.array([g.values_at(p, (i, ))[:2, :2, 0] for i in range(2)])
    assert_allclose(reduced_christoffel_at(g, p)[:2, :2, :2],
                    classical_christoffel(G, dG), atol=1e-12)


def test_killing_fields():
    flat = flat_metric(2, 2)
    const = [1., 0., 0., 0.]
    assert killing_residual_at(flat, const, [0.3, 0.1]) == 0.
    euclid = flat_metric(2, 0)
    rotation = [poly(2, 0, {(0, 1): -1.}), poly(2, 0, {(1, 0): 1.})]
    assert killing_residual_at(euclid, rotation, [0.5, -0.7]) <= 1e-12
    dilation = [poly(2, 0, {(1, 0): 1.}), 0.]
    assert killing_residual_at(euclid, dilation, [0.5, -0.7]) > 0.5


def test_covariant_derivative_parity():
    g = flat_metric(1, 2)
    mixed = [Superfunction(1, 2, {(): 1., (1, ): 1.}), 0., 0.]
    with pytest.raises(ValueError):
        covariant_derivatives_at(g, mixed, [0.])
    odd_field = [Superfunction.odd_coordinate(1, 2, 1), 0., 0.]
    nabla, parity = covariant_derivatives_at(g, odd_field, [0.])
    assert parity == 1
    # d_xi1 (xi1 d_x) = d_x
    assert nabla[1, 0, 0] == 1.
