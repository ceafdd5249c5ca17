#! encoding: utf-8
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
"""
Graded Riemannian metrics on a single chart R^{n|m}.

Coordinates are ordered ``x_1 .. x_n, xi_1 .. xi_m``; index ``a`` has parity
``|a| = 0`` for ``a < n`` and ``1`` otherwise.  All geometric quantities are
computed pointwise: a superfunction evaluated at a point of the reduced
chart is a Grassmann number, stored as the last axis of a numpy array
(see :mod:`sksuper.core.grassmann`).

Conventions::

    nabla_{d_a} d_b = sum_c Gamma[a, b, c] d_c
    R(d_a, d_b) d_c = sum_e R[a, b, c, e] d_e
"""
from __future__ import absolute_import, division, print_function
import six
from six.moves import range

import logging
import itertools

import numpy as np

from .grassmann import (GrassmannNumber, Superfunction, Polynomial,
                        gproduct, gmatmul, gmatinv, left_derivative,
                        indices_from_mask, _degrees)
from .utils import (get_tolerance, parity_sign, DomainError,
                    NotInvertibleError, SingularMetricError,
                    SignatureMismatchError)

logger = logging.getLogger(__name__)


class Chart(object):
    """
    The coordinate chart R^{n|m} with an optional box domain.

    Parameters
    ----------
    n, m : int
        Even and odd dimension.
    even_names, odd_names : sequence of str, optional
    lower, upper : sequence of float or None, optional
        Open bounds per even coordinate; None means unbounded.
    domain : callable, optional
        Extra predicate on points of R^n.
    """

    def __init__(self, n, m, even_names=None, odd_names=None, lower=None,
                 upper=None, domain=None):
        self.n = int(n)
        self.m = int(m)
        if self.n < 0 or self.m < 0:
            raise ValueError("chart dimensions must be non-negative")
        self.even_names = list(even_names or ['x{}'.format(i + 1)
                                              for i in range(self.n)])
        self.odd_names = list(odd_names or ['xi{}'.format(i + 1)
                                            for i in range(self.m)])
        if len(self.even_names) != self.n or len(self.odd_names) != self.m:
            raise ValueError("coordinate names do not match R^{}|{}"
                             "".format(self.n, self.m))
        self.lower = list(lower) if lower is not None else [None] * self.n
        self.upper = list(upper) if upper is not None else [None] * self.n
        if len(self.lower) != self.n or len(self.upper) != self.n:
            raise ValueError("domain bounds need one entry per even "
                             "coordinate")
        self.domain = domain

    @property
    def dim(self):
        return self.n + self.m

    @property
    def parities(self):
        return np.array([0] * self.n + [1] * self.m)

    @property
    def names(self):
        return self.even_names + self.odd_names

    def contains(self, point):
        point = np.asarray(point, dtype=float)
        if point.shape != (self.n, ) or not np.all(np.isfinite(point)):
            return False
        for x, lo, hi in zip(point, self.lower, self.upper):
            if (lo is not None and x <= lo) or (hi is not None and x >= hi):
                return False
        return self.domain is None or bool(self.domain(point))

    def check_point(self, point):
        """Return the point as an array or raise DomainError."""
        point = np.asarray(point, dtype=float)
        if point.shape != (self.n, ):
            raise ValueError("point must have {} coordinates, got shape {}"
                             "".format(self.n, point.shape))
        if not self.contains(point):
            raise DomainError("point {} is outside the chart domain"
                              "".format(point.tolist()))
        return point

    def __repr__(self):
        return 'Chart(R^{}|{})'.format(self.n, self.m)


class GradedMetric(object):
    """
    A graded metric ``g[a][b] = <d_a, d_b>`` given by superfunctions.

    Parameters
    ----------
    chart : Chart
    entries : sequence of sequence of Superfunction
        Square matrix of size ``n + m``; numbers are promoted to constants.

    Notes
    -----
    Partial derivatives along even coordinates are computed once per axis
    tuple and cached; odd partials are taken on evaluated values, since
    evaluation commutes with odd derivatives.
    """

    def __init__(self, chart, entries):
        self.chart = chart
        N = chart.dim
        if len(entries) != N or any(len(row) != N for row in entries):
            raise ValueError("metric must be a {0}x{0} matrix".format(N))
        rows = []
        for row in entries:
            out = []
            for f in row:
                if not isinstance(f, Superfunction):
                    f = Superfunction.constant(chart.n, chart.m, f)
                if f.signature != (chart.n, chart.m):
                    raise SignatureMismatchError(
                        "metric entry on R^{}|{} for a chart R^{}|{}".format(
                            f.n, f.m, chart.n, chart.m))
                out.append(f)
            rows.append(out)
        self.entries = rows
        self._partials = {(): rows}

    @property
    def n(self):
        return self.chart.n

    @property
    def m(self):
        return self.chart.m

    @property
    def dim(self):
        return self.chart.dim

    @property
    def parities(self):
        return self.chart.parities

    def partial_entries(self, axes):
        """Entries differentiated along the even axes in ``axes``."""
        axes = tuple(sorted(axes))
        if axes not in self._partials:
            parent = self.partial_entries(axes[:-1])
            self._partials[axes] = [[f.partial(axes[-1]) for f in row]
                                    for row in parent]
        return self._partials[axes]

    def values_at(self, point, axes=()):
        """Entries at a point as an ``(N, N, 2**m)`` array."""
        point = self.chart.check_point(point)
        N = self.dim
        out = np.zeros((N, N, 2 ** self.m))
        for a, row in enumerate(self.partial_entries(axes)):
            for b, f in enumerate(row):
                for mask, coeff in six.iteritems(f.masks):
                    out[a, b, mask] = coeff(point)
        return out

    def reduced_at(self, point):
        """Degree-0 part of the metric at a point (the reduced Gram matrix)."""
        return self.values_at(point)[..., 0]

    def derivatives_at(self, point, base_axes=()):
        """
        ``D[c, a, b] = d_c (d_base g_ab)`` at a point for every coordinate c.
        """
        base = self.values_at(point, base_axes)
        D = np.zeros((self.dim, ) + base.shape)
        for c in range(self.n):
            D[c] = self.values_at(point, base_axes + (c, ))
        for alpha in range(1, self.m + 1):
            D[self.n + alpha - 1] = left_derivative(base, alpha)
        return D

    def __repr__(self):
        return 'GradedMetric({!r})'.format(self.chart)


def flat_metric(n, m, chart=None):
    """
    The standard flat metric on R^{n|m}: identity on the even block and
    the symplectic form ``xi_{2k-1}, xi_{2k} -> 1`` on the odd block.

    Raises
    ------
    ValueError
        If ``m`` is odd.
    """
    if m % 2:
        raise ValueError("a graded metric needs an even odd dimension, got "
                         "m={}".format(m))
    chart = chart or Chart(n, m)
    N = n + m
    entries = [[0.] * N for _ in range(N)]
    for i in range(n):
        entries[i][i] = 1.
    for k in range(0, m, 2):
        entries[n + k][n + k + 1] = 1.
        entries[n + k + 1][n + k] = -1.
    return GradedMetric(chart, entries)


def _coefficient_is_zero(coeff, points, tol):
    if isinstance(coeff, Polynomial):
        return coeff.is_zero
    return all(abs(coeff(p)) <= tol for p in points)


def validate_metric(g, points, tolerance=None):
    """
    Check that a graded metric is even, graded-symmetric and
    non-degenerate.

    Parity and symmetry are checked on the stored terms (polynomial
    coefficients exactly, opaque ones at the sample points);
    non-degeneracy by Grassmann inversion at each sample point.

    Parameters
    ----------
    g : GradedMetric
    points : sequence of array_like
        Sample points of the reduced chart.

    Returns
    -------
    report : dict
        ``parity``, ``symmetry`` and ``nondegeneracy`` lists of violations
        (dicts naming coordinates, indices and points) and ``passed``.
    """
    tol = get_tolerance(tolerance)
    points = [g.chart.check_point(p) for p in points]
    names = g.chart.names
    par = g.parities
    report = {'parity': [], 'symmetry': [], 'nondegeneracy': []}
    if g.m % 2:
        report['nondegeneracy'].append(
            {'reason': 'odd dimension {} is not even'.format(g.m)})
    for a, b in itertools.product(range(g.dim), range(g.dim)):
        f = g.entries[a][b]
        want = (par[a] + par[b]) % 2
        for mask, coeff in six.iteritems(f.masks):
            if _degrees(g.m)[mask] % 2 != want and \
                    not _coefficient_is_zero(coeff, points, tol):
                report['parity'].append(
                    {'indices': [a, b], 'coordinates': [names[a], names[b]],
                     'monomial': list(indices_from_mask(mask))})
        if b < a:
            continue
        diff = f - g.entries[b][a] * float(parity_sign(par[a], par[b]))
        bad = [list(indices_from_mask(mask))
               for mask, coeff in six.iteritems(diff.masks)
               if not _coefficient_is_zero(coeff, points, tol)]
        if bad:
            report['symmetry'].append(
                {'indices': [a, b], 'coordinates': [names[a], names[b]],
                 'monomials': bad})
    for p in points:
        try:
            gmatinv(g.values_at(p), par)
        except NotInvertibleError as err:
            report['nondegeneracy'].append({'point': p.tolist(),
                                            'reason': str(err)})
    report['passed'] = not any(report[k] for k in
                               ('parity', 'symmetry', 'nondegeneracy'))
    if not report['passed']:
        logger.debug("metric validation failed: %s", report)
    return report


class GrassmannTensor(object):
    """
    Grassmann-valued coordinate tensor at a point.

    ``values`` has one axis per coordinate index followed by the Grassmann
    axis of length ``2**m``.
    """

    def __init__(self, point, values, parities):
        self.point = np.asarray(point, dtype=float)
        self.values = np.asarray(values, dtype=float)
        self.parities = np.asarray(parities)

    @property
    def m(self):
        return int(round(np.log2(self.values.shape[-1])))

    def __getitem__(self, index):
        return GrassmannNumber(self.m, self.values[tuple(index)])

    @property
    def reduced(self):
        """Degree-0 (real) part of every component."""
        return self.values[..., 0]

    def parity_violation(self):
        """
        Largest coefficient of a component whose monomial parity differs
        from the sum of its index parities.
        """
        rank = self.values.ndim - 1
        total = np.zeros(self.values.shape[:-1], dtype=int)
        for axis in range(rank):
            shape = [1] * rank
            shape[axis] = -1
            total = total + self.parities.reshape(shape)
        wrong = (_degrees(self.m)[None] % 2) != (total[..., None] % 2)
        bad = np.abs(self.values[np.broadcast_to(wrong, self.values.shape)])
        return float(bad.max()) if bad.size else 0.


class ChristoffelAtPoint(GrassmannTensor):
    """``Gamma[a, b, c]``: ``nabla_{d_a} d_b = sum_c Gamma[a, b, c] d_c``."""
    pass


def _koszul(D, parities):
    """
    L[a, b, c] = <nabla_a d_b, d_c> from ``D[c, a, b] = d_c g_ab``::

        L_abc = 1/2 (d_a g_bc - (-1)^{|c|(|a|+|b|)} d_c g_ab
                     + (-1)^{|a|(|b|+|c|)} d_b g_ca)
    """
    p = parities
    pa, pb, pc = p[:, None, None], p[None, :, None], p[None, None, :]
    s1 = parity_sign(pc, pa + pb)[..., None]
    s2 = parity_sign(pa, pb + pc)[..., None]
    return 0.5 * (D - s1 * np.einsum('cabk->abck', D) +
                  s2 * np.einsum('bcak->abck', D))


def _inverse(g, G):
    try:
        return gmatinv(G, g.parities)
    except NotInvertibleError as err:
        six.raise_from(SingularMetricError(str(err)), err)


def christoffel_at(g, point):
    """
    Christoffel symbols of the Levi-Civita connection at a point.

    The covector ``L_ab. = <nabla_a d_b, .>`` comes from the graded Koszul
    formula and ``Gamma_ab. = L_ab. G^-1`` with the Grassmann inverse of
    the Gram matrix.

    Parameters
    ----------
    g : GradedMetric
    point : array_like
        Point of the reduced chart.

    Returns
    -------
    ChristoffelAtPoint

    Raises
    ------
    SingularMetricError
        If the reduced Gram matrix is singular at the point.
    DerivativeUnavailableError
        If a coefficient cannot be differentiated.

    Examples
    --------
    >>> from sksuper.core.grassmann import Polynomial
    >>> y2 = Superfunction(2, 0, {(): Polynomial(2, {(0, -2): 1.})})
    >>> g = GradedMetric(Chart(2, 0), [[y2, 0], [0, y2]])
    >>> gamma = christoffel_at(g, [0., 1.])
    >>> float(gamma.reduced[0, 1, 0]), float(gamma.reduced[0, 0, 1])
    (-1.0, 1.0)
    """
    point = g.chart.check_point(point)
    G = g.values_at(point)
    Ginv = _inverse(g, G)
    L = _koszul(g.derivatives_at(point), g.parities)
    return ChristoffelAtPoint(point, gmatmul(L, Ginv), g.parities)


def _gamma_values(g, point, gamma):
    if gamma is None:
        return christoffel_at(g, point).values
    return np.asarray(getattr(gamma, 'values', gamma), dtype=float)


def torsion_at(g, point, gamma=None):
    """``T[a, b, c] = Gamma[a, b, c] - (-1)^{|a||b|} Gamma[b, a, c]``."""
    Gam = _gamma_values(g, point, gamma)
    p = g.parities
    s = parity_sign(p[:, None], p[None, :])[:, :, None, None]
    return Gam - s * Gam.transpose(1, 0, 2, 3)


def metricity_at(g, point, gamma=None):
    """
    Defect of ``d_a g_bc = <nabla_a d_b, d_c> + (-1)^{|a||b|}
    <d_b, nabla_a d_c>`` for every coordinate triple.
    """
    point = g.chart.check_point(point)
    Gam = _gamma_values(g, point, gamma)
    G = g.values_at(point)
    D = g.derivatives_at(point)
    p = g.parities
    first = gmatmul(Gam, G)
    # <d_b, Gamma_ac^d d_d> = (-1)^{|b|(|a|+|c|+|d|)} Gamma_ac^d g_bd
    pa, pb, pc, pd = (p[:, None, None, None], p[None, :, None, None],
                      p[None, None, :, None], p[None, None, None, :])
    sgn = (parity_sign(pa, pb) * parity_sign(pb, pa + pc + pd)).astype(float)
    prods = gproduct(Gam[:, None, :, :, :], G[None, :, None, :, :])
    second = np.einsum('abcd,abcdk->abck', sgn, prods)
    return D - first - second


def connection_residuals_at(g, point, gamma=None):
    """
    Torsion and metricity residuals of a connection at a point.

    Parameters
    ----------
    g : GradedMetric
    point : array_like
    gamma : ChristoffelAtPoint or ndarray, optional
        Candidate symbols; the Levi-Civita ones by default.

    Returns
    -------
    torsion, metricity : float
        Max-norms over all coordinate pairs / triples and monomials.
    """
    T = torsion_at(g, point, gamma)
    M = metricity_at(g, point, gamma)
    return (float(np.max(np.abs(T))) if T.size else 0.,
            float(np.max(np.abs(M))) if M.size else 0.)


class CurvatureAtPoint(GrassmannTensor):
    """``R[a, b, c, e]`` with ``R(d_a, d_b) d_c = sum_e R[a, b, c, e] d_e``."""
    pass


def _christoffel_derivatives(g, point, Gam, L, Ginv):
    """dGamma[a, b, c, e] = d_a Gamma[b, c, e] at the point."""
    N, n = g.dim, g.n
    dGam = np.zeros((N, ) + Gam.shape)
    for i in range(n):
        dL = _koszul(g.derivatives_at(point, (i, )), g.parities)
        dG = g.values_at(point, (i, ))
        dGinv = -gmatmul(gmatmul(Ginv, dG), Ginv)
        dGam[i] = gmatmul(dL, Ginv) + gmatmul(L, dGinv)
    for alpha in range(1, g.m + 1):
        dGam[n + alpha - 1] = left_derivative(Gam, alpha)
    return dGam


def curvature_at(g, point):
    """
    Curvature ``R(d_a, d_b) d_c = [nabla_a, nabla_b] d_c`` at a point.

    Coordinate fields super-commute, so no bracket term appears::

        R[a,b,c,e] = d_a Gamma[b,c,e] + sum_d (-1)^{|a|(|b|+|c|+|d|)}
                     Gamma[b,c,d] Gamma[a,d,e] - (-1)^{|a||b|} (a <-> b)

    Returns
    -------
    CurvatureAtPoint

    Raises
    ------
    SingularMetricError, DerivativeUnavailableError
    """
    point = g.chart.check_point(point)
    G = g.values_at(point)
    Ginv = _inverse(g, G)
    L = _koszul(g.derivatives_at(point), g.parities)
    Gam = gmatmul(L, Ginv)
    dGam = _christoffel_derivatives(g, point, Gam, L, Ginv)
    p = g.parities
    pa, pb, pc, pd = (p[:, None, None, None], p[None, :, None, None],
                      p[None, None, :, None], p[None, None, None, :])
    sgn = parity_sign(pa, pb + pc + pd).astype(float)
    # prods[a, b, c, d, e] = Gamma[b, c, d] Gamma[a, d, e]
    prods = gproduct(Gam[None, :, :, :, None, :],
                     Gam[:, None, None, :, :, :])
    Q = np.einsum('abcd,abcdek->abcek', sgn, prods)
    s = parity_sign(p[:, None], p[None, :])[:, :, None, None, None]
    R = dGam - s * dGam.transpose(1, 0, 2, 3, 4) + \
        Q - s * Q.transpose(1, 0, 2, 3, 4)
    return CurvatureAtPoint(point, R, p)


def lowered_curvature(g, point, curvature=None):
    """``Rl[a, b, c, d] = <R(d_a, d_b) d_c, d_d>``."""
    point = g.chart.check_point(point)
    if curvature is None:
        curvature = curvature_at(g, point)
    Rl = gmatmul(curvature.values, g.values_at(point))
    return GrassmannTensor(point, Rl, g.parities)


def curvature_symmetry_residuals(g, point, curvature=None):
    """
    Residuals of the graded curvature identities at a point::

        antisymmetry  R_abcd + (-1)^{|a||b|} R_bacd
        skew          R_abcd + (-1)^{|c||d|} R_abdc
        pair          R_abcd - (-1)^{(|a|+|b|)(|c|+|d|)} R_cdab
        bianchi       R(a,b)c + (-1)^{|a|(|b|+|c|)} R(b,c)a
                      + (-1)^{|c|(|a|+|b|)} R(c,a)b

    with ``R_abcd = <R(d_a, d_b) d_c, d_d>``.

    Returns
    -------
    dict of float
    """
    point = g.chart.check_point(point)
    if curvature is None:
        curvature = curvature_at(g, point)
    R = curvature.values
    Rl = lowered_curvature(g, point, curvature).values
    p = g.parities
    pa, pb, pc, pd = (p[:, None, None, None], p[None, :, None, None],
                      p[None, None, :, None], p[None, None, None, :])

    def norm(x):
        return float(np.max(np.abs(x))) if x.size else 0.

    sab = parity_sign(pa, pb)[..., None]
    scd = parity_sign(pc, pd)[..., None]
    spair = parity_sign(pa + pb, pc + pd)[..., None]
    s1 = parity_sign(pa, pb + pc)[..., None]
    s2 = parity_sign(pc, pa + pb)[..., None]
    return {
        'antisymmetry': norm(Rl + sab * Rl.transpose(1, 0, 2, 3, 4)),
        'skew': norm(Rl + scd * Rl.transpose(0, 1, 3, 2, 4)),
        'pair': norm(Rl - spair * Rl.transpose(2, 3, 0, 1, 4)),
        'bianchi': norm(R + s1 * np.einsum('bcaek->abcek', R) +
                        s2 * np.einsum('cabek->abcek', R)),
    }


def sectional_curvature(g, point, u, v, curvature=None):
    """
    Sectional curvature of the reduced metric on an even 2-plane.

    Parameters
    ----------
    g : GradedMetric
    point : array_like
    u, v : int or array_like
        Even coordinate indices or vectors in R^n spanning the plane.

    Returns
    -------
    float
        ``<R(u, v) v, u> / (<u, u><v, v> - <u, v>**2)`` on degree-0 parts.
    """
    point = g.chart.check_point(point)
    n = g.n

    def vec(w):
        if isinstance(w, six.integer_types + (np.integer, )):
            out = np.zeros(n)
            out[w] = 1.
            return out
        return np.asarray(w, dtype=float)

    u, v = vec(u), vec(v)
    Rl = lowered_curvature(g, point, curvature).reduced[:n, :n, :n, :n]
    G0 = g.reduced_at(point)[:n, :n]
    area = u.dot(G0).dot(u) * v.dot(G0).dot(v) - u.dot(G0).dot(v) ** 2
    if abs(area) < 1e-300:
        raise ValueError("u and v do not span a non-degenerate plane")
    return float(np.einsum('abcd,a,b,c,d->', Rl, u, v, v, u) / area)


def _field_values(g, X, point, axes=()):
    out = np.zeros((g.dim, 2 ** g.m))
    for a, f in enumerate(X):
        if axes:
            f = f.partial(axes[0])
        for mask, coeff in six.iteritems(f.masks):
            out[a, mask] = coeff(point)
    return out


def _field_parity(g, X):
    for a, f in enumerate(X):
        if f.is_zero:
            continue
        if f.parity is None:
            raise ValueError("component {} of the vector field is not "
                             "homogeneous".format(a))
        return (f.parity + g.parities[a]) % 2
    return 0


def covariant_derivatives_at(g, X, point, gamma=None):
    """
    ``nabla_{d_a} X`` at a point for a homogeneous vector field
    ``X = sum_c X^c d_c``::

        (nabla_a X)^e = d_a X^e + sum_c (-1)^{|a|(|X|+|c|)} X^c Gamma[a, c, e]

    Returns
    -------
    nabla : ndarray
        Shape ``(N, N, 2**m)`` indexed ``[a, e]``.
    parity : int
        Parity of ``X``.
    """
    point = g.chart.check_point(point)
    if len(X) != g.dim:
        raise ValueError("vector field needs {} components".format(g.dim))
    X = [f if isinstance(f, Superfunction) else
         Superfunction.constant(g.n, g.m, f) for f in X]
    px = _field_parity(g, X)
    Gam = _gamma_values(g, point, gamma)
    vals = _field_values(g, X, point)
    dX = np.zeros((g.dim, g.dim, 2 ** g.m))
    for i in range(g.n):
        dX[i] = _field_values(g, X, point, (i, ))
    for alpha in range(1, g.m + 1):
        dX[g.n + alpha - 1] = left_derivative(vals, alpha)
    p = g.parities
    sgn = parity_sign(p[:, None], px + p[None, :]).astype(float)
    prods = gproduct(vals[None, :, None, :], Gam)
    return dX + np.einsum('ac,acek->aek', sgn, prods), px


def killing_residual_at(g, X, point, gamma=None):
    """
    Residual of the Killing equation at a point.

    For coordinate fields Y = d_b, Z = d_d::

        <nabla_b X, d_d> + (-1)^{|X||b| + |X||d| + |b||d|} <nabla_d X, d_b>

    Parameters
    ----------
    g : GradedMetric
    X : sequence of Superfunction
        Components of a homogeneous vector field.
    point : array_like

    Returns
    -------
    float
        Max-norm over coordinate pairs and monomials.
    """
    point = g.chart.check_point(point)
    nabla, px = covariant_derivatives_at(g, X, point, gamma)
    K = gmatmul(nabla, g.values_at(point))
    p = g.parities
    sgn = (parity_sign(px, p[:, None]) * parity_sign(px, p[None, :]) *
           parity_sign(p[:, None], p[None, :]))[..., None]
    res = K + sgn * K.transpose(1, 0, 2)
    return float(np.max(np.abs(res))) if res.size else 0.


def reduced_christoffel_at(g, point):
    """
    Degree-0 parts of the Christoffel symbols at a point.

    Only metric data of degree at most one enters: the body of the Gram
    matrix, the bodies of its even derivatives and, for odd derivatives,
    the coefficients of the single generators.

    Returns
    -------
    ndarray
        Real array of shape ``(N, N, N)``.

    Raises
    ------
    SingularMetricError
    """
    point = g.chart.check_point(point)
    n, m, N = g.n, g.m, g.dim

    def coefficient(f, mask):
        coeff = f.masks.get(mask)
        return 0. if coeff is None else coeff(point)

    G0 = np.zeros((N, N))
    D0 = np.zeros((N, N, N))
    for a, b in itertools.product(range(N), range(N)):
        f = g.entries[a][b]
        G0[a, b] = coefficient(f, 0)
        for i in range(n):
            D0[i, a, b] = coefficient(g.partial_entries((i, ))[a][b], 0)
        # d/dxi_alpha of the monomial xi_alpha is +1
        for alpha in range(1, m + 1):
            D0[n + alpha - 1, a, b] = coefficient(f, 1 << (alpha - 1))
    G0inv = _inverse(g, G0[..., None])[..., 0]
    L0 = _koszul(D0[..., None], g.parities)[..., 0]
    return np.einsum('abc,cd->abd', L0, G0inv)
