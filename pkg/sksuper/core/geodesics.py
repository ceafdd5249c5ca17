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
Supergeodesics and parallel transport along supercurves R^{1|1} -> R^{n|m}.

A supercurve is described by its pullbacks ``x_i -> g_i(t)`` and
``xi_alpha -> h_alpha(t) xi``.  It is a supergeodesic when the reduced curve
``g`` is a geodesic of the reduced metric and ``h`` solves the first order
linear system::

    h_d' + sum_{i, b} g_i' h_b Gamma[i, b, d] = 0

with reduced Christoffel symbols at ``g(t)``.  Only degree-0 Christoffel
data enter, see :func:`sksuper.core.chartgeom.reduced_christoffel_at`.
"""
from __future__ import absolute_import, division, print_function
from six.moves import range

import logging
from collections import namedtuple

import numpy as np
from scipy.interpolate import CubicHermiteSpline, CubicSpline

from .chartgeom import reduced_christoffel_at, christoffel_at
from .grassmann import mask_from_indices
from .utils import get_tolerance

logger = logging.getLogger(__name__)


SupercurveState = namedtuple('SupercurveState', ['t', 'g', 'v', 'h'])


def _ordered(t, *arrays):
    """Sort samples by time for the splines (integration may run backwards)."""
    order = np.argsort(t)
    return (t[order], ) + tuple(None if a is None else a[order]
                                for a in arrays)


def _columns(values, T):
    """Samples as a (T, k) array; 1-d input is one column per sample."""
    values = np.asarray(values, dtype=float)
    if values.ndim == 2:
        return values
    if values.size == 0:
        return np.zeros((T, 0))
    return values.reshape(T, -1)


class Supercurve(object):
    """
    A sampled supercurve.

    Parameters
    ----------
    t : array_like
        Sample times, shape ``(T, )``, strictly monotonic.
    g, v : array_like
        Reduced positions and velocities, shape ``(T, n)``.
    h : array_like
        Odd coefficients, shape ``(T, m)``.
    dv, dh : array_like, optional
        Derivatives of ``v`` and ``h``; when given, they are used for cubic
        Hermite interpolation, otherwise cubic splines are fitted.
    """

    def __init__(self, t, g, v, h, dv=None, dh=None):
        self.t = np.asarray(t, dtype=float)
        T = len(self.t)
        self.g = _columns(g, T)
        self.v = _columns(v, T)
        self.h = _columns(h, T)
        self.dv = None if dv is None else _columns(dv, T)
        self.dh = None if dh is None else _columns(dh, T)
        if self.g.shape != self.v.shape or len(self.g) != T or \
                len(self.h) != T:
            raise ValueError("positions and velocities differ in shape")
        if T < 2 or np.any(np.diff(self.t) == 0) or \
                len(np.unique(np.sign(np.diff(self.t)))) != 1:
            raise ValueError("sample times must be strictly monotonic")
        self._splines = None

    @property
    def n(self):
        return self.g.shape[1]

    @property
    def m(self):
        return self.h.shape[1]

    def __len__(self):
        return len(self.t)

    def state(self, i):
        return SupercurveState(self.t[i], self.g[i], self.v[i], self.h[i])

    def __iter__(self):
        for i in range(len(self)):
            yield self.state(i)

    def _build(self):
        t, g, v, h, dv, dh = _ordered(self.t, self.g, self.v, self.h,
                                      self.dv, self.dh)
        position = CubicHermiteSpline(t, g, v, axis=0)
        velocity = position.derivative() if dv is None else \
            CubicHermiteSpline(t, v, dv, axis=0)
        if self.m == 0:
            odd = None
        elif dh is None:
            odd = CubicSpline(t, h, axis=0)
        else:
            odd = CubicHermiteSpline(t, h, dh, axis=0)
        self._splines = position, velocity, odd

    def position(self, t):
        if self._splines is None:
            self._build()
        return self._splines[0](t)

    def velocity(self, t):
        if self._splines is None:
            self._build()
        return self._splines[1](t)

    def odd(self, t):
        if self._splines is None:
            self._build()
        if self._splines[2] is None:
            return np.zeros(np.shape(t) + (0, ))
        return self._splines[2](t)

    def odd_derivative(self, t):
        if self._splines is None:
            self._build()
        if self._splines[2] is None:
            return np.zeros(np.shape(t) + (0, ))
        return self._splines[2].derivative()(t)

    def samples(self):
        """Array with columns ``t, g_1..g_n, v_1..v_n, h_1..h_m``."""
        return np.column_stack([self.t, self.g, self.v, self.h])


class GeodesicResult(Supercurve):
    """
    Output of :func:`integrate_geodesic`: the sampled supergeodesic, the step
    actually used and solver diagnostics.
    """

    def __init__(self, t, g, v, h, dv, dh, step, diagnostics):
        super(GeodesicResult, self).__init__(t, g, v, h, dv=dv, dh=dh)
        self.step = step
        self.diagnostics = diagnostics

    @property
    def final(self):
        return self.state(-1)


def geodesic_rhs(metric, state, gamma=None):
    """
    Right-hand side of the supergeodesic equations.

    Parameters
    ----------
    metric : GradedMetric
    state : SupercurveState
    gamma : ndarray, optional
        Reduced Christoffel symbols at ``state.g``.

    Returns
    -------
    dv : ndarray
        ``-sum v_i v_j Gamma[i, j, k]``.
    dh : ndarray
        ``-sum v_i h_b Gamma[i, n + b, n + d]``.

    Raises
    ------
    SingularMetricError
    """
    n = metric.n
    if gamma is None:
        gamma = reduced_christoffel_at(metric, state.g)
    v = np.asarray(state.v, dtype=float)
    h = np.asarray(state.h, dtype=float)
    dv = -np.einsum('i,j,ijk->k', v, v, gamma[:n, :n, :n])
    dh = -np.einsum('i,b,ibd->d', v, h, gamma[:n, n:, n:])
    return dv, dh


def _rk4(func, y, hs):
    k1 = func(y) * hs
    k2 = func(y + k1 * 0.5) * hs
    k3 = func(y + k2 * 0.5) * hs
    k4 = func(y + k3) * hs
    return y + (k1 + 2 * (k2 + k3) + k4) / 6


def _geodesic_field(metric):
    n, m = metric.n, metric.m

    def func(y):
        g, v, h = y[:n], y[n:2 * n], y[2 * n:]
        dv, dh = geodesic_rhs(metric, SupercurveState(None, g, v, h))
        return np.concatenate([v, dv, dh])

    return func


def _run(metric, y0, t_end, steps):
    n = metric.n
    func = _geodesic_field(metric)
    hs = t_end / steps
    ys = np.empty((steps + 1, len(y0)))
    ds = np.empty_like(ys)
    ys[0] = y0
    for k in range(steps):
        ds[k] = func(ys[k])
        ys[k + 1] = _rk4(func, ys[k], hs)
        if not np.all(np.isfinite(ys[k + 1])):
            raise ValueError("non-finite state at t={:g}".format((k + 1) * hs))
        if not metric.chart.contains(ys[k + 1][:n]):
            raise ValueError("trajectory left the chart domain at t={:g}"
                             "".format((k + 1) * hs))
    ds[steps] = func(ys[steps])
    return ys, ds


def _difference_residual(ts, values, derivatives):
    """Max defect of a 4th order central difference against derivatives."""
    if len(ts) < 5:
        return 0.
    hs = ts[1] - ts[0]
    fd = (values[:-4] - 8 * values[1:-3] + 8 * values[3:-1] -
          values[4:]) / (12 * hs)
    defect = fd - derivatives[2:-2]
    return float(np.max(np.abs(defect))) if defect.size else 0.


def integrate_geodesic(metric, p, v, w=None, t_end=1., step=1e-3,
                       tolerance=None, error_estimate=True):
    """
    Integrate a supergeodesic with fixed-step RK4.

    Parameters
    ----------
    metric : GradedMetric
    p : array_like
        Initial point of the reduced curve.
    v : array_like
        Initial even velocity, ``dgamma(d_t)`` at 0.
    w : array_like, optional
        Initial odd coefficients, ``dgamma(d_xi)`` at 0; zero by default.
    t_end : float
        Final time (may be negative).
    step : float
        Requested step; the grid is uniform and lands exactly on ``t_end``.
    tolerance : float, optional
        Diagnostic tolerance, ``rcParams['tolerance.ode']`` by default.
    error_estimate : bool, optional
        Repeat the run with twice the step and record the Richardson
        estimate of the endpoint error.

    Returns
    -------
    GeodesicResult

    Raises
    ------
    ValueError
        For a non-positive step, a non-finite ``t_end`` or a trajectory
        that leaves the chart.
    SingularMetricError
        If the metric degenerates along the trajectory.
    """
    tol = get_tolerance(tolerance, 'ode')
    if not step > 0:
        raise ValueError("step must be positive, got {}".format(step))
    if not np.isfinite(t_end):
        raise ValueError("t_end must be finite")
    n, m = metric.n, metric.m
    p = metric.chart.check_point(p)
    v = np.asarray(v, dtype=float).reshape(n)
    w = np.zeros(m) if w is None else np.asarray(w, dtype=float).reshape(m)
    steps = max(1, int(np.ceil(abs(t_end) / step - 1e-9)))
    y0 = np.concatenate([p, v, w])
    logger.debug("integrating geodesic from %s over %d steps", p, steps)
    ys, ds = _run(metric, y0, t_end, steps)
    ts = np.linspace(0., t_end, steps + 1)

    G0 = np.array([metric.reduced_at(g)[:n, :n] for g in ys[:, :n]])
    energy = np.einsum('ti,tij,tj->t', ys[:, n:2 * n], G0, ys[:, n:2 * n])
    residual = max(_difference_residual(ts, ys, ds), 0.)
    diagnostics = {
        'steps': steps,
        'energy_drift': float(np.max(np.abs(energy - energy[0]))),
        'residual': residual,
        'tolerance': tol,
    }
    if error_estimate and steps % 2 == 0 and steps >= 2:
        coarse, _ = _run(metric, y0, t_end, steps // 2)
        diagnostics['error_estimate'] = \
            float(np.max(np.abs(ys[-1] - coarse[-1]))) / 15.
    diagnostics['within_tolerance'] = (diagnostics['residual'] <= tol and
                                       diagnostics['energy_drift'] <= tol)
    if not diagnostics['within_tolerance']:
        logger.warning("geodesic diagnostics exceed tolerance %g: residual "
                       "%.3g, energy drift %.3g", tol, residual,
                       diagnostics['energy_drift'])
    return GeodesicResult(ts, ys[:, :n], ys[:, n:2 * n], ys[:, 2 * n:],
                          ds[:, n:2 * n], ds[:, 2 * n:], t_end / steps,
                          diagnostics)


class ParallelFrame(object):
    """
    Parallel fields along a supercurve.

    Each field is ``X = sum_a (f_a + xi G_a) d_a``; ``f`` solves the
    transport ODE and ``G`` follows algebraically.

    Attributes
    ----------
    t : ndarray
        Shape ``(T, )``.
    f, G : ndarray
        Shape ``(T, k, N)`` for ``k`` transported vectors.
    """

    def __init__(self, curve, t, f, G):
        self.curve = curve
        self.t = t
        self.f = f
        self.G = G

    def __len__(self):
        return self.f.shape[1]

    def even_part(self, n):
        return self.f[..., :n], self.G[..., n:]

    def odd_part(self, n):
        return self.f[..., n:], self.G[..., :n]

    @property
    def final(self):
        return self.f[-1]


def _odd_coefficients(metric, h, f, gamma):
    n = metric.n
    return -np.einsum('a,kb,abc->kc', h, f, gamma[n:])


def parallel_transport(metric, curve, tau, step=None):
    """
    Transport tangent vectors along a supercurve.

    The value coefficients ``f`` satisfy::

        f_c' + sum_{i, b} v_i f_b Gamma[i, b, c] = 0

    and the xi-coefficients are ``G_c = -sum_{a, b} h_a f_b
    Gamma[n + a, b, c]``, all with reduced Christoffel symbols.

    Parameters
    ----------
    metric : GradedMetric
    curve : Supercurve
    tau : array_like
        Initial vector(s), shape ``(N, )`` or ``(k, N)``: the first ``n``
        entries are the even components, the rest the odd ones.
    step : float, optional
        RK4 step; by default one step per curve sample interval.

    Returns
    -------
    ParallelFrame
    """
    N, n = metric.dim, metric.n
    tau = np.atleast_2d(np.asarray(tau, dtype=float))
    if tau.shape[1] != N:
        raise ValueError("tangent vectors need {} components".format(N))
    t0, t1 = curve.t[0], curve.t[-1]
    if step is None:
        steps = len(curve) - 1
    else:
        if not step > 0:
            raise ValueError("step must be positive, got {}".format(step))
        steps = max(1, int(np.ceil(abs(t1 - t0) / step - 1e-9)))
    ts = np.linspace(t0, t1, steps + 1)
    hs = (t1 - t0) / steps

    def rhs(t, f):
        gamma = reduced_christoffel_at(metric, curve.position(t))
        return -np.einsum('i,kb,ibc->kc', curve.velocity(t), f, gamma[:n])

    fs = np.empty((steps + 1, ) + tau.shape)
    Gs = np.empty_like(fs)
    fs[0] = tau
    for k in range(steps):
        t, f = ts[k], fs[k]
        k1 = rhs(t, f) * hs
        k2 = rhs(t + hs / 2, f + k1 * 0.5) * hs
        k3 = rhs(t + hs / 2, f + k2 * 0.5) * hs
        k4 = rhs(t + hs, f + k3) * hs
        fs[k + 1] = f + (k1 + 2 * (k2 + k3) + k4) / 6
    for k, t in enumerate(ts):
        gamma = reduced_christoffel_at(metric, curve.position(t))
        Gs[k] = _odd_coefficients(metric, curve.odd(t), fs[k], gamma)
    return ParallelFrame(curve, ts, fs, Gs)


def parallel_frame(metric, curve, step=None):
    """Transport of every coordinate direction ``d_a`` at the start."""
    return parallel_transport(metric, curve, np.eye(metric.dim), step)


def transport_gram(metric, frame):
    """
    Gram matrices ``<X_t, Y_t>`` of the reduced values along the curve.

    Returns
    -------
    grams : ndarray
        Shape ``(T, k, k)``.
    drift : float
        ``max_t |gram(t) - gram(0)|``.
    """
    grams = np.array([f.dot(metric.reduced_at(frame.curve.position(t))).dot(
        f.T) for t, f in zip(frame.t, frame.f)])
    return grams, float(np.max(np.abs(grams - grams[0])))


class CurveField(object):
    """
    A homogeneous vector field along a supercurve,
    ``X = sum_a (a_a(t) + xi b_a(t)) d_a``, sampled at the curve times.

    Parameters
    ----------
    curve : Supercurve
    a, b : array_like
        Shape ``(T, N)``.
    parity : {0, 1}
    """

    def __init__(self, curve, a, b, parity):
        self.curve = curve
        self.a = np.asarray(a, dtype=float)
        self.b = np.asarray(b, dtype=float)
        if self.a.shape != self.b.shape or len(self.a) != len(curve):
            raise ValueError("field samples must have shape (T, N) matching "
                             "the curve")
        if parity not in (0, 1):
            raise ValueError("parity must be 0 or 1")
        self.parity = parity

    def reduced(self):
        return self.a

    def norm(self):
        return float(max(np.max(np.abs(self.a)), np.max(np.abs(self.b))))


def tangent_field(curve, which='t'):
    """
    ``dgamma(d_t)`` (``which='t'``) or ``dgamma(d_xi)`` (``which='xi'``)
    as a field along the curve.
    """
    T, n, m = len(curve), curve.n, curve.m
    zeros = np.zeros((T, n + m))
    if which == 't':
        a, b = zeros.copy(), zeros.copy()
        a[:, :n] = curve.v
        b[:, n:] = curve.dh if curve.dh is not None else \
            curve.odd_derivative(curve.t)
        return CurveField(curve, a, b, 0)
    if which == 'xi':
        a = zeros.copy()
        a[:, n:] = curve.h
        return CurveField(curve, a, zeros, 1)
    raise ValueError("which must be 't' or 'xi', got {!r}".format(which))


def _pulled_christoffel(metric, curve):
    """
    Pullback ``gamma* Gamma = Gamma0 + xi sum_b h_b Gamma_{xi_b}`` at every
    sample; monomials of degree >= 2 pull back to 0.
    """
    n, m, N = metric.n, metric.m, metric.dim
    T = len(curve)
    G0 = np.zeros((T, N, N, N))
    G1 = np.zeros((T, N, N, N))
    for k in range(T):
        values = christoffel_at(metric, curve.g[k]).values
        G0[k] = values[..., 0]
        for beta in range(1, m + 1):
            G1[k] += curve.h[k, beta - 1] * \
                values[..., mask_from_indices([beta], m)]
    return G0, G1


def covariant_derivative_along(metric, curve, field, which='t'):
    """
    Covariant derivative of a field along a supercurve, computed in
    ``R[xi] / (xi**2)``::

        nabla/dt  X = sum_c (d_t X^c + sum_{i,j} X^j d_t(gamma* eta_i)
                             gamma* Gamma[i, j, c]) d_c
        nabla/dxi X = sum_c (d_xi X^c + sum_{i,j} (-1)^{|X^j|} X^j
                             d_xi(gamma* eta_i) gamma* Gamma[i, j, c]) d_c

    Parameters
    ----------
    metric : GradedMetric
    curve : Supercurve
    field : CurveField
    which : {'t', 'xi'}

    Returns
    -------
    CurveField
        Parity of ``field`` for ``'t'``, opposite parity for ``'xi'``.

    Raises
    ------
    ValueError
        With fewer than four samples.
    """
    if len(curve) < 4:
        raise ValueError("covariant derivatives need at least 4 curve "
                         "samples, got {}".format(len(curve)))
    n, m, N = metric.n, metric.m, metric.dim
    G0, G1 = _pulled_christoffel(metric, curve)
    a, b = field.a, field.b
    if which == 't':
        t, sa, sb = _ordered(curve.t, a, b)
        order = np.argsort(curve.t)
        back = np.argsort(order)
        da = CubicSpline(t, sa, axis=0).derivative()(t)[back]
        db = CubicSpline(t, sb, axis=0).derivative()(t)[back]
        # d_t gamma* x_i = v_i, d_t gamma* xi_alpha = xi h_alpha'
        dh = curve.dh if curve.dh is not None else \
            curve.odd_derivative(curve.t)
        Da = np.concatenate([curve.v, np.zeros((len(curve), m))], axis=1)
        Db = np.concatenate([np.zeros((len(curve), n)), dh], axis=1)
        # (a + xi b)(Da + xi Db)(G0 + xi G1), xi**2 = 0
        out_a = da + np.einsum('tj,ti,tijc->tc', a, Da, G0)
        out_b = db + np.einsum('tj,ti,tijc->tc', b, Da, G0) + \
            np.einsum('tj,ti,tijc->tc', a, Db, G0) + \
            np.einsum('tj,ti,tijc->tc', a, Da, G1)
        return CurveField(curve, out_a, out_b, field.parity)
    if which == 'xi':
        parities = np.array([0] * n + [1] * m)
        sign = 1. - 2 * ((field.parity + parities) % 2)
        # d_xi gamma* x_i = 0, d_xi gamma* xi_alpha = h_alpha
        Da = np.concatenate([np.zeros((len(curve), n)), curve.h], axis=1)
        out_a = b + np.einsum('j,tj,ti,tijc->tc', sign, a, Da, G0)
        out_b = np.einsum('j,tj,ti,tijc->tc', sign, b, Da, G0) + \
            np.einsum('j,tj,ti,tijc->tc', sign, a, Da, G1)
        return CurveField(curve, out_a, out_b, (field.parity + 1) % 2)
    raise ValueError("which must be 't' or 'xi', got {!r}".format(which))


def stronger_conditions(metric, curve):
    """
    The four covariant terms of the tangent fields, reported as max-norms::

        nabla/dt dgamma(d_t),  nabla/dt dgamma(d_xi),
        nabla/dxi dgamma(d_t), nabla/dxi dgamma(d_xi)

    together with the reduced parts of the two that define supergeodesics.
    Supergeodesics only make the reduced parts vanish; the remaining
    entries are generally non-zero.
    """
    dt_field = tangent_field(curve, 't')
    dxi_field = tangent_field(curve, 'xi')
    tt = covariant_derivative_along(metric, curve, dt_field, 't')
    txi = covariant_derivative_along(metric, curve, dxi_field, 't')
    xit = covariant_derivative_along(metric, curve, dt_field, 'xi')
    xixi = covariant_derivative_along(metric, curve, dxi_field, 'xi')
    # splines lose accuracy at the ends of the sample range
    inner = slice(2, -2) if len(curve) > 8 else slice(None)
    return {
        'dt_dt': tt.norm(),
        'dt_dxi': txi.norm(),
        'dxi_dt': xit.norm(),
        'dxi_dxi': xixi.norm(),
        'reduced_dt_dt': float(np.max(np.abs(tt.a[inner]))),
        'reduced_dt_dxi': float(np.max(np.abs(txi.a[inner]))),
    }
