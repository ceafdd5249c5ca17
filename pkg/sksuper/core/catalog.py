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
Symmetric superspaces G/K given by symmetric pairs, stored as data, and the
pipeline that verifies them.

Every entry knows how to build its algebra g, the involution sigma, the
expected isomorphism type of the fixed algebra k and the invariant form used
on p.  :func:`verify_example` runs the stages in order and returns a report
with one entry per stage; failed checks never raise.

Block layouts
-------------
osp(n|2m) matrices use the blocks ``(n, m, m)`` of
:func:`sksuper.core.superalgebra.osp_algebra`.  For SOSp/S(OSp x OSp) the
even rows are split ``(n1, n2)`` and each symplectic half is split
``(m1, m2)``, so sigma is conjugation by
``diag(I_n1, -I_n2, I_m1, -I_m2, I_m1, -I_m2)``.
"""
from __future__ import absolute_import, division, print_function
import six

import logging
from collections import OrderedDict

import numpy as np
from scipy import linalg

from .utils import get_tolerance, rcParams, verbosedict
from .superalgebra import (sl_algebra, psl_algebra, gl_algebra, osp_algebra,
                           u_algebra, d21_algebra, d21_odd_form,
                           abelian_algebra, r12_algebra, r12_pair,
                           direct_sum, subalgebra, quotient_algebra,
                           check_jacobi, check_involution, eigensplit,
                           killing_form, killing_fingerprint,
                           supertrace_form, check_ad_invariance,
                           ad_reduced_invariance, invariant_forms,
                           has_invariant_scalar_superproduct,
                           extend_odd_form, involution_from_map,
                           HarishChandraPair, ScalarSuperproduct)

logger = logging.getLogger(__name__)


__all__ = ['SymmetricSpaceSpec', 'get_example', 'list_examples',
           'verify_example', 'verify_all', 'symmetric_split', 'DESK_GRID']


class SymmetricSpaceSpec(object):
    """
    One family of symmetric superspaces.

    Parameters
    ----------
    name : str
        Registry key, e.g. ``'sl-sosp'``.
    title : str
        The quotient G/K in words.
    params : tuple of str
        Parameter names.
    build : callable
        ``build(**params) -> LieSuperalgebra``.
    involution : callable
        ``involution(algebra, **params) -> ndarray``, the basis matrix.
    expected_k : callable
        ``expected_k(**params) -> LieSuperalgebra``.
    form : callable
        ``form(algebra, **params) -> ScalarSuperproduct`` on g.
    killing_multiple : callable
        ``killing_multiple(**params) -> float``: B = c * str on g.
    identities : callable, optional
        ``identities(algebra, split, **params) -> dict`` of sign checks.
    check : callable, optional
        Validates parameters; raises ValueError.
    degenerate : callable, optional
        ``degenerate(**params) -> bool``, True when the form on p is
        predicted to be degenerate.
    """

    def __init__(self, name, title, params, build, involution, expected_k,
                 form, killing_multiple, identities=None, check=None,
                 degenerate=None):
        self.name = name
        self.title = title
        self.params = tuple(params)
        self.build = build
        self.involution = involution
        self.expected_k = expected_k
        self.form = form
        self.killing_multiple = killing_multiple
        self.identities = identities
        self.check = check
        self.degenerate = degenerate

    def normalize(self, params):
        missing = [p for p in self.params if p not in params]
        extra = [p for p in params if p not in self.params]
        if missing or extra:
            raise ValueError("{} takes parameters {}; missing {}, unexpected "
                             "{}".format(self.name, list(self.params),
                                         missing, extra))
        out = OrderedDict()
        for p in self.params:
            value = params[p]
            out[p] = float(value) if p.startswith('sigma') else int(value)
        if self.check is not None:
            self.check(**out)
        return out

    def summary(self):
        return {'name': self.name, 'title': self.title,
                'params': list(self.params),
                'grid': len(DESK_GRID.get(self.name, ()))}

    def __repr__(self):
        return 'SymmetricSpaceSpec({})'.format(self.name)


def _supertranspose(M, n):
    """[[A, B], [C, D]] -> [[A^t, C^t], [-B^t, D^t]]."""
    out = np.empty_like(M)
    out[:n, :n] = M[:n, :n].T
    out[:n, n:] = M[n:, :n].T
    out[n:, :n] = -M[:n, n:].T
    out[n:, n:] = M[n:, n:].T
    return out


def _symplectic_unit(m):
    return np.block([[np.zeros((m, m)), np.eye(m)],
                     [-np.eye(m), np.zeros((m, m))]])


def _conjugation(E):
    E_inv = np.linalg.inv(E)
    return lambda M: E.dot(M).dot(E_inv)


def _signs(*sizes):
    return np.diag(np.concatenate([(-1.) ** k * np.ones(s)
                                   for k, s in enumerate(sizes)]))


def _stage(passed, **values):
    out = {'passed': bool(passed)}
    for key, value in six.iteritems(values):
        if isinstance(value, (np.floating, float)):
            value = float(value)
        elif isinstance(value, (np.integer, )):
            value = int(value)
        elif isinstance(value, (np.bool_, )):
            value = bool(value)
        out[key] = value
    return out


def _identity(value, expected, tol, sign=None):
    residual = abs(value - expected)
    ok = residual <= tol * max(1., abs(expected))
    if sign is not None:
        ok = ok and sign * value > 0
    return _stage(ok, value=value, expected=expected, residual=residual)


def _in_p(a, S, X):
    coords = a.coordinates(X)
    return coords, float(np.max(np.abs(S.dot(coords) + coords)))


# SL(n|2m)/SOSp(n|2m) and PSL(2m|2m)/SOSp(2m|2m)

def _sl_sosp_map(n, m):
    K = linalg.block_diag(np.eye(n), -_symplectic_unit(m))
    K_inv = np.linalg.inv(K)
    return lambda M: -K.dot(_supertranspose(M, n)).dot(K_inv)


def _sl_sosp_involution(a, n, m):
    return involution_from_map(a, _sl_sosp_map(n, m))


def _sl_sosp_identities(a, split, n, m, tol):
    rng = np.random.RandomState(rcParams['random.seed'])
    S = getattr(split.involution, 'matrix', split.involution)
    B1, B2 = rng.uniform(-1, 1, (2, n, m))
    Z = np.zeros
    X = np.block([[Z((n, n)), B1, B2],
                  [B2.T, Z((m, m)), Z((m, m))],
                  [-B1.T, Z((m, m)), Z((m, m))]])
    Y = np.block([[Z((n, n)), -B2, B1],
                  [B1.T, Z((m, m)), Z((m, m))],
                  [B2.T, Z((m, m)), Z((m, m))]])
    cx, dx = _in_p(a, S, X)
    cy, dy = _in_p(a, S, Y)
    value = float(supertrace_form(a)(cx, cy))
    expected = 2 * (np.trace(B1.dot(B1.T)) + np.trace(B2.dot(B2.T)))
    out = OrderedDict()
    out['odd_pairing'] = _identity(value, expected, tol, sign=1)
    out['odd_pairing']['membership'] = max(dx, dy)
    out['odd_pairing']['passed'] &= max(dx, dy) <= tol
    if split.algebra.family == 'sl':
        # the u(1) direction diag(2m I_n, n I_2m) is str-orthogonal to p
        # exactly when n = 2m
        U = np.diag(np.r_[2 * m * np.ones(n), n * np.ones(2 * m)])
        cu, du = _in_p(a, S, U / np.max(np.abs(U)))
        pairing = np.abs(supertrace_form(a).gram(np.vstack([cu,
                                                            split.p]))[0])
        worst = float(np.max(pairing))
        out['u1_direction'] = _stage((worst <= tol) == (n == 2 * m),
                                     pairing=worst, membership=du,
                                     degenerate=bool(worst <= tol))
    return out


def _check_sl_sosp(n, m):
    if n < 1 or m < 1:
        raise ValueError("sl-sosp needs n >= 1 and m >= 1, got n={}, m={}"
                         "".format(n, m))


def _check_psl_sosp(m):
    if m < 1:
        raise ValueError("psl-sosp needs m >= 1, got m={}".format(m))


# SL(n|m)/S(GL(n1|m1) x GL(n2|m2))

def _sl_s(n1, n2, m1, m2):
    n, m = n1 + n2, m1 + m2
    return psl_algebra(n) if n == m else sl_algebra(n, m)


def _sl_s_involution(a, n1, n2, m1, m2):
    return involution_from_map(a, _conjugation(_signs(n1, n2, m1, m2)))


def _s_gl_gl(n1, n2, m1, m2):
    summed = direct_sum(gl_algebra(n1, m1), gl_algebra(n2, m2))
    strs = np.real(summed.supertrace(summed.realization))
    ev = summed.even
    vectors = []
    for col in linalg.null_space(strs[ev][None]).T:
        v = np.zeros(summed.dim)
        v[ev] = col
        vectors.append(v)
    vectors.extend(np.eye(summed.dim)[summed.odd])
    k = subalgebra(summed, np.array(vectors), name='s(gl+gl)')
    if n1 + n2 == m1 + m2:
        N = n1 + n2 + m1 + m2
        k = quotient_algebra(k, k.coordinates(np.eye(N))[None],
                             name='s(gl+gl)/R')
    return k


def _sl_s_identities(a, split, n1, n2, m1, m2, tol):
    # p is the block off-diagonal part for the split (n1, n2 | m1, m2)
    E = _signs(n1, n2, m1, m2)
    worst = 0.
    for X in a.matrix(split.p):
        diag = (X + E.dot(X).dot(E)) / 2
        worst = max(worst, float(np.max(np.abs(diag))))
    return OrderedDict([('p_off_diagonal',
                         _stage(worst <= tol, residual=worst))])


def _check_sl_s(n1, n2, m1, m2):
    if min(n1, n2, m1, m2) < 0 or n1 + m1 < 1 or n2 + m2 < 1:
        raise ValueError("sl-s(gl x gl) needs two non-empty blocks, got "
                         "({}, {} | {}, {})".format(n1, n2, m1, m2))
    n, m = n1 + n2, m1 + m2
    if n == m and n < 2:
        raise ValueError("sl(1|1) has no simple quotient")


# SOSp(2n|2m)/U(n|m)

def _sosp_u_involution(a, n, m):
    E = linalg.block_diag(_symplectic_unit(n), _symplectic_unit(m))
    return involution_from_map(a, _conjugation(E))


def _sosp_u_identities(a, split, n, m, tol):
    rng = np.random.RandomState(rcParams['random.seed'])
    S = getattr(split.involution, 'matrix', split.involution)
    str_form = supertrace_form(a)
    out = OrderedDict()

    A1, A2 = rng.uniform(-1, 1, (2, n, n))
    A1, A2 = A1 - A1.T, A2 - A2.T
    C1, C2 = rng.uniform(-1, 1, (2, m, m))
    C1, C2 = C1 + C1.T, C2 + C2.T
    X = linalg.block_diag(np.block([[A1, A2], [A2, -A1]]),
                          np.block([[C1, C2], [C2, -C1]]))
    cx, dx = _in_p(a, S, X)
    value = float(str_form(cx, cx))
    expected = 2 * np.trace(A1.dot(A1) + A2.dot(A2)) - \
        2 * np.trace(C1.dot(C1) + C2.dot(C2))
    out['even_negative'] = _identity(value, expected, tol, sign=-1)
    out['even_negative']['membership'] = dx
    out['even_negative']['passed'] &= dx <= tol

    B1, B2 = rng.uniform(-1, 1, (2, n, m))
    Z = np.zeros
    zn, zm = Z((2 * n, 2 * n)), Z((2 * m, 2 * m))
    X = np.block([[zn, np.block([[B1, B2], [B2, -B1]])],
                  [np.block([[-B2.T, B1.T], [B1.T, B2.T]]), zm]])
    Y = np.block([[zn, np.block([[B2, -B1], [-B1, -B2]])],
                  [np.block([[B1.T, B2.T], [B2.T, -B1.T]]), zm]])
    cx, dx = _in_p(a, S, X)
    cy, dy = _in_p(a, S, Y)
    value = float(str_form(cx, cy))
    expected = 4 * np.trace(B1.dot(B1.T) + B2.dot(B2.T))
    out['odd_pairing'] = _identity(value, expected, tol, sign=1)
    out['odd_pairing']['membership'] = max(dx, dy)
    out['odd_pairing']['passed'] &= max(dx, dy) <= tol
    return out


def _check_nm(n, m):
    if n < 1 or m < 1:
        raise ValueError("needs n >= 1 and m >= 1, got n={}, m={}"
                         "".format(n, m))


# SOSp(n1+n2|2m1+2m2)/S(OSp(n1|2m1) x OSp(n2|2m2))

def _sosp_s_involution(a, n1, n2, m1, m2):
    E = _signs(n1, n2, m1, m2)
    E = linalg.block_diag(E, _signs(m1, m2))
    return involution_from_map(a, _conjugation(E))


def _sosp_s_identities(a, split, n1, n2, m1, m2, tol):
    # p holds the blocks coupling the (n1 | m1, m1) and (n2 | m2, m2) parts
    rng = np.random.RandomState(rcParams['random.seed'])
    S = getattr(split.involution, 'matrix', split.involution)
    str_form = supertrace_form(a)
    n, m = n1 + n2, m1 + m2
    Z = np.zeros
    out = OrderedDict()

    def record(name, X, Y, expected, sign):
        cx, dx = _in_p(a, S, X)
        cy, dy = _in_p(a, S, Y)
        out[name] = _identity(float(str_form(cx, cy)), expected, tol,
                              sign=sign)
        out[name]['membership'] = max(dx, dy)
        out[name]['passed'] &= max(dx, dy) <= tol

    if n1 and n2:
        A12 = rng.uniform(-1, 1, (n1, n2))
        A = np.block([[Z((n1, n1)), A12], [-A12.T, Z((n2, n2))]])
        X = linalg.block_diag(A, Z((2 * m, 2 * m)))
        record('even_negative', X, X, -2 * np.trace(A12.dot(A12.T)), -1)

    c = rng.uniform(-1, 1, (m1, m2))
    C1 = np.block([[Z((m1, m1)), c], [c.T, Z((m2, m2))]])
    X = linalg.block_diag(Z((n, n)), C1, -C1.T)
    record('symplectic_negative', X, X, -4 * np.trace(c.dot(c.T)), -1)

    if n:
        mask = Z((n, m))
        mask[:n1, m1:] = 1.
        mask[n1:, :m1] = 1.
        B1, B2 = rng.uniform(-1, 1, (2, n, m)) * mask
        X = np.block([[Z((n, n)), B1, B2],
                      [-B2.T, Z((m, m)), Z((m, m))],
                      [B1.T, Z((m, m)), Z((m, m))]])
        Y = np.block([[Z((n, n)), B2, -B1],
                      [B1.T, Z((m, m)), Z((m, m))],
                      [B2.T, Z((m, m)), Z((m, m))]])
        record('odd_pairing', X, Y,
               2 * np.trace(B1.dot(B1.T) + B2.dot(B2.T)), 1)
    return out


def _check_sosp_s(n1, n2, m1, m2):
    if min(n1, n2, m1, m2) < 0 or m1 < 1 or m2 < 1:
        raise ValueError("sosp-s(osp x osp) needs m1, m2 >= 1, got "
                         "({}, {} | {}, {})".format(n1, n2, m1, m2))


# D(2,1; alpha)/SO(2) x SOSp(2|2)

def _d21_involution(a, sigma1, sigma2):
    tau = np.array([[-1., 0., 0.], [0., 0., -1.], [0., -1., 0.]])
    J1 = np.array([[0., 1.], [-1., 0.]])
    return linalg.block_diag(tau, tau, np.eye(3),
                             np.kron(np.kron(J1, J1), np.eye(2)))


def _d21_identities(a, split, sigma1, sigma2, tol):
    form = extend_odd_form(a, d21_odd_form())
    out = OrderedDict()
    cross = split.k.dot(form.matrix).dot(split.p.T)
    worst = float(np.max(np.abs(cross))) if cross.size else 0.
    out['k_orthogonal_p'] = _stage(worst <= tol, residual=worst)
    agree = float(np.max(np.abs(form.odd_block - d21_odd_form())))
    out['odd_block'] = _stage(agree <= tol, residual=agree)
    return out


def _check_d21(sigma1, sigma2):
    if sigma1 == 0 or sigma2 == 0 or sigma1 + sigma2 == 0:
        raise ValueError("d21 needs sigma1, sigma2 and sigma1 + sigma2 "
                         "non-zero")


def _d21_grid(count=5, seed=0):
    rng = np.random.RandomState(seed)
    out = []
    while len(out) < count:
        s1, s2 = rng.uniform(-2, 2, 2)
        if min(abs(s1), abs(s2), abs(s1 + s2)) > 0.2:
            out.append({'sigma1': round(float(s1), 6),
                        'sigma2': round(float(s2), 6)})
    return out


_REGISTRY = verbosedict()


def _register(spec):
    _REGISTRY[spec.name] = spec
    return spec


_register(SymmetricSpaceSpec(
    'sl-sosp', 'SL(n|2m)/SOSp(n|2m)', ('n', 'm'),
    build=lambda n, m: sl_algebra(n, 2 * m),
    involution=_sl_sosp_involution,
    expected_k=lambda n, m: osp_algebra(n, m),
    form=lambda a, n, m: supertrace_form(a),
    killing_multiple=lambda n, m: 2. * (n - 2 * m),
    identities=_sl_sosp_identities,
    check=_check_sl_sosp,
    degenerate=lambda n, m: n == 2 * m))

_register(SymmetricSpaceSpec(
    'psl-sosp', 'PSL(2m|2m)/SOSp(2m|2m)', ('m', ),
    build=lambda m: psl_algebra(2 * m),
    involution=lambda a, m: _sl_sosp_involution(a, 2 * m, m),
    expected_k=lambda m: osp_algebra(2 * m, m),
    form=lambda a, m: supertrace_form(a),
    killing_multiple=lambda m: 0.,
    identities=lambda a, split, m, tol: _sl_sosp_identities(
        a, split, 2 * m, m, tol),
    check=_check_psl_sosp))

_register(SymmetricSpaceSpec(
    'sl-s(gl×gl)', 'SL(n1+n2|m1+m2)/S(GL(n1|m1)xGL(n2|m2))',
    ('n1', 'n2', 'm1', 'm2'),
    build=_sl_s,
    involution=_sl_s_involution,
    expected_k=_s_gl_gl,
    form=lambda a, n1, n2, m1, m2: supertrace_form(a),
    killing_multiple=lambda n1, n2, m1, m2: 2. * (n1 + n2 - m1 - m2),
    identities=_sl_s_identities,
    check=_check_sl_s))

_register(SymmetricSpaceSpec(
    'sosp-u', 'SOSp(2n|2m)/U(n|m)', ('n', 'm'),
    build=lambda n, m: osp_algebra(2 * n, m, family='sosp'),
    involution=_sosp_u_involution,
    expected_k=u_algebra,
    form=lambda a, n, m: supertrace_form(a, -1.),
    killing_multiple=lambda n, m: 2. * n - 2. * m - 2.,
    identities=_sosp_u_identities,
    check=_check_nm))

_register(SymmetricSpaceSpec(
    'sosp-s(osp×osp)', 'SOSp(n1+n2|2m1+2m2)/S(OSp(n1|2m1)xOSp(n2|2m2))',
    ('n1', 'n2', 'm1', 'm2'),
    build=lambda n1, n2, m1, m2: osp_algebra(n1 + n2, m1 + m2,
                                             family='sosp'),
    involution=_sosp_s_involution,
    expected_k=lambda n1, n2, m1, m2: direct_sum(osp_algebra(n1, m1),
                                                 osp_algebra(n2, m2)),
    form=lambda a, n1, n2, m1, m2: supertrace_form(a),
    killing_multiple=lambda n1, n2, m1, m2: n1 + n2 - 2. * (m1 + m2) - 2.,
    identities=_sosp_s_identities,
    check=_check_sosp_s))

_register(SymmetricSpaceSpec(
    'd21-so2-sosp22', 'D(2,1;alpha)/SO(2)xSOSp(2|2)', ('sigma1', 'sigma2'),
    build=lambda sigma1, sigma2: d21_algebra(sigma1, sigma2),
    involution=_d21_involution,
    expected_k=lambda sigma1, sigma2: direct_sum(abelian_algebra(1, 0),
                                                 osp_algebra(2, 1)),
    form=lambda a, sigma1, sigma2: extend_odd_form(a, d21_odd_form()),
    killing_multiple=lambda sigma1, sigma2: 0.,
    identities=_d21_identities,
    check=_check_d21))

# the group R^{1|2}: Ad-invariant metrics exist, ad-invariant ones do not
_register(SymmetricSpaceSpec(
    'r12-group', 'R^{1|2} (no bi-invariant metric)', (),
    build=r12_algebra, involution=None, expected_k=None, form=None,
    killing_multiple=None))


def _sl_s_grid():
    out = []
    for n1, n2 in ((1, 0), (2, 0), (1, 1), (3, 0), (2, 1)):
        for m1, m2 in ((1, 0), (0, 1), (2, 0), (1, 1), (0, 2)):
            params = {'n1': n1, 'n2': n2, 'm1': m1, 'm2': m2}
            try:
                _check_sl_s(**params)
            except ValueError:
                continue
            out.append(params)
    return out


_ALIASES = {
    'sl-s': 'sl-s(gl×gl)',
    'sl-s(glxgl)': 'sl-s(gl×gl)',
    'sosp-s': 'sosp-s(osp×osp)',
    'sosp-s(ospxosp)': 'sosp-s(osp×osp)',
}


DESK_GRID = {
    'sl-sosp': [{'n': n, 'm': 1} for n in (1, 3, 4)],
    'psl-sosp': [{'m': 1}],
    'sl-s(gl×gl)': _sl_s_grid(),
    'sosp-u': [{'n': n, 'm': 1} for n in (1, 2)],
    'sosp-s(osp×osp)': [{'n1': n1, 'n2': total - n1, 'm1': 1, 'm2': 1}
                        for total in range(4) for n1 in range(total + 1)],
    'd21-so2-sosp22': _d21_grid(),
    'r12-group': [{}],
}


def get_example(name):
    """
    The registered family ``name``.

    The ASCII spellings ``'sl-s'`` and ``'sosp-s'`` (or ``x`` in place of
    ``×``) name the same families as ``'sl-s(gl×gl)'`` and
    ``'sosp-s(osp×osp)'``.

    Raises
    ------
    KeyError
        Listing the registered names.
    """
    return _REGISTRY[_ALIASES.get(name, name)]


def list_examples():
    """
    Summaries of the registered families.

    Returns
    -------
    list of dict
        ``name``, ``title``, ``params`` and the size of the desk grid.
    """
    return [_REGISTRY[name].summary() for name in sorted(_REGISTRY)]


def symmetric_split(name, tolerance=None, **params):
    """
    Build the algebra of a family and split it by its involution.

    Returns
    -------
    algebra : LieSuperalgebra
    split : SymmetricDecomposition

    Raises
    ------
    KeyError
        For an unknown family.
    ValueError
        For invalid parameters or a family without an involution.
    """
    spec = get_example(name)
    if spec.involution is None:
        raise ValueError("{} is not a symmetric pair".format(name))
    params = spec.normalize(params)
    a = spec.build(**params)
    return a, eigensplit(a, spec.involution(a, **params), tolerance)


def _limit(tol):
    return 1e3 * tol


def _nondegeneracy(a, form, split, tol):
    kernel = 0
    for idx in (0, 1):
        mask = np.array([a.parity_of(v) == idx for v in split.p], dtype=bool)
        rows = split.p[mask]
        if len(rows) == 0:
            continue
        G = form.gram(rows)
        s = np.linalg.svd(G, compute_uv=False)
        kernel += int(np.sum(s <= _limit(tol) * max(1., s[0])))
    return _stage(kernel == 0, kernel_dimension=kernel)


def _killing_stage(a, split, multiple, tol):
    B = killing_form(a)
    if multiple == 0 or a.realization is None:
        reference = np.zeros_like(B.matrix)
    else:
        reference = multiple * supertrace_form(a).matrix
    rows = split.p
    defect = rows.dot(B.matrix - reference).dot(rows.T)
    residual = float(np.max(np.abs(defect))) if defect.size else 0.
    scale = max(1., abs(multiple))
    return _stage(residual <= _limit(tol) * scale, multiple=multiple,
                  residual=residual)


def _verify_r12(tol):
    a = r12_algebra()
    stages = OrderedDict()
    stages['jacobi'] = _stage(check_jacobi(a) <= tol,
                              residual=check_jacobi(a))
    forms = invariant_forms(a, tol)
    exists = has_invariant_scalar_superproduct(a, tol)
    stages['ad_invariant_forms'] = _stage(not exists,
                                          dimension=len(forms),
                                          nondegenerate_exists=exists)
    M = np.zeros((3, 3))
    M[0, 0] = 1.
    M[1, 2], M[2, 1] = 1., -1.
    form = ScalarSuperproduct(a, M, 'Ad-invariant')
    drift = ad_reduced_invariance(r12_pair(), form)
    stages['reduced_invariance'] = _stage(
        drift <= tol and form.is_nondegenerate(tolerance=tol),
        residual=drift, matrix=M.tolist())
    defect = check_ad_invariance(a, form)
    stages['ad_invariance'] = _stage(defect > _limit(tol), residual=defect,
                                     expected='fails')
    return a, stages


def verify_example(name, tolerance=None, **params):
    """
    Run the verification pipeline for one family.

    Stages: ``jacobi``, ``involution``, ``eigensplit``, ``identify_k``,
    ``form``, ``ad_invariance`` (ad_k on p), ``nondegeneracy`` (on p),
    ``reduced_invariance`` (Ad of sampled exp(tX), X in k_0, on p),
    ``identities`` and ``killing``.

    Parameters
    ----------
    name : str
        A key of :func:`list_examples`.
    tolerance : float, optional
    **params
        Family parameters.

    Returns
    -------
    report : dict
        ``name``, ``params``, ``algebra``, ``stages`` (each with
        ``passed``), ``expected_degenerate`` and ``passed``.

    Raises
    ------
    KeyError
        For an unknown family.
    ValueError
        For invalid parameters.

    Examples
    --------
    >>> verify_example('sl-sosp', n=3, m=1)['passed']
    True
    """
    spec = get_example(name)
    params = spec.normalize(params)
    tol = get_tolerance(tolerance)
    logger.debug("verifying %s with %s", spec.name, dict(params))
    if spec.name == 'r12-group':
        a, stages = _verify_r12(tol)
        return _report(spec, params, a, stages, False)

    a = spec.build(**params)
    stages = OrderedDict()
    jac = check_jacobi(a)
    stages['jacobi'] = _stage(jac <= tol, residual=jac)

    S = spec.involution(a, **params)
    inv = check_involution(a, S, tol)
    stages['involution'] = _stage(inv['passed'], square=inv['square'],
                                  parity=inv['parity'],
                                  automorphism=inv['automorphism'])
    if not inv['passed']:
        return _report(spec, params, a, stages, False)

    split = eigensplit(a, S, tol)
    worst = max(split.residuals.values())
    stages['eigensplit'] = _stage(worst <= _limit(tol),
                                  k=split.k_dimension, p=split.p_dimension,
                                  residual=worst)

    found = killing_fingerprint(a, split.k, tol)
    expected = killing_fingerprint(spec.expected_k(**params), tolerance=tol)
    stages['identify_k'] = _stage(found == expected, found=found,
                                  expected=expected)

    form = spec.form(a, **params)
    stages['form'] = _stage(max(form.symmetry_residual(),
                                form.evenness_residual()) <= tol,
                            symmetry=form.symmetry_residual(),
                            evenness=form.evenness_residual(),
                            name=form.name)

    defect = check_ad_invariance(a, form, split.k, split.p)
    stages['ad_invariance'] = _stage(defect <= _limit(tol), residual=defect)

    stages['nondegeneracy'] = _nondegeneracy(a, form, split, tol)

    even_k = np.array([a.parity_of(v) == 0 for v in split.k], dtype=bool)
    k0 = split.k[even_k]
    pair = HarishChandraPair('K_red', len(k0), a, generators=k0,
                             action='conjugation' if a.realization is not None
                             else 'adjoint')
    drift = ad_reduced_invariance(pair, form, vectors=split.p) \
        if len(k0) else 0.
    stages['reduced_invariance'] = _stage(drift <= _limit(tol),
                                          residual=drift)

    if spec.identities is not None:
        ids = spec.identities(a, split, tol=_limit(tol), **params)
        stages['identities'] = _stage(all(v['passed'] for v in ids.values()),
                                      **ids)

    stages['killing'] = _killing_stage(a, split,
                                       spec.killing_multiple(**params), tol)
    degenerate = bool(spec.degenerate(**params)) if spec.degenerate else False
    return _report(spec, params, a, stages, degenerate)


def _report(spec, params, a, stages, degenerate):
    passed = all(stage['passed'] for stage in stages.values())
    if degenerate:
        logger.debug("%s with %s is degenerate on p by construction",
                     spec.name, dict(params))
    elif not passed:
        failed = [k for k, v in six.iteritems(stages) if not v['passed']]
        logger.warning("%s with %s failed stages %s", spec.name,
                       dict(params), failed)
    return {'name': spec.name, 'params': dict(params), 'algebra': a.name,
            'dimension': a.dimension, 'stages': stages,
            'expected_degenerate': degenerate, 'passed': bool(passed)}


def verify_all(names=None, tolerance=None):
    """
    Verify every family on its desk-scale grid.

    Returns
    -------
    list of dict
        One report per (family, parameters).
    """
    names = sorted(DESK_GRID) if names is None else names
    return [verify_example(name, tolerance=tolerance, **params)
            for name in names
            for params in DESK_GRID[get_example(name).name]]
