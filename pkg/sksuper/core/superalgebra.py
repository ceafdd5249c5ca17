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
Finite-dimensional real Lie superalgebras given by structure constants.

An algebra carries a basis with parities (even basis first), the structure
constants ``c[i, j, k]`` with ``[e_i, e_j] = sum_k c[i, j, k] e_k`` and,
when it comes from a matrix family, a realization by block matrices of
block sizes ``(n, m)``.  Everything algebraic in sksuper (Killing forms,
invariance checks, involutions, symmetric splittings, Harish-Chandra pairs)
hangs off this one type.
"""
from __future__ import absolute_import, division, print_function
import six
from six.moves import range

import logging
import itertools

import numpy as np
from scipy import linalg

from .utils import (get_tolerance, parity_sign, rcParams, verbosedict,
                    NoRealizationError, InvolutionError, HypothesisError)

logger = logging.getLogger(__name__)


class LieSuperalgebra(object):
    """
    A real Lie superalgebra.

    Parameters
    ----------
    name : str
        Human readable name, e.g. ``'sl(2|1)'``.
    labels : sequence of str
        One label per basis element.
    parities : sequence of {0, 1}
        Parity of each basis element; even elements must come first.
    structure_constants : array_like
        Shape ``(d, d, d)``.
    realization : ndarray, optional
        Shape ``(d, N, N)``, the matrix of every basis element.
    blocks : tuple of int, optional
        Block sizes ``(n, m)`` of the realization, ``n + m == N``.
    quotient : ndarray, optional
        Shape ``(q, N, N)``: matrices spanning an ideal of the realizing
        algebra that is divided out (psl).
    family : str, optional
    params : dict, optional
        Constructor arguments, kept for serialization and reduced groups.
    """

    def __init__(self, name, labels, parities, structure_constants,
                 realization=None, blocks=None, quotient=None, family=None,
                 params=None):
        self.name = name
        self.labels = list(labels)
        self.parities = np.asarray(parities, dtype=int)
        c = np.array(structure_constants, dtype=float)
        d = len(self.parities)
        if c.shape != (d, d, d) or len(self.labels) != d:
            raise ValueError("structure constants of shape {} do not match "
                             "{} basis elements".format(c.shape, d))
        if np.any(np.diff(self.parities) < 0):
            raise ValueError("even basis elements must precede odd ones")
        c.setflags(write=False)
        self.c = c
        if realization is not None:
            realization = np.asarray(realization)
            if blocks is None or sum(blocks) != realization.shape[-1]:
                raise ValueError("a realization needs block sizes summing "
                                 "to the matrix size")
        self.realization = realization
        self.blocks = tuple(blocks) if blocks is not None else None
        self.quotient = None if quotient is None else np.asarray(quotient)
        self.family = family
        self.params = dict(params or {})
        self._pinv = None

    def __repr__(self):
        return 'LieSuperalgebra({}, {})'.format(self.name, self.dimension)

    @property
    def dim(self):
        return len(self.parities)

    @property
    def even(self):
        return np.nonzero(self.parities == 0)[0]

    @property
    def odd(self):
        return np.nonzero(self.parities == 1)[0]

    @property
    def even_dim(self):
        return len(self.even)

    @property
    def odd_dim(self):
        return len(self.odd)

    @property
    def dimension(self):
        return '{}|{}'.format(self.even_dim, self.odd_dim)

    def basis_vector(self, i):
        out = np.zeros(self.dim)
        out[i] = 1.
        return out

    def parity_of(self, vector, tolerance=None):
        """Parity of a homogeneous coordinate vector (zero counts as even)."""
        tol = get_tolerance(tolerance)
        vector = np.asarray(vector, dtype=float)
        scale = max(1., np.max(np.abs(vector)))
        has_even = np.any(np.abs(vector[self.even]) > tol * scale)
        has_odd = np.any(np.abs(vector[self.odd]) > tol * scale)
        if has_even and has_odd:
            raise ValueError("vector mixes even and odd components")
        return int(has_odd)

    def ad(self, X):
        """Matrix of ad_X, ``ad_X[k, l] = ([X, e_l])_k``."""
        return np.einsum('i,ilk->kl', np.asarray(X, dtype=float), self.c)

    def matrix(self, X):
        """The realized matrix of a coordinate vector."""
        if self.realization is None:
            raise NoRealizationError("{} has no matrix realization"
                                     "".format(self.name))
        return np.tensordot(np.asarray(X), self.realization, axes=1)

    def _stacked(self, matrices):
        matrices = np.asarray(matrices)
        flat = matrices.reshape(matrices.shape[:-2] + (-1, ))
        if np.iscomplexobj(self.realization):
            return np.concatenate([flat.real, flat.imag], axis=-1)
        return flat.real

    def coordinates(self, matrices, tolerance=None):
        """
        Coordinates of realized matrices in the basis.

        Parameters
        ----------
        matrices : ndarray
            Shape ``(..., N, N)``.

        Returns
        -------
        ndarray
            Shape ``(..., d)``.  Components along ``quotient`` are dropped.

        Raises
        ------
        ValueError
            If a matrix is not in the span of the realization.
        """
        if self.realization is None:
            raise NoRealizationError("{} has no matrix realization"
                                     "".format(self.name))
        if self._pinv is None:
            spanning = self.realization
            if self.quotient is not None:
                spanning = np.concatenate([spanning, self.quotient])
            self._span = self._stacked(spanning)
            self._pinv = np.linalg.pinv(self._span)
        vec = self._stacked(matrices)
        coords = np.dot(vec, self._pinv)
        defect = np.max(np.abs(np.dot(coords, self._span) - vec)) \
            if vec.size else 0.
        scale = max(1., np.max(np.abs(vec))) if vec.size else 1.
        if defect > 1e3 * get_tolerance(tolerance) * scale:
            raise ValueError("matrix is not in the span of {} (defect {:.3g})"
                             "".format(self.name, defect))
        return coords[..., :self.dim]

    def supertrace(self, M):
        n = self.blocks[0]
        return np.trace(M[..., :n, :n], axis1=-2, axis2=-1) - \
            np.trace(M[..., n:, n:], axis1=-2, axis2=-1)


def _clean_constants(c, parities):
    sgn = parity_sign(parities[:, None], parities[None, :])[:, :, None]
    allowed = ((parities[:, None, None] + parities[None, :, None]) % 2 ==
               parities[None, None, :])
    c = np.where(allowed, c, 0.)
    c = 0.5 * (c - sgn * c.transpose(1, 0, 2))
    scale = max(1., np.max(np.abs(c))) if c.size else 1.
    return np.where(np.abs(c) < 1e-13 * scale, 0., c)


def from_realization(name, labels, parities, matrices, blocks, quotient=None,
                     family=None, params=None):
    """
    Build an algebra from the matrices of its basis.

    The bracket is the super-commutator ``XY - (-1)**(|X||Y|) YX``; the
    structure constants are the coordinates of all basis brackets.
    """
    matrices = np.asarray(matrices)
    parities = np.asarray(parities, dtype=int)
    d = len(parities)
    size = matrices.shape[-1]
    algebra = LieSuperalgebra(name, labels, parities, np.zeros((d, d, d)),
                              realization=matrices, blocks=blocks,
                              quotient=quotient, family=family,
                              params=params)
    prods = np.einsum('iab,jbc->ijac', matrices, matrices)
    sgn = parity_sign(parities[:, None], parities[None, :])
    brackets = prods - sgn[:, :, None, None] * prods.transpose(1, 0, 2, 3)
    c = algebra.coordinates(brackets.reshape(d * d, size, size))
    algebra.c = _clean_constants(c.reshape(d, d, d), parities)
    algebra.c.setflags(write=False)
    logger.debug("built %s of dimension %s", name, algebra.dimension)
    return algebra


def _unit(size, i, j, value=1.):
    out = np.zeros((size, size), dtype=type(value))
    out[i, j] = value
    return out


def _entry_label(prefix, i, j, size):
    if size > 9:
        return '{}{}_{}'.format(prefix, i + 1, j + 1)
    return '{}{}{}'.format(prefix, i + 1, j + 1)


def _check_nm(n, m):
    n, m = int(n), int(m)
    if n < 0 or m < 0 or n + m < 1:
        raise ValueError("invalid block sizes n={}, m={}".format(n, m))
    return n, m


def _finish(name, even, odd, blocks, family, params, quotient=None):
    labels = [l for l, _ in even] + [l for l, _ in odd]
    mats = [M for _, M in even] + [M for _, M in odd]
    parities = [0] * len(even) + [1] * len(odd)
    size = sum(blocks)
    mats = np.array(mats).reshape(len(mats), size, size)
    return from_realization(name, labels, parities, mats, blocks,
                            quotient=quotient, family=family, params=params)


def gl_algebra(n, m):
    """gl(n|m): all (n+m) square block matrices."""
    n, m = _check_nm(n, m)
    even, odd = _block_entries(n, m, diagonal=True)
    return _finish('gl({}|{})'.format(n, m), even, odd, (n, m), 'gl',
                   {'n': n, 'm': m})


def _block_entries(n, m, diagonal):
    # even: A entries then D entries (row-major); odd: B then C
    N = n + m
    even, odd = [], []
    for block in (range(n), range(n, N)):
        for i, j in itertools.product(block, block):
            if diagonal or i != j:
                even.append((_entry_label('E', i, j, N), _unit(N, i, j)))
    for rows, cols in ((range(n), range(n, N)), (range(n, N), range(n))):
        for i, j in itertools.product(rows, cols):
            odd.append((_entry_label('E', i, j, N), _unit(N, i, j)))
    return even, odd


def sl_algebra(n, m):
    """sl(n|m): supertraceless block matrices."""
    n, m = _check_nm(n, m)
    N = n + m
    even, odd = _block_entries(n, m, diagonal=False)
    for k in range(N - 1):
        H = _unit(N, k, k)
        # crossing into the odd block keeps str(H) = 0 with a plus sign
        H[k + 1, k + 1] = 1. if k == n - 1 else -1.
        even.append(('H{}'.format(k + 1), H))
    return _finish('sl({}|{})'.format(n, m), even, odd, (n, m), 'sl',
                   {'n': n, 'm': m})


def psl_algebra(n, m=None):
    """
    psl(n|n) = sl(n|n) / R I.

    The complement of the identity is spanned by the traceless diagonals of
    both blocks, i.e. the Frobenius-orthogonal complement of I inside the
    diagonal of sl(n|n).
    """
    m = n if m is None else m
    n, m = _check_nm(n, m)
    if n != m or n < 2:
        raise ValueError("psl(n|m) needs n == m >= 2, got n={}, m={}"
                         "".format(n, m))
    N = 2 * n
    even, odd = _block_entries(n, n, diagonal=False)
    for start in (0, n):
        for k in range(start, start + n - 1):
            H = _unit(N, k, k) - _unit(N, k + 1, k + 1)
            even.append(('H{}'.format(k + 1), H))
    return _finish('psl({}|{})'.format(n, n), even, odd, (n, n), 'psl',
                   {'n': n, 'm': n}, quotient=np.eye(N)[None])


def osp_algebra(n, m, family='osp'):
    """
    osp(n|2m) as block matrices over the blocks (n, m, m)::

        [[ A,     B1,  B2   ],
         [-B2^t,  C1,  C2   ],
         [ B1^t,  C3, -C1^t ]]

    with A antisymmetric and C2, C3 symmetric.  ``m`` is half the odd
    block size.
    """
    n, m = int(n), int(m)
    if n < 0 or m < 0 or n + m == 0:
        raise ValueError("invalid osp parameters n={}, m={}".format(n, m))
    N = n + 2 * m
    p, q = n, n + m
    even, odd = [], []
    for i in range(n):
        for j in range(i + 1, n):
            even.append((_entry_label('A', i, j, N),
                         _unit(N, i, j) - _unit(N, j, i)))
    for i, j in itertools.product(range(m), range(m)):
        even.append((_entry_label('C1_', i, j, N),
                     _unit(N, p + i, p + j) - _unit(N, q + j, q + i)))
    for tag, r0, c0 in (('C2_', p, q), ('C3_', q, p)):
        for i in range(m):
            for j in range(i, m):
                M = _unit(N, r0 + i, c0 + j) + _unit(N, r0 + j, c0 + i)
                even.append((_entry_label(tag, i, j, N),
                             M if i != j else M / 2.))
    for i, j in itertools.product(range(n), range(m)):
        odd.append((_entry_label('B1_', i, j, N),
                    _unit(N, i, p + j) + _unit(N, q + j, i)))
    for i, j in itertools.product(range(n), range(m)):
        odd.append((_entry_label('B2_', i, j, N),
                    _unit(N, i, q + j) - _unit(N, p + j, i)))
    name = '{}({}|{})'.format(family, n, 2 * m)
    return _finish(name, even, odd, (n, 2 * m), family, {'n': n, 'm': m})


def u_algebra(n, m):
    """
    u(n|m) realified: block matrices [[A, B], [-i B^*, C]] with A, C
    anti-hermitian; the basis consists of real and imaginary parts.
    """
    n, m = _check_nm(n, m)
    N = n + m
    even, odd = [], []
    for block in (range(n), range(n, N)):
        for i in block:
            even.append((_entry_label('iE', i, i, N),
                         _unit(N, i, i, 1j)))
        for i in block:
            for j in block:
                if i < j:
                    even.append((_entry_label('E', i, j, N),
                                 _unit(N, i, j, 1. + 0j) -
                                 _unit(N, j, i, 1. + 0j)))
                    even.append((_entry_label('iE', i, j, N),
                                 _unit(N, i, j, 1j) + _unit(N, j, i, 1j)))
    for i, j in itertools.product(range(n), range(n, N)):
        # B = b E_ij forces the lower block -i conj(b) E_ji
        odd.append((_entry_label('B', i, j, N),
                    _unit(N, i, j, 1. + 0j) - _unit(N, j, i, 1j)))
        odd.append((_entry_label('iB', i, j, N),
                    _unit(N, i, j, 1j) - _unit(N, j, i, 1. + 0j)))
    return _finish('u({}|{})'.format(n, m), even, odd, (n, m), 'u',
                   {'n': n, 'm': m})


_SL2 = np.array([[[1., 0.], [0., -1.]],
                 [[0., 1.], [0., 0.]],
                 [[0., 0.], [1., 0.]]])
_PSI = np.array([[0., 1.], [-1., 0.]])


def _sl2_coords(M):
    return np.array([M[0, 0], M[0, 1], M[1, 0]])


def d21_algebra(sigma1, sigma2, sigma3=None, check=True):
    """
    The exceptional family D(2,1; alpha) built from three copies of sl(2)
    and g_1 = R^2 x R^2 x R^2.

    With psi(e1, e2) = 1 and P(u, v)w = psi(v, w)u - psi(w, u)v the odd
    bracket is::

        [u1 u2 u3, v1 v2 v3] = (s1 psi2 psi3 P(u1, v1),
                                s2 psi1 psi3 P(u2, v2),
                                s3 psi1 psi2 P(u3, v3))

    where psi_k = psi(u_k, v_k).  Jacobi holds iff s1 + s2 + s3 = 0.

    Parameters
    ----------
    sigma1, sigma2 : float
        Non-zero, with non-zero sum.
    sigma3 : float, optional
        Defaults to ``-sigma1 - sigma2``.
    check : bool, optional
        Reject ``sigma1 + sigma2 + sigma3 != 0``.  Switch off only to
        study the Jacobi defect.
    """
    s1, s2 = float(sigma1), float(sigma2)
    if s1 == 0 or s2 == 0 or s1 + s2 == 0:
        raise ValueError("d21 needs sigma1, sigma2 and sigma1 + sigma2 "
                         "non-zero, got ({}, {})".format(s1, s2))
    s3 = -s1 - s2 if sigma3 is None else float(sigma3)
    if check and abs(s1 + s2 + s3) > 1e-12 * max(1., abs(s1), abs(s2)):
        raise ValueError("d21 needs sigma1 + sigma2 + sigma3 = 0, got {}"
                         "".format(s1 + s2 + s3))
    sig = (s1, s2, s3)
    odd_index = list(itertools.product(range(2), repeat=3))
    d = 9 + 8
    c = np.zeros((d, d, d))
    eye = np.eye(2)
    # even-even: sl(2) brackets inside each copy
    for k in range(3):
        for a, b in itertools.product(range(3), range(3)):
            comm = _SL2[a].dot(_SL2[b]) - _SL2[b].dot(_SL2[a])
            c[3 * k + a, 3 * k + b, 3 * k:3 * k + 3] = _sl2_coords(comm)
    # even-odd: sl(2) acting on its tensor slot
    for k in range(3):
        for a in range(3):
            for col, idx in enumerate(odd_index):
                tensor = np.zeros((2, 2, 2))
                tensor[idx] = 1.
                moved = np.moveaxis(np.tensordot(_SL2[a], tensor,
                                                 axes=([1], [k])), 0, k)
                c[3 * k + a, 9 + col, 9:] = moved.ravel()
                c[9 + col, 3 * k + a, 9:] = -moved.ravel()
    # odd-odd
    for (x, u), (y, v) in itertools.product(enumerate(odd_index),
                                            repeat=2):
        us = [eye[i] for i in u]
        vs = [eye[i] for i in v]
        psi = [us[k].dot(_PSI).dot(vs[k]) for k in range(3)]
        for k in range(3):
            others = np.prod([psi[j] for j in range(3) if j != k])
            if others == 0:
                continue
            P = np.outer(us[k], vs[k]).dot(_PSI) + \
                np.outer(vs[k], us[k]).dot(_PSI)
            c[9 + x, 9 + y, 3 * k:3 * k + 3] += \
                sig[k] * others * _sl2_coords(P)
    labels = ['{}{}'.format(t, k + 1) for k in range(3)
              for t in ('h', 'e', 'f')]
    labels += ['v{}{}{}'.format(*[i + 1 for i in idx])
               for idx in odd_index]
    name = 'd21({:g},{:g})'.format(s1, s2)
    if sigma3 is not None and not check:
        name = 'd21({:g},{:g},{:g})'.format(s1, s2, s3)
    return LieSuperalgebra(name, labels, [0] * 9 + [1] * 8, c,
                           family='d21',
                           params={'sigma1': s1, 'sigma2': s2,
                                   'sigma3': s3})


def d21_odd_form():
    """The form psi x psi x psi on the odd part of d21, as an 8x8 matrix."""
    return np.kron(np.kron(_PSI, _PSI), _PSI)


def abelian_algebra(n_even, n_odd, name=None):
    d = n_even + n_odd
    labels = ['x{}'.format(i + 1) for i in range(n_even)] + \
        ['q{}'.format(i + 1) for i in range(n_odd)]
    return LieSuperalgebra(name or 'abelian({}|{})'.format(n_even, n_odd),
                           labels, [0] * n_even + [1] * n_odd,
                           np.zeros((d, d, d)), family='abelian',
                           params={'n': n_even, 'm': n_odd})


def r12_algebra():
    """
    Lie superalgebra of the group R^{1|2} with law
    (x, xi) * (t, theta) = (x + t + xi1 theta1 + xi2 theta2, xi + theta):
    X even and central, Q1, Q2 odd with [Q1, Q1] = [Q2, Q2] = -2X.
    """
    c = np.zeros((3, 3, 3))
    c[1, 1, 0] = -2.
    c[2, 2, 0] = -2.
    return LieSuperalgebra('r12', ['X', 'Q1', 'Q2'], [0, 1, 1], c,
                           family='r12')


_FAMILIES = verbosedict({
    'gl': gl_algebra,
    'sl': sl_algebra,
    'psl': psl_algebra,
    'osp': osp_algebra,
    'sosp': lambda n, m: osp_algebra(n, m, family='sosp'),
    'u': u_algebra,
})


def construct_algebra(family, n=None, m=None, sigma1=None, sigma2=None,
                      sigma3=None):
    """
    Construct one of the standard families.

    Parameters
    ----------
    family : {'gl', 'sl', 'psl', 'osp', 'sosp', 'u', 'd21'}
    n, m : int
        Block sizes; for osp/sosp the algebra is osp(n|2m).
    sigma1, sigma2 : float
        d21 parameters, sigma3 = -sigma1 - sigma2.
    sigma3 : float, optional
        Only accepted when it equals ``-sigma1 - sigma2``.

    Returns
    -------
    LieSuperalgebra

    Raises
    ------
    ValueError
        For invalid parameters.
    KeyError
        For an unknown family.

    Examples
    --------
    >>> construct_algebra('gl', 1, 1).labels
    ['E11', 'E22', 'E12', 'E21']
    """
    if family == 'd21':
        if sigma1 is None or sigma2 is None:
            raise ValueError("d21 needs sigma1 and sigma2")
        return d21_algebra(sigma1, sigma2, sigma3)
    if n is None or m is None:
        raise ValueError("family {} needs n and m".format(family))
    return _FAMILIES[family](n, m)


def bracket(a, X, Y):
    """
    Bracket of two coordinate vectors, bilinear in both.

    Raises
    ------
    ValueError
        If a vector does not have ``a.dim`` components.
    """
    X = np.asarray(X, dtype=float)
    Y = np.asarray(Y, dtype=float)
    if X.shape[-1] != a.dim or Y.shape[-1] != a.dim:
        raise ValueError("vectors of length {} and {} for an algebra of "
                         "dimension {}".format(X.shape[-1], Y.shape[-1],
                                               a.dim))
    return np.einsum('...i,...j,ijk->...k', X, Y, a.c)


def check_jacobi(a):
    """
    Largest Jacobi defect over all basis triples.

    The defect of (X, Y, Z) is
    ``[X, [Y, Z]] - [[X, Y], Z] - (-1)**(|X||Y|) [Y, [X, Z]]``.
    """
    c = a.c
    # [e_i, [e_j, e_k]]
    first = np.tensordot(c, c, axes=([2], [1])).transpose(2, 0, 1, 3)
    # [[e_i, e_j], e_k]
    second = np.tensordot(c, c, axes=([2], [0]))
    # [e_j, [e_i, e_k]]
    third = np.tensordot(c, c, axes=([2], [1])).transpose(0, 2, 1, 3)
    sgn = parity_sign(a.parities[:, None], a.parities[None, :])
    defect = first - second - sgn[:, :, None, None] * third
    return float(np.max(np.abs(defect))) if defect.size else 0.


def supertrace(a, X):
    """
    Supertrace tr(A) - tr(D) of a realized matrix (real part for complex
    realizations).

    Raises
    ------
    NoRealizationError
        If the algebra has no block structure.
    """
    if a.blocks is None:
        raise NoRealizationError("{} has no matrix realization"
                                 "".format(a.name))
    return float(np.real(a.supertrace(np.asarray(X))))


class ScalarSuperproduct(object):
    """
    An even, graded-symmetric bilinear form on an algebra.

    Non-degeneracy is reported, not enforced, so Killing forms of any
    algebra fit this type.

    Parameters
    ----------
    algebra : LieSuperalgebra
    matrix : array_like
        Gram matrix on the basis, shape ``(d, d)``.
    name : str, optional
    """

    def __init__(self, algebra, matrix, name=None):
        matrix = np.array(matrix, dtype=float)
        if matrix.shape != (algebra.dim, algebra.dim):
            raise ValueError("form of shape {} on an algebra of dimension "
                             "{}".format(matrix.shape, algebra.dim))
        matrix.setflags(write=False)
        self.algebra = algebra
        self.matrix = matrix
        self.name = name or 'form'

    def __call__(self, X, Y):
        return np.einsum('...i,ij,...j->...', X, self.matrix, Y)

    def __mul__(self, scale):
        return ScalarSuperproduct(self.algebra, self.matrix * scale,
                                  '{:g}*{}'.format(scale, self.name))

    __rmul__ = __mul__

    @property
    def even_block(self):
        ev = self.algebra.even
        return self.matrix[np.ix_(ev, ev)]

    @property
    def odd_block(self):
        od = self.algebra.odd
        return self.matrix[np.ix_(od, od)]

    @property
    def mixed_block(self):
        return self.matrix[np.ix_(self.algebra.even, self.algebra.odd)]

    def symmetry_residual(self):
        p = self.algebra.parities
        sgn = parity_sign(p[:, None], p[None, :])
        return float(np.max(np.abs(self.matrix - sgn * self.matrix.T))) \
            if self.matrix.size else 0.

    def evenness_residual(self):
        mixed = self.mixed_block
        return float(np.max(np.abs(mixed))) if mixed.size else 0.

    def gram(self, vectors):
        vectors = np.atleast_2d(vectors)
        return vectors.dot(self.matrix).dot(vectors.T)

    def is_nondegenerate(self, vectors=None, tolerance=None):
        """
        Both parity blocks (of the restriction to ``vectors`` when given)
        have full rank.
        """
        blocks = _parity_blocks(self, vectors)
        return all(_full_rank(B, tolerance) for B in blocks)

    def __repr__(self):
        return 'ScalarSuperproduct({}, {})'.format(self.name,
                                                   self.algebra.name)


def _full_rank(B, tolerance=None):
    if B.size == 0:
        return True
    s = np.linalg.svd(B, compute_uv=False)
    return s[-1] > 1e3 * get_tolerance(tolerance) * max(1., s[0])


def _parity_blocks(form, vectors=None):
    a = form.algebra
    if vectors is None:
        return form.even_block, form.odd_block
    vectors = np.atleast_2d(vectors)
    parities = np.array([a.parity_of(v) for v in vectors])
    out = []
    for p in (0, 1):
        sub = vectors[parities == p]
        out.append(form.gram(sub) if len(sub) else np.zeros((0, 0)))
    return tuple(out)


def supertrace_form(a, scale=1.):
    """The form (X, Y) -> scale * str(XY) on a realized algebra."""
    if a.realization is None:
        raise NoRealizationError("{} has no matrix realization"
                                 "".format(a.name))
    prods = np.einsum('iab,jbc->ijac', a.realization, a.realization)
    B = np.real(a.supertrace(prods)) * scale
    p = a.parities
    B = np.where(p[:, None] == p[None, :], B, 0.)
    return ScalarSuperproduct(a, B, 'str' if scale == 1 else
                              '{:g}*str'.format(scale))


def killing_form(a):
    """
    The Killing form B(X, Y) = str(ad_X ad_Y), the supertrace graded by
    basis parities.

    Returns
    -------
    ScalarSuperproduct
        Possibly degenerate.

    Examples
    --------
    >>> a = construct_algebra('sl', 2, 1)
    >>> B = killing_form(a).matrix
    >>> S = supertrace_form(a).matrix
    >>> bool(np.allclose(B, 2 * S))
    True
    """
    signs = parity_sign(a.parities, 1).astype(float)
    B = np.einsum('ilk,jkl,k->ij', a.c, a.c, signs)
    p = a.parities
    B = np.where(p[:, None] == p[None, :], B, 0.)
    form = ScalarSuperproduct(a, B, 'killing')
    if not form.is_nondegenerate():
        logger.debug("Killing form of %s is degenerate", a.name)
    return form


def _vector_parities(a, vectors):
    return np.array([a.parity_of(v) for v in vectors], dtype=int)


def invariance_defect(a, form_matrix, generators, targets):
    """
    The array ``<[X, Y], Z> + (-1)**(|X||Y|) <Y, [X, Z]>`` for X in
    ``generators`` and Y, Z in ``targets`` (homogeneous vectors).
    """
    gp = _vector_parities(a, generators)
    tp = _vector_parities(a, targets)
    ads = np.einsum('xi,ilk->xkl', generators, a.c)
    # <[X, Y], Z> = (T ad^t M T^t)[y, z]
    first = np.einsum('yl,xkl,kj,zj->xyz', targets, ads, form_matrix,
                      targets)
    second = np.einsum('yi,ik,xkl,zl->xyz', targets, form_matrix, ads,
                       targets)
    sgn = parity_sign(gp[:, None], tp[None, :])
    return first + sgn[:, :, None] * second


def check_ad_invariance(a, form, generators=None, targets=None):
    """
    Largest ad-invariance defect of a bilinear form.

    Parameters
    ----------
    a : LieSuperalgebra
    form : ScalarSuperproduct or ndarray
    generators : ndarray, optional
        Homogeneous vectors X (rows); the full basis by default.
    targets : ndarray, optional
        Homogeneous vectors Y, Z (rows); the full basis by default.

    Returns
    -------
    float
        ``max |<[X, Y], Z> + (-1)**(|X||Y|) <Y, [X, Z]>|``.
    """
    M = getattr(form, 'matrix', form)
    M = np.asarray(M, dtype=float)
    if M.shape != (a.dim, a.dim):
        raise ValueError("form of shape {} on an algebra of dimension {}"
                         "".format(M.shape, a.dim))
    eye = np.eye(a.dim)
    generators = eye if generators is None else np.atleast_2d(generators)
    targets = eye if targets is None else np.atleast_2d(targets)
    if len(generators) == 0 or len(targets) == 0:
        return 0.
    return float(np.max(np.abs(invariance_defect(a, M, generators,
                                                 targets))))


def invariant_forms(a, tolerance=None):
    """
    Basis of the space of even, graded-symmetric, ad-invariant bilinear
    forms, found as the null space of the linear invariance system.

    Returns
    -------
    list of ndarray
        Gram matrices.
    """
    tol = get_tolerance(tolerance)
    ev, od = a.even, a.odd
    units = []
    for i, j in itertools.combinations_with_replacement(ev, 2):
        U = np.zeros((a.dim, a.dim))
        U[i, j] = U[j, i] = 1.
        units.append(U)
    for i, j in itertools.combinations(od, 2):
        U = np.zeros((a.dim, a.dim))
        U[i, j], U[j, i] = 1., -1.
        units.append(U)
    if not units:
        return []
    eye = np.eye(a.dim)
    system = np.array([invariance_defect(a, U, eye, eye).ravel()
                       for U in units]).T
    kernel = linalg.null_space(system, rcond=tol)
    return [np.tensordot(vec, np.array(units), axes=1) for vec in kernel.T]


def has_invariant_scalar_superproduct(a, tolerance=None, trials=3):
    """
    Whether some non-degenerate ad-invariant form exists.

    Non-degeneracy is an open condition, so a random element of the space
    of invariant forms is non-degenerate whenever any element is.
    """
    forms = invariant_forms(a, tolerance)
    if not forms:
        return False
    rng = np.random.RandomState(rcParams['random.seed'])
    for _ in range(trials):
        weights = rng.uniform(-1, 1, len(forms))
        M = np.tensordot(weights, np.array(forms), axes=1)
        if ScalarSuperproduct(a, M).is_nondegenerate(tolerance=tolerance):
            return True
    return False


class HarishChandraPair(object):
    """
    A reduced Lie group G_0 together with a Lie superalgebra.

    Parameters
    ----------
    name : str
        Name of the reduced group.
    dimension : int
        Dimension of the reduced group.
    algebra : LieSuperalgebra
    generators : ndarray, optional
        Even coordinate vectors spanning Lie(G_0); the even basis by
        default.
    action : {'conjugation', 'adjoint'}
        'conjugation' samples g = expm(t X) in the realization and acts by
        g Y g^-1; 'adjoint' uses expm(t ad_X), the adjoint action of the
        connected group, for algebras without a realization.
    """

    def __init__(self, name, dimension, algebra, generators=None,
                 action='conjugation'):
        if action not in ('conjugation', 'adjoint'):
            raise ValueError("unknown action {!r}".format(action))
        self.name = name
        self.dimension = int(dimension)
        self.algebra = algebra
        if generators is None:
            generators = np.eye(algebra.dim)[algebra.even]
        self.generators = np.atleast_2d(generators).reshape(-1, algebra.dim)
        self.action = action

    def _require_realization(self):
        if self.action == 'conjugation' and \
                self.algebra.realization is None:
            raise NoRealizationError("{} has no matrix realization"
                                     "".format(self.algebra.name))

    def element(self, X, t):
        """The group element expm(t X) in the realization."""
        self._require_realization()
        return linalg.expm(t * self.algebra.matrix(X))

    def adjoint(self, X, t):
        """Coordinate matrix of Ad_{exp(tX)}."""
        a = self.algebra
        if self.action == 'adjoint':
            return linalg.expm(t * a.ad(X))
        g = self.element(X, t)
        g_inv = np.linalg.inv(g)
        moved = np.einsum('ab,jbc,cd->jad', g, a.realization, g_inv)
        return a.coordinates(moved).T

    def __repr__(self):
        return 'HarishChandraPair({}, {})'.format(self.name, self.algebra.name)


def _reduced_dimension(a):
    n, m = a.params.get('n'), a.params.get('m')
    if a.family in ('gl', 'u'):
        return n * n + m * m, ('GL({})xGL({})' if a.family == 'gl'
                               else 'U({})xU({})').format(n, m)
    if a.family == 'sl':
        return n * n + m * m - 1, 'SL({}|{})_red'.format(n, m)
    if a.family == 'psl':
        return 2 * n * n - 2, 'PSL({}|{})_red'.format(n, n)
    if a.family in ('osp', 'sosp'):
        return n * (n - 1) // 2 + m * (2 * m + 1), \
            '{}({})xSp({};R)'.format('O' if a.family == 'osp' else 'SO',
                                     n, m)
    if a.family == 'r12':
        return 1, 'R'
    raise ValueError("no reduced group known for family {!r}"
                     "".format(a.family))


def reduced_group_pair(a):
    """
    The standard Harish-Chandra pair of a constructed algebra, e.g.
    (O(n) x Sp(m; R), osp(n|2m)) or (U(n) x U(m), u(n|m)).
    """
    dimension, name = _reduced_dimension(a)
    action = 'conjugation' if a.realization is not None else 'adjoint'
    return HarishChandraPair(name, dimension, a, action=action)


def r12_pair():
    """(R, r12): the reduced group acts trivially since X is central."""
    return reduced_group_pair(r12_algebra())


def ad_reduced_invariance(pair, form, vectors=None, times=None):
    """
    Largest defect of ``<Ad_g X, Ad_g Y> = <X, Y>`` over sampled
    g = exp(tX), X a generator of the reduced group.

    Parameters
    ----------
    pair : HarishChandraPair
    form : ScalarSuperproduct or ndarray
    vectors : ndarray, optional
        Restrict X, Y to these rows (e.g. a basis of p).
    times : sequence of float, optional
        Defaults to ``rcParams['invariance.times']``.
    """
    pair._require_realization()
    M = np.asarray(getattr(form, 'matrix', form), dtype=float)
    a = pair.algebra
    vectors = np.eye(a.dim) if vectors is None else np.atleast_2d(vectors)
    times = rcParams['invariance.times'] if times is None else times
    worst = 0.
    base = vectors.dot(M).dot(vectors.T)
    for X in pair.generators:
        for t in times:
            moved = vectors.dot(pair.adjoint(X, t).T)
            defect = moved.dot(M).dot(moved.T) - base
            if defect.size:
                worst = max(worst, float(np.max(np.abs(defect))))
    return worst


def validate_hc_pair(pair, tolerance=None, derivative_tolerance=1e-6):
    """
    Check the compatibility conditions of a Harish-Chandra pair.

    Returns
    -------
    report : dict
        ``dimension``, ``automorphism`` and ``differential`` entries, each
        with a ``passed`` flag, and an overall ``passed``.
    """
    tol = get_tolerance(tolerance)
    pair._require_realization()
    a = pair.algebra
    span = np.linalg.matrix_rank(pair.generators) if len(pair.generators) \
        else 0
    dim_ok = pair.dimension == a.even_dim and span == a.even_dim
    report = {'dimension': {'passed': bool(dim_ok),
                            'group': pair.dimension,
                            'even_algebra': a.even_dim,
                            'generator_rank': int(span)}}

    worst_auto = 0.
    for X in pair.generators:
        for t in rcParams['hc_pair.times']:
            A = pair.adjoint(X, t)
            lhs = np.einsum('kl,ijl->ijk', A, a.c)
            rhs = np.einsum('ai,bj,abk->ijk', A, A, a.c)
            scale = max(1., np.max(np.abs(lhs))) if lhs.size else 1.
            if lhs.size:
                worst_auto = max(worst_auto,
                                 float(np.max(np.abs(lhs - rhs))) / scale)
    report['automorphism'] = {'passed': worst_auto <= 1e3 * tol,
                              'residual': worst_auto}

    h = rcParams['hc_pair.step']
    worst_diff = 0.
    for X in pair.generators:
        def central(step):
            return (pair.adjoint(X, step) - pair.adjoint(X, -step)) / \
                (2 * step)
        derivative = (4 * central(h / 2) - central(h)) / 3
        defect = derivative - a.ad(X)
        if defect.size:
            worst_diff = max(worst_diff, float(np.max(np.abs(defect))))
    report['differential'] = {'passed': worst_diff <= derivative_tolerance,
                              'residual': worst_diff}
    report['passed'] = all(v['passed'] for v in report.values())
    return report


class Involution(object):
    """A validated involutive automorphism, stored as a basis matrix."""

    def __init__(self, algebra, matrix):
        matrix = np.array(matrix, dtype=float)
        matrix.setflags(write=False)
        self.algebra = algebra
        self.matrix = matrix

    def __call__(self, X):
        return np.dot(np.asarray(X), self.matrix.T)


def check_involution(a, sigma, tolerance=None):
    """
    Check sigma**2 = id, parity preservation and sigma[X, Y] =
    [sigma X, sigma Y].

    Returns
    -------
    report : dict
        Residuals per property, the worst basis ``pair`` for the
        automorphism property and ``passed``.
    """
    tol = get_tolerance(tolerance)
    S = np.asarray(sigma, dtype=float)
    if S.shape != (a.dim, a.dim):
        raise ValueError("involution of shape {} on an algebra of dimension "
                         "{}".format(S.shape, a.dim))
    square = float(np.max(np.abs(S.dot(S) - np.eye(a.dim))))
    mixed = S[np.ix_(a.even, a.odd)], S[np.ix_(a.odd, a.even)]
    parity = max([float(np.max(np.abs(B))) for B in mixed if B.size] +
                 [0.])
    lhs = np.einsum('kl,ijl->ijk', S, a.c)
    rhs = np.einsum('ai,bj,abk->ijk', S, S, a.c)
    defect = np.max(np.abs(lhs - rhs), axis=2) if a.dim else \
        np.zeros((0, 0))
    auto = float(defect.max()) if defect.size else 0.
    pair = tuple(int(k) for k in np.unravel_index(np.argmax(defect),
                                                  defect.shape)) \
        if defect.size else None
    limit = max(tol, 1e-12)
    report = {'square': square, 'parity': parity, 'automorphism': auto,
              'pair': pair if auto > limit else None}
    report['passed'] = square <= limit and parity <= limit and auto <= limit
    return report


def make_involution(a, sigma, tolerance=None):
    """
    Validate a matrix as an involution of ``a``.

    Raises
    ------
    InvolutionError
        Naming the violated property and the offending basis pair.
    """
    report = check_involution(a, sigma, tolerance)
    if not report['passed']:
        if report['square'] > max(get_tolerance(tolerance), 1e-12):
            raise InvolutionError("sigma**2 != id (defect {:.3g})"
                                  "".format(report['square']))
        if report['pair'] is None:
            raise InvolutionError("sigma mixes parities (defect {:.3g})"
                                  "".format(report['parity']))
        i, j = report['pair']
        raise InvolutionError(
            "sigma is not an automorphism: sigma[{0}, {1}] != "
            "[sigma {0}, sigma {1}] (defect {2:.3g})".format(
                a.labels[i], a.labels[j], report['automorphism']),
            pair=report['pair'])
    return Involution(a, sigma)


def involution_from_map(a, func):
    """Basis matrix of the linear map ``func`` acting on realized matrices."""
    images = np.array([func(M) for M in a.realization])
    return a.coordinates(images).T


class SymmetricDecomposition(object):
    """g = k + p with orthonormal coordinate bases ``k`` and ``p`` (rows)."""

    def __init__(self, algebra, involution, k, p, residuals):
        self.algebra = algebra
        self.involution = involution
        self.k = k
        self.p = p
        self.residuals = residuals

    def _dims(self, vectors):
        par = _vector_parities(self.algebra, vectors)
        return '{}|{}'.format(int(np.sum(par == 0)), int(np.sum(par == 1)))

    @property
    def k_dimension(self):
        return self._dims(self.k)

    @property
    def p_dimension(self):
        return self._dims(self.p)

    def k_algebra(self, name='k'):
        return subalgebra(self.algebra, self.k, name=name)


def _eigenspace(a, S, value, tol):
    vecs = []
    for idx in (a.even, a.odd):
        if len(idx) == 0:
            continue
        block = S[np.ix_(idx, idx)] - value * np.eye(len(idx))
        kernel = linalg.null_space(block, rcond=1e3 * tol)
        for col in kernel.T:
            v = np.zeros(a.dim)
            v[idx] = col
            vecs.append(v)
    return np.array(vecs).reshape(len(vecs), a.dim)


def eigensplit(a, involution, tolerance=None):
    """
    Split ``a`` into the +1 and -1 eigenspaces of an involution.

    Raises
    ------
    ValueError
        If the eigenspaces do not span the algebra.
    """
    tol = get_tolerance(tolerance)
    S = getattr(involution, 'matrix', involution)
    k = _eigenspace(a, S, 1., tol)
    p = _eigenspace(a, S, -1., tol)
    if len(k) + len(p) != a.dim:
        raise ValueError("eigenspaces of the involution span {} of {} "
                         "dimensions".format(len(k) + len(p), a.dim))

    def inclusion(X, Y, sign):
        if len(X) == 0 or len(Y) == 0:
            return 0.
        br = np.einsum('xi,yj,ijk->xyk', X, Y, a.c)
        return float(np.max(np.abs(br.dot(S.T) - sign * br)))

    residuals = {'[k,k]<k': inclusion(k, k, 1.),
                 '[k,p]<p': inclusion(k, p, -1.),
                 '[p,p]<k': inclusion(p, p, 1.)}
    for name, value in six.iteritems(residuals):
        if value > 1e3 * tol:
            logger.warning("inclusion %s violated by %.3g", name, value)
    split = SymmetricDecomposition(a, involution, k, p, residuals)
    logger.debug("%s splits into k=%s, p=%s", a.name, split.k_dimension,
                 split.p_dimension)
    return split


def subalgebra(a, vectors, name=None, tolerance=None):
    """
    The subalgebra spanned by homogeneous coordinate vectors (rows).

    Raises
    ------
    ValueError
        If the span is not closed under the bracket.
    """
    tol = get_tolerance(tolerance)
    vectors = np.atleast_2d(np.asarray(vectors, dtype=float))
    par = _vector_parities(a, vectors)
    order = np.argsort(par, kind='stable')
    vectors, par = vectors[order], par[order]
    br = np.einsum('xi,yj,ijk->xyk', vectors, vectors, a.c)
    coeffs, _, _, _ = np.linalg.lstsq(vectors.T, br.reshape(-1, a.dim).T,
                                      rcond=None)
    back = coeffs.T.dot(vectors).reshape(br.shape)
    defect = float(np.max(np.abs(back - br))) if br.size else 0.
    if defect > 1e3 * tol:
        raise ValueError("span is not closed under the bracket "
                         "(defect {:.3g})".format(defect))
    k = len(vectors)
    c = _clean_constants(coeffs.T.reshape(k, k, k), par)
    realization = None
    if a.realization is not None:
        realization = np.tensordot(vectors, a.realization, axes=1)
    labels = ['k{}'.format(i + 1) for i in range(k)]
    return LieSuperalgebra(name or 'sub({})'.format(a.name), labels, par, c,
                           realization=realization, blocks=a.blocks,
                           quotient=a.quotient)


def quotient_algebra(a, ideal, name=None, tolerance=None):
    """
    The quotient of ``a`` by the ideal spanned by homogeneous vectors
    (rows), on the orthogonal complement of the ideal in coordinates.
    """
    ideal = np.atleast_2d(np.asarray(ideal, dtype=float))
    ipar = _vector_parities(a, ideal)
    comp, cpar = [], []
    for p, idx in ((0, a.even), (1, a.odd)):
        sub = ideal[ipar == p][:, idx]
        basis = linalg.null_space(sub) if len(sub) else np.eye(len(idx))
        for col in basis.T:
            v = np.zeros(a.dim)
            v[idx] = col
            comp.append(v)
            cpar.append(p)
    comp = np.array(comp).reshape(len(comp), a.dim)
    full = np.concatenate([comp, ideal])
    br = np.einsum('xi,yj,ijk->xyk', comp, comp, a.c)
    coeffs = np.linalg.solve(full.T, br.reshape(-1, a.dim).T).T
    k = len(comp)
    c = _clean_constants(coeffs[:, :k].reshape(k, k, k), np.array(cpar))
    labels = ['q{}'.format(i + 1) for i in range(k)]
    return LieSuperalgebra(name or '{}/ideal'.format(a.name), labels, cpar,
                           c)


def direct_sum(*algebras, **kwargs):
    """
    Direct sum of algebras.  Realizations are combined block-diagonally
    (even blocks first, then odd blocks) when all summands have one.
    """
    name = kwargs.pop('name', None) or \
        '+'.join(alg.name for alg in algebras)
    even, odd = [], []
    offset = 0
    for alg in algebras:
        even.extend(offset + alg.even)
        odd.extend(offset + alg.odd)
        offset += alg.dim
    order = np.array(even + odd, dtype=int)
    d = offset
    c = np.zeros((d, d, d))
    parities = np.zeros(d, dtype=int)
    labels = []
    offset = 0
    for alg in algebras:
        sl = slice(offset, offset + alg.dim)
        c[sl, sl, sl] = alg.c
        parities[sl] = alg.parities
        labels.extend('{}:{}'.format(alg.name, l) for l in alg.labels)
        offset += alg.dim
    c = c[np.ix_(order, order, order)]
    realization, blocks = None, None
    if all(alg.realization is not None for alg in algebras):
        n_tot = sum(alg.blocks[0] for alg in algebras)
        m_tot = sum(alg.blocks[1] for alg in algebras)
        cplx = any(np.iscomplexobj(alg.realization) for alg in algebras)
        mats = np.zeros((d, n_tot + m_tot, n_tot + m_tot),
                        dtype=complex if cplx else float)
        offset, n_off, m_off = 0, 0, n_tot
        for alg in algebras:
            n, m = alg.blocks
            rows = np.r_[n_off:n_off + n, m_off:m_off + m]
            for i in range(alg.dim):
                mats[offset + i][np.ix_(rows, rows)] = alg.realization[i]
            offset += alg.dim
            n_off += n
            m_off += m
        realization, blocks = mats[order], (n_tot, m_tot)
    return LieSuperalgebra(name, [labels[i] for i in order],
                           parities[order], c, realization=realization,
                           blocks=blocks)


def adjoint_matrix(a, X):
    """Matrix of ad_X on the basis of ``a``."""
    return a.ad(X)


def killing_fingerprint(a, subspace=None, tolerance=None):
    """
    Isomorphism invariants used to identify subalgebras: dimensions per
    parity plus rank and signature of the Killing form on the even part.

    Parameters
    ----------
    a : LieSuperalgebra
    subspace : ndarray, optional
        Rows spanning a subalgebra of ``a``; its own invariants are
        returned.
    """
    tol = get_tolerance(tolerance)
    if subspace is not None:
        a = subalgebra(a, subspace, tolerance=tolerance)
    B = killing_form(a).even_block
    eig = np.linalg.eigvalsh(B) if B.size else np.zeros(0)
    cut = 1e3 * tol * max(1., np.max(np.abs(eig)) if eig.size else 1.)
    return {'dimension': a.dimension,
            'killing_rank': int(np.sum(np.abs(eig) > cut)),
            'killing_signature': (int(np.sum(eig > cut)),
                                  int(np.sum(eig < -cut)))}


def extend_odd_form(a, form1, tolerance=None):
    """
    Extend an antisymmetric form on g_1 to an ad-invariant scalar
    superproduct on g.

    Hypotheses: [g_1, g_1] = g_0, ad of g_0 on g_1 is faithful, and
    ``form1`` is non-degenerate and ad_{g_0}-invariant.  The even block is
    then the unique solution of the (linear) ad-invariance system.

    Parameters
    ----------
    a : LieSuperalgebra
    form1 : ndarray
        Antisymmetric matrix on the odd basis.

    Returns
    -------
    ScalarSuperproduct

    Raises
    ------
    HypothesisError
        ``hypothesis`` is one of 'form1', 'bracket_span', 'faithful',
        'g0_invariance', 'uniqueness' or 'consistency'.
    """
    tol = get_tolerance(tolerance)
    ev, od = a.even, a.odd
    F1 = np.asarray(form1, dtype=float)
    if F1.shape != (len(od), len(od)):
        raise ValueError("odd form of shape {} for {} odd basis elements"
                         "".format(F1.shape, len(od)))
    if not len(od) or np.max(np.abs(F1 + F1.T)) > tol or \
            not _full_rank(F1, tol):
        raise HypothesisError("odd form must be antisymmetric and "
                              "non-degenerate", 'form1')
    odd_brackets = a.c[np.ix_(od, od, ev)].reshape(-1, len(ev))
    if np.linalg.matrix_rank(odd_brackets, tol=1e3 * tol) < len(ev):
        raise HypothesisError("[g_1, g_1] does not span g_0 in {}"
                              "".format(a.name), 'bracket_span')
    action = a.c[np.ix_(ev, od, od)].reshape(len(ev), -1)
    if np.linalg.matrix_rank(action, tol=1e3 * tol) < len(ev):
        raise HypothesisError("ad of g_0 on g_1 is not faithful in {}"
                              "".format(a.name), 'faithful')
    full1 = np.zeros((a.dim, a.dim))
    full1[np.ix_(od, od)] = F1
    eye = np.eye(a.dim)
    g0_defect = np.max(np.abs(invariance_defect(a, full1, eye[ev],
                                                eye[od])))
    if g0_defect > 1e3 * tol:
        raise HypothesisError("odd form is not ad_{{g_0}}-invariant "
                              "(defect {:.3g})".format(g0_defect),
                              'g0_invariance')

    units = []
    for i, j in itertools.combinations_with_replacement(ev, 2):
        U = np.zeros((a.dim, a.dim))
        U[i, j] = U[j, i] = 1.
        units.append(U)
    system = np.array([invariance_defect(a, U, eye, eye).ravel()
                       for U in units]).T
    rhs = -invariance_defect(a, full1, eye, eye).ravel()
    kernel = linalg.null_space(system, rcond=tol)
    if kernel.shape[1]:
        raise HypothesisError("invariant extension is not unique ({} free "
                              "parameters)".format(kernel.shape[1]),
                              'uniqueness')
    sol, _, _, _ = np.linalg.lstsq(system, rhs, rcond=None)
    defect = float(np.max(np.abs(system.dot(sol) - rhs)))
    if defect > 1e3 * tol:
        raise HypothesisError("ad-invariance system is inconsistent "
                              "(defect {:.3g})".format(defect),
                              'consistency')
    M = full1 + np.tensordot(sol, np.array(units), axes=1)
    return ScalarSuperproduct(a, M, 'extended')


def biinv_connection(a, X, Y):
    """Levi-Civita connection of a bi-invariant metric: (1/2)[X, Y]."""
    return 0.5 * bracket(a, X, Y)


def biinv_curvature(a, X, Y, Z):
    """Curvature of a bi-invariant metric: -(1/4)[[X, Y], Z]."""
    return -0.25 * bracket(a, bracket(a, X, Y), Z)


def random_homogeneous(a, rng, parity=None):
    """A random vector of the given (or a random available) parity."""
    if parity is None:
        choices = [p for p, idx in ((0, a.even), (1, a.odd)) if len(idx)]
        parity = choices[rng.randint(len(choices))]
    v = np.zeros(a.dim)
    idx = a.even if parity == 0 else a.odd
    v[idx] = rng.uniform(-1, 1, len(idx))
    return v, parity


def curvature_identity_residuals(a, form, samples=50, seed=None):
    """
    Residuals of the curvature identities for R(X, Y)Z = -(1/4)[[X, Y], Z]
    on random homogeneous X, Y, Z, W::

        R(X,Y) + (-1)^{xy} R(Y,X)
        <R(X,Y)Z,W> + (-1)^{zw} <R(X,Y)W,Z>
        <R(X,Y)Z,W> - (-1)^{(x+y)(z+w)} <R(Z,W)X,Y>
        R(X,Y)Z + (-1)^{x(y+z)} R(Y,Z)X + (-1)^{z(x+y)} R(Z,X)Y
    """
    rng = np.random.RandomState(rcParams['random.seed'] if seed is None
                                else seed)
    M = getattr(form, 'matrix', form)

    def R(X, Y, Z):
        return biinv_curvature(a, X, Y, Z)

    def ip(X, Y):
        return X.dot(M).dot(Y)

    worst = dict.fromkeys(('antisymmetry', 'skew', 'pair', 'bianchi'), 0.)
    for _ in range(samples):
        (X, x), (Y, y), (Z, z), (W, w) = [random_homogeneous(a, rng)
                                          for _ in range(4)]
        s = parity_sign
        vals = {
            'antisymmetry': R(X, Y, Z) + s(x, y) * R(Y, X, Z),
            'skew': ip(R(X, Y, Z), W) + s(z, w) * ip(R(X, Y, W), Z),
            'pair': ip(R(X, Y, Z), W) -
            s(x + y, z + w) * ip(R(Z, W, X), Y),
            'bianchi': R(X, Y, Z) + s(x, y + z) * R(Y, Z, X) +
            s(z, x + y) * R(Z, X, Y),
        }
        for key, val in six.iteritems(vals):
            worst[key] = max(worst[key], float(np.max(np.abs(val))))
    return worst
