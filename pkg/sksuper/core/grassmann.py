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
Finite Grassmann algebras Lambda[xi_1, ..., xi_m] and superfunctions on a
coordinate chart R^{n|m}.

Monomials xi_{a1} ... xi_{ak} (a1 < ... < ak) are addressed by bitmasks:
bit ``a - 1`` is set when xi_a occurs.  A Grassmann quantity is a numpy
array whose last axis has length 2**m and is indexed by these masks, so
Grassmann-valued vectors and matrices are plain arrays with extra leading
axes.
"""
from __future__ import absolute_import, division, print_function
import six
from six.moves import range

import logging
import numbers
from functools import reduce, lru_cache

import numpy as np

from .utils import (rcParams, popcount, SignatureMismatchError,
                    NotInvertibleError, DerivativeUnavailableError,
                    DomainError)

logger = logging.getLogger(__name__)

__all__ = ['mask_from_indices', 'indices_from_mask', 'GrassmannNumber',
           'gmul', 'ginv', 'gproduct', 'gmatmul', 'gmatinv',
           'left_derivative', 'CoefficientFunction', 'Polynomial',
           'SmoothFunction', 'Superfunction', 'sf_mul', 'sf_partial',
           'sf_eval']


def mask_from_indices(indices, m):
    """
    Convert a strictly increasing sequence of generator indices (1-based)
    into a bitmask.

    Parameters
    ----------
    indices : sequence of int
        Odd-generator indices, strictly increasing, each in ``1..m``.
    m : int
        Number of generators.

    Returns
    -------
    mask : int

    Raises
    ------
    ValueError
        If the sequence is not strictly increasing or leaves ``1..m``.
    """
    mask = 0
    last = 0
    for idx in indices:
        idx = int(idx)
        if idx <= last or idx > m:
            raise ValueError("odd index set {} must be strictly increasing "
                             "within 1..{}".format(tuple(indices), m))
        mask |= 1 << (idx - 1)
        last = idx
    return mask


def indices_from_mask(mask):
    """Ascending tuple of generator indices set in ``mask``."""
    out = []
    k = 1
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return tuple(out)


@lru_cache(maxsize=None)
def _degrees(m):
    return popcount(np.arange(2 ** m))


@lru_cache(maxsize=None)
def _pair_tables(m):
    """
    Index tables for the product of two Grassmann arrays.

    Returns ``(left, right, sign, scatter)``: the disjoint mask pairs, the
    sign of reordering ``xi_left xi_right`` into ascending order and the
    (pairs x 2**m) matrix sending each pair to ``left | right``.
    """
    size = 2 ** m
    masks = np.arange(size)
    left, right = np.nonzero((masks[:, None] & masks[None, :]) == 0)
    # transpositions needed: pairs (i in left, j in right) with i > j
    swaps = np.zeros(len(left), dtype=np.int64)
    for bit in range(m):
        has = (right >> bit) & 1
        above = _degrees(m)[left >> (bit + 1)]
        swaps += has * above
    sign = (1 - 2 * (swaps % 2)).astype(float)
    scatter = np.zeros((len(left), size))
    scatter[np.arange(len(left)), left | right] = 1.
    for arr in (left, right, sign, scatter):
        arr.setflags(write=False)
    return left, right, sign, scatter


@lru_cache(maxsize=None)
def _derivative_tables(m, alpha):
    bit = 1 << (alpha - 1)
    masks = np.arange(2 ** m)
    src = masks[(masks & bit) != 0]
    sign = (1 - 2 * (_degrees(m)[src & (bit - 1)] % 2)).astype(float)
    return src, src ^ bit, sign


def _size_to_m(size):
    m = int(round(np.log2(size)))
    if 2 ** m != size:
        raise ValueError("last axis of length {} is not a power of two"
                         "".format(size))
    return m


def gproduct(a, b):
    """
    Broadcasting Grassmann product of two arrays along their last axis.

    Parameters
    ----------
    a, b : ndarray
        Arrays of shape ``(..., 2**m)`` whose leading shapes broadcast.

    Returns
    -------
    ndarray
        ``a * b`` computed with the sign rule of the exterior algebra.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape[-1] != b.shape[-1]:
        raise SignatureMismatchError(
            "generator count mismatch: {} vs {} coefficients"
            "".format(a.shape[-1], b.shape[-1]))
    left, right, sign, scatter = _pair_tables(_size_to_m(a.shape[-1]))
    return np.dot(a[..., left] * b[..., right] * sign, scatter)


def gmatmul(A, B):
    """
    Product of Grassmann-valued matrices.

    Parameters
    ----------
    A : ndarray
        Shape ``(..., p, q, 2**m)``.
    B : ndarray
        Shape ``(..., q, r, 2**m)``.

    Returns
    -------
    ndarray
        Shape ``(..., p, r, 2**m)`` with ``C[a, c] = sum_b A[a, b] B[b, c]``
        (factors kept in this order).
    """
    A = np.asarray(A, dtype=float)
    B = np.asarray(B, dtype=float)
    if A.shape[-1] != B.shape[-1]:
        raise SignatureMismatchError("generator count mismatch")
    left, right, sign, scatter = _pair_tables(_size_to_m(A.shape[-1]))
    terms = (A[..., :, :, None, left] * B[..., None, :, :, right]).sum(-3)
    return np.dot(terms * sign, scatter)


def gmatinv(G, parities=None):
    """
    Inverse of a Grassmann-valued square matrix.

    The body ``G0`` is inverted by dense factorization (block by block when
    row parities are given, so that mixed blocks stay exactly zero); the
    nilpotent rest ``N`` is handled by the terminating series
    ``G^-1 = sum_{k <= m} (-G0^-1 N)^k G0^-1``.

    Parameters
    ----------
    G : ndarray
        Shape ``(N, N, 2**m)``.
    parities : array_like of int, optional
        Parity of each row/column.

    Returns
    -------
    ndarray
        Shape ``(N, N, 2**m)``.

    Raises
    ------
    NotInvertibleError
        If the body is singular.
    """
    G = np.asarray(G, dtype=float)
    size = G.shape[0]
    m = _size_to_m(G.shape[-1])
    body = G[..., 0]
    body_inv = np.zeros_like(body)
    if parities is None:
        groups = [np.arange(size)]
    else:
        parities = np.asarray(parities)
        groups = [np.nonzero(parities == p)[0] for p in (0, 1)]
    for idx in groups:
        if len(idx) == 0:
            continue
        block = body[np.ix_(idx, idx)]
        cond = np.linalg.cond(block)
        if not np.isfinite(cond) or cond > 1e14:
            raise NotInvertibleError("body of the matrix is singular "
                                     "(condition number {:.3g})".format(cond))
        body_inv[np.ix_(idx, idx)] = np.linalg.inv(block)

    nil = G.copy()
    nil[..., 0] = 0
    step = -np.einsum('ab,bck->ack', body_inv, nil)
    total = np.zeros_like(G)
    total[np.arange(size), np.arange(size), 0] = 1.
    term = total.copy()
    for _ in range(m):
        term = gmatmul(term, step)
        if not np.any(term):
            break
        total += term
    return np.einsum('abk,bc->ack', total, body_inv)


def left_derivative(coeffs, alpha):
    """
    Left derivative d/dxi_alpha of Grassmann arrays along the last axis.

    Removing xi_alpha from xi_{a1} ... xi_{ak} costs the sign
    (-1)**(number of a_i < alpha); monomials without xi_alpha vanish.
    """
    coeffs = np.asarray(coeffs, dtype=float)
    m = _size_to_m(coeffs.shape[-1])
    if not 1 <= alpha <= m:
        raise ValueError("odd index {} out of range 1..{}".format(alpha, m))
    src, dst, sign = _derivative_tables(m, alpha)
    out = np.zeros_like(coeffs)
    out[..., dst] = coeffs[..., src] * sign
    return out


class GrassmannNumber(object):
    """
    An element of the real Grassmann algebra on ``m`` generators.

    Parameters
    ----------
    m : int
        Number of odd generators.
    coeffs : array_like, optional
        Dense coefficients of length ``2**m`` indexed by monomial bitmask.

    Examples
    --------
    >>> x1 = GrassmannNumber.generator(2, 1)
    >>> x2 = GrassmannNumber.generator(2, 2)
    >>> (x2 * x1).terms
    {(1, 2): -1.0}
    """

    __array_priority__ = 20

    def __init__(self, m, coeffs=None):
        m = int(m)
        if m < 0:
            raise ValueError("generator count must be non-negative")
        if coeffs is None:
            coeffs = np.zeros(2 ** m)
        coeffs = np.array(coeffs, dtype=float)
        if coeffs.shape != (2 ** m, ):
            raise ValueError("expected {} coefficients, got shape {}"
                             "".format(2 ** m, coeffs.shape))
        coeffs.setflags(write=False)
        self._m = m
        self._coeffs = coeffs

    @classmethod
    def scalar(cls, m, value):
        coeffs = np.zeros(2 ** m)
        coeffs[0] = value
        return cls(m, coeffs)

    @classmethod
    def generator(cls, m, alpha):
        coeffs = np.zeros(2 ** m)
        coeffs[mask_from_indices([alpha], m)] = 1.
        return cls(m, coeffs)

    @classmethod
    def from_terms(cls, m, terms):
        """Build from ``{index tuple: coefficient}``."""
        coeffs = np.zeros(2 ** m)
        for indices, value in six.iteritems(terms):
            coeffs[mask_from_indices(indices, m)] += value
        return cls(m, coeffs)

    @property
    def m(self):
        return self._m

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def terms(self):
        """Mapping of ascending index tuples to the non-zero coefficients."""
        nz = np.nonzero(self._coeffs)[0]
        order = sorted(nz, key=lambda k: (_degrees(self._m)[k], k))
        return dict((indices_from_mask(k), float(self._coeffs[k]))
                    for k in order)

    @property
    def body(self):
        return float(self._coeffs[0])

    @property
    def soul(self):
        return self - self.body

    def degree_part(self, k):
        """Projection onto monomials of degree ``k``."""
        keep = _degrees(self._m) == k
        return GrassmannNumber(self._m, np.where(keep, self._coeffs, 0.))

    @property
    def parity(self):
        """0 or 1 for homogeneous elements (zero is even), None if mixed."""
        degs = _degrees(self._m)[self._coeffs != 0] % 2
        if len(degs) == 0 or np.all(degs == 0):
            return 0
        if np.all(degs == 1):
            return 1
        return None

    def allclose(self, other, atol=1e-12):
        other = self._coerce(other)
        return np.allclose(self._coeffs, other._coeffs, rtol=0, atol=atol)

    def _coerce(self, other):
        if isinstance(other, GrassmannNumber):
            if other.m != self._m:
                raise SignatureMismatchError(
                    "generator count mismatch: {} vs {}".format(self._m,
                                                                other.m))
            return other
        if isinstance(other, numbers.Real):
            return GrassmannNumber.scalar(self._m, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return GrassmannNumber(self._m, self._coeffs + other._coeffs)

    __radd__ = __add__

    def __neg__(self):
        return GrassmannNumber(self._m, -self._coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return GrassmannNumber(self._m, self._coeffs - other._coeffs)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, numbers.Real):
            return GrassmannNumber(self._m, self._coeffs * other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return gmul(self, other)

    def __rmul__(self, other):
        if isinstance(other, numbers.Real):
            return GrassmannNumber(self._m, self._coeffs * other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, numbers.Real):
            return GrassmannNumber(self._m, self._coeffs / other)
        return gmul(self, ginv(self._coerce(other)))

    __div__ = __truediv__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return np.array_equal(self._coeffs, other._coeffs)

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __repr__(self):
        terms = self.terms
        if not terms:
            return '0'
        parts = []
        for indices, value in six.iteritems(terms):
            mono = '*'.join('xi{}'.format(k) for k in indices)
            if not mono:
                parts.append('{:g}'.format(value))
            elif value == 1:
                parts.append(mono)
            elif value == -1:
                parts.append('-' + mono)
            else:
                parts.append('{:g}*{}'.format(value, mono))
        return ' + '.join(parts).replace('+ -', '- ')


def gmul(a, b):
    """
    Product of two Grassmann numbers.

    Parameters
    ----------
    a, b : GrassmannNumber

    Returns
    -------
    GrassmannNumber

    Raises
    ------
    SignatureMismatchError
        If the generator counts differ.

    Examples
    --------
    >>> x = GrassmannNumber.from_terms(2, {(): 1, (1, 2): 1})
    >>> y = GrassmannNumber.from_terms(2, {(): 1, (1, 2): -1})
    >>> gmul(x, y).terms
    {(): 1.0}
    """
    if a.m != b.m:
        raise SignatureMismatchError("generator count mismatch: {} vs {}"
                                     "".format(a.m, b.m))
    return GrassmannNumber(a.m, gproduct(a.coeffs, b.coeffs))


def ginv(a):
    """
    Inverse of a Grassmann number with non-zero body.

    Writing ``a = b + nu`` with ``b`` the body and ``nu`` nilpotent,
    ``a**-1 = b**-1 * sum_{k <= m} (-nu / b)**k``.

    Raises
    ------
    NotInvertibleError
        If the body is zero.
    """
    body = a.body
    if body == 0:
        raise NotInvertibleError("Grassmann number {!r} has zero body and "
                                 "is not invertible".format(a))
    step = -a.soul.coeffs / body
    total = np.zeros(2 ** a.m)
    total[0] = 1.
    term = total.copy()
    for _ in range(a.m):
        term = gproduct(term, step)
        if not np.any(term):
            break
        total = total + term
    return GrassmannNumber(a.m, total / body)


class CoefficientFunction(object):
    """
    A real function of the ``n`` even coordinates with derivative access.

    Sub-classes implement ``__call__(point)`` and ``partial(axis)``.
    """
    n = 0

    @property
    def is_zero(self):
        return False

    def _check_axis(self, axis):
        if not 0 <= axis < self.n:
            raise ValueError("even axis {} out of range for n={}"
                             "".format(axis, self.n))

    def __add__(self, other):
        if isinstance(other, numbers.Real):
            other = Polynomial.constant(self.n, other)
        if other.is_zero:
            return self
        if self.is_zero:
            return other
        return _Combination('sum', self, other)

    __radd__ = __add__

    def __neg__(self):
        return self * -1.

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, numbers.Real):
            if other == 0:
                return Polynomial(self.n, {})
            if other == 1:
                return self
            other = Polynomial.constant(self.n, other)
        if self.is_zero or other.is_zero:
            return Polynomial(self.n, {})
        return _Combination('product', self, other)

    __rmul__ = __mul__


class Polynomial(CoefficientFunction):
    """
    Multivariate polynomial with real coefficients and exact derivatives.

    Negative exponents are accepted (Laurent terms); the hyperplane where
    such a coordinate vanishes is outside the domain.

    Parameters
    ----------
    n : int
        Number of variables.
    coeffs : dict
        Maps exponent tuples of length ``n`` to real coefficients.

    Examples
    --------
    >>> p = Polynomial(2, {(2, 0): 1.5, (0, 1): -1})
    >>> p([2., 3.])
    3.0
    >>> p.partial(0).coeffs
    {(1, 0): 3.0}
    """

    def __init__(self, n, coeffs=None):
        self.n = int(n)
        clean = {}
        for exps, value in six.iteritems(coeffs or {}):
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.n:
                raise ValueError("exponent tuple {} does not have length {}"
                                 "".format(exps, self.n))
            value = float(value)
            if value != 0:
                clean[exps] = clean.get(exps, 0.) + value
        self._coeffs = dict((k, v) for k, v in six.iteritems(clean)
                            if v != 0)
        keys = sorted(self._coeffs)
        self._exps = np.array(keys, dtype=float).reshape(len(keys), self.n)
        self._values = np.array([self._coeffs[k] for k in keys])
        self._negative = np.any(self._exps < 0, axis=0)

    @classmethod
    def constant(cls, n, value):
        return cls(n, {(0, ) * n: value})

    @classmethod
    def variable(cls, n, axis):
        exps = [0] * n
        exps[axis] = 1
        return cls(n, {tuple(exps): 1.})

    @property
    def coeffs(self):
        return dict(self._coeffs)

    @property
    def is_zero(self):
        return not self._coeffs

    def __call__(self, point):
        point = np.asarray(point, dtype=float)
        if point.shape != (self.n, ):
            raise ValueError("point must have {} coordinates".format(self.n))
        if self.is_zero:
            return 0.
        if np.any(self._negative & (point == 0)):
            raise DomainError("point {} lies on a pole of {!r}"
                              "".format(point.tolist(), self))
        return float(np.dot(self._values,
                            np.prod(point ** self._exps, axis=1)))

    def partial(self, axis):
        self._check_axis(axis)
        out = {}
        for exps, value in six.iteritems(self._coeffs):
            e = exps[axis]
            if e != 0:
                new = list(exps)
                new[axis] = e - 1
                out[tuple(new)] = value * e
        return Polynomial(self.n, out)

    def __add__(self, other):
        if isinstance(other, numbers.Real):
            other = Polynomial.constant(self.n, other)
        if isinstance(other, Polynomial):
            out = dict(self._coeffs)
            for exps, value in six.iteritems(other._coeffs):
                out[exps] = out.get(exps, 0.) + value
            return Polynomial(self.n, out)
        return CoefficientFunction.__add__(self, other)

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, numbers.Real):
            return Polynomial(self.n, dict((k, v * other) for k, v in
                                           six.iteritems(self._coeffs)))
        if isinstance(other, Polynomial):
            out = {}
            for e1, v1 in six.iteritems(self._coeffs):
                for e2, v2 in six.iteritems(other._coeffs):
                    key = tuple(a + b for a, b in zip(e1, e2))
                    out[key] = out.get(key, 0.) + v1 * v2
            return Polynomial(self.n, out)
        return CoefficientFunction.__mul__(self, other)

    __rmul__ = __mul__

    def to_json(self):
        return dict(('(' + ','.join(str(e) for e in exps) + ')', value)
                    for exps, value in sorted(six.iteritems(self._coeffs)))

    @classmethod
    def from_json(cls, n, data):
        coeffs = {}
        for key, value in six.iteritems(data):
            parts = [s for s in key.strip().strip('()').split(',')
                     if s.strip()]
            coeffs[tuple(int(s) for s in parts)] = value
        return cls(n, coeffs)

    def __repr__(self):
        return 'Polynomial({}, {!r})'.format(self.n, self._coeffs)


class SmoothFunction(CoefficientFunction):
    """
    An opaque evaluable coefficient.

    Parameters
    ----------
    n : int
        Number of even coordinates.
    func : callable
        ``func(point) -> float``.
    partials : dict, optional
        Maps an axis to the exact partial derivative, either another
        CoefficientFunction or a plain callable.
    finite_difference : bool, optional
        Fall back to central differences for axes missing from
        ``partials``.  Steps come from ``rcParams['finite_difference.*']``;
        expect roughly 1e-10 accuracy for first and 1e-7 for second
        derivatives.
    domain : callable, optional
        Predicate on points; evaluation outside raises DomainError.
    name : str, optional
    """

    def __init__(self, n, func, partials=None, finite_difference=True,
                 domain=None, name=None):
        self.n = int(n)
        self._func = func
        self._partials = {}
        for axis, part in six.iteritems(partials or {}):
            if not isinstance(part, CoefficientFunction):
                part = SmoothFunction(n, part,
                                      finite_difference=finite_difference,
                                      domain=domain)
            self._partials[int(axis)] = part
        self._finite_difference = finite_difference
        self._domain = domain
        self.name = name or getattr(func, '__name__', 'smooth')

    def __call__(self, point):
        point = np.asarray(point, dtype=float)
        if point.shape != (self.n, ):
            raise ValueError("point must have {} coordinates".format(self.n))
        if self._domain is not None and not self._domain(point):
            raise DomainError("point {} is outside the domain of {}"
                              "".format(point.tolist(), self.name))
        return float(self._func(point))

    def partial(self, axis):
        self._check_axis(axis)
        if axis in self._partials:
            return self._partials[axis]
        if not self._finite_difference:
            raise DerivativeUnavailableError(
                "{} has no derivative along axis {}".format(self.name, axis))
        return _CentralDifference(self, axis)

    def __repr__(self):
        return 'SmoothFunction({})'.format(self.name)


class _CentralDifference(SmoothFunction):

    def __init__(self, parent, axis):
        nested = isinstance(parent, _CentralDifference)
        self._key = ('finite_difference.second' if nested
                     else 'finite_difference.first')
        self._parent = parent
        self._axis = axis
        SmoothFunction.__init__(self, parent.n, self._difference,
                                domain=getattr(parent, '_domain', None),
                                name='d{}({})'.format(axis, parent.name))

    def _difference(self, point):
        h = rcParams[self._key]
        shift = np.zeros(self.n)
        shift[self._axis] = h
        return (self._parent(point + shift) -
                self._parent(point - shift)) / (2 * h)


class _Combination(CoefficientFunction):
    """Lazy sum or product of coefficient functions."""

    def __init__(self, kind, first, second):
        if first.n != second.n:
            raise SignatureMismatchError("coefficient functions of {} and {} "
                                         "variables".format(first.n,
                                                            second.n))
        self.n = first.n
        self._kind = kind
        self._args = (first, second)

    def __call__(self, point):
        a, b = (f(point) for f in self._args)
        return a + b if self._kind == 'sum' else a * b

    def partial(self, axis):
        f, g = self._args
        if self._kind == 'sum':
            return f.partial(axis) + g.partial(axis)
        return f.partial(axis) * g + f * g.partial(axis)

    def __repr__(self):
        op = ' + ' if self._kind == 'sum' else ' * '
        return '(' + op.join(repr(f) for f in self._args) + ')'


def _as_coefficient(n, value):
    if isinstance(value, CoefficientFunction):
        if value.n != n:
            raise SignatureMismatchError("coefficient of {} variables on a "
                                         "chart with n={}".format(value.n, n))
        return value
    if isinstance(value, numbers.Real):
        return Polynomial.constant(n, value)
    if isinstance(value, dict):
        return Polynomial(n, value)
    if callable(value):
        return SmoothFunction(n, value)
    raise TypeError("cannot use {!r} as a coefficient function"
                    "".format(value))


class Superfunction(object):
    """
    A superfunction sum_I f_I(x) xi^I on the chart R^{n|m}.

    Parameters
    ----------
    n, m : int
        Even and odd dimension of the chart.
    terms : dict, optional
        Maps odd index tuples (ascending, 1-based) or bitmasks to
        coefficient functions.  Numbers become constants, dicts become
        polynomials, callables become SmoothFunctions.
    parity : {0, 1, None}, optional
        Declared parity; None (the default) infers it, and a declared parity
        is checked against the stored monomials.

    Examples
    --------
    >>> f = Superfunction(1, 2, {(): {(1, ): 1.}, (1, 2): {(1, ): 1.}})
    >>> f([3.]).terms
    {(): 3.0, (1, 2): 3.0}
    """

    def __init__(self, n, m, terms=None, parity=None):
        self.n = int(n)
        self.m = int(m)
        clean = {}
        for key, value in six.iteritems(terms or {}):
            if isinstance(key, numbers.Integral):
                mask = int(key)
                if not 0 <= mask < 2 ** self.m:
                    raise ValueError("monomial mask {} out of range"
                                     "".format(mask))
            else:
                mask = mask_from_indices(key, self.m)
            coeff = _as_coefficient(self.n, value)
            if mask in clean:
                coeff = clean[mask] + coeff
            clean[mask] = coeff
        self._terms = dict((k, v) for k, v in six.iteritems(clean)
                           if not v.is_zero)
        degrees = set(_degrees(self.m)[k] % 2 for k in self._terms)
        inferred = degrees.pop() if len(degrees) == 1 else (
            0 if not degrees else None)
        if parity is not None:
            if parity not in (0, 1):
                raise ValueError("parity must be 0, 1 or None")
            if self._terms and inferred != parity:
                raise ValueError("superfunction declared with parity {} "
                                 "stores monomials of the other parity"
                                 "".format(parity))
            inferred = parity
        self.parity = inferred

    @classmethod
    def constant(cls, n, m, value):
        return cls(n, m, {0: value})

    @classmethod
    def even_coordinate(cls, n, m, axis):
        return cls(n, m, {0: Polynomial.variable(n, axis)})

    @classmethod
    def odd_coordinate(cls, n, m, alpha):
        return cls(n, m, {(alpha, ): 1.})

    @property
    def signature(self):
        return (self.n, self.m)

    @property
    def terms(self):
        """Mapping of ascending odd index tuples to coefficient functions."""
        return dict((indices_from_mask(k), v)
                    for k, v in six.iteritems(self._terms))

    @property
    def masks(self):
        return dict(self._terms)

    @property
    def is_zero(self):
        return not self._terms

    def _check(self, other):
        if not isinstance(other, Superfunction):
            return Superfunction.constant(self.n, self.m, other)
        if other.signature != self.signature:
            raise SignatureMismatchError("chart signatures {} and {} differ"
                                         "".format(self.signature,
                                                   other.signature))
        return other

    def __add__(self, other):
        other = self._check(other)
        terms = dict(self._terms)
        for k, v in six.iteritems(other._terms):
            terms[k] = terms[k] + v if k in terms else v
        if self.parity == other.parity:
            parity = self.parity
        elif self.is_zero:
            parity = other.parity
        elif other.is_zero:
            parity = self.parity
        else:
            parity = None
        return Superfunction(self.n, self.m, terms, parity)

    __radd__ = __add__

    def __neg__(self):
        return Superfunction(self.n, self.m,
                             dict((k, -v) for k, v in
                                  six.iteritems(self._terms)),
                             self.parity)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, numbers.Real):
            return Superfunction(self.n, self.m,
                                 dict((k, v * other) for k, v in
                                      six.iteritems(self._terms)),
                                 self.parity)
        return sf_mul(self, self._check(other))

    def __rmul__(self, other):
        if isinstance(other, numbers.Real):
            return self * other
        return NotImplemented

    def partial(self, axis):
        return sf_partial(self, axis)

    def __call__(self, point):
        return sf_eval(self, point)

    def to_json(self):
        """List of ``{"odd": [...], "poly": {...}}`` terms."""
        out = []
        for mask in sorted(self._terms, key=lambda k: (_degrees(self.m)[k],
                                                       k)):
            coeff = self._terms[mask]
            if not isinstance(coeff, Polynomial):
                raise ValueError("only polynomial coefficients can be "
                                 "serialized, got {!r}".format(coeff))
            out.append({'odd': list(indices_from_mask(mask)),
                        'poly': coeff.to_json()})
        return out

    @classmethod
    def from_json(cls, n, m, data, parity=None):
        terms = {}
        for term in data:
            mask = mask_from_indices(term.get('odd', []), m)
            poly = Polynomial.from_json(n, term['poly'])
            terms[mask] = terms[mask] + poly if mask in terms else poly
        return cls(n, m, terms, parity)

    def __repr__(self):
        if self.is_zero:
            return 'Superfunction(0)'
        parts = []
        for indices, coeff in sorted(six.iteritems(self.terms)):
            mono = '*'.join('xi{}'.format(k) for k in indices)
            parts.append('{!r}{}'.format(coeff, '*' + mono if mono else ''))
        return 'Superfunction(' + ' + '.join(parts) + ')'


def sf_mul(f, g):
    """
    Product of superfunctions with the Grassmann sign rule.

    Raises
    ------
    SignatureMismatchError
        If the charts differ.
    """
    if f.signature != g.signature:
        raise SignatureMismatchError("chart signatures {} and {} differ"
                                     "".format(f.signature, g.signature))
    left, right, sign, _ = _pair_tables(f.m)
    lookup = dict(((int(a), int(b)), s) for a, b, s in zip(left, right,
                                                           sign))
    terms = {}
    for a, fa in six.iteritems(f._terms):
        for b, gb in six.iteritems(g._terms):
            if a & b:
                continue
            prod = fa * gb * lookup[(a, b)]
            key = a | b
            terms[key] = terms[key] + prod if key in terms else prod
    if f.parity is not None and g.parity is not None:
        return Superfunction(f.n, f.m, terms, (f.parity + g.parity) % 2)
    return Superfunction(f.n, f.m, terms)


def sf_partial(f, axis):
    """
    Partial derivative along a chart coordinate.

    Axes ``0..n-1`` are the even coordinates; ``n + alpha - 1`` is the odd
    coordinate xi_alpha, differentiated from the left.

    Raises
    ------
    ValueError
        If the axis is out of range.
    DerivativeUnavailableError
        If an opaque coefficient cannot be differentiated.
    """
    if not 0 <= axis < f.n + f.m:
        raise ValueError("axis {} out of range for R^{}|{}"
                         "".format(axis, f.n, f.m))
    if axis < f.n:
        return Superfunction(f.n, f.m,
                             dict((k, v.partial(axis)) for k, v in
                                  six.iteritems(f._terms)),
                             f.parity)
    alpha = axis - f.n + 1
    bit = 1 << (alpha - 1)
    terms = {}
    for mask, coeff in six.iteritems(f._terms):
        if mask & bit:
            sign = -1. if _degrees(f.m)[mask & (bit - 1)] % 2 else 1.
            terms[mask ^ bit] = coeff * sign
    parity = None if f.parity is None else 1 - f.parity
    return Superfunction(f.n, f.m, terms, parity)


def sf_eval(f, point):
    """
    Evaluate every coefficient at ``point``.

    The degree-0 part of the result is the value of the reduced function.
    """
    point = np.asarray(point, dtype=float)
    if point.shape != (f.n, ):
        raise ValueError("point must have {} coordinates, got {}"
                         "".format(f.n, point.shape))
    coeffs = np.zeros(2 ** f.m)
    for mask, coeff in six.iteritems(f._terms):
        coeffs[mask] = coeff(point)
    return GrassmannNumber(f.m, coeffs)


def superfunction_sum(functions, n, m):
    """Sum of an iterable of superfunctions (zero for an empty iterable)."""
    return reduce(lambda a, b: a + b, functions,
                  Superfunction(n, m, {}, 0))
