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

import itertools

import numpy as np
import pytest
from numpy.testing import (assert_array_equal, assert_array_almost_equal,
                           assert_allclose)

from sksuper.core import superalgebra as sa
from sksuper.core.utils import (HypothesisError, InvolutionError,
                                NoRealizationError)


CONSTRUCTORS = [('gl', 2, 1), ('gl', 1, 1), ('sl', 2, 1), ('sl', 3, 2),
                ('psl', 2, 2), ('osp', 3, 1), ('osp', 2, 2),
                ('sosp', 1, 1), ('u', 1, 1), ('u', 2, 2)]


@pytest.mark.parametrize('family, n, m', CONSTRUCTORS)
def test_constructors_jacobi(family, n, m):
    a = sa.construct_algebra(family, n, m)
    assert sa.check_jacobi(a) <= 1e-12


@pytest.mark.parametrize('family, n, m', CONSTRUCTORS)
def test_constant_symmetries(family, n, m):
    a = sa.construct_algebra(family, n, m)
    p = a.parities
    wrong = (p[:, None, None] + p[None, :, None]) % 2 != p[None, None, :]
    assert_array_equal(a.c[wrong], 0.)
    sgn = 1 - 2 * (p[:, None] * p[None, :])
    assert_array_equal(a.c, -sgn[:, :, None] * a.c.transpose(1, 0, 2))


def test_dimensions():
    gl = sa.construct_algebra('gl', 1, 1)
    assert gl.dimension == '2|2'
    assert gl.labels == ['E11', 'E22', 'E12', 'E21']
    assert sa.construct_algebra('sl', 2, 1).dimension == '4|4'
    assert sa.construct_algebra('osp', 3, 1).dimension == '6|6'
    assert sa.construct_algebra('u', 2, 1).dimension == '5|4'
    d21 = sa.construct_algebra('d21', sigma1=1, sigma2=2)
    assert d21.dimension == '9|8'
    assert sa.check_jacobi(d21) <= 1e-12


def test_invalid_parameters():
    with pytest.raises(KeyError):
        sa.construct_algebra('e8', 1, 1)
    with pytest.raises(ValueError):
        sa.construct_algebra('psl', 2, 1)
    with pytest.raises(ValueError):
        sa.construct_algebra('d21', sigma1=1.)
    with pytest.raises(ValueError):
        sa.construct_algebra('d21', sigma1=1., sigma2=-1.)
    with pytest.raises(ValueError):
        sa.d21_algebra(1., 2., -2.9)


def test_jacobi_defects():
    a = sa.construct_algebra('gl', 2, 1)
    i, j = a.labels.index('E11'), a.labels.index('E12')
    c = np.array(a.c)
    c[i, j, j] = 1.1
    c[j, i, j] = -1.1
    bent = sa.LieSuperalgebra('bent', a.labels, a.parities, c)
    assert sa.check_jacobi(bent) >= 0.1 - 1e-12
    d21 = sa.d21_algebra(1., 2., -2.9, check=False)
    assert sa.check_jacobi(d21) >= 1e-3


def test_bracket():
    a = sa.construct_algebra('gl', 1, 1)
    E12, E21 = a.basis_vector(2), a.basis_vector(3)
    assert_array_equal(sa.bracket(a, E12, E12), 0.)
    assert_array_almost_equal(sa.bracket(a, E12, E21), [1., 1., 0., 0.])
    ab = sa.abelian_algebra(2, 2)
    rng = np.random.RandomState(0)
    assert_array_equal(sa.bracket(ab, rng.rand(4), rng.rand(4)), 0.)
    with pytest.raises(ValueError):
        sa.bracket(a, np.ones(3), np.ones(4))


def test_bracket_matches_matrices():
    a = sa.construct_algebra('osp', 2, 1)
    rng = np.random.RandomState(1)
    X, _ = sa.random_homogeneous(a, rng, 1)
    Y, _ = sa.random_homogeneous(a, rng, 1)
    MX, MY = a.matrix(X), a.matrix(Y)
    assert_array_almost_equal(a.matrix(sa.bracket(a, X, Y)),
                              MX.dot(MY) + MY.dot(MX))


def test_supertrace():
    a = sa.construct_algebra('gl', 2, 1)
    assert sa.supertrace(a, np.eye(3)) == 1.
    odd = np.zeros((3, 3))
    odd[0, 2] = odd[2, 1] = 5.
    assert sa.supertrace(a, odd) == 0.
    assert sa.supertrace(a, np.diag([1., 2., 7.])) == -4.
    sl = sa.construct_algebra('sl', 2, 1)
    assert_array_almost_equal(sl.supertrace(sl.realization), 0.)
    with pytest.raises(NoRealizationError):
        sa.supertrace(sa.construct_algebra('d21', sigma1=1, sigma2=2),
                      np.eye(4))


def test_coordinates():
    a = sa.construct_algebra('sl', 2, 1)
    rng = np.random.RandomState(2)
    X = rng.uniform(-1, 1, a.dim)
    assert_array_almost_equal(a.coordinates(a.matrix(X)), X)
    with pytest.raises(ValueError):
        a.coordinates(np.diag([1., 0., 0.]))
    psl = sa.construct_algebra('psl', 2, 2)
    assert_array_almost_equal(psl.coordinates(np.eye(4)), 0.)


@pytest.mark.parametrize('n, m', [(n, m) for n in range(2, 5)
                                  for m in range(1, n)])
def test_killing_sl(n, m):
    a = sa.construct_algebra('sl', n, m)
    B = sa.killing_form(a)
    S = sa.supertrace_form(a)
    assert np.max(np.abs(B.matrix - 2 * (n - m) * S.matrix)) <= 1e-9
    assert B.is_nondegenerate()


@pytest.mark.parametrize('n, m', [(n, m) for n in range(1, 6)
                                  for m in (1, 2)])
def test_killing_osp(n, m):
    a = sa.construct_algebra('osp', n, m)
    B = sa.killing_form(a)
    S = sa.supertrace_form(a)
    assert np.max(np.abs(B.matrix - (n - 2 * m - 2) * S.matrix)) <= 1e-9
    assert B.is_nondegenerate() == (n != 2 * m + 2)


@pytest.mark.parametrize('family, n, m', [('sl', 2, 2), ('osp', 4, 1)])
def test_killing_vanishes(family, n, m):
    B = sa.killing_form(sa.construct_algebra(family, n, m))
    assert np.max(np.abs(B.matrix)) <= 1e-9
    assert not B.is_nondegenerate()


def test_killing_form_shape():
    for family, n, m in CONSTRUCTORS:
        a = sa.construct_algebra(family, n, m)
        B = sa.killing_form(a)
        assert B.symmetry_residual() <= 1e-12
        assert B.evenness_residual() == 0.
        assert sa.check_ad_invariance(a, B) <= 1e-9


@pytest.mark.parametrize('n', [2, 3])
def test_psl_str_form(n):
    a = sa.construct_algebra('psl', n, n)
    assert sa.supertrace_form(a).is_nondegenerate()


def test_ad_invariance():
    osp = sa.construct_algebra('osp', 3, 1)
    assert sa.check_ad_invariance(osp, sa.supertrace_form(osp)) <= 1e-10
    sl = sa.construct_algebra('sl', 2, 1)
    M = np.array(sa.supertrace_form(sl).matrix)
    rng = np.random.RandomState(3)
    ev = sl.even
    P = 0.1 * rng.uniform(-1, 1, (len(ev), len(ev)))
    M[np.ix_(ev, ev)] += P + P.T
    assert sa.check_ad_invariance(sl, M) > 1e-3
    with pytest.raises(ValueError):
        sa.check_ad_invariance(sl, np.eye(3))


def test_reduced_invariance():
    osp = sa.construct_algebra('osp', 3, 1)
    pair = sa.reduced_group_pair(osp)
    B = sa.killing_form(osp)
    assert sa.ad_reduced_invariance(pair, B) <= 1e-9
    assert sa.ad_reduced_invariance(pair, B, times=(0., )) <= 1e-12


def test_r12_non_example():
    a = sa.r12_algebra()
    assert sa.check_jacobi(a) == 0.
    forms = sa.invariant_forms(a)
    assert len(forms) == 1
    assert not sa.has_invariant_scalar_superproduct(a)
    M = np.array([[1., 0., 0.], [0., 0., 1.], [0., -1., 0.]])
    form = sa.ScalarSuperproduct(a, M)
    assert form.is_nondegenerate()
    assert sa.ad_reduced_invariance(sa.r12_pair(), form) == 0.
    assert sa.check_ad_invariance(a, form) > 1.


def test_invariant_forms_sl():
    a = sa.construct_algebra('sl', 2, 1)
    forms = sa.invariant_forms(a)
    assert len(forms) == 1
    assert sa.has_invariant_scalar_superproduct(a)
    assert sa.check_ad_invariance(a, forms[0]) <= 1e-9


def test_hc_pairs():
    for family, n, m in (('osp', 3, 1), ('u', 1, 1), ('gl', 1, 1)):
        report = sa.validate_hc_pair(
            sa.reduced_group_pair(sa.construct_algebra(family, n, m)))
        assert report['passed'], report
    osp = sa.construct_algebra('osp', 3, 1)
    bad = sa.HarishChandraPair('wrong', 3, osp)
    report = sa.validate_hc_pair(bad)
    assert not report['dimension']['passed']
    assert not report['passed']
    with pytest.raises(NoRealizationError):
        sa.validate_hc_pair(sa.HarishChandraPair(
            'G', 9, sa.construct_algebra('d21', sigma1=1, sigma2=2)))


def test_involutions():
    a = sa.construct_algebra('sl', 2, 1)
    report = sa.check_involution(a, np.eye(a.dim))
    assert report['passed']
    assert isinstance(sa.make_involution(a, np.eye(a.dim)), sa.Involution)
    with pytest.raises(InvolutionError) as excinfo:
        sa.make_involution(a, -np.eye(a.dim))
    assert excinfo.value.pair is not None
    with pytest.raises(InvolutionError):
        sa.make_involution(a, 2 * np.eye(a.dim))
    swap = np.eye(a.dim)
    swap[[0, a.dim - 1]] = swap[[a.dim - 1, 0]]
    assert sa.check_involution(a, swap)['parity'] == 1.


def test_eigensplit_identity():
    a = sa.construct_algebra('osp', 3, 1)
    split = sa.eigensplit(a, np.eye(a.dim))
    assert split.k_dimension == '6|6'
    assert split.p_dimension == '0|0'
    assert max(split.residuals.values()) == 0.


def test_extend_odd_form():
    a = sa.construct_algebra('d21', sigma1=1, sigma2=2)
    F1 = sa.d21_odd_form()
    form = sa.extend_odd_form(a, F1)
    assert sa.check_ad_invariance(a, form) <= 1e-9
    assert_allclose(form.odd_block, F1, atol=1e-12)
    assert form.is_nondegenerate()
    double = sa.extend_odd_form(a, 2 * F1)
    assert_allclose(double.matrix, 2 * form.matrix, atol=1e-9)


def test_extend_odd_form_hypotheses():
    gl = sa.construct_algebra('gl', 1, 1)
    with pytest.raises(HypothesisError) as excinfo:
        sa.extend_odd_form(gl, [[0., 1.], [-1., 0.]])
    assert excinfo.value.hypothesis == 'bracket_span'
    d21 = sa.construct_algebra('d21', sigma1=1, sigma2=2)
    with pytest.raises(HypothesisError) as excinfo:
        sa.extend_odd_form(d21, np.eye(8))
    assert excinfo.value.hypothesis == 'form1'
    with pytest.raises(ValueError):
        sa.extend_odd_form(d21, np.eye(2))


def test_biinvariant_formulas():
    ab = sa.abelian_algebra(2, 2)
    X, Y, Z = np.eye(4)[:3]
    assert_array_equal(sa.biinv_connection(ab, X, Y), 0.)
    assert_array_equal(sa.biinv_curvature(ab, X, Y, Z), 0.)
    a = sa.construct_algebra('osp', 3, 1)
    eye = np.eye(a.dim)
    for i, j, k in itertools.product(range(a.dim), repeat=3):
        X, Y, Z = eye[i], eye[j], eye[k]
        assert_array_equal(sa.biinv_curvature(a, X, Y, Z) +
                           0.25 * sa.bracket(a, sa.bracket(a, X, Y), Z), 0.)


@pytest.mark.parametrize('family, n, m', [('osp', 3, 1), ('u', 2, 2),
                                          ('sl', 3, 1)])
def test_curvature_identities(family, n, m):
    a = sa.construct_algebra(family, n, m)
    res = sa.curvature_identity_residuals(a, sa.supertrace_form(a))
    assert max(res.values()) <= 1e-10, res


def test_structure_helpers():
    gl = sa.construct_algebra('gl', 1, 1)
    total = sa.direct_sum(gl, sa.abelian_algebra(1, 0))
    assert total.dimension == '3|2'
    assert sa.check_jacobi(total) <= 1e-12
    centre = sa.subalgebra(gl, [[1., 1., 0., 0.]])
    assert centre.dimension == '1|0'
    with pytest.raises(ValueError):
        sa.subalgebra(gl, [[0., 0., 1., 0.], [0., 0., 0., 1.]])
    sl = sa.construct_algebra('sl', 2, 2)
    identity = sl.coordinates(np.eye(4))
    quot = sa.quotient_algebra(sl, [identity])
    assert quot.dimension == '6|8'
    assert sa.check_jacobi(quot) <= 1e-10
    fp = sa.killing_fingerprint(sa.construct_algebra('sl', 2, 1))
    assert fp['dimension'] == '4|4'
    assert fp['killing_rank'] == 4
