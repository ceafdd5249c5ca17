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

from sksuper.core import catalog
from sksuper.core.catalog import (get_example, list_examples, verify_example,
                                  verify_all, symmetric_split, DESK_GRID)
from sksuper.core.superalgebra import check_involution


def test_list_examples():
    names = [s['name'] for s in list_examples()]
    for name in ('sl-sosp', 'psl-sosp', 'sl-s(gl×gl)', 'sosp-u',
                 'sosp-s(osp×osp)', 'd21-so2-sosp22', 'r12-group'):
        assert name in names
    assert names == sorted(names)
    assert set(names) == set(DESK_GRID)
    summary = dict((s['name'], s) for s in list_examples())
    assert summary['d21-so2-sosp22']['params'] == ['sigma1', 'sigma2']
    assert summary['d21-so2-sosp22']['grid'] == 5


def test_get_example():
    spec = get_example('sosp-u')
    assert spec.params == ('n', 'm')
    with pytest.raises(KeyError) as err:
        get_example('so-u')
    assert 'sosp-u' in str(err.value)


def test_normalize():
    spec = get_example('d21-so2-sosp22')
    params = spec.normalize({'sigma1': '1', 'sigma2': 2})
    assert params == {'sigma1': 1., 'sigma2': 2.}
    with pytest.raises(ValueError):
        spec.normalize({'sigma1': 1.})
    with pytest.raises(ValueError):
        spec.normalize({'sigma1': 1., 'sigma2': 2., 'alpha': 3.})
    with pytest.raises(ValueError):
        spec.normalize({'sigma1': 1., 'sigma2': -1.})
    with pytest.raises(ValueError):
        get_example('sl-sosp').normalize({'n': 0, 'm': 1})


def test_sl_sosp_involution():
    a, split = symmetric_split('sl-sosp', n=3, m=1)
    assert a.dimension == '12|12'
    assert check_involution(a, split.involution)['passed']
    assert split.k_dimension == '6|6'
    assert split.p_dimension == '6|6'
    assert split.k_algebra().dimension == '6|6'


def test_d21_split():
    a, split = symmetric_split('d21-so2-sosp22', sigma1=1., sigma2=2.)
    assert split.k_dimension == '5|4'
    assert split.p_dimension == '4|4'


def test_split_errors():
    with pytest.raises(ValueError):
        symmetric_split('r12-group')
    with pytest.raises(KeyError):
        symmetric_split('e8-e7')
    with pytest.raises(ValueError):
        symmetric_split('sl-sosp', n=3)


@pytest.mark.parametrize('name, params', [
    ('sl-sosp', {'n': 3, 'm': 1}),
    ('sosp-u', {'n': 2, 'm': 1}),
    ('d21-so2-sosp22', {'sigma1': 1., 'sigma2': 2.}),
    ('psl-sosp', {'m': 1})])
def test_verify_example(name, params):
    report = verify_example(name, **params)
    assert report['passed'], report
    assert not report['expected_degenerate']
    stages = report['stages']
    assert list(stages)[:3] == ['jacobi', 'involution', 'eigensplit']
    for key in ('identify_k', 'form', 'ad_invariance', 'nondegeneracy',
                'reduced_invariance', 'identities', 'killing'):
        assert stages[key]['passed'], key


def test_sign_identities():
    ids = verify_example('sl-sosp', n=3, m=1)['stages']['identities']
    assert ids['passed']
    ids = verify_example('sosp-u', n=2, m=1)['stages']['identities']
    assert ids['passed']
    ids = verify_example('d21-so2-sosp22', sigma1=1.,
                         sigma2=2.)['stages']['identities']
    assert ids['k_orthogonal_p']['passed']

    ids = verify_example('sosp-s(osp×osp)', n1=2, n2=1, m1=1,
                         m2=1)['stages']['identities']
    assert ids['passed']
    assert ids['even_negative']['value'] < 0
    assert ids['symplectic_negative']['value'] < 0
    assert ids['odd_pairing']['value'] > 0
    for key in ('even_negative', 'symplectic_negative', 'odd_pairing'):
        assert ids[key]['passed']
        assert ids[key]['membership'] <= 1e-10


@pytest.mark.parametrize('n1, n2, present', [
    (0, 0, ['symplectic_negative']),
    (0, 2, ['symplectic_negative', 'odd_pairing']),
    (1, 2, ['even_negative', 'symplectic_negative', 'odd_pairing'])])
def test_sosp_s_identities(n1, n2, present):
    report = verify_example('sosp-s(osp×osp)', n1=n1, n2=n2, m1=1, m2=1)
    assert report['passed']
    ids = report['stages']['identities']
    assert sorted(k for k in ids if k != 'passed') == sorted(present)


def test_ascii_aliases():
    assert get_example('sosp-s') is get_example('sosp-s(osp×osp)')
    assert get_example('sosp-s(ospxosp)') is get_example('sosp-s(osp×osp)')
    assert get_example('sl-s') is get_example('sl-s(gl×gl)')
    report = verify_example('sl-s', n1=1, n2=1, m1=1, m2=0)
    assert report['name'] == 'sl-s(gl×gl)'
    assert report['passed']
    a, split = symmetric_split('sosp-s', n1=1, n2=1, m1=1, m2=1)
    assert a.name == 'sosp(2|4)'
    assert len(verify_all(['sosp-s'])) == len(DESK_GRID['sosp-s(osp×osp)'])


def test_degenerate_sl_sosp():
    report = verify_example('sl-sosp', n=2, m=1)
    assert report['expected_degenerate']
    assert not report['passed']
    assert not report['stages']['nondegeneracy']['passed']
    assert report['stages']['nondegeneracy']['kernel_dimension'] == 1
    assert report['stages']['involution']['passed']


def test_r12_group():
    report = verify_example('r12-group')
    assert report['passed']
    stages = report['stages']
    assert not stages['ad_invariant_forms']['nondegenerate_exists']
    assert stages['ad_invariance']['residual'] > 1e-6
    assert stages['reduced_invariance']['residual'] <= 1e-10


def test_tolerance_override():
    report = verify_example('sl-sosp', tolerance=1e-8, n=1, m=1)
    assert report['passed']
    with pytest.raises(ValueError):
        verify_example('sl-sosp', tolerance=0., n=1, m=1)


def test_verify_all():
    reports = verify_all()
    assert len(reports) == sum(len(v) for v in DESK_GRID.values())
    failed = [(r['name'], r['params']) for r in reports
              if not r['passed'] and not r['expected_degenerate']]
    assert failed == []
    d21 = verify_all(['d21-so2-sosp22'])
    assert len(d21) == 5
    assert all(np.isfinite(r['params']['sigma1']) for r in d21)


def test_grid_parameters_valid():
    for name, grid in DESK_GRID.items():
        spec = catalog.get_example(name)
        for params in grid:
            spec.normalize(params)
    sosp_s = set((p['n1'], p['n2']) for p in DESK_GRID['sosp-s(osp×osp)'])
    assert sosp_s == set((a, b) for a in range(4) for b in range(4)
                         if a + b <= 3)
    assert all(p['m1'] == p['m2'] == 1 for p in DESK_GRID['sosp-s(osp×osp)'])
