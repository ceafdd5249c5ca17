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

import json
import os

import numpy as np
import pytest

from sksuper.cli import main, _attach_values
from sksuper.core.utils import rcParams


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


@pytest.fixture
def sl21(tmpdir, capsys):
    path = str(tmpdir.join('a.json'))
    code, report = run(capsys, 'algebra', '--family', 'sl', '--n', 2, '--m',
                       1, '--out', path)
    assert code == 0
    assert report['dimension'] == '4|4'
    assert report['jacobi'] <= 1e-12
    assert os.path.isfile(path)
    return path


def test_killing(capsys, sl21):
    code, report = run(capsys, 'killing', '--in', sl21)
    assert code == 0
    assert report['proportional']
    assert abs(report['multiple'] - 2.) <= 1e-9
    assert report['nondegenerate'] and not report['vanishes']


def test_killing_without_realization(tmpdir, capsys):
    path = str(tmpdir.join('d21.json'))
    assert run(capsys, 'algebra', '--family', 'd21', '--sigma1', 1,
               '--sigma2', 2, '--out', path)[0] == 0
    code, report = run(capsys, 'killing', '--in', path)
    assert code == 0
    assert report['vanishes']
    assert report['multiple'] is None


def test_invariance(capsys, sl21):
    code, report = run(capsys, 'invariance', '--in', sl21, '--form', 'str')
    assert code == 0
    assert report['ad_invariance'] <= 1e-9
    # extend needs an odd form outside d21
    assert run(capsys, 'invariance', '--in', sl21, '--form',
               'extend')[0] == 2


def test_unchecked_d21(capsys):
    code, report = run(capsys, 'algebra', '--family', 'd21', '--sigma1', 1,
                       '--sigma2', 2, '--sigma3', -2.9, '--unchecked')
    assert code == 1
    assert report['jacobi'] >= 1e-3
    assert run(capsys, 'algebra', '--family', 'd21', '--sigma1', 1,
               '--sigma2', 2, '--sigma3', -2.9)[0] == 2


def test_extend(tmpdir, capsys):
    code, report = run(capsys, 'extend')
    assert code == 0
    assert report['ad_invariance'] <= 1e-9
    assert report['nondegenerate']

    path = str(tmpdir.join('gl11.json'))
    run(capsys, 'algebra', '--family', 'gl', '--n', 1, '--m', 1, '--out',
        path)
    code, report = run(capsys, 'extend', '--in', path, '--odd-form',
                       '0,1;-1,0')
    assert code == 1
    assert report['hypothesis'] == 'bracket_span'
    assert not report['passed']


def test_split(capsys):
    code, report = run(capsys, 'split', '--family', 'sl-sosp', '--params',
                       'n=3,m=1')
    assert code == 0
    assert report['k'] == '6|6' and report['p'] == '6|6'
    assert len(report['k_basis']) == 12
    assert run(capsys, 'split', '--family', 'r12-group')[0] == 2


def test_geodesic(tmpdir, capsys):
    out = str(tmpdir.join('curve.csv'))
    code, report = run(capsys, 'geodesic', '--chart', 'hyperbolic.json',
                       '--p', '0,1', '--v', '0,1', '--t-end', 1, '--step',
                       0.001, '--out', out)
    assert code == 0
    assert abs(report['position'][1] - np.e) <= 1e-6
    assert report['diagnostics']['steps'] == 1000
    data = np.loadtxt(out, delimiter=',', skiprows=1)
    assert data.shape == (1001, 5)


def test_transport(capsys):
    code, report = run(capsys, 'transport', '--chart', 'hyperbolic_r22',
                       '--p', '0,1', '--v', '1,0.5', '--w', '0.3,0.7',
                       '--step', 0.001)
    assert code == 0
    assert report['drift'] <= 1e-6
    assert report['parity_leak'] == 0.
    assert np.array(report['final']).shape == (4, 4)
    code, report = run(capsys, 'transport', '--chart', 'hyperbolic', '--p',
                       '0,1', '--v', '1,0', '--tau', '1,0,0')
    assert code == 2


def test_negative_vectors(capsys):
    code, report = run(capsys, 'geodesic', '--chart', 'hyperbolic', '--p',
                       '0,1', '--v', '-1,0', '--t-end', 0.5)
    assert code == 0
    assert report['position'][0] < 0
    code, report = run(capsys, 'transport', '--chart', 'hyperbolic_r22',
                       '--p', '-0.5,1', '--v', '-1,0.5', '--w', '-0.3,0.7',
                       '--t-end', 0.5)
    assert code == 0
    assert report['drift'] <= 1e-6
    code, report = run(capsys, 'curvature', '--chart', 'hyperbolic',
                       '--point', '-2,1')
    assert code == 0
    assert abs(report['sectional'] + 1) <= 1e-8


def test_attach_values():
    assert _attach_values(['geodesic', '--v', '-1,0', '--p', '0,1']) == \
        ['geodesic', '--v=-1,0', '--p', '0,1']
    assert _attach_values(['--tau', '-1,0;0,1']) == ['--tau=-1,0;0,1']
    assert _attach_values(['--v', '-1.5e-3']) == ['--v=-1.5e-3']
    assert _attach_values(['--p', '0,1', '-v']) == ['--p', '0,1', '-v']
    assert _attach_values(['--v', '--p']) == ['--v', '--p']
    assert _attach_values(['--v']) == ['--v']


def test_curvature(capsys):
    code, report = run(capsys, 'curvature', '--chart', 'hyperbolic',
                       '--point', '0.5,2')
    assert code == 0
    assert abs(report['sectional'] + 1.) <= 1e-8
    assert report['christoffel_parity'] == 0.
    code, report = run(capsys, 'curvature', '--chart', 'flat_r22',
                       '--point', '0,0')
    assert code == 0
    assert report['torsion'] == 0. and report['sectional'] == 0.


def test_verify(tmpdir, capsys):
    out = str(tmpdir.join('report.json'))
    code, report = run(capsys, 'verify', '--family', 'sosp-u', '--params',
                       'n=2,m=1', '--json', out)
    assert code == 0
    assert report['count'] == 1 and report['failed'] == []
    with open(out) as f:
        assert json.load(f)['passed']

    code, report = run(capsys, 'verify', '--family', 'sl-sosp', '--params',
                       'n=2,m=1')
    assert code == 1
    assert report['reports'][0]['expected_degenerate']


def test_list(capsys):
    code, report = run(capsys, 'list')
    assert code == 0
    assert 'r12-group' in [s['name'] for s in report]


@pytest.mark.parametrize('argv', [
    [],
    ['frobnicate'],
    ['algebra', '--family', 'e8', '--n', '1', '--m', '1'],
    ['algebra', '--family', 'sl', '--n', '2'],
    ['split', '--family', 'e8-e7'],
    ['verify', '--family', 'sl-sosp', '--params', 'n=3'],
    ['verify', '--family', 'sl-sosp', '--params', 'n3'],
    ['verify'],
    ['geodesic', '--chart', 'hyperbolic', '--p', '0,-1', '--v', '0,1'],
    ['geodesic', '--chart', 'hyperbolic', '--p', '0', '--v', '0,1'],
    ['geodesic', '--chart', 'hyperbolic', '--p', '0,1', '--v', 'a,b'],
    ['geodesic', '--chart', 'hyperbolic', '--p', '0,1', '--v', '0,1',
     '--step', '0'],
    ['geodesic', '--chart', 'no_such_chart', '--p', '0,1', '--v', '0,1'],
    ['killing', '--in', 'missing.json'],
    ['--tolerance', '-1', 'list']])
def test_usage_errors(capsys, argv):
    assert main(argv) == 2


def test_tolerance_flag_is_restored(capsys):
    before = rcParams['tolerance.algebraic']
    code, report = run(capsys, '--tolerance', '1e-30', 'algebra',
                       '--family', 'osp', '--n', 3, '--m', 1)
    assert rcParams['tolerance.algebraic'] == before
    assert code in (0, 1)
    assert report['jacobi'] >= 0.


def test_computational_failure(tmpdir, capsys):
    chart = tmpdir.join('half_line.json')
    chart.write(json.dumps({'n': 1, 'm': 0,
                            'domain': {'lower': [0.], 'upper': [None]},
                            'metric': [[[{'odd': [],
                                           'poly': {'(0)': 1.}}]]]}))
    # the geodesic reaches the boundary x = 0 at t = 1
    code, report = run(capsys, 'geodesic', '--chart', str(chart), '--p', 1,
                       '--v', '-1', '--t-end', 2)
    assert code == 1
    assert not report['passed']
    assert 'message' in report
