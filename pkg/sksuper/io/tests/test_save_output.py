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

import numpy as np
import pytest
from numpy.testing import assert_array_equal, assert_array_almost_equal

from sksuper.core.chartgeom import flat_metric
from sksuper.core.geodesics import integrate_geodesic, parallel_frame
from sksuper.io.save_output import (save_curve, load_curve, save_frame,
                                    save_report, report_to_json,
                                    curve_header)


@pytest.fixture
def curve():
    return integrate_geodesic(flat_metric(2, 2), [0., 0.], [1., 2.],
                              [0.5, -1.], step=0.1)


def test_curve_header():
    assert curve_header(1, 2) == ['t', 'g_1', 'v_1', 'h_1', 'h_2']


def test_save_curve(tmpdir, curve):
    path = save_curve(curve, 'curve', dir_path=str(tmpdir))
    assert path.endswith('curve.csv')
    with open(path) as f:
        assert f.readline().strip() == 't,g_1,g_2,v_1,v_2,h_1,h_2'
    data = np.loadtxt(path, delimiter=',', skiprows=1)
    assert_array_almost_equal(data, curve.samples())

    loaded = load_curve(path)
    assert loaded.n == 2 and loaded.m == 2
    assert_array_almost_equal(loaded.g, curve.g)
    assert_array_almost_equal(loaded.h, curve.h)

    # existing files are replaced
    path = save_curve(curve, 'curve', dir_path=str(tmpdir))
    assert len(np.loadtxt(path, delimiter=',', skiprows=1)) == len(curve)


def test_save_curve_errors(tmpdir, curve):
    with pytest.raises(ValueError):
        save_curve(curve, 'curve', dir_path=str(tmpdir.join('missing')))
    bad = tmpdir.join('bad.csv')
    bad.write('t,x\n0,1\n')
    with pytest.raises(ValueError):
        load_curve(str(bad))


def test_save_frame(tmpdir, curve):
    frame = parallel_frame(flat_metric(2, 2), curve)
    path = save_frame(frame, 'frame', dir_path=str(tmpdir))
    with open(path) as f:
        header = f.readline().strip().split(',')
    assert header[:3] == ['t', 'f_1_1', 'f_1_2']
    assert len(header) == 1 + 2 * 16
    data = np.loadtxt(path, delimiter=',', skiprows=1)
    assert_array_equal(data[:, 1:17], np.tile(np.eye(4).ravel(),
                                              (len(curve), 1)))


def test_report_to_json(tmpdir):
    report = {'passed': np.bool_(True), 'count': np.int64(3),
              'residual': np.float64(1e-12), 'matrix': np.eye(2)}
    text = report_to_json(report)
    assert json.loads(text) == {'passed': True, 'count': 3,
                                'residual': 1e-12,
                                'matrix': [[1., 0.], [0., 1.]]}
    path = str(tmpdir.join('report.json'))
    save_report(report, path)
    with open(path) as f:
        assert json.load(f)['count'] == 3
    with pytest.raises(TypeError):
        report_to_json({'x': object()})
