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
    This module is for saving sampled supercurves, parallel frames and
    verification reports (CSV for time series, JSON for reports).
"""
from __future__ import absolute_import, division, print_function

import os
import json
import logging

import numpy as np

from ..core.geodesics import Supercurve

logger = logging.getLogger(__name__)


def curve_header(n, m):
    """Column names ``t, g_1..g_n, v_1..v_n, h_1..h_m``."""
    return ['t'] + ['g_{}'.format(i + 1) for i in range(n)] + \
        ['v_{}'.format(i + 1) for i in range(n)] + \
        ['h_{}'.format(i + 1) for i in range(m)]


def save_curve(curve, output_name, ext='.csv', dir_path=None):
    """
    Save a sampled supercurve as CSV.

    Parameters
    ----------
    curve : Supercurve
        e.g. the result of ``integrate_geodesic``.
    output_name : str
        Name of the output file, without extension.
    ext : str, optional
    dir_path : str, optional
        Existing directory for the output file.

    Returns
    -------
    file_path : str
    """
    _validate_input(curve.t, curve.g, curve.h)
    file_path = _create_file_path(dir_path, output_name, ext)
    np.savetxt(file_path, curve.samples(), delimiter=',',
               header=','.join(curve_header(curve.n, curve.m)), comments='')
    return file_path


def load_curve(file_path):
    """
    Read a CSV written by :func:`save_curve` back into a Supercurve.

    Raises
    ------
    ValueError
        If the header is not a curve header.
    """
    with open(file_path, 'r') as f:
        header = f.readline().strip().split(',')
    n = sum(1 for h in header if h.startswith('g_'))
    m = sum(1 for h in header if h.startswith('h_'))
    if header != curve_header(n, m):
        raise ValueError("{} is not a supercurve file".format(file_path))
    data = np.loadtxt(file_path, delimiter=',', skiprows=1, ndmin=2)
    return Supercurve(data[:, 0], data[:, 1:n + 1], data[:, n + 1:2 * n + 1],
                      data[:, 2 * n + 1:])


def save_frame(frame, output_name, ext='.csv', dir_path=None):
    """
    Save a transported frame: one row per time with the value coefficients
    ``f_<k>_<a>`` followed by the xi-coefficients ``G_<k>_<a>``.
    """
    T, k, N = frame.f.shape
    _validate_input(frame.t, frame.f, frame.G)
    header = ['t'] + ['f_{}_{}'.format(i + 1, a + 1)
                      for i in range(k) for a in range(N)] + \
        ['G_{}_{}'.format(i + 1, a + 1) for i in range(k) for a in range(N)]
    file_path = _create_file_path(dir_path, output_name, ext)
    np.savetxt(file_path, np.c_[frame.t, frame.f.reshape(T, -1),
                                frame.G.reshape(T, -1)],
               delimiter=',', header=','.join(header), comments='')
    return file_path


class _ReportEncoder(json.JSONEncoder):
    def default(self, obj):
        if isinstance(obj, np.ndarray):
            return obj.tolist()
        if isinstance(obj, np.integer):
            return int(obj)
        if isinstance(obj, np.floating):
            return float(obj)
        if isinstance(obj, np.bool_):
            return bool(obj)
        return json.JSONEncoder.default(self, obj)


def report_to_json(report, indent=1):
    """Serialize a report dict; numpy scalars and arrays are converted."""
    return json.dumps(report, cls=_ReportEncoder, indent=indent)


def save_report(report, file_path):
    with open(file_path, 'w') as f:
        f.write(report_to_json(report))


def _validate_input(t, *columns):
    for col in columns:
        if len(col) != len(t):
            raise ValueError("Number of samples and the number of time "
                             "values are different")


def _create_file_path(dir_path, output_name, ext):
    """
    Output file path; an existing file of that name is replaced.

    Raises
    ------
    ValueError
        If ``dir_path`` does not exist.
    """
    if dir_path is None:
        file_path = output_name + ext
    elif os.path.exists(dir_path):
        file_path = os.path.join(dir_path, output_name) + ext
    else:
        raise ValueError('The given path does not exist.')

    if os.path.isfile(file_path):
        logger.info("Output file %s already exists", file_path)
        os.remove(file_path)

    return file_path
