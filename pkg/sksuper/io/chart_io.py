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
    This module is for reading and writing graded metrics on a chart as
    JSON files.

    Layout::

        {"n": 2, "m": 2,
         "even_names": ["x", "y"], "odd_names": ["xi1", "xi2"],
         "domain": {"lower": [null, 0.0], "upper": [null, null]},
         "metric": [[[{"odd": [], "poly": {"(0,-2)": 1.0}}], ...], ...]}

    Every metric entry is a list of terms; a term is an odd monomial
    (1-based generator indices) times a Laurent polynomial in the even
    coordinates, keyed by exponent tuples.
"""
from __future__ import absolute_import, division, print_function

import os
import json
import logging

from ..core.chartgeom import Chart, GradedMetric
from ..core.grassmann import Superfunction

logger = logging.getLogger(__name__)

_DATA_DIR = os.path.join(os.path.dirname(os.path.dirname(__file__)), 'data')


def fixture_path(name):
    """
    Path of a chart shipped with the package, e.g. ``'hyperbolic'``.

    Raises
    ------
    ValueError
        If no such fixture exists.
    """
    if not name.endswith('.json'):
        name += '.json'
    path = os.path.join(_DATA_DIR, name)
    if not os.path.isfile(path):
        raise ValueError("no chart fixture named {!r}; available: {}".format(
            name, sorted(os.listdir(_DATA_DIR))))
    return path


def metric_from_dict(data):
    """Build a GradedMetric from the JSON layout."""
    n, m = int(data['n']), int(data['m'])
    domain = data.get('domain', {})
    chart = Chart(n, m, data.get('even_names'), data.get('odd_names'),
                  lower=domain.get('lower'), upper=domain.get('upper'))
    rows = data['metric']
    entries = [[Superfunction.from_json(n, m, terms) for terms in row]
               for row in rows]
    return GradedMetric(chart, entries)


def metric_to_dict(metric):
    """
    Inverse of :func:`metric_from_dict`.

    Raises
    ------
    ValueError
        If an entry has a non-polynomial coefficient.
    """
    chart = metric.chart
    return {'n': chart.n, 'm': chart.m,
            'even_names': chart.even_names, 'odd_names': chart.odd_names,
            'domain': {'lower': chart.lower, 'upper': chart.upper},
            'metric': [[f.to_json() for f in row] for row in metric.entries]}


def read_chart(file_path):
    """
    Load a graded metric from a JSON file, or a packaged fixture when
    ``file_path`` is a bare fixture name.
    """
    if not os.path.exists(file_path) and os.sep not in file_path:
        file_path = fixture_path(file_path)
    with open(file_path, 'r') as f:
        data = json.load(f)
    metric = metric_from_dict(data)
    logger.debug("read chart R^%d|%d from %s", metric.n, metric.m, file_path)
    return metric


def write_chart(metric, file_path):
    with open(file_path, 'w') as f:
        json.dump(metric_to_dict(metric), f, indent=1)
