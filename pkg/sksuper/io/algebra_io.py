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
    This module is for reading and writing Lie superalgebras as JSON.
    Structure constants are stored as sparse ``[i, j, k, value]`` entries.
"""
from __future__ import absolute_import, division, print_function

import json
import logging

import numpy as np

from ..core.superalgebra import LieSuperalgebra

logger = logging.getLogger(__name__)


def algebra_to_dict(algebra):
    """
    Plain-data description of an algebra.

    Parameters
    ----------
    algebra : LieSuperalgebra

    Returns
    -------
    dict
        ``name``, ``labels``, ``parities``, ``c`` (sparse),
        ``family``, ``params`` and, for matrix algebras, ``blocks``,
        ``realization`` and ``quotient`` as ``{"real": ..., "imag": ...}``.
    """
    idx = np.argwhere(algebra.c != 0)
    data = {
        'name': algebra.name,
        'labels': list(algebra.labels),
        'parities': [int(p) for p in algebra.parities],
        'c': [[int(i), int(j), int(k), float(algebra.c[i, j, k])]
                      for i, j, k in idx],
        'family': algebra.family,
        'params': dict(algebra.params),
    }
    if algebra.realization is not None:
        data['blocks'] = list(algebra.blocks)
        data['realization'] = _split_complex(algebra.realization)
    if algebra.quotient is not None:
        data['quotient'] = _split_complex(algebra.quotient)
    return data


def _split_complex(arr):
    arr = np.asarray(arr)
    out = {'real': np.real(arr).tolist()}
    if np.iscomplexobj(arr):
        out['imag'] = np.imag(arr).tolist()
    return out


def _join_complex(data):
    if not isinstance(data, dict):
        return np.asarray(data, dtype=float)
    real = np.asarray(data['real'], dtype=float)
    if 'imag' in data:
        return real + 1j * np.asarray(data['imag'], dtype=float)
    return real


def algebra_from_dict(data):
    """
    Inverse of :func:`algebra_to_dict`.

    The sparse structure constants are read from ``c``; the older
    ``constants`` key is accepted as well.

    Raises
    ------
    ValueError
        If the structure constants are missing or a constant refers to a
        basis element that does not exist.
    """
    d = len(data['parities'])
    if 'c' in data:
        entries = data['c']
    elif 'constants' in data:
        entries = data['constants']
    else:
        raise ValueError("algebra {!r} has no structure constants; expected "
                         "sparse [i, j, k, value] entries under 'c'"
                         "".format(data.get('name')))
    c = np.zeros((d, d, d))
    for i, j, k, value in entries:
        if not (0 <= i < d and 0 <= j < d and 0 <= k < d):
            raise ValueError("structure constant index ({}, {}, {}) out of "
                             "range for dimension {}".format(i, j, k, d))
        c[int(i), int(j), int(k)] = value
    realization = data.get('realization')
    quotient = data.get('quotient')
    return LieSuperalgebra(
        data['name'], data['labels'], data['parities'], c,
        realization=None if realization is None else
        _join_complex(realization),
        blocks=data.get('blocks'),
        quotient=None if quotient is None else _join_complex(quotient),
        family=data.get('family'), params=data.get('params'))


def write_algebra(algebra, file_path):
    """Save an algebra as JSON."""
    with open(file_path, 'w') as f:
        json.dump(algebra_to_dict(algebra), f, indent=1)
    logger.debug("wrote %s to %s", algebra.name, file_path)


def read_algebra(file_path):
    """Load an algebra written by :func:`write_algebra`."""
    with open(file_path, 'r') as f:
        return algebra_from_dict(json.load(f))
