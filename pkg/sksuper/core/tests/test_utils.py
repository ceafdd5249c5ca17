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

import logging

import six
import numpy as np
import pytest
from numpy.testing import assert_array_equal

import sksuper.core.utils as core


def test_small_verbosedict():
    expected_string = ("You tried to access the key 'b' "
                       "which does not exist.  "
                       "The extant keys are: ['a']")
    dd = core.verbosedict()
    dd['a'] = 1
    assert dd['a'] == 1
    with pytest.raises(KeyError) as excinfo:
        dd['b']
    assert eval(six.text_type(excinfo.value)) == expected_string


def test_large_verbosedict():
    expected_string = ("You tried to access the key 'a' "
                       "which does not exist.  There are 100 "
                       "extant keys, which is too many to show you")

    dd = core.verbosedict()
    for j in range(100):
        dd[j] = j
    for j in range(100):
        assert dd[j] == j
    with pytest.raises(KeyError) as excinfo:
        dd['a']
    assert eval(six.text_type(excinfo.value)) == expected_string


def test_rcparams_nested():
    tt = core.RCParamDict()
    tt['a.b.c'] = 1
    tt['a.d'] = 2
    tt['e'] = 3
    assert tt['a']['b']['c'] == 1
    assert tt['a.b.c'] == 1
    assert sorted(tt) == ['a.b.c', 'a.d', 'e']
    assert len(tt) == 3
    del tt['a.d']
    assert sorted(tt) == ['a.b.c', 'e']
    with pytest.raises(KeyError):
        tt['e.f'] = 4


def test_rcparams_validation(caplog):
    tt = core.RCParamDict(validators={'tolerance.ode': core._positive})
    tt['tolerance.ode'] = 1e-6
    with caplog.at_level(logging.WARNING, logger='sksuper.core.utils'):
        with pytest.raises(ValueError):
            tt['tolerance.ode'] = -1
    assert any('rejected -1' in r.getMessage() for r in caplog.records)
    assert tt['tolerance.ode'] == 1e-6


def test_defaults():
    for key, value in six.iteritems(core._defaults):
        assert core.rcParams[key] == value


def test_get_tolerance():
    assert core.get_tolerance() == core.rcParams['tolerance.algebraic']
    assert core.get_tolerance(kind='ode') == core.rcParams['tolerance.ode']
    assert core.get_tolerance(1e-3) == 1e-3
    old = core.rcParams['tolerance.algebraic']
    try:
        core.rcParams['tolerance.algebraic'] = 1e-8
        assert core.get_tolerance() == 1e-8
    finally:
        core.rcParams['tolerance.algebraic'] = old
    with pytest.raises(ValueError):
        core.get_tolerance(0.)


def test_parity_sign():
    assert_array_equal(core.parity_sign([0, 0, 1, 1], [0, 1, 0, 1]),
                       [1, 1, 1, -1])
    assert core.parity_sign(1, 3) == -1
    assert core.parity_sign(2, 1) == 1


def test_popcount():
    assert_array_equal(core.popcount(np.arange(8)), [0, 1, 1, 2, 1, 2, 2, 3])


def test_error_payloads():
    err = core.InvolutionError("bad", pair=(1, 2))
    assert err.pair == (1, 2)
    assert isinstance(err, ValueError)
    err = core.HypothesisError("bad", 'faithful')
    assert err.hypothesis == 'faithful'
    assert issubclass(core.SingularMetricError, core.NotInvertibleError)
