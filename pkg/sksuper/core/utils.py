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
This module is for the 'core' helpers shared by every part of sksuper:
exceptions, the configuration store and the Z2 sign bookkeeping.
"""
from __future__ import absolute_import, division, print_function
import six

import sys
import logging
from collections import defaultdict

import numpy as np

try:
    from collections.abc import MutableMapping
except ImportError:  # pragma: no cover
    from collections import MutableMapping

logger = logging.getLogger(__name__)


_defaults = {
    'tolerance.algebraic': 1e-10,
    'tolerance.ode': 1e-6,
    'finite_difference.first': 1e-5,
    'finite_difference.second': 1e-4,
    'hc_pair.times': (1e-3, 1e-2, 0.1, 1.0),
    'hc_pair.step': 1e-3,
    'invariance.times': (-1.0, -0.1, 0.1, 1.0),
    'random.seed': 0,
}


class SignatureMismatchError(ValueError):
    """Operands live on different charts or Grassmann algebras."""
    pass


class NotInvertibleError(ValueError):
    """The body (degree-0 part) of a Grassmann quantity is singular."""
    pass


class DerivativeUnavailableError(ValueError):
    """A coefficient function was asked for a partial it cannot provide."""
    pass


class DomainError(ValueError):
    """A point lies outside the domain of a chart or coefficient."""
    pass


class SingularMetricError(NotInvertibleError):
    """The reduced Gram matrix of a graded metric is singular."""
    pass


class NoRealizationError(ValueError):
    """An operation needs the matrix realization of an algebra."""
    pass


class InvolutionError(ValueError):
    '''
    Raised when a candidate involution violates one of its defining
    properties.  ``pair`` holds the offending basis indices (or None when
    the violation is not tied to a pair).
    '''
    def __init__(self, message, pair=None):
        super(InvolutionError, self).__init__(message)
        self.pair = pair


class HypothesisError(ValueError):
    '''
    Raised when the hypotheses of a construction fail.  ``hypothesis``
    names the failed one.
    '''
    def __init__(self, message, hypothesis=None):
        super(HypothesisError, self).__init__(message)
        self.hypothesis = hypothesis


class verbosedict(dict):
    """
    A sub-class of dict which raises more verbose errors if
    a key is not found.
    """

    def __getitem__(self, key):
        try:
            v = dict.__getitem__(self, key)
        except KeyError:
            if len(self) < 25:
                new_msg = ("You tried to access the key '{key}' "
                           "which does not exist.  The "
                           "extant keys are: {valid_keys}").format(
                    key=key, valid_keys=sorted(self))
            else:
                new_msg = ("You tried to access the key '{key}' "
                           "which does not exist.  There "
                           "are {num} extant keys, which is too many to "
                           "show you").format(
                    key=key, num=len(self))
            six.reraise(KeyError, KeyError(new_msg), sys.exc_info()[2])
        return v


class RCParamDict(MutableMapping):
    """A dotted-path store for run-time configuration.

    Leaves may carry a validator; assignments that fail validation raise
    ValueError and leave the old value in place.

    Examples
    --------
    >>> tt = RCParamDict()
    >>> tt['tolerance.algebraic'] = 1e-12
    >>> tt['tolerance']['algebraic']
    1e-12
    """
    _delim = '.'

    def __init__(self, validators=None):
        self._dict = dict()
        # leaf validators, keyed by full dotted path
        self._validators = defaultdict(lambda: lambda x: True)
        if validators is not None:
            self._validators.update(validators)

    def _sub(self, head):
        tmp = RCParamDict()
        prefix = head + self._delim
        for k, v in six.iteritems(self._validators):
            if k.startswith(prefix):
                tmp._validators[k[len(prefix):]] = v
        return tmp

    def __setitem__(self, key, val):
        splt_key = key.split(self._delim, 1)
        if len(splt_key) > 1:
            try:
                tmp = self._dict[splt_key[0]]
            except KeyError:
                tmp = self._sub(splt_key[0])
                self._dict[splt_key[0]] = tmp

            if not isinstance(tmp, RCParamDict):
                raise KeyError("'{}' is a value, not a name space"
                               "".format(splt_key[0]))

            tmp[splt_key[1]] = val
        else:
            if not self._validators[key](val):
                logger.warning("rejected %r for rcParams key '%s'", val, key)
                raise ValueError("{!r} is not a valid value for '{}'"
                                 "".format(val, key))
            self._dict[key] = val

    def __getitem__(self, key):
        splt_key = key.split(self._delim, 1)
        if len(splt_key) > 1:
            return self._dict[splt_key[0]][splt_key[1]]
        else:
            return self._dict[key]

    def __delitem__(self, key):
        splt_key = key.split(self._delim, 1)
        if len(splt_key) > 1:
            self._dict[splt_key[0]].__delitem__(splt_key[1])
        else:
            del self._dict[key]

    def __len__(self):
        return len(list(iter(self)))

    def __iter__(self):
        return self._iter_helper([])

    def _iter_helper(self, path_list):
        for key, val in six.iteritems(self._dict):
            if isinstance(val, RCParamDict):
                for k in val._iter_helper(path_list + [key, ]):
                    yield k
            else:
                yield self._delim.join(path_list + [key, ])

    def __repr__(self):
        return '\n'.join('{}: {}'.format(k, self[k]) for k in sorted(self))


def _positive(val):
    try:
        return float(val) > 0
    except (TypeError, ValueError):
        return False


def _times(val):
    try:
        return len(val) > 0 and all(np.isfinite(float(t)) for t in val)
    except TypeError:
        return False


rcParams = RCParamDict(validators={
    'tolerance.algebraic': _positive,
    'tolerance.ode': _positive,
    'finite_difference.first': _positive,
    'finite_difference.second': _positive,
    'hc_pair.step': _positive,
    'hc_pair.times': _times,
    'invariance.times': _times,
})
for _k, _v in six.iteritems(_defaults):
    rcParams[_k] = _v


def get_tolerance(tolerance=None, kind='algebraic'):
    """
    Resolve a tolerance argument against ``rcParams``.

    Parameters
    ----------
    tolerance : float or None
        Explicit value; ``None`` reads ``rcParams['tolerance.<kind>']``.
    kind : {'algebraic', 'ode'}

    Returns
    -------
    float
    """
    if tolerance is None:
        return rcParams['tolerance.' + kind]
    if tolerance <= 0:
        raise ValueError("tolerance must be positive, got {}"
                         "".format(tolerance))
    return float(tolerance)


def parity_sign(p, q):
    """
    The Koszul sign (-1)**(p*q) for parities (arrays broadcast).

    Parameters
    ----------
    p, q : int or array_like of int
        Parities in {0, 1}.

    Returns
    -------
    sign : int or ndarray
    """
    return 1 - 2 * ((np.asarray(p) * np.asarray(q)) % 2)


def popcount(x):
    """Number of set bits of every entry of an integer array."""
    x = np.asarray(x, dtype=np.int64)
    count = np.zeros_like(x)
    while np.any(x):
        count += x & 1
        x = x >> 1
    return count
