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
This module creates a namespace for Riemannian supergeometry
"""
# Grassmann numbers and superfunctions
from sksuper.core.grassmann import GrassmannNumber
from sksuper.core.grassmann import Superfunction
from sksuper.core.grassmann import Polynomial
from sksuper.core.grassmann import SmoothFunction
from sksuper.core.grassmann import gmul
from sksuper.core.grassmann import ginv
from sksuper.core.grassmann import sf_mul
from sksuper.core.grassmann import sf_partial
from sksuper.core.grassmann import sf_eval

# Lie superalgebras
from sksuper.core.superalgebra import LieSuperalgebra
from sksuper.core.superalgebra import ScalarSuperproduct
from sksuper.core.superalgebra import HarishChandraPair
from sksuper.core.superalgebra import construct_algebra
from sksuper.core.superalgebra import bracket
from sksuper.core.superalgebra import check_jacobi
from sksuper.core.superalgebra import supertrace
from sksuper.core.superalgebra import killing_form
from sksuper.core.superalgebra import supertrace_form
from sksuper.core.superalgebra import check_ad_invariance
from sksuper.core.superalgebra import invariant_forms
from sksuper.core.superalgebra import has_invariant_scalar_superproduct
from sksuper.core.superalgebra import validate_hc_pair
from sksuper.core.superalgebra import ad_reduced_invariance
from sksuper.core.superalgebra import check_involution
from sksuper.core.superalgebra import eigensplit
from sksuper.core.superalgebra import extend_odd_form
from sksuper.core.superalgebra import biinv_connection
from sksuper.core.superalgebra import biinv_curvature

# connections on a chart
from sksuper.core.chartgeom import Chart
from sksuper.core.chartgeom import GradedMetric
from sksuper.core.chartgeom import flat_metric
from sksuper.core.chartgeom import validate_metric
from sksuper.core.chartgeom import christoffel_at
from sksuper.core.chartgeom import connection_residuals_at
from sksuper.core.chartgeom import curvature_at
from sksuper.core.chartgeom import curvature_symmetry_residuals
from sksuper.core.chartgeom import sectional_curvature
from sksuper.core.chartgeom import covariant_derivatives_at
from sksuper.core.chartgeom import killing_residual_at

# curves
from sksuper.core.geodesics import integrate_geodesic
from sksuper.core.geodesics import parallel_transport
from sksuper.core.geodesics import parallel_frame
from sksuper.core.geodesics import transport_gram
from sksuper.core.geodesics import covariant_derivative_along
from sksuper.core.geodesics import tangent_field
from sksuper.core.geodesics import stronger_conditions

# symmetric superspaces
from sksuper.core.catalog import list_examples
from sksuper.core.catalog import symmetric_split
from sksuper.core.catalog import verify_example
from sksuper.core.catalog import verify_all

import logging
logger = logging.getLogger(__name__)

__all__ = [
    # grassmann api
    'GrassmannNumber', 'Superfunction', 'Polynomial', 'SmoothFunction',
    'gmul', 'ginv', 'sf_mul', 'sf_partial', 'sf_eval',

    # superalgebra
    'LieSuperalgebra', 'ScalarSuperproduct', 'HarishChandraPair',
    'construct_algebra', 'bracket', 'check_jacobi', 'supertrace',
    'killing_form', 'supertrace_form', 'check_ad_invariance',
    'invariant_forms', 'has_invariant_scalar_superproduct',
    'validate_hc_pair', 'ad_reduced_invariance', 'check_involution',
    'eigensplit', 'extend_odd_form', 'biinv_connection', 'biinv_curvature',

    # chartgeom
    'Chart', 'GradedMetric', 'flat_metric', 'validate_metric',
    'christoffel_at', 'connection_residuals_at', 'curvature_at',
    'curvature_symmetry_residuals', 'sectional_curvature',
    'covariant_derivatives_at', 'killing_residual_at',

    # geodesics
    'integrate_geodesic', 'parallel_transport', 'parallel_frame',
    'transport_gram', 'covariant_derivative_along', 'tangent_field',
    'stronger_conditions',

    # catalog
    'list_examples', 'symmetric_split', 'verify_example', 'verify_all',
]
