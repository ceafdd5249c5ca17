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
Command-line front end: ``sksuper <subcommand> ...``.

Every subcommand prints a JSON report on stdout.  Exit status is 0 when
all checks pass, 1 on a computational failure (the report says which)
and 2 for usage errors, unknown families and invalid parameters.
"""
from __future__ import absolute_import, division, print_function
import six

import os
import re
import sys
import argparse
import logging

import numpy as np

from .core.utils import rcParams, get_tolerance, HypothesisError
from .core.superalgebra import (construct_algebra, d21_algebra, d21_odd_form,
                                check_jacobi, killing_form, supertrace_form,
                                check_ad_invariance, extend_odd_form)
from .core.chartgeom import (christoffel_at, connection_residuals_at,
                             curvature_at, curvature_symmetry_residuals,
                             sectional_curvature)
from .core.geodesics import (integrate_geodesic, parallel_transport,
                             transport_gram)
from .core import catalog
from .io import (read_algebra, write_algebra, read_chart, save_curve,
                 save_frame, save_report, report_to_json)

logger = logging.getLogger(__name__)


class InvalidRequest(ValueError):
    """A request rejected before any computation."""
    pass


# options taking numeric lists that may start with a minus sign
_VECTOR_OPTIONS = ('--p', '--v', '--w', '--point', '--tau', '--odd-form')
_NEGATIVE_LIST = re.compile(r'^-[0-9.][0-9eE.,;+\- ]*$')


def _attach_values(argv):
    """``['--v', '-1,0']`` -> ``['--v=-1,0']``; argparse reads ``-1,0`` as
    a flag otherwise."""
    out, i = [], 0
    while i < len(argv):
        token = argv[i]
        if (token in _VECTOR_OPTIONS and i + 1 < len(argv) and
                _NEGATIVE_LIST.match(argv[i + 1])):
            out.append('{}={}'.format(token, argv[i + 1]))
            i += 2
        else:
            out.append(token)
            i += 1
    return out


def _vector(text, name):
    try:
        return np.array([float(x) for x in text.split(',') if x.strip()])
    except ValueError:
        raise InvalidRequest("--{} must be comma separated numbers, got {!r}"
                             "".format(name, text))


def _matrix(text):
    """Rows separated by ';', entries by ','."""
    try:
        rows = [[float(x) for x in row.split(',')]
                for row in text.split(';') if row.strip()]
        return np.array(rows, dtype=float)
    except ValueError:
        raise InvalidRequest("cannot parse matrix {!r}".format(text))


def _params(text):
    """``'n=3,m=1'`` -> ``{'n': '3', 'm': '1'}``."""
    out = {}
    if not text:
        return out
    for item in text.split(','):
        key, sep, value = item.partition('=')
        if not sep or not key.strip():
            raise InvalidRequest("--params entries look like key=value, "
                                 "got {!r}".format(item))
        out[key.strip()] = value.strip()
    return out


def _prepare(func, *args, **kwargs):
    """Run an input-building step; its failures are usage errors."""
    try:
        return func(*args, **kwargs)
    except InvalidRequest:
        raise
    except (KeyError, ValueError, IOError) as err:
        msg = err.args[0] if isinstance(err, KeyError) and err.args \
            else str(err)
        raise InvalidRequest(msg)


def _emit(report, out=None):
    print(report_to_json(report))
    if out is not None:
        save_report(report, out)
    return 0 if report.get('passed', True) else 1


def _algebra(args):
    if args.family == 'd21' and args.sigma3 is not None and args.unchecked:
        return d21_algebra(args.sigma1, args.sigma2, args.sigma3,
                           check=False)
    return construct_algebra(args.family, n=args.n, m=args.m,
                             sigma1=args.sigma1, sigma2=args.sigma2,
                             sigma3=args.sigma3)


def cmd_algebra(args):
    a = _prepare(_algebra, args)
    tol = get_tolerance()
    residual = check_jacobi(a)
    if args.out:
        write_algebra(a, args.out)
    return _emit({'algebra': a.name, 'dimension': a.dimension,
                  'labels': a.labels, 'jacobi': residual,
                  'passed': residual <= tol, 'out': args.out})


def _proportionality(B, S):
    """Least-squares multiple ``c`` with ``B ~ c S`` and its residual."""
    norm = np.sum(S * S)
    c = np.sum(B * S) / norm if norm > 0 else 0.
    return float(c), float(np.max(np.abs(B - c * S))) if B.size else 0.


def cmd_killing(args):
    a = _prepare(read_algebra, args.input)
    tol = get_tolerance()
    B = killing_form(a)
    report = {'algebra': a.name, 'dimension': a.dimension,
              'matrix': B.matrix,
              'vanishes': bool(np.max(np.abs(B.matrix)) <= 10 * tol)
              if B.matrix.size else True,
              'nondegenerate': B.is_nondegenerate()}
    if a.realization is not None:
        c, residual = _proportionality(B.matrix, supertrace_form(a).matrix)
        report.update(multiple=c, residual=residual,
                      proportional=residual <= 10 * tol)
    else:
        report.update(multiple=None, residual=None, proportional=None)
    return _emit(report)


def _form(a, kind, odd_form=None):
    if kind == 'killing':
        return killing_form(a)
    if kind == 'str':
        return supertrace_form(a)
    if odd_form is None:
        odd_form = _default_odd_form(a)
    return extend_odd_form(a, odd_form)


def _default_odd_form(a):
    if a.family != 'd21':
        raise InvalidRequest("--odd-form is required for {}".format(a.name))
    return d21_odd_form()


def _odd_form_arg(text):
    if text is None:
        return None
    if os.path.isfile(text):
        return np.loadtxt(text, delimiter=',', ndmin=2)
    return _matrix(text)


def cmd_invariance(args):
    a = _prepare(read_algebra, args.input)
    odd_form = _prepare(_odd_form_arg, args.odd_form)
    if args.form == 'extend' and odd_form is None:
        _prepare(_default_odd_form, a)
    tol = get_tolerance()
    form = _form(a, args.form, odd_form)
    defect = check_ad_invariance(a, form)
    return _emit({'algebra': a.name, 'form': form.name,
                  'ad_invariance': defect,
                  'symmetry': form.symmetry_residual(),
                  'evenness': form.evenness_residual(),
                  'nondegenerate': form.is_nondegenerate(),
                  'passed': defect <= 1e3 * tol and
                  form.symmetry_residual() <= tol})


def _catalog_params(name, text):
    params = _params(text)
    spec = _prepare(catalog.get_example, name)
    _prepare(spec.normalize, params)
    return spec, params


def cmd_split(args):
    spec, params = _catalog_params(args.family, args.params)
    if spec.involution is None:
        raise InvalidRequest("{} is not a symmetric pair".format(spec.name))
    a, split = catalog.symmetric_split(args.family, **params)
    worst = max(split.residuals.values())
    return _emit({'family': args.family, 'algebra': a.name,
                  'k': split.k_dimension, 'p': split.p_dimension,
                  'k_basis': split.k, 'p_basis': split.p,
                  'residuals': split.residuals,
                  'passed': worst <= 1e3 * get_tolerance()})


def cmd_extend(args):
    if args.input:
        a = _prepare(read_algebra, args.input)
    else:
        a = _prepare(d21_algebra, args.sigma1, args.sigma2)
    odd_form = _prepare(_odd_form_arg, args.odd_form)
    if odd_form is None:
        odd_form = _prepare(_default_odd_form, a)
    try:
        form = extend_odd_form(a, odd_form)
    except HypothesisError as err:
        return _emit({'algebra': a.name, 'hypothesis': err.hypothesis,
                      'message': str(err), 'passed': False})
    defect = check_ad_invariance(a, form)
    return _emit({'algebra': a.name, 'matrix': form.matrix,
                  'ad_invariance': defect,
                  'nondegenerate': form.is_nondegenerate(),
                  'passed': defect <= 1e3 * get_tolerance()})


def _geodesic_inputs(args):
    metric = _prepare(read_chart, args.chart)
    p = _vector(args.p, 'p')
    v = _vector(args.v, 'v')
    w = _vector(args.w, 'w') if args.w else None
    if len(p) != metric.n or len(v) != metric.n:
        raise InvalidRequest("--p and --v need {} entries".format(metric.n))
    if w is not None and len(w) != metric.m:
        raise InvalidRequest("--w needs {} entries".format(metric.m))
    if not args.step > 0:
        raise InvalidRequest("--step must be positive")
    _prepare(metric.chart.check_point, p)
    return metric, p, v, w


def cmd_geodesic(args):
    metric, p, v, w = _geodesic_inputs(args)
    result = integrate_geodesic(metric, p, v, w, t_end=args.t_end,
                                step=args.step,
                                tolerance=get_tolerance(kind='ode'))
    final = result.final
    if args.out:
        save_curve(result, args.out, ext='')
    return _emit({'chart': args.chart, 't_end': args.t_end,
                  'position': final.g, 'velocity': final.v, 'odd': final.h,
                  'diagnostics': result.diagnostics,
                  'passed': result.diagnostics['within_tolerance'],
                  'out': args.out})


def _parity_leak(metric, tau, f):
    """Largest component of the wrong parity, for homogeneous inputs."""
    n = metric.n
    leak = 0.
    for k, row in enumerate(tau):
        if not np.any(row[n:]):
            leak = max(leak, float(np.max(np.abs(f[:, k, n:]), initial=0.)))
        elif not np.any(row[:n]):
            leak = max(leak, float(np.max(np.abs(f[:, k, :n]), initial=0.)))
    return leak


def cmd_transport(args):
    metric, p, v, w = _geodesic_inputs(args)
    if args.tau:
        tau = _matrix(args.tau)
        if tau.shape[1] != metric.dim:
            raise InvalidRequest("--tau vectors need {} entries"
                                 "".format(metric.dim))
    else:
        tau = np.eye(metric.dim)
    tol = get_tolerance(kind='ode')
    curve = integrate_geodesic(metric, p, v, w, t_end=args.t_end,
                               step=args.step, tolerance=tol)
    frame = parallel_transport(metric, curve, tau)
    _, drift = transport_gram(metric, frame)
    leak = _parity_leak(metric, tau, frame.f)
    if args.out:
        save_frame(frame, args.out, ext='')
    return _emit({'chart': args.chart, 'final': frame.final, 'drift': drift,
                  'parity_leak': leak, 'tolerance': tol,
                  'passed': drift <= tol and leak <= get_tolerance(),
                  'out': args.out})


def cmd_curvature(args):
    metric = _prepare(read_chart, args.chart)
    point = _prepare(metric.chart.check_point, _vector(args.point, 'point'))
    tol = get_tolerance()
    gamma = christoffel_at(metric, point)
    torsion, metricity = connection_residuals_at(metric, point, gamma)
    R = curvature_at(metric, point)
    sym = curvature_symmetry_residuals(metric, point, R)
    report = {'chart': args.chart, 'point': point,
              'christoffel_parity': gamma.parity_violation(),
              'torsion': torsion, 'metricity': metricity,
              'curvature_parity': R.parity_violation(),
              'symmetries': sym,
              'reduced_christoffel': gamma.reduced}
    if metric.n >= 2:
        report['sectional'] = sectional_curvature(metric, point, 0, 1, R)
    report['passed'] = max([torsion, metricity] + list(sym.values())) <= \
        1e3 * tol
    return _emit(report)


def cmd_verify(args):
    if args.all:
        reports = catalog.verify_all()
    else:
        if not args.family:
            raise InvalidRequest("verify needs --family or --all")
        _, params = _catalog_params(args.family, args.params)
        reports = [catalog.verify_example(args.family, **params)]
    summary = {'reports': reports, 'count': len(reports),
               'failed': [r['name'] for r in reports if not r['passed']],
               'passed': all(r['passed'] for r in reports)}
    return _emit(summary, args.json)


def cmd_list(args):
    print(report_to_json(catalog.list_examples()))
    return 0


def _parser():
    parser = argparse.ArgumentParser(
        prog='sksuper', description='Riemannian supergeometry toolkit')
    parser.add_argument('--tolerance', type=float, default=None,
                        help='algebraic tolerance (default %(default)s = '
                             'configured {:g})'.format(
                                 rcParams['tolerance.algebraic']))
    parser.add_argument('--ode-tolerance', type=float, default=None)
    parser.add_argument('-v', '--verbose', action='store_true')
    sub = parser.add_subparsers(dest='command')

    p = sub.add_parser('algebra', help='build an algebra, check Jacobi')
    p.add_argument('--family', required=True,
                   choices=['gl', 'sl', 'psl', 'osp', 'sosp', 'u', 'd21'])
    p.add_argument('--n', type=int)
    p.add_argument('--m', type=int)
    p.add_argument('--sigma1', type=float)
    p.add_argument('--sigma2', type=float)
    p.add_argument('--sigma3', type=float)
    p.add_argument('--unchecked', action='store_true',
                   help='accept sigma1 + sigma2 + sigma3 != 0')
    p.add_argument('--out')
    p.set_defaults(func=cmd_algebra)

    p = sub.add_parser('killing', help='Killing form of an algebra file')
    p.add_argument('--in', dest='input', required=True)
    p.set_defaults(func=cmd_killing)

    p = sub.add_parser('invariance', help='ad-invariance of a form')
    p.add_argument('--in', dest='input', required=True)
    p.add_argument('--form', choices=['killing', 'str', 'extend'],
                   default='killing')
    p.add_argument('--odd-form')
    p.set_defaults(func=cmd_invariance)

    p = sub.add_parser('split', help='symmetric decomposition k + p')
    p.add_argument('--family', required=True)
    p.add_argument('--params', default='')
    p.set_defaults(func=cmd_split)

    p = sub.add_parser('extend', help='extend an odd form')
    p.add_argument('--in', dest='input')
    p.add_argument('--sigma1', type=float, default=1.)
    p.add_argument('--sigma2', type=float, default=1.)
    p.add_argument('--odd-form',
                   help='CSV file or rows "a,b;c,d" (d21 default)')
    p.set_defaults(func=cmd_extend)

    for name, func in (('geodesic', cmd_geodesic),
                       ('transport', cmd_transport)):
        p = sub.add_parser(name)
        p.add_argument('--chart', required=True,
                       help='chart file or packaged fixture name')
        p.add_argument('--p', required=True,
                       help='start point, comma separated (e.g. 0,1)')
        p.add_argument('--v', required=True,
                       help='initial velocity, comma separated; negative '
                            'entries may lead (e.g. -1,0)')
        p.add_argument('--w', help='initial odd coefficients, comma '
                                   'separated')
        p.add_argument('--t-end', type=float, default=1.)
        p.add_argument('--step', type=float, default=1e-3)
        p.add_argument('--out')
        if name == 'transport':
            p.add_argument('--tau', help='rows "a,b;c,d"; identity frame '
                                         'by default')
        p.set_defaults(func=func)

    p = sub.add_parser('curvature', help='connection and curvature at a '
                                         'point')
    p.add_argument('--chart', required=True)
    p.add_argument('--point', required=True, help='comma separated')
    p.set_defaults(func=cmd_curvature)

    p = sub.add_parser('verify', help='verify catalog families')
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument('--family')
    group.add_argument('--all', action='store_true')
    p.add_argument('--params', default='')
    p.add_argument('--json', help='also write the report to this file')
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser('list', help='list catalog families')
    p.set_defaults(func=cmd_list)
    return parser


def main(argv=None):
    parser = _parser()
    argv = _attach_values(sys.argv[1:] if argv is None else list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return err.code
    if getattr(args, 'func', None) is None:
        parser.print_usage(sys.stderr)
        return 2
    logging.basicConfig(level=logging.DEBUG if args.verbose
                        else logging.WARNING)
    old = dict((k, rcParams[k]) for k in ('tolerance.algebraic',
                                          'tolerance.ode'))
    try:
        if args.tolerance is not None:
            rcParams['tolerance.algebraic'] = args.tolerance
        if args.ode_tolerance is not None:
            rcParams['tolerance.ode'] = args.ode_tolerance
    except ValueError as err:
        print('sksuper: error: {}'.format(err), file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except InvalidRequest as err:
        print('sksuper: error: {}'.format(err), file=sys.stderr)
        return 2
    except ValueError as err:
        logger.debug("computation failed", exc_info=True)
        print(report_to_json({'command': args.command,
                              'error': type(err).__name__,
                              'message': str(err), 'passed': False}))
        return 1
    finally:
        for k, v in six.iteritems(old):
            rcParams[k] = v


if __name__ == '__main__':
    sys.exit(main())
