# coding=utf-8
'''
batch front end: every experiment as a subcommand

exit codes: 0 success, 1 validation / usage error,
2 divergence or failed internal check (reported as data)
'''
from __future__ import division
from __future__ import print_function

import argparse
import json
import os
import sys
from collections import OrderedDict

import numpy as np

import carnotPotential
from carnotPotential.exceptions import CarnotError, Diverged

SCHEMA_VERSION = 1
THREADS_ENV = 'CARNOTPOTENTIAL_THREADS'
FORMATS = ('json', 'csv')


class _Parser(argparse.ArgumentParser):
    '''usage errors exit with 1'''

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write('%s: error: %s\n' % (self.prog, message))
        sys.exit(1)


def _floatList(s):
    return [float(x) for x in s.split(',') if x.strip()]


def _levels(s):
    '''"m..k" -> (m, k)'''
    try:
        m, k = (int(x) for x in s.split('..'))
    except ValueError:
        raise argparse.ArgumentTypeError("levels must read m..k, got '%s'"
                                         % s)
    if m > k:
        raise argparse.ArgumentTypeError('levels m..k need m <= k')
    return m, k


def _plain(obj):
    '''numpy scalars / arrays -> json types'''
    if isinstance(obj, dict):
        return OrderedDict((str(k), _plain(v)) for k, v in obj.items())
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _plain(obj.tolist())
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    return obj


def _fmt(v):
    if isinstance(v, (float, np.floating)):
        return '%.17g' % v
    if isinstance(v, (list, tuple, np.ndarray)):
        return ' '.join(_fmt(x) for x in v)
    return str(v)


def _parser():
    common = _Parser(add_help=False)
    common.add_argument('--group', default='H1',
                        help='builtin group: E<n>, H<n>, engel')
    common.add_argument('--group-file', default=None,
                        help='group spec file, overrides --group')
    common.add_argument('--seed', type=int, default=0)
    common.add_argument('--out', default=None,
                        help='output file, default stdout; json or csv print '
                             'that format to stdout')
    common.add_argument('--format', choices=FORMATS, default='json')
    common.add_argument('--threads', type=int, default=None,
                        help='worker threads, default $%s' % THREADS_ENV)
    common.add_argument('--emit-plot-data', default=None, metavar='PATH',
                        help='write an x,y series to PATH')

    cloud = _Parser(add_help=False)
    cloud.add_argument('--radius', type=float, default=1.0)
    cloud.add_argument('--spacing', type=float, default=0.1)

    p = _Parser(prog='carnotPotential',
                description='nonlinear potential theory on Carnot groups')
    p.add_argument('--version', action='version',
                   version=carnotPotential.__version__)
    sub = p.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    s = sub.add_parser('group', parents=[common],
                       help='validate a group and run the axiom suite')
    s.add_argument('action', choices=('validate',))
    s.add_argument('file', nargs='?', default=None)
    s.add_argument('--n', type=int, default=1000, help='random samples')

    s = sub.add_parser('dyadic-build', parents=[common, cloud],
                       help='build and certify a dyadic family')
    s.add_argument('--lambda', '--lam', dest='lam', type=float, default=8)
    s.add_argument('--m', type=int, default=-2, help='base level')
    s.add_argument('--k-top', type=int, default=0, help='top level')
    s.add_argument('--levels', type=_levels, default=None, metavar='m..k',
                   help='base and top level, overrides --m and --k-top; '
                        'write --levels=-2..0 for negative m')
    s.add_argument('--separation', type=float, default=5.0)
    s.add_argument('--save', default=None, help='family file')

    s = sub.add_parser('wolff', parents=[common, cloud],
                       help='W^R_(alpha,p) of a measure on a lattice')
    s.add_argument('--measure', default=None,
                   help='measure file, default: unit density on the cloud')
    s.add_argument('--alpha', type=float, default=1.0)
    s.add_argument('--p', type=float, default=2.0)
    s.add_argument('--R', type=float, default=np.inf)
    s.add_argument('--rule', choices=('exact', 'midpoint'), default='exact')
    s.add_argument('--at', default=None, metavar='FILE',
                   help='evaluation points, one per line; default: the cloud')

    s = sub.add_parser('equiv', parents=[common],
                       help='dyadic / continuous comparison experiments')
    s.add_argument('--experiment', default='a-chain',
                   choices=('a-chain', 'b-chain', 'b-chain-qss', 'dze',
                            'energy', 'wolff-inequality'))
    s.add_argument('--trials', type=int, default=20)
    s.add_argument('--spacing', type=float, default=0.2)

    s = sub.add_parser('capacity', parents=[common],
                       help='lower bound of the Riesz capacity of a set')
    s.add_argument('--set', required=True, help='point file of E')
    s.add_argument('--alpha', type=float, required=True)
    s.add_argument('--s', type=float, required=True)
    s.add_argument('--spacing', type=float, default=0.1)
    s.add_argument('--max-iter', type=int, default=200)
    s.add_argument('--upper', action='store_true',
                   help='add the primal heuristic upper value')

    s = sub.add_parser('removability', parents=[common],
                       help='are single points removable')
    s.add_argument('--p', type=float, required=True)
    s.add_argument('--q', type=float, required=True)
    s.add_argument('--M', type=int, default=None,
                   help='homogeneous dimension, default from --group')

    s = sub.add_parser('solve', parents=[common],
                       help='Picard iteration for u = A W(u^q dx + omega)')
    s.add_argument('--measure', required=True)
    s.add_argument('--p', type=float, required=True)
    s.add_argument('--q', type=float, required=True)
    s.add_argument('--R', type=float, default=1.0)
    s.add_argument('--A', type=float, default=1.0)
    s.add_argument('--spacing', type=float, default=0.1)
    s.add_argument('--max-iter', type=int, default=500)
    s.add_argument('--tol-rel', type=float, default=1e-6)
    s.add_argument('--blowup-factor', type=float, default=1e6)
    s.add_argument('--no-strict', dest='strict', action='store_false',
                   help='record a violated u <= kappa W bound instead of '
                        'failing')

    s = sub.add_parser('liouville', parents=[common],
                       help='condition (v) ratios for growing R')
    s.add_argument('--measure', default=None,
                   help='measure file, default: unit density on B_1(e)')
    s.add_argument('--p', type=float, required=True)
    s.add_argument('--q', type=float, required=True)
    s.add_argument('--R-schedule', type=_floatList,
                   default=[2, 4, 8, 16, 32, 64])
    s.add_argument('--spacing', type=float, default=0.25)
    s.add_argument('--n-eval', type=int, default=300)
    s.add_argument('--A', type=float, default=1.0)
    return p


def _group(args):
    from carnotPotential.group import builtin, loadGroupSpec
    if args.group_file:
        return loadGroupSpec(args.group_file)
    return builtin(args.group)


def _unitDensity(g, radius, spacing):
    from carnotPotential.spatial import latticeCloud
    from carnotPotential.potentials import GridDensity
    return GridDensity(latticeCloud(g, radius=radius, spacing=spacing), 1.0)


def _cmdGroup(args):
    from carnotPotential.group import loadGroupSpec
    from carnotPotential.group.axiomSuite import (axiomSuite,
                                                  quasiTriangleConstant)
    g = loadGroupSpec(args.file) if args.file else _group(args)
    res = OrderedDict([('name', g.name), ('layer_dims', list(g.layer_dims)),
                       ('N', g.N), ('M', g.M), ('step', g.r)])
    res.update(axiomSuite(g, n=args.n, seed=args.seed))
    res['quasi_triangle_K'] = quasiTriangleConstant(g, n=args.n,
                                                    seed=args.seed)
    return res, None, None


def _cmdDyadic(args):
    from carnotPotential.spatial import latticeCloud, buildFamily, writeFamily
    from carnotPotential.spatial.DyadicFamily import maxOverlap
    g = _group(args)
    if args.levels is not None:
        args.m, args.k_top = args.levels
    cloud = latticeCloud(g, radius=args.radius, spacing=args.spacing)
    fam = buildFamily(cloud, args.m, args.k_top, args.lam, args.separation)
    if args.save:
        writeFamily(fam, args.save)
    res = OrderedDict([('points', cloud.n)])
    res.update(fam.certificate)
    res['max_overlap'] = maxOverlap(fam)
    rows = [OrderedDict([('level', k), ('cubes', fam.nCubes(k)),
                         ('side', fam.side(k))]) for k in fam.levels]
    plot = ([r['level'] for r in rows], [r['cubes'] for r in rows])
    return res, rows, plot


def _cmdWolff(args):
    from carnotPotential.potentials import WolffParams, readMeasure
    from carnotPotential.potentials.wolff import wolffField
    from carnotPotential.spatial import latticeCloud
    g = _group(args)
    cloud = latticeCloud(g, radius=args.radius, spacing=args.spacing)
    mu = (readMeasure(g, args.measure) if args.measure
          else _unitDensity(g, args.radius, args.spacing))
    params = WolffParams(args.alpha, args.p, args.R, rule=args.rule)
    X = (g.points(np.loadtxt(args.at, ndmin=2)) if args.at
         else cloud.points)
    w = wolffField(mu, X, params)
    norms = g.hnorm(X)
    rows = [OrderedDict([('x', list(x)), ('norm', n), ('wolff', v)])
            for x, n, v in zip(X, norms, w)]
    res = OrderedDict([('points', len(X)), ('mass', mu.mass()),
                       ('max', w.max()), ('min', w.min())])
    return res, rows, (norms, w)


def _cmdEquiv(args):
    from carnotPotential.calculus import runExperiment
    rows, summary = runExperiment(args.experiment, args.trials, args.seed,
                                  args.group, args.spacing)
    first = [c for c in rows[0] if c != 'trial'][0]
    return summary, rows, ([r['trial'] for r in rows],
                           [r[first] for r in rows])


def _cmdCapacity(args):
    from carnotPotential.capacity import (CapacityParams, CompactSet,
                                          capacityLower, capacityUpper,
                                          degeneracyVerdict)
    from carnotPotential.capacity.kernelQuadrature import DOMAIN_FACTOR
    from carnotPotential.capacity.verdicts import IDENTICALLY_ZERO
    from carnotPotential.spatial import shellCloud
    g = _group(args)
    E = CompactSet.fromFile(g, args.set)
    params = CapacityParams(args.alpha, args.s)
    verdict = degeneracyVerdict(params, g.M)
    res = OrderedDict([('degeneracy', verdict)])
    if verdict == IDENTICALLY_ZERO:
        res['value'] = 0.0
        return res, None, None
    cloud = shellCloud(g, DOMAIN_FACTOR * E.radius, args.spacing * E.radius,
                       inner=E.radius).translate(E.center)
    r = capacityLower(E, params, cloud, max_iter=args.max_iter)
    res.update([('value', r.value), ('iterations', r.iterations),
                ('converged', r.converged), ('kkt', r.kkt),
                ('domain_radius', r.domain_radius),
                ('warnings', r.warnings)])
    if args.upper:
        res['upper_heuristic'] = capacityUpper(E, params, cloud)
    rows = [OrderedDict([('x', list(a)), ('mass', m)])
            for a, m in zip(r.witness.atoms, r.witness.masses)]
    return res, rows, (np.arange(len(r.history)), r.history)


def _cmdRemovability(args):
    from carnotPotential.capacity import (removabilityVerdict,
                                          removabilityThreshold)
    M = args.M if args.M is not None else _group(args).M
    verdict = removabilityVerdict(args.p, args.q, M)
    return OrderedDict([('verdict', verdict), ('M', M),
                        ('threshold_q', removabilityThreshold(args.p, M))]), \
        None, None


def _cmdSolve(args):
    from carnotPotential.potentials import readMeasure
    from carnotPotential.spatial import latticeCloud
    from carnotPotential.laneEmden import SolveConfig, picardSolve
    g = _group(args)
    omega = readMeasure(g, args.measure)
    config = SolveConfig(args.p, args.q, args.R, args.A, args.max_iter,
                         args.tol_rel, args.blowup_factor, args.strict)
    cloud = latticeCloud(g, radius=config.R, spacing=args.spacing)
    u, diag = picardSolve(omega, config, cloud)
    res = diag.asDict()
    return res, None, (np.arange(diag.iterations), diag.sup_norms)


def _cmdLiouville(args):
    from carnotPotential.potentials import readMeasure
    from carnotPotential.laneEmden import liouvilleProbe, liouvilleExponent
    g = _group(args)
    omega = (readMeasure(g, args.measure) if args.measure
             else _unitDensity(g, 1.0, args.spacing))
    res = liouvilleProbe(omega, args.p, args.q, args.R_schedule,
                         spacing=args.spacing, n_eval=args.n_eval,
                         A=args.A, seed=args.seed)
    res['q_star'] = liouvilleExponent(g.M, args.p)
    return res, None, (res['R'], res['ratios'])


_COMMANDS = {'group': _cmdGroup, 'dyadic-build': _cmdDyadic,
             'wolff': _cmdWolff, 'equiv': _cmdEquiv,
             'capacity': _cmdCapacity, 'removability': _cmdRemovability,
             'solve': _cmdSolve, 'liouville': _cmdLiouville}


def _header(args):
    params = OrderedDict((k, v) for k, v in sorted(vars(args).items())
                         if k not in ('out', 'format', 'emit_plot_data',
                                      'threads'))
    return OrderedDict([('schema_version', SCHEMA_VERSION),
                        ('version', carnotPotential.__version__),
                        ('command', args.command), ('seed', args.seed),
                        ('parameters', params)])


def _write(args, result, rows):
    header = _header(args)
    if args.format == 'json':
        payload = OrderedDict([('header', header), ('result', result)])
        if rows is not None:
            payload['rows'] = rows
        text = json.dumps(_plain(payload), indent=1) + '\n'
    else:
        lines = ['# %s: %s' % (k, json.dumps(_plain(v)))
                 for k, v in header.items()]
        if rows:
            lines.append(','.join(rows[0].keys()))
            lines.extend(','.join(_fmt(v) for v in r.values()) for r in rows)
            lines.extend('# %s: %s' % (k, _fmt(v)) if not isinstance(v, dict)
                         else '# %s: %s' % (k, json.dumps(_plain(v)))
                         for k, v in result.items())
        else:
            lines.append('key,value')
            lines.extend('%s,%s' % (k, _fmt(v) if not isinstance(v, dict)
                                    else json.dumps(_plain(v)))
                         for k, v in result.items())
        text = '\n'.join(lines) + '\n'
    if args.out:
        with open(args.out, 'w') as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _writePlot(path, xy):
    x, y = xy
    with open(path, 'w') as f:
        f.write('x,y\n')
        for a, b in zip(x, y):
            f.write('%.17g,%.17g\n' % (a, b))


def _setThreads(n):
    if n is None and os.environ.get(THREADS_ENV):
        n = int(os.environ[THREADS_ENV])
    if n:
        import numba
        numba.set_num_threads(n)


def run(argv=None):
    '''
    :returns: exit code
    '''
    args = _parser().parse_args(argv)
    if args.out in FORMATS:
        args.format, args.out = args.out, None
    try:
        _setThreads(args.threads)
        result, rows, plot = _COMMANDS[args.command](args)
    except Diverged as e:
        result = OrderedDict([('error', 'diverged'), ('message', str(e))])
        if e.diagnostics is not None:
            result.update(e.diagnostics.asDict())
        _write(args, result, None)
        return 2
    except AssertionError as e:
        _write(args, OrderedDict([('error', 'assertion'),
                                  ('message', str(e))]), None)
        return 2
    except (CarnotError, IOError, ValueError) as e:
        sys.stderr.write('%s: %s\n' % (type(e).__name__, e))
        return 1
    _write(args, result, rows)
    if args.emit_plot_data and plot is not None:
        _writePlot(args.emit_plot_data, plot)
    return 0


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
