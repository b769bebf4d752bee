# coding=utf-8
from __future__ import division

from collections import OrderedDict

import numpy as np

from carnotPotential.exceptions import InvalidParams
from carnotPotential.laneEmden.constants import checkExponents

MAX_ITER = 500
TOL_REL = 1e-6
BLOWUP_FACTOR = 1e6


class SolveConfig(object):
    '''
    :param A: constant of the potential bounds of p-superharmonic
        functions, not known in closed form; 1 gives dimensionless runs
    :param R: radius of the region B_R(e); potentials are truncated at 2R.
        R = inf solves on the whole group
    :param blowup_factor: divergence once sup u > blowup_factor sup u_1
    :param strict: converged runs assert u <= kappa W omega on the cloud;
        False only records the check in the diagnostics
    '''

    def __init__(self, p, q, R=1.0, A=1.0, max_iter=MAX_ITER, tol_rel=TOL_REL,
                 blowup_factor=BLOWUP_FACTOR, strict=True):
        checkExponents(p, q)
        if not R > 0:
            raise InvalidParams('R must be > 0, got %s' % R)
        if not A > 0:
            raise InvalidParams('A must be > 0, got %s' % A)
        if not blowup_factor > 1:
            raise InvalidParams('blowup_factor must be > 1')
        if not max_iter >= 1:
            raise InvalidParams('max_iter must be >= 1')
        self.p = float(p)
        self.q = float(q)
        self.R = float(R)
        self.A = float(A)
        self.max_iter = int(max_iter)
        self.tol_rel = float(tol_rel)
        self.blowup_factor = float(blowup_factor)
        self.strict = bool(strict)

    def asDict(self):
        return OrderedDict((k, getattr(self, k)) for k in (
            'p', 'q', 'R', 'A', 'max_iter', 'tol_rel', 'blowup_factor',
            'strict'))


class IterDiagnostics(object):
    '''
    record of a Picard run

    sup_norms -> sup u_k per iteration (nondecreasing)
    increments -> sup relative increment per iteration
    verdict -> 'converged', 'diverged' or 'max_iter'
    kappa_ok -> u <= kappa W omega on the cloud (converged runs)
    lower_ok -> u >= A W omega on the cloud
    '''

    def __init__(self, kappa):
        self.sup_norms = []
        self.increments = []
        self.verdict = None
        self.reason = ''
        self.kappa = kappa
        self.kappa_ok = None
        self.lower_ok = None
        self.max_ratio = np.nan

    @property
    def iterations(self):
        return len(self.sup_norms)

    def asDict(self):
        return OrderedDict([('verdict', self.verdict),
                            ('reason', self.reason),
                            ('iterations', self.iterations),
                            ('sup_norms', list(self.sup_norms)),
                            ('increments', list(self.increments)),
                            ('kappa', self.kappa),
                            ('kappa_ok', self.kappa_ok),
                            ('lower_ok', self.lower_ok),
                            ('max_ratio', self.max_ratio)])

    def __repr__(self):
        return 'IterDiagnostics(%s after %i iterations)' % (self.verdict,
                                                            self.iterations)
