# coding=utf-8
from __future__ import print_function

from carnotPotential.exceptions import EnoughIterations


class Iteratives(object):
    '''
    convergence bookkeeping shared by the fixed point iterations

    call checkConvergence(dev) once per step;
    raises EnoughIterations with .reason in ('converged', 'max_iter')
    '''

    def __init__(self, max_iter=500, max_dev=1e-6, debug=False):
        self._max_iter = max_iter
        self._max_dev = max_dev
        self._debug = debug

        self.deviations = []
        self._n = 0

    @property
    def n(self):
        return self._n

    def checkConvergence(self, dev):
        self._n += 1
        self.deviations.append(dev)
        if self._debug:
            print('iteration %i, residuum: %s' % (self._n, dev))

        # STOP ITERATION?
        if dev < self._max_dev:
            raise EnoughIterations('converged')
        if self._n >= self._max_iter:
            raise EnoughIterations('max_iter')
