# coding=utf-8
from __future__ import division
from __future__ import print_function

from collections import namedtuple

import numpy as np

from carnotPotential.exceptions import (DegenerateParams, NoConvergence,
                                        EnoughIterations)
from carnotPotential.utils.baseClasses import Iteratives
from carnotPotential.potentials.measures import AtomicMeasure
from carnotPotential.capacity.verdicts import (degeneracyVerdict,
                                               IDENTICALLY_ZERO)
from carnotPotential.capacity.kernelQuadrature import (KernelQuadrature,
                                                       DOMAIN_FACTOR)

# step size factor applied whenever a step would lower the objective
DAMPING = 0.5
MIN_STEP = 1e-10


CapacityResult = namedtuple(
    'CapacityResult', 'value witness weights iterations converged history '
    'kkt center domain_radius warnings')
CapacityResult.__doc__ = '''
value -> certified lower bound of C_(alpha,s)(E)
witness -> AtomicMeasure value*weights on E (extremal scaling,
           witness(E) = value)
weights -> normalized atom weights (sum 1)
history -> objective value per accepted iteration
kkt -> last max |grad_i/J - 1| over the weight support
'''


def _ascent(quad, w, max_iter, tol, debug):
    s = quad.params.s
    eta = s - 1
    J, grad = quad.evaluate(w)
    history = [J ** -(s - 1)]
    it = Iteratives(max_iter, tol, debug)
    dev = np.inf
    converged = False
    while True:
        supp = w > 1e-12 * w.max()
        dev = np.abs(grad[supp] / J - 1).max()
        try:
            it.checkConvergence(dev)
        except EnoughIterations as e:
            converged = e.reason == 'converged'
            break
        while True:
            new = w * (J / grad) ** eta
            new /= new.sum()
            J_new, grad_new = quad.evaluate(new)
            if J_new <= J:
                break
            eta *= DAMPING
            if eta < MIN_STEP:
                break
        if eta < MIN_STEP:
            # no ascent direction left at this resolution
            converged = dev < 10 * tol
            break
        value = J_new ** -(s - 1)
        assert value >= history[-1] * (1 - 1e-12), \
            'capacity objective decreased: %s -> %s' % (history[-1], value)
        w, J, grad = new, J_new, grad_new
        history.append(value)
    return w, J, history, it.n, converged, dev


def _warmWeights(E, warm_start):
    if isinstance(warm_start, CapacityResult):
        w = np.zeros(E.n)
        g = E.group
        for a, m in zip(warm_start.witness.atoms, warm_start.weights):
            d = g.distances(a, E.points)
            j = d.argmin()
            if d[j] < 1e-12:
                w[j] += m
        return w
    w = np.asarray(warm_start, dtype=float).reshape(E.n)
    return w


def capacityLower(E, params, cloud, max_iter=200, tol=1e-6,
                  warm_start=None, center=None, domain_radius=None,
                  strict=False, debug=False):
    '''
    lower bound of the Riesz capacity
    C_(alpha,s)(E) = sup_mu (mu(E) / ||I_alpha mu||_s')^s
    by multiplicative ascent over atom weights on E

    any admissible mu is a witness, so the returned value bounds the
    discretized capacity from below. Runs from uniform weights and, if
    given, from [warm_start] (weights on E or a CapacityResult of a
    subset) and returns the better run

    :param strict: raise NoConvergence at the iteration cap, the result is
        attached; otherwise the cap is flagged in .converged
    '''
    g = E.group
    if degeneracyVerdict(params, g.M) == IDENTICALLY_ZERO:
        raise DegenerateParams('alpha s = %g >= M = %i: the capacity of '
                               'every compact set is 0' % (
                                   params.alpha * params.s, g.M))
    if center is None:
        center = E.center
    if domain_radius is None:
        domain_radius = DOMAIN_FACTOR * E.radius
    quad = KernelQuadrature(E.points, params, cloud, center, domain_radius,
                            debug=debug)

    starts = [np.full(E.n, 1.0 / E.n)]
    if warm_start is not None:
        w0 = _warmWeights(E, warm_start)
        if w0.sum() > 0:
            starts.append(w0 / w0.sum())
    best = None
    for w0 in starts:
        run = _ascent(quad, w0, max_iter, tol, debug)
        if best is None or run[2][-1] > best[2][-1]:
            best = run
    w, J, history, n, converged, dev = best

    value = history[-1]
    res = CapacityResult(value, AtomicMeasure(g, E.points, value * w), w, n,
                         converged, history, dev, quad.center,
                         quad.domain_radius, quad.warnings)
    if debug:
        print('capacity >= %g after %i iterations (kkt %g)' % (value, n,
                                                              dev))
    if strict and not converged:
        raise NoConvergence('capacity ascent stopped at %i iterations, '
                            'kkt deviation %g' % (n, dev), res)
    return res


if __name__ == '__main__':
    from carnotPotential.group.builtin import builtin
    from carnotPotential.spatial.latticeCloud import shellCloud
    from carnotPotential.capacity.CapacityParams import CapacityParams
    from carnotPotential.capacity.CompactSet import CompactSet

    g = builtin('H1')
    cloud = shellCloud(g, radius=4, spacing=0.1)
    params = CapacityParams(1, 1.5)
    E = CompactSet(g, [[0.3, 0, 0], [-0.3, 0, 0], [0, 0, 0.2]],
                   center=g.identity(), radius=0.4)
    res = capacityLower(E, params, cloud, debug=True)
    print(res.weights)
