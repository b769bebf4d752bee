# coding=utf-8
from __future__ import division
from __future__ import print_function

import numpy as np

from carnotPotential.exceptions import Diverged, EnoughIterations
from carnotPotential.utils.baseClasses import Iteratives
from carnotPotential.potentials.WolffParams import WolffParams
from carnotPotential.laneEmden.constants import kappaBound
from carnotPotential.laneEmden.conditions import atomsNonIntegrable
from carnotPotential.laneEmden.PotentialCarrier import PotentialCarrier
from carnotPotential.laneEmden.SolveConfig import IterDiagnostics


def picardSolve(omega, config, cloud, debug=False):
    '''
    increasing iteration
    u_1 = A W^(2R)_(1,p) omega,  u_k = A W^(2R)_(1,p)(u_(k-1)^q dx + omega)
    on the cloud points of B_R(e)

    :returns: (u, IterDiagnostics), u on carrier points (cloud points with
        |x| < R, in cloud order)
    :raises Diverged: on blow up, or if omega has atoms around which u^q
        cannot be integrable; .diagnostics holds the record
    :raises AssertionError: converged with u > kappa W omega somewhere
        (config.strict)
    '''
    kappa = kappaBound(config.A, config.p, config.q)
    diag = IterDiagnostics(kappa)
    carrier = PotentialCarrier(omega, cloud, config.R)
    if omega.isZero():
        diag.sup_norms.append(0.0)
        diag.increments.append(0.0)
        diag.verdict = 'converged'
        diag.kappa_ok = diag.lower_ok = True
        return np.zeros(carrier.n), diag
    carrier.requireMass(config.R)
    if carrier.hasAtoms() and atomsNonIntegrable(cloud.group.M, config.p,
                                                 config.q):
        diag.verdict = 'diverged'
        diag.reason = 'atom'
        raise Diverged('u^q is not integrable near the atoms of omega '
                       '(q(M-p)/(p-1) >= M)', diag)

    P = WolffParams(1, config.p, 2 * config.R)
    W = carrier.op.apply(carrier.omega_masses, P)
    u = config.A * W
    sup1 = u.max()
    diag.sup_norms.append(sup1)
    diag.increments.append(np.inf)
    it = Iteratives(config.max_iter, config.tol_rel, debug)
    while True:
        with np.errstate(over='ignore'):
            masses = carrier.densityMasses(u ** config.q) + carrier.omega_masses
            new = config.A * carrier.op.apply(masses, P)
        assert (new >= u * (1 - 1e-12)).all(), 'Picard iterates decreased'
        pos = new > 0
        dev = ((new[pos] - u[pos]) / new[pos]).max() if pos.any() else 0.0
        u = new
        diag.sup_norms.append(u.max())
        diag.increments.append(dev)
        if not u.max() <= config.blowup_factor * sup1:
            diag.verdict = 'diverged'
            diag.reason = 'blowup'
            raise Diverged('sup u grew beyond %g sup u_1 after %i '
                           'iterations' % (config.blowup_factor,
                                           diag.iterations), diag)
        try:
            it.checkConvergence(dev)
        except EnoughIterations as e:
            diag.verdict = ('converged' if e.reason == 'converged'
                            else 'max_iter')
            break

    pos = W > 0
    ratio = u[pos] / W[pos]
    diag.max_ratio = ratio.max() if pos.any() else 0.0
    diag.kappa_ok = bool((ratio <= kappa * (1 + 1e-9)).all())
    diag.lower_ok = bool((ratio >= config.A * (1 - 1e-12)).all())
    if debug:
        print('%s, max u/W = %g (kappa %g)' % (diag, diag.max_ratio, kappa))
    if config.strict and diag.verdict == 'converged':
        assert diag.kappa_ok, 'u <= kappa W omega violated: max u/W = %g, ' \
            'kappa = %g' % (diag.max_ratio, kappa)
    return u, diag
