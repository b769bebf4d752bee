# coding=utf-8
'''
lattice quadrature of ||I_alpha mu||_(s')^(s') for measures on finitely
many atoms
'''
from __future__ import division
from __future__ import print_function

import numpy as np

from carnotPotential.exceptions import InvalidParams

# quadrature domain radius in units of the enclosing ball radius
DOMAIN_FACTOR = 8.0
# cloud points closer than this (in cell sizes) to an atom are its own cell
SELF_CELL = 1e-9


class KernelQuadrature(object):
    '''
    J(w) = int (I_alpha mu_w)^s' dx, mu_w = sum w_i delta_(a_i)

    inside B_domain(center): sum over cloud cells, own cells of an atom
    excluded; outside: mu_w is seen as a point mass at the center, giving
    T (sum w)^s' with T = |B_1| M R^(M-gamma) / (gamma-M),
    gamma = (M-alpha)s'

    :param tail: add the far field; needs alpha s < M
    :param shrink: if the cloud does not reach the requested domain,
        shrink the domain (and record it in .warnings) instead of raising
    '''

    def __init__(self, atoms, params, cloud, center, domain_radius,
                 tail=True, shrink=True, debug=False):
        g = cloud.group
        self.group = g
        self.params = params
        self.center = g.points(center)
        self.warnings = []
        atoms = g.points(np.atleast_2d(atoms))

        reach = cloud.radius - g.qdist(cloud.center, self.center)
        if reach < domain_radius * (1 - 1e-12):
            if not shrink:
                raise InvalidParams('cloud reaches %g around the set, domain '
                                    'needs %g' % (reach, domain_radius))
            msg = 'quadrature domain shrunk from %g to %g' % (domain_radius,
                                                             reach)
            self.warnings.append(msg)
            if debug:
                print(msg)
            domain_radius = reach
        d_atoms = g.distances(self.center, atoms)
        if not domain_radius > d_atoms.max():
            raise InvalidParams('quadrature domain does not contain the set')
        self.domain_radius = float(domain_radius)

        inside = np.flatnonzero(g.distances(self.center, cloud.points) <
                                domain_radius)
        pts = cloud.points[inside]
        self.volumes = cloud.volumes[inside]
        dist = g.distanceMatrix(pts, atoms)
        own = dist < SELF_CELL * cloud.cellScales()[inside][:, None]
        with np.errstate(divide='ignore'):
            K = dist ** -(g.M - params.alpha)
        K[own] = 0.0
        # (n_domain, n_atoms)
        self.K = K

        M = g.M
        gamma = (M - params.alpha) * params.sDual
        if not tail:
            self.tail = 0.0
        elif gamma > M:
            self.tail = (g.unitBallVolume() * M *
                         self.domain_radius ** (M - gamma) / (gamma - M))
        else:
            self.tail = np.inf

    @property
    def nAtoms(self):
        return self.K.shape[1]

    def evaluate(self, w):
        '''
        :returns: (J, grad) with grad_i = dJ/dw_i / s'
            = int K(a_i, x) (I mu_w)^(s'-1) dx;  sum w_i grad_i = J
        '''
        sd = self.params.sDual
        w = np.asarray(w, dtype=float)
        Kw = self.K.dot(w)
        m = w.sum()
        J = (self.volumes * Kw ** sd).sum() + self.tail * m ** sd
        grad = (self.K.T.dot(self.volumes * Kw ** (sd - 1)) +
                self.tail * m ** (sd - 1))
        return J, grad

    def objective(self, w):
        '''
        (mu(E) / ||I_alpha mu||_s')^s for mu = sum w_i delta_(a_i)
        '''
        w = np.asarray(w, dtype=float)
        m = w.sum()
        if m == 0:
            return 0.0
        J = self.evaluate(w)[0]
        return m ** self.params.s * J ** -(self.params.s - 1)


def dualObjective(E, weights, params, cloud, center=None,
                  domain_radius=None, tail=True):
    '''
    dual capacity objective of the atom weights [weights] on [E]
    '''
    if center is None:
        center = E.center
    if domain_radius is None:
        domain_radius = DOMAIN_FACTOR * E.radius
    quad = KernelQuadrature(E.points, params, cloud, center, domain_radius,
                            tail=tail)
    return quad.objective(weights)
