# coding=utf-8
from __future__ import division

import numpy as np

from carnotPotential.exceptions import ZeroMeasure
from carnotPotential.potentials.wolff import WolffOperator


class PotentialCarrier(object):
    '''
    W_(1,p) of measures u^q dx + omega with u living on the cloud points
    of the region B_R(e) (the whole cloud for R = inf)

    support = region cells followed by the support of omega; every cell
    has positive volume, so atoms of omega are resolved down to the cell
    scale and W stays finite at cloud points

    :param eval_points: where the potentials are reported,
        default: the region points
    '''

    def __init__(self, omega, cloud, R, eval_points=None):
        g = cloud.group
        self.group = g
        self.omega = omega
        if np.isinf(R):
            region = np.arange(cloud.n)
        else:
            region = np.flatnonzero(g.hnorm(cloud.points) < R)
        self.region = region
        self.points = cloud.points[region]
        self.volumes = cloud.volumes[region]

        pts, masses, vols = omega.support()
        self.omega_points = pts
        self.omega_volumes = vols
        self.omega_masses = np.concatenate([np.zeros(len(region)), masses])
        support = np.vstack([self.points, pts]) if len(pts) else self.points
        support_vols = np.concatenate([self.volumes, vols])
        self.op = WolffOperator(g, self.points, support, support_vols)
        if eval_points is None:
            self.eval_points = self.points
            self.op_eval = self.op
        else:
            self.eval_points = g.points(np.atleast_2d(eval_points))
            self.op_eval = WolffOperator(g, self.eval_points, support,
                                         support_vols)

    @property
    def n(self):
        return len(self.region)

    def densityMasses(self, density):
        '''support masses of density dx on the region cells'''
        return np.concatenate([density * self.volumes,
                               np.zeros(len(self.omega_points))])

    def omegaMass(self, R):
        '''omega(B_R(e)), all of omega for R = inf'''
        m = self.omega_masses[self.n:]
        if np.isinf(R) or not len(m):
            return m.sum()
        return m[self.group.hnorm(self.omega_points) < R].sum()

    def hasAtoms(self):
        return bool(((self.omega_volumes == 0) &
                     (self.omega_masses[self.n:] > 0)).any())

    def requireMass(self, R):
        if not self.omegaMass(R) > 0:
            raise ZeroMeasure('omega has no mass in B_%g(e)' % R)
