# coding=utf-8
from __future__ import division

import numpy as np


class BallIndex(object):
    '''
    rho-ball range queries on a PointCloud

    a cKDTree over scaled coordinates returns the points of a coordinate
    box that contains B_t(x); the box comes from absolute bounds of the
    BCH terms of x.z with |z_j| < t^w_j. Candidates are then filtered by
    exact rho evaluation
    '''

    def __init__(self, cloud):
        from scipy.spatial import cKDTree

        g = cloud.group
        self.cloud = cloud
        self.group = g
        self._absC = np.abs(g.C)
        self._scale = max(cloud.radius, 1e-12) ** (g.weights - 1)
        self._tree = (cKDTree(cloud.points / self._scale)
                      if cloud.n else None)

    def _absBracket(self, u, v):
        return np.einsum('abk,a,b->k', self._absC, u, v)

    def halfWidths(self, x, t):
        '''coordinate box half widths of B_t(x)'''
        r = self.group.r
        xa = np.abs(x)
        z = t ** self.group.weights
        h = z.copy()
        if r >= 2:
            xz = self._absBracket(xa, z)
            h += 0.5 * xz
        if r >= 3:
            xxz = self._absBracket(xa, xz)
            h += (xxz + self._absBracket(z, xz)) / 12.0
        if r >= 4:
            h += self._absBracket(z, xxz) / 24.0
        return h

    def query(self, x, t, return_distances=False):
        '''
        sorted indices i with rho(x, p_i) < t
        '''
        x = self.group.points(x)
        if not t > 0 or self._tree is None:
            idx = np.empty(0, dtype=np.int64)
            return (idx, np.empty(0)) if return_distances else idx
        h = self.halfWidths(x, t)
        r = (h / self._scale).max() * (1 + 1e-9) + 1e-12
        cand = np.array(sorted(self._tree.query_ball_point(
            x / self._scale, r, p=np.inf)), dtype=np.int64)
        if not len(cand):
            return (cand, np.empty(0)) if return_distances else cand
        d = self.group.distances(x, self.cloud.points[cand])
        keep = d < t
        if return_distances:
            return cand[keep], d[keep]
        return cand[keep]


def ballQuery(cloud, x, t):
    '''
    exactly the indices of cloud points with rho(x, p_i) < t, ascending
    '''
    return cloud.index.query(x, t)
