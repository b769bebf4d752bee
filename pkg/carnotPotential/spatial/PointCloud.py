# coding=utf-8
from __future__ import division

import numpy as np

from carnotPotential.exceptions import InvalidParams


class PointCloud(object):
    '''
    finite carrier of Haar measure: sample points with the volume each
    one represents, inside the bounding ball B_radius(center)

    :param cell_volume: common volume of all points (lattice clouds)
    :param volumes: per point volumes (multiscale clouds), overrides
        [cell_volume]

    public attributes:
    .points -> (n, N) array
    .volumes -> (n,) array
    .cell_volume -> common volume or None
    .center, .radius -> bounding ball
    '''

    def __init__(self, group, points, cell_volume=None, volumes=None,
                 center=None, radius=None):
        self.group = group
        pts = np.asarray(points, dtype=float).reshape(-1, group.N)
        self.points = group.points(pts) if len(pts) else pts
        n = len(self.points)
        if volumes is None:
            if cell_volume is None or not cell_volume > 0:
                raise InvalidParams('cell_volume must be > 0')
            self.cell_volume = float(cell_volume)
            self.volumes = np.full(n, self.cell_volume)
        else:
            self.volumes = np.asarray(volumes, dtype=float).reshape(n)
            if n and not (self.volumes > 0).all():
                raise InvalidParams('point volumes must be > 0')
            self.cell_volume = None
        self.center = (group.identity() if center is None
                       else group.points(center))

        dmax = (group.distances(self.center, self.points).max()
                if n else 0.0)
        if radius is None:
            radius = dmax * (1 + 1e-12) + 1e-300
        elif n and not dmax < radius * (1 + 1e-9):
            raise InvalidParams('cloud points leave the bounding ball '
                                '(%s >= %s)' % (dmax, radius))
        self.radius = float(radius)
        self._index = None

    def __len__(self):
        return len(self.points)

    @property
    def n(self):
        return len(self.points)

    @property
    def totalVolume(self):
        return self.volumes.sum()

    @property
    def index(self):
        '''BallIndex, built on first use'''
        if self._index is None:
            from carnotPotential.spatial.ballQuery import BallIndex
            self._index = BallIndex(self)
        return self._index

    def cellScales(self):
        '''linear size of every cell: volume^(1/M)'''
        return self.volumes ** (1.0 / self.group.M)

    def dilate(self, t):
        '''
        image under delta_t; volumes scale with the Jacobian t^M
        '''
        g = self.group
        return PointCloud(g, g.dilate(t, self.points),
                          volumes=self.volumes * t ** g.M,
                          center=g.dilate(t, self.center),
                          radius=self.radius * t)

    def translate(self, a):
        '''image under left translation by [a], volumes unchanged'''
        g = self.group
        return PointCloud(g, g.multiply(a, self.points), volumes=self.volumes,
                          center=g.multiply(a, self.center),
                          radius=self.radius)

    def subset(self, indices):
        indices = np.asarray(indices, dtype=np.int64)
        return PointCloud(self.group, self.points[indices],
                          volumes=self.volumes[indices],
                          center=self.center, radius=self.radius)

    def __repr__(self):
        return 'PointCloud(%i points in B_%g, %s)' % (
            self.n, self.radius, self.group)
