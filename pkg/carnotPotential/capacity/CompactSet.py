# coding=utf-8
from __future__ import division

import numpy as np

from carnotPotential.exceptions import InvalidParams


class CompactSet(object):
    '''
    discretized compact set: candidate support atoms inside the enclosing
    ball B_radius(center)

    center defaults to the first point, radius to the largest distance
    from it (1.0 for a single point)
    '''

    def __init__(self, group, points, center=None, radius=None):
        self.group = group
        pts = np.asarray(points, dtype=float).reshape(-1, group.N)
        if not len(pts):
            raise InvalidParams('a compact set needs at least one point')
        self.points = group.points(pts)
        self.center = (self.points[0].copy() if center is None
                       else group.points(center))
        d = group.distances(self.center, self.points)
        if radius is None:
            radius = d.max() if d.max() > 0 else 1.0
        elif not radius > 0:
            raise InvalidParams('radius must be > 0')
        elif not d.max() <= radius * (1 + 1e-9):
            raise InvalidParams('set points leave the enclosing ball')
        self.radius = float(radius)

    @property
    def n(self):
        return len(self.points)

    def dilate(self, t):
        g = self.group
        return CompactSet(g, g.dilate(t, self.points),
                          g.dilate(t, self.center), self.radius * t)

    def union(self, other):
        '''union keeping the enclosing ball of [self]'''
        return CompactSet(self.group,
                          np.vstack([self.points, other.points]),
                          self.center, self.radius)

    @staticmethod
    def fromFile(group, path, center=None, radius=None):
        '''one point per line, whitespace separated coordinates'''
        return CompactSet(group, np.loadtxt(path, ndmin=2), center, radius)

    def __repr__(self):
        return 'CompactSet(%i points in B_%g)' % (self.n, self.radius)
