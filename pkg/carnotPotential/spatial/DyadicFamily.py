# coding=utf-8
from __future__ import division

from collections import namedtuple, OrderedDict

import numpy as np


CubeRef = namedtuple('CubeRef', 'level index')


class DyadicFamily(object):
    '''
    nested partitions of a PointCloud at levels k = m..k_top

    level k holds the net point indices .centers[k] (ascending), the cube
    label of every cloud point .labels[k] (position in .centers[k]) and,
    below the top, the parent position of every cube .parents[k]

    build with buildFamily()
    '''

    def __init__(self, cloud, m, k_top, lam, separation, centers, labels,
                 parents, volume='empirical', volume_constant=1.0):
        self.cloud = cloud
        self.m = m
        self.k_top = k_top
        self.lam = float(lam)
        self.separation = float(separation)
        self.centers = centers
        self.labels = labels
        self.parents = parents
        self.volume_mode = volume
        self.volume_constant = volume_constant
        self.certificate = None
        self._volumes = {}

    @property
    def levels(self):
        return range(self.m, self.k_top + 1)

    def nCubes(self, k):
        return len(self.centers[k])

    def cubes(self, k=None):
        levels = self.levels if k is None else [k]
        return [CubeRef(l, j) for l in levels for j in range(self.nCubes(l))]

    def side(self, k):
        '''l(Q) = lambda^k'''
        return self.lam ** k

    def center(self, cube):
        return self.cloud.points[self.centers[cube.level][cube.index]]

    def members(self, cube):
        return np.flatnonzero(self.labels[cube.level] == cube.index)

    def parent(self, cube):
        if cube.level == self.k_top:
            return None
        return CubeRef(cube.level + 1,
                       int(self.parents[cube.level][cube.index]))

    def children(self, cube):
        if cube.level == self.m:
            return []
        k = cube.level - 1
        return [CubeRef(k, int(j))
                for j in np.flatnonzero(self.parents[k] == cube.index)]

    def containing(self, i):
        '''cubes containing cloud point [i], finest first'''
        return [CubeRef(k, int(self.labels[k][i])) for k in self.levels]

    def volumes(self, k):
        '''|Q| for all cubes of level k'''
        v = self._volumes.get(k)
        if v is None:
            if self.volume_mode == 'empirical':
                v = np.bincount(self.labels[k], weights=self.cloud.volumes,
                                minlength=self.nCubes(k))
            else:
                v = np.full(self.nCubes(k), self.volume_constant *
                            self.side(k) ** self.cloud.group.M)
            self._volumes[k] = v
        return v

    def volume(self, cube):
        return self.volumes(cube.level)[cube.index]

    def qStar(self, cube):
        '''cloud points of Q* = B_(lambda^(k+1))(x_Q)'''
        return self.cloud.index.query(self.center(cube),
                                      self.lam ** (cube.level + 1))

    def qStarStar(self, cube):
        '''cloud points of Q** = B_(2 lambda^(k+2))(x_Q)'''
        return self.cloud.index.query(self.center(cube),
                                      2 * self.lam ** (cube.level + 2))

    def cubeMasses(self, k, weights):
        '''sum of per point [weights] over every cube of level k'''
        return np.bincount(self.labels[k], weights=weights,
                           minlength=self.nCubes(k))

    def qStarStarMasses(self, k, weights):
        '''sum of per point [weights] over Q** of every cube of level k'''
        return np.array([weights[self.qStarStar(CubeRef(k, j))].sum()
                         for j in range(self.nCubes(k))])


def certify(family):
    '''
    check partition, nesting and the ball sandwich
    B_(lambda^k)(x_Q) <= Q <= B_(lambda^(k+1))(x_Q) against the sample

    returns OrderedDict; sandwich violations are counted, not raised
    '''
    cloud = family.cloud
    g = cloud.group
    n = cloud.n
    partition = True
    nesting = True
    outer = inner = 0
    per_level = []
    for k in family.levels:
        labels = family.labels[k]
        nc = family.nCubes(k)
        counts = np.bincount(labels, minlength=nc)
        ok = (len(labels) == n and labels.min() >= 0 and labels.max() < nc
              and counts.sum() == n and (counts > 0).all()
              and (labels[family.centers[k]] == np.arange(nc)).all())
        partition &= bool(ok)
        if k < family.k_top:
            nesting &= bool((family.parents[k][labels] ==
                             family.labels[k + 1]).all())
        order = np.argsort(labels, kind='mergesort')
        groups = np.split(order, np.cumsum(counts)[:-1])
        lo = hi = 0
        for j, mem in enumerate(groups):
            c = cloud.points[family.centers[k][j]]
            if g.distances(c, cloud.points[mem]).max() >= family.lam ** (k + 1):
                hi += 1
            if (labels[cloud.index.query(c, family.lam ** k)] != j).any():
                lo += 1
        outer += hi
        inner += lo
        per_level.append((k, nc, hi, lo))
    out = OrderedDict()
    out['partition'] = partition
    out['nesting'] = nesting
    out['sandwich_outer_violations'] = outer
    out['sandwich_inner_violations'] = inner
    out['levels'] = per_level
    return out


def overlapCount(family, cube):
    '''
    number of level-k cubes meeting Q** (at least 1: Q itself)
    '''
    ball = family.qStarStar(cube)
    return np.unique(family.labels[cube.level][ball]).size


def maxOverlap(family):
    '''OrderedDict level -> max overlapCount'''
    return OrderedDict((k, max(overlapCount(family, c)
                               for c in family.cubes(k)))
                       for k in family.levels)
