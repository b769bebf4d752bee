# coding=utf-8
from __future__ import division

from fractions import Fraction
from math import factorial

import numpy as np

from carnotPotential.exceptions import ShapeMismatch, NonpositiveScale
from carnotPotential.group import bch


class GroupSpec(object):
    '''
    a validated Carnot group in exponential coordinates

    points are float arrays of shape (N,) or batches (n, N),
    coordinates grouped by layer

    public attributes:
    .N -> topological dimension
    .M -> homogeneous dimension
    .r -> step
    .weights -> layer index of every coordinate
    .C -> dense structure tensor C[a, b, k]

    construct with makeGroup(StrataSpec) or builtin(name)
    '''

    def __init__(self, strata, C, table, name=None):
        self.strata = strata
        self.name = name
        dims = strata.layer_dims
        self.layer_dims = dims
        self.r = len(dims)
        self.N = int(sum(dims))
        self.M = int(sum((i + 1) * d for i, d in enumerate(dims)))
        self.weights = np.concatenate(
            [np.full(d, i + 1, dtype=float) for i, d in enumerate(dims)])
        # exponent 2 r! of the homogeneous norm
        self.expo = float(2 * factorial(self.r))
        self.C = np.ascontiguousarray(C, dtype=float)
        self.table = table
        for arr in (self.weights, self.C):
            arr.flags.writeable = False
        self._unit_ball = None

    def __repr__(self):
        return 'GroupSpec(%s: N=%i, M=%i, r=%i)' % (
            self.name or 'custom', self.N, self.M, self.r)

    def points(self, a):
        '''
        return [a] as float array, checking the coordinate layout
        '''
        a = np.asarray(a, dtype=float)
        if a.ndim not in (1, 2) or a.shape[-1] != self.N:
            raise ShapeMismatch('expected points with %i coordinates, got '
                                'shape %s' % (self.N, a.shape))
        return np.ascontiguousarray(a)

    def identity(self):
        return np.zeros(self.N)

    def multiply(self, a, b):
        a = self.points(a)
        b = self.points(b)
        if a.ndim == 1 and b.ndim == 1:
            return bch.bchProduct(self.C, self.r, a, b)
        a, b = np.broadcast_arrays(np.atleast_2d(a), np.atleast_2d(b))
        return bch.multiplyRows(self.C, self.r, np.ascontiguousarray(a),
                                np.ascontiguousarray(b))

    def multiplyExact(self, a, b):
        '''
        rational reference product, returns a list of Fractions
        '''
        from carnotPotential.group.makeGroup import bracketExact

        if len(a) != self.N or len(b) != self.N:
            raise ShapeMismatch('expected %i coordinates' % self.N)
        x = {i: Fraction(v) for i, v in enumerate(a) if v != 0}
        y = {i: Fraction(v) for i, v in enumerate(b) if v != 0}
        t = self.table

        def add(u, v, f=Fraction(1)):
            out = dict(u)
            for k, c in v.items():
                out[k] = out.get(k, Fraction(0)) + f * c
            return out

        z = add(x, y)
        if self.r >= 2:
            xy = bracketExact(t, x, y)
            z = add(z, xy, Fraction(1, 2))
        if self.r >= 3:
            xxy = bracketExact(t, x, xy)
            z = add(z, xxy, Fraction(1, 12))
            z = add(z, bracketExact(t, y, xy), Fraction(-1, 12))
        if self.r >= 4:
            z = add(z, bracketExact(t, y, xxy), Fraction(-1, 24))
        return [z.get(i, Fraction(0)) for i in range(self.N)]

    def inverse(self, a):
        return -self.points(a)

    def dilate(self, t, a):
        if not t > 0:
            raise NonpositiveScale('dilation factor must be > 0, got %s' % t)
        return self.points(a) * t ** self.weights

    def hnorm(self, a):
        a = self.points(a)
        if a.ndim == 1:
            return bch.gaugeNorm(a, self.weights, self.expo)
        return bch.normRows(a, self.weights, self.expo)

    def qdist(self, a, b):
        '''
        rho(a, b) = |a^-1 b|
        '''
        a = self.points(a)
        b = self.points(b)
        if a.ndim == 1 and b.ndim == 1:
            return bch.gaugeNorm(bch.bchProduct(self.C, self.r, -a, b),
                                 self.weights, self.expo)
        return self.hnorm(self.multiply(-a, b))

    def distances(self, x, Y):
        '''rho(x, y_i) for every row of [Y]'''
        x = self.points(x)
        Y = self.points(np.atleast_2d(Y))
        return bch.distancesFrom(self.C, self.r, self.weights, self.expo,
                                 x, Y)

    def distanceMatrix(self, X, Y):
        X = self.points(np.atleast_2d(X))
        Y = self.points(np.atleast_2d(Y))
        return bch.distanceMatrix(self.C, self.r, self.weights, self.expo,
                                  X, Y)

    def sortedDistanceRows(self, X, Y):
        X = self.points(np.atleast_2d(X))
        Y = self.points(np.atleast_2d(Y))
        return bch.sortedDistanceRows(self.C, self.r, self.weights,
                                      self.expo, X, Y)

    def unitBallVolume(self):
        '''Haar volume of B_1(e), cached'''
        if self._unit_ball is None:
            from carnotPotential.group.ballVolume import unitBallVolume
            self._unit_ball = unitBallVolume(self)
        return self._unit_ball
