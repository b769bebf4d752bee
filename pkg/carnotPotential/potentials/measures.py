# coding=utf-8
'''
nonnegative finite measures on a group

every measure exposes support() -> (points, masses, volumes):
point masses carry volume 0, density samples carry their cell volume
'''
from __future__ import division

import numpy as np

from carnotPotential.exceptions import InvalidParams


class AtomicMeasure(object):
    '''
    sum m_i delta_(a_i)
    '''

    def __init__(self, group, atoms, masses):
        self.group = group
        atoms = np.asarray(atoms, dtype=float).reshape(-1, group.N)
        self.atoms = group.points(atoms) if len(atoms) else atoms
        self.masses = np.asarray(masses, dtype=float).reshape(len(atoms))
        if not (np.isfinite(self.masses).all() and (self.masses >= 0).all()):
            raise InvalidParams('atom masses must be finite and >= 0')

    def mass(self):
        return self.masses.sum()

    def isZero(self):
        return not self.masses.any()

    def scaled(self, c):
        return AtomicMeasure(self.group, self.atoms, self.masses * c)

    def support(self):
        return self.atoms, self.masses, np.zeros(len(self.masses))

    def __repr__(self):
        return 'AtomicMeasure(%i atoms, mass %g)' % (len(self.masses),
                                                    self.mass())


class GridDensity(object):
    '''
    f dx on a PointCloud: density value per cloud point
    '''

    def __init__(self, cloud, density):
        self.cloud = cloud
        self.group = cloud.group
        if np.isscalar(density):
            density = np.full(cloud.n, float(density))
        self.density = np.asarray(density, dtype=float).reshape(cloud.n)
        if not (np.isfinite(self.density).all() and
                (self.density >= 0).all()):
            raise InvalidParams('density must be finite and >= 0')

    @property
    def masses(self):
        return self.density * self.cloud.volumes

    def mass(self):
        return self.masses.sum()

    def isZero(self):
        return not self.density.any()

    def scaled(self, c):
        return GridDensity(self.cloud, self.density * c)

    def support(self):
        return self.cloud.points, self.masses, self.cloud.volumes

    def __repr__(self):
        return 'GridDensity(%s, mass %g)' % (self.cloud, self.mass())


class MeasureSum(object):
    '''
    sum of measures; densities on the same cloud are merged
    '''

    def __init__(self, *parts):
        assert parts, 'MeasureSum needs at least one part'
        self.group = parts[0].group
        merged = []
        for p in parts:
            if isinstance(p, MeasureSum):
                candidates = p.parts
            else:
                candidates = [p]
            for q in candidates:
                for n, r in enumerate(merged):
                    if (isinstance(q, GridDensity) and
                            isinstance(r, GridDensity) and
                            q.cloud is r.cloud):
                        merged[n] = GridDensity(r.cloud,
                                                r.density + q.density)
                        break
                else:
                    merged.append(q)
        self.parts = merged

    def mass(self):
        return sum(p.mass() for p in self.parts)

    def isZero(self):
        return all(p.isZero() for p in self.parts)

    def scaled(self, c):
        return MeasureSum(*[p.scaled(c) for p in self.parts])

    def support(self):
        sup = [p.support() for p in self.parts]
        return tuple(np.concatenate([s[i] for s in sup]) for i in range(3))


def restrictToBall(mu, center, radius):
    '''
    mu restricted to the open ball B_radius(center)
    '''
    if not radius > 0:
        raise InvalidParams('radius must be > 0')
    g = mu.group
    if isinstance(mu, MeasureSum):
        return MeasureSum(*[restrictToBall(p, center, radius)
                            for p in mu.parts])
    if isinstance(mu, GridDensity):
        keep = np.zeros(mu.cloud.n, dtype=bool)
        keep[mu.cloud.index.query(center, radius)] = True
        return GridDensity(mu.cloud, np.where(keep, mu.density, 0.0))
    if not len(mu.masses):
        return mu
    d = g.distances(center, mu.atoms)
    return AtomicMeasure(g, mu.atoms, np.where(d < radius, mu.masses, 0.0))


def ballMass(mu, x, t):
    '''
    mu(B_t(x)) = mu({y: rho(x, y) < t})
    '''
    if not t > 0:
        return 0.0
    if isinstance(mu, GridDensity):
        return mu.masses[mu.cloud.index.query(x, t)].sum()
    if isinstance(mu, MeasureSum):
        return sum(ballMass(p, x, t) for p in mu.parts)
    if not len(mu.masses):
        return 0.0
    d = mu.group.distances(x, mu.atoms)
    return mu.masses[d < t].sum()


def carrierMasses(mu, cloud, chunk=2048):
    '''
    transfer [mu] onto the points of [cloud]:
    densities on the same cloud keep their cell masses,
    every other support point goes to its nearest cloud point
    '''
    if isinstance(mu, GridDensity) and mu.cloud is cloud:
        return mu.masses.copy()
    if isinstance(mu, MeasureSum):
        return sum(carrierMasses(p, cloud, chunk) for p in mu.parts)
    out = np.zeros(cloud.n)
    pts, masses, _ = mu.support()
    nz = np.flatnonzero(masses)
    g = cloud.group
    for s in range(0, len(nz), chunk):
        sel = nz[s:s + chunk]
        nearest = g.distanceMatrix(pts[sel], cloud.points).argmin(axis=1)
        np.add.at(out, nearest, masses[sel])
    return out
