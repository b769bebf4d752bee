# coding=utf-8
from __future__ import division

import numpy as np

from carnotPotential.exceptions import InvalidParams, TooManyPoints
from carnotPotential.spatial.PointCloud import PointCloud

# cap on lattice nodes (counted on the enclosing box, before allocation)
MAX_POINTS = 4000000


def latticeCloud(g, center=None, radius=1.0, spacing=0.1,
                 max_points=MAX_POINTS):
    '''
    uniform lattice spacing*Z^N in exponential coordinates, clipped to the
    open ball B_radius(e) and left translated to [center]

    cell_volume = spacing^N (Haar = Lebesgue)
    '''
    if not spacing > 0 or not radius > 0:
        raise InvalidParams('spacing and radius must be > 0')
    # |z| < R implies |z_j| < R^w_j
    kmax = np.floor(radius ** g.weights / spacing).astype(np.int64)
    count = np.prod((2 * kmax + 1).astype(float))
    if count > max_points:
        raise TooManyPoints('%i lattice nodes in the enclosing box exceed '
                            'the cap of %i' % (count, max_points))
    axes = [np.arange(-k, k + 1) * spacing for k in kmax]
    z = np.stack([a.ravel() for a in np.meshgrid(*axes, indexing='ij')],
                 axis=-1)
    z = np.ascontiguousarray(z[g.hnorm(z) < radius])
    if center is None:
        center = g.identity()
    else:
        center = g.points(center)
        if center.any():
            z = g.multiply(center, z)
    return PointCloud(g, z, cell_volume=spacing ** g.N, center=center,
                      radius=radius)


def shellCloud(g, radius, spacing, inner=1.0, max_points=MAX_POINTS):
    '''
    multiscale carrier of B_radius(e):
    the lattice of B_inner plus the annulus inner/2 <= |z| < inner
    dilated by 2^j, j = 1..J, with volumes spacing^N 2^(jM)

    the resolution relative to |x| stays constant, so far fields are
    covered with few points
    '''
    base = latticeCloud(g, None, inner, spacing, max_points)
    J = max(0, int(np.ceil(np.log2(radius / inner) - 1e-12)))
    ring = base.points[g.hnorm(base.points) >= 0.5 * inner]
    pts = [base.points]
    vols = [base.volumes]
    for j in range(1, J + 1):
        pts.append(g.dilate(2.0 ** j, ring))
        vols.append(np.full(len(ring), base.cell_volume * 2.0 ** (j * g.M)))
    return PointCloud(g, np.concatenate(pts), volumes=np.concatenate(vols),
                      radius=inner * 2.0 ** J)
