# coding=utf-8
from __future__ import division

from collections import OrderedDict

import numpy as np

from carnotPotential.capacity.CapacityParams import CapacityParams
from carnotPotential.capacity.kernelQuadrature import (KernelQuadrature,
                                                       DOMAIN_FACTOR)


def extremalInequalityCheck(mu, p, q, cloud, tol=1e-3, normalize=False,
                            center=None, domain_radius=None):
    '''
    V(a) = I_p * [I_p * mu]^((q-p+1)/(p-1)) (a) at every atom a of [mu]

    a capacitary witness of C_(p, q/(q-p+1)) satisfies V <= 1 on its
    support, with equality where the ascent converged

    :param normalize: first rescale mu to the extremal scaling
        c = J(mu/mu(E))^-(s-1)
    :param center, domain_radius: quadrature domain; pass the ones of the
        CapacityResult that produced [mu]
    :returns: OrderedDict(max, min, values, ok) with ok = max <= 1 + tol
    '''
    pts, masses, _ = mu.support()
    keep = masses > 0
    if not keep.any():
        return OrderedDict([('max', 0.0), ('min', 0.0),
                            ('values', np.zeros(0)), ('ok', True)])
    g = mu.group
    pts, masses = pts[keep], masses[keep]
    params = CapacityParams.fromExponents(p, q)
    if center is None:
        center = pts[0]
    if domain_radius is None:
        r = g.distances(center, pts).max()
        domain_radius = DOMAIN_FACTOR * (r if r > 0 else 1.0)
    quad = KernelQuadrature(pts, params, cloud, center, domain_radius)
    if normalize:
        w = masses / masses.sum()
        J = quad.evaluate(w)[0]
        masses = w * J ** -(params.s - 1)
    values = quad.evaluate(masses)[1]
    return OrderedDict([('max', values.max()), ('min', values.min()),
                        ('values', values), ('ok', values.max() <= 1 + tol)])
