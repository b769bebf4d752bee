# coding=utf-8
from __future__ import division

import numpy as np

from carnotPotential.capacity.kernelQuadrature import (KernelQuadrature,
                                                       DOMAIN_FACTOR)


def degeneracyDecay(E, params, cloud, factors=(1, 2, 4)):
    '''
    dual objective of uniform weights on E over growing quadrature domains
    DOMAIN_FACTOR * radius * factor, without far field

    for alpha s >= M the norm of I_alpha mu is infinite and the sequence
    decays towards 0; the cloud must reach the largest domain
    '''
    w = np.full(E.n, 1.0 / E.n)
    out = []
    for f in factors:
        quad = KernelQuadrature(E.points, params, cloud, E.center,
                                DOMAIN_FACTOR * E.radius * f, tail=False,
                                shrink=False)
        out.append(quad.objective(w))
    return np.array(out)
