# coding=utf-8
from __future__ import division

import numpy as np

from carnotPotential.potentials.measures import carrierMasses


def dyadicMaximal(f, mu, family, masses=None):
    '''
    M f(x) = sup over cubes Q containing x with mu(Q) > 0 of
    int_Q f dmu / mu(Q), at every carrier point of the family cloud

    :param f: values per cloud point
    '''
    if masses is None:
        masses = carrierMasses(mu, family.cloud)
    f = np.asarray(f, dtype=float)
    out = np.zeros(family.cloud.n)
    for k in family.levels:
        mq = family.cubeMasses(k, masses)
        fq = family.cubeMasses(k, f * masses)
        pos = mq > 0
        avg = np.zeros_like(mq)
        avg[pos] = fq[pos] / mq[pos]
        lab = family.labels[k]
        out = np.where(pos[lab], np.maximum(out, avg[lab]), out)
    return out
