# coding=utf-8
from __future__ import division

from collections import namedtuple

import numpy as np
from scipy.optimize import brentq

from carnotPotential.exceptions import InvalidParams
from carnotPotential.laneEmden.constants import (checkExponents,
                                                 structuralFactor, kappaBound)

# iterates above this are reported as unbounded
OVERFLOW = 1e150

Recursion = namedtuple('Recursion', 'sequence verdict limit bound')


def _fixedPointMap(A, p, q, C):
    K = structuralFactor(A, p)
    g = q / (p - 1)
    return K, g, lambda c: K * (C * c ** g + 1) - c


def fixedPointExists(A, p, q, C):
    '''
    c = K(C c^g + 1), K = A max(1, 2^(p'-2)), g = q/(p-1), has a real root

    the right hand side minus c is convex with its minimum at
    c* = (K C g)^(-1/(g-1)); a root exists iff the minimum is <= 0
    '''
    checkExponents(p, q)
    if C < 0:
        raise InvalidParams('C must be >= 0')
    if C == 0:
        return True
    K, g, h = _fixedPointMap(A, p, q, C)
    cstar = (K * C * g) ** (-1 / (g - 1))
    return h(cstar) <= 0


def recursionLimit(A, p, q, C):
    '''
    limit of the c_k recursion: the smallest fixed point, inf if there
    is none
    '''
    if not fixedPointExists(A, p, q, C):
        return np.inf
    K, g, h = _fixedPointMap(A, p, q, C)
    if C == 0:
        return K
    cstar = (K * C * g) ** (-1 / (g - 1))
    if h(cstar) == 0:
        return cstar
    return brentq(h, K, cstar, xtol=1e-14, rtol=1e-15)


def constantRecursion(A, p, q, C, k_max=200, tol=1e-9):
    '''
    c_1 = A, c_k = A max(1, 2^(p'-2)) (c_(k-1)^(q(p'-1)) C + 1)

    :returns: Recursion(sequence, verdict, limit, bound) with verdict
        'bounded' iff sup c_k <= bound + tol,
        bound = A max(1, 2^(p'-2)) q/(q-p+1)
    '''
    checkExponents(p, q)
    if C < 0:
        raise InvalidParams('C must be >= 0')
    K, g, _ = _fixedPointMap(A, p, q, C)
    seq = [float(A)]
    with np.errstate(over='ignore'):
        for _ in range(k_max - 1):
            c = K * (C * np.float64(seq[-1]) ** g + 1)
            seq.append(float(c))
            if c > OVERFLOW:
                break
    seq = np.array(seq)
    bound = kappaBound(A, p, q)
    verdict = 'bounded' if seq.max() <= bound + tol else 'unbounded'
    return Recursion(seq, verdict, recursionLimit(A, p, q, C), bound)
