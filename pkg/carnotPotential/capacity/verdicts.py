# coding=utf-8
'''
closed form thresholds: vanishing of C_(alpha,s) and removable points
'''
from __future__ import division

from carnotPotential.exceptions import InvalidExponents

IDENTICALLY_ZERO = 'identically_zero'
NONDEGENERATE = 'nondegenerate'
REMOVABLE = 'removable_points'
NON_REMOVABLE = 'non_removable_points'

_EPS = 1e-12


def degeneracyVerdict(params, M):
    '''
    the Riesz capacity of every compact set vanishes iff alpha s >= M:
    then I_alpha mu ~ |x|^-(M-alpha) at infinity is not in L^s'
    '''
    if params.alpha * params.s >= M * (1 - _EPS):
        return IDENTICALLY_ZERO
    return NONDEGENERATE


def removabilityThreshold(p, M):
    '''q = M(p-1)/(M-p), where p q/(q-p+1) = M'''
    return M * (p - 1) / (M - p)


def removabilityVerdict(p, q, M):
    '''
    single points are removable for -Delta_p u = u^q iff the
    capacity C_(p, q/(q-p+1)) of a point vanishes: p q/(q-p+1) <= M
    '''
    if not (q > p - 1 > 0 and p < M):
        raise InvalidExponents('need q > p-1 > 0 and p < M, got p=%s, '
                               'q=%s, M=%s' % (p, q, M))
    if p * q / (q - p + 1) <= M * (1 + _EPS):
        return REMOVABLE
    return NON_REMOVABLE
