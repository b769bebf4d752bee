# coding=utf-8
from __future__ import division

from carnotPotential.exceptions import InvalidParams


class CapacityParams(object):
    '''
    Riesz capacity C_(alpha,s): alpha > 0, s > 1, s' = s/(s-1)
    '''

    def __init__(self, alpha, s):
        if not alpha > 0:
            raise InvalidParams('alpha must be > 0, got %s' % alpha)
        if not s > 1:
            raise InvalidParams('s must be > 1, got %s' % s)
        self.alpha = float(alpha)
        self.s = float(s)

    @property
    def sDual(self):
        return self.s / (self.s - 1)

    @staticmethod
    def fromExponents(p, q):
        '''alpha = p, s = q/(q-p+1): the capacity governing removability'''
        return CapacityParams(p, q / (q - p + 1))

    def __repr__(self):
        return 'CapacityParams(alpha=%g, s=%g)' % (self.alpha, self.s)
