# coding=utf-8
from __future__ import division

import numpy as np

from carnotPotential.exceptions import InvalidParams


class WolffParams(object):
    '''
    parameters of W^R_(alpha,p)

    :param R: truncation radius, np.inf for the global potential
    :param quad_ratio: panel ratio of the 'midpoint' rule for densities
    :param rule: 'exact' (empirical step function integrated exactly down to
        the cell scale) or 'midpoint' (geometric panels, mass sampled at the
        geometric panel midpoint)
    '''

    def __init__(self, alpha, p, R=np.inf, quad_ratio=0.75, rule='exact'):
        if not alpha > 0:
            raise InvalidParams('alpha must be > 0, got %s' % alpha)
        if not p > 1:
            raise InvalidParams('p must be > 1, got %s' % p)
        if not R > 0:
            raise InvalidParams('R must be > 0, got %s' % R)
        if not 0 < quad_ratio < 1:
            raise InvalidParams('quad_ratio must lie in (0, 1)')
        if rule not in ('exact', 'midpoint'):
            raise InvalidParams("rule must be 'exact' or 'midpoint'")
        self.alpha = float(alpha)
        self.p = float(p)
        self.R = float(R)
        self.quad_ratio = float(quad_ratio)
        self.rule = rule

    @property
    def inv(self):
        '''1/(p-1)'''
        return 1.0 / (self.p - 1)

    def beta(self, M):
        '''decay exponent (M - alpha p)/(p-1) of the kernel t^-beta'''
        return (M - self.alpha * self.p) * self.inv

    @property
    def tailCoef(self):
        '''int_0^T (c t^M / t^(M-alpha p))^(1/(p-1)) dt/t = coef (c T^alpha p)^(1/(p-1))'''
        return (self.p - 1) / (self.alpha * self.p)

    def withR(self, R):
        return WolffParams(self.alpha, self.p, R, self.quad_ratio, self.rule)

    def __repr__(self):
        return 'WolffParams(alpha=%g, p=%g, R=%g)' % (self.alpha, self.p,
                                                      self.R)
