# coding=utf-8
'''
structural constants of the potential iteration
u = A W^(2R)_(1,p)(u^q dx + omega)
'''
from __future__ import division

from carnotPotential.exceptions import InvalidExponents


def checkExponents(p, q):
    if not q > p - 1 > 0:
        raise InvalidExponents('need q > p-1 > 0, got p=%s, q=%s' % (p, q))


def structuralFactor(A, p):
    '''A max(1, 2^(p'-2)): constant of the quasi additivity of W'''
    pd = p / (p - 1)
    return A * max(1.0, 2.0 ** (pd - 2))


def condC0(A, p, q):
    '''
    sufficient solvability bound on the ratio W(W(omega)^q) / W(omega):

    C0 = ((q-p+1) / (q A max(1, 2^(p'-2))))^(q(p'-1)) (p-1)/(q-p+1)
    '''
    checkExponents(p, q)
    K = structuralFactor(A, p)
    return ((q - p + 1) / (q * K)) ** (q / (p - 1)) * (p - 1) / (q - p + 1)


def kappaBound(A, p, q):
    '''solutions from the iteration satisfy u <= kappa W(omega)'''
    checkExponents(p, q)
    return structuralFactor(A, p) * q / (q - p + 1)


def liouvilleExponent(M, p):
    '''q* = M(p-1)/(M-p): no positive global supersolutions for q <= q*'''
    if not 1 < p < M:
        raise InvalidExponents('need 1 < p < M, got p=%s, M=%s' % (p, M))
    return M * (p - 1) / (M - p)
