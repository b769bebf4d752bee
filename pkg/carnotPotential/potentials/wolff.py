# coding=utf-8
'''
truncated Wolff potentials

W^R_(alpha,p) mu(x) = int_0^R [mu(B_t(x)) / t^(M - alpha p)]^(1/(p-1)) dt/t

mu(B_t(x)) is a step function of t with jumps at the sorted support
distances; between jumps the integrand is a power of t and every piece is
integrated in closed form. Density samples are only resolved down to the
cell scale t_min; below it the density is taken as locally constant
'''
from __future__ import division

import numpy as np
from numba import njit, prange

from carnotPotential.potentials.measures import GridDensity

# lower cutoff of the step integral, in units of the cell size volume^(1/M)
TAIL_CELLS = 2.0


@njit(cache=True)
def _powerIntegral(a, b, beta):
    '''int_a^b t^(-beta-1) dt, +inf where divergent'''
    if b <= a:
        return 0.0
    if beta == 0.0:
        if a == 0.0 or b == np.inf:
            return np.inf
        return np.log(b / a)
    if beta > 0.0:
        if a == 0.0:
            return np.inf
        hb = 0.0
        if b != np.inf:
            hb = b ** (-beta)
        return (a ** (-beta) - hb) / beta
    if b == np.inf:
        return np.inf
    return (b ** (-beta) - a ** (-beta)) / (-beta)


@njit(cache=True)
def _stepIntegral(d, m, lo, hi, beta, inv):
    '''
    int_lo^hi S(t)^inv t^(-beta-1) dt with S(t) = sum_(d_j < t) m_j,
    d ascending
    '''
    total = 0.0
    mass = 0.0
    prev = lo
    for j in range(d.shape[0]):
        dj = d[j]
        if dj >= hi:
            break
        if dj > prev:
            if mass > 0.0:
                total += mass ** inv * _powerIntegral(prev, dj, beta)
            prev = dj
        mass += m[j]
    if hi > prev and mass > 0.0:
        total += mass ** inv * _powerIntegral(prev, hi, beta)
    return total


@njit(cache=True)
def _tail(d, m, t_min, R, beta, inv, tail_coef):
    # locally constant density below the cell scale
    lo = t_min
    if R < lo:
        lo = R
    s = 0.0
    for j in range(d.shape[0]):
        if d[j] < lo:
            s += m[j]
        else:
            break
    if s > 0.0:
        return s ** inv * lo ** (-beta) * tail_coef, lo
    return 0.0, lo


@njit(cache=True)
def _wolffRow(d, m, R, beta, inv, t_min, tail_coef):
    if t_min > 0.0:
        tail, lo = _tail(d, m, t_min, R, beta, inv, tail_coef)
        return tail + _stepIntegral(d, m, lo, R, beta, inv)
    return _stepIntegral(d, m, 0.0, R, beta, inv)


@njit(cache=True)
def _wolffRowMidpoint(d, m, R, beta, inv, t_min, tail_coef, ratio):
    n = d.shape[0]
    cum = np.cumsum(m)
    total = 0.0
    top = R
    if R == np.inf:
        # beyond the farthest support point the mass is constant
        top = d[n - 1] * (1 + 1e-12) + 1e-300
        if cum[n - 1] > 0.0:
            total += cum[n - 1] ** inv * _powerIntegral(top, np.inf, beta)
    tail, lo = _tail(d, m, t_min, top, beta, inv, tail_coef)
    total += tail
    b = top
    while b > lo:
        a = b * ratio
        if a < lo:
            a = lo
        mid = np.sqrt(a * b)
        j = np.searchsorted(d, mid)
        if j > 0 and cum[j - 1] > 0.0:
            total += cum[j - 1] ** inv * _powerIntegral(a, b, beta)
        b = a
    return total


@njit(parallel=True, cache=True)
def _applyRows(dist, order, masses, R, beta, inv, t_min, tail_coef):
    n = dist.shape[0]
    out = np.empty(n)
    for i in prange(n):
        m = masses[order[i]]
        out[i] = _wolffRow(dist[i], m, R, beta, inv, t_min[i], tail_coef)
    return out


@njit(parallel=True, cache=True)
def _applyRowsMidpoint(dist, order, masses, R, beta, inv, t_min, tail_coef,
                       ratio):
    n = dist.shape[0]
    out = np.empty(n)
    for i in prange(n):
        m = masses[order[i]]
        if t_min[i] > 0.0:
            out[i] = _wolffRowMidpoint(dist[i], m, R, beta, inv, t_min[i],
                                       tail_coef, ratio)
        else:
            out[i] = _wolffRow(dist[i], m, R, beta, inv, 0.0, tail_coef)
    return out


class WolffOperator(object):
    '''
    W^R_(alpha,p) from a fixed support to fixed evaluation points

    sorted distance rows are computed once; apply() takes new support
    masses, so iterations over changing measures on one carrier only pay
    for the integration

    :param support_volumes: 0 for point masses, cell volume for density
        samples (sets the per point cell scale t_min)
    '''

    def __init__(self, group, eval_points, support_points,
                 support_volumes=None):
        self.group = group
        X = group.points(np.atleast_2d(eval_points))
        Y = np.asarray(support_points, dtype=float).reshape(-1, group.N)
        self.n_eval = len(X)
        self.n_support = len(Y)
        if not len(Y):
            self.dist = self.order = None
            self.t_min = np.zeros(len(X))
            return
        self.dist, self.order = group.sortedDistanceRows(X, Y)
        self.t_min = np.zeros(len(X))
        if support_volumes is not None:
            vols = np.asarray(support_volumes, dtype=float)
            if (vols > 0).any():
                vs = vols[self.order]
                first = np.argmax(vs > 0, axis=1)
                cell = vs[np.arange(len(X)), first]
                self.t_min = TAIL_CELLS * cell ** (1.0 / group.M)

    @staticmethod
    def forMeasure(mu, eval_points):
        pts, _, vols = mu.support()
        return WolffOperator(mu.group, eval_points, pts, vols)

    def apply(self, masses, params):
        if self.dist is None:
            return np.zeros(self.n_eval)
        masses = np.ascontiguousarray(masses, dtype=float)
        assert len(masses) == self.n_support, 'one mass per support point'
        beta = params.beta(self.group.M)
        if params.rule == 'midpoint':
            return _applyRowsMidpoint(self.dist, self.order, masses,
                                      params.R, beta, params.inv,
                                      self.t_min, params.tailCoef,
                                      params.quad_ratio)
        return _applyRows(self.dist, self.order, masses, params.R, beta,
                          params.inv, self.t_min, params.tailCoef)


def wolffField(mu, eval_points, params):
    '''
    W^R_(alpha,p) mu at every row of [eval_points]

    the value at each point depends only on that point: the result is
    identical to calling wolff() point by point
    '''
    op = WolffOperator.forMeasure(mu, eval_points)
    return op.apply(mu.support()[1], params)


def wolff(mu, x, params):
    '''
    W^R_(alpha,p) mu(x); +inf where the defining integral diverges
    '''
    return wolffField(mu, np.atleast_2d(x), params)[0]


def wolffWindow(mu, x, params, lo):
    '''
    int_lo^R [mu(B_t(x)) / t^(M - alpha p)]^(1/(p-1)) dt/t, lo > 0,
    support points taken as point masses
    '''
    g = mu.group
    pts, masses, _ = mu.support()
    if not len(pts):
        return 0.0
    d = g.distances(x, pts)
    o = np.argsort(d, kind='mergesort')
    return _stepIntegral(d[o], np.ascontiguousarray(masses[o]), float(lo),
                         params.R, params.beta(g.M), params.inv)


if __name__ == '__main__':
    from carnotPotential.group.builtin import builtin
    from carnotPotential.potentials.measures import AtomicMeasure
    from carnotPotential.potentials.WolffParams import WolffParams
    from carnotPotential.spatial.latticeCloud import latticeCloud

    g = builtin('H1')
    atom = AtomicMeasure(g, [[1, 0, 0]], [1])
    print('exact atom path: %.12f (0.375)' % wolff(atom, g.identity(),
                                                   WolffParams(1, 2, 2)))
    cloud = latticeCloud(g, radius=1, spacing=0.1)
    mu = GridDensity(cloud, 1.0)
    for rule, ratio in (('exact', 0.75), ('midpoint', 0.75),
                        ('midpoint', 0.95)):
        print('%s %.2f: %.6f' % (rule, ratio, wolff(
            mu, g.identity(), WolffParams(1, 2, 2, ratio, rule))))
