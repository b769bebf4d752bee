# coding=utf-8
from __future__ import division
from __future__ import print_function

import numpy as np

from carnotPotential.exceptions import EmptyCloud, ScaleOutOfRange
from carnotPotential.spatial.DyadicFamily import DyadicFamily, certify

DEFAULT_LAMBDA = 8
# nets at level k are separation*lambda^k separated;
# for lambda=8 values in (2.8, 7) give both sandwich inclusions
DEFAULT_SEPARATION = 5.0
MAX_LEVELS = 64


def buildFamily(cloud, m, k_top, lam=DEFAULT_LAMBDA,
                separation=DEFAULT_SEPARATION, volume='empirical',
                volume_constant=1.0, debug=False):
    '''
    dyadic cube family over [cloud] at levels m..k_top

    nets are greedy maximal separated sets built top-down (level k starts
    from the level k+1 net, then ascending point index); every level-k net
    point attaches to its nearest level-(k+1) net point (ties: lowest index);
    a cube is the set of sample points of all its descendants

    :param volume: 'empirical' (|Q| = sum of point volumes) or 'power'
        (|Q| = volume_constant * lambda^(kM))
    '''
    if cloud.n == 0:
        raise EmptyCloud('cannot decompose an empty cloud')
    if not lam > 1:
        raise ScaleOutOfRange('lambda must be > 1, got %s' % lam)
    if m > k_top:
        raise ScaleOutOfRange('base level %i above top level %i' % (m, k_top))
    if k_top - m + 1 > MAX_LEVELS:
        raise ScaleOutOfRange('%i levels requested, max is %i' % (
            k_top - m + 1, MAX_LEVELS))
    if cloud.n > 1 and lam ** m >= 2 * cloud.radius:
        raise ScaleOutOfRange('lambda^m = %g is not below the cloud diameter'
                              % lam ** m)
    assert volume in ('empirical', 'power'), 'unknown volume mode %s' % volume

    n = cloud.n
    pts = cloud.points
    index = cloud.index

    def sep(k):
        return separation * lam ** k

    # NETS, TOP-DOWN:
    centers = {}
    prev = np.empty(0, dtype=np.int64)
    for k in range(k_top, m - 1, -1):
        covered = np.zeros(n, dtype=bool)
        net = list(prev)
        for c in prev:
            covered[index.query(pts[c], sep(k))] = True
        for i in range(n):
            if not covered[i]:
                net.append(i)
                covered[index.query(pts[i], sep(k))] = True
        prev = np.array(sorted(net), dtype=np.int64)
        centers[k] = prev
        if debug:
            print('level %i: %i net points' % (k, len(prev)))

    parents = {}
    for k in range(m, k_top):
        parents[k] = _nearestNet(centers[k], centers[k + 1], n, index, pts,
                                 sep(k + 1))

    labels = {m: _nearestNet(np.arange(n), centers[m], n, index, pts, sep(m))}
    for k in range(m, k_top):
        labels[k + 1] = parents[k][labels[k]]

    fam = DyadicFamily(cloud, m, k_top, lam, separation, centers, labels,
                       parents, volume, volume_constant)
    fam.certificate = certify(fam)
    if debug:
        print('certificate: %s' % dict(fam.certificate))
    return fam


def _nearestNet(points, net, n, index, pts, cover):
    '''
    for every cloud point index in [points]: position in [net] of its
    nearest net point (ties: lowest index)
    '''
    pos = np.full(n, -1, dtype=np.int64)
    pos[net] = np.arange(len(net))
    out = np.empty(len(points), dtype=np.int64)
    for s, i in enumerate(points):
        if pos[i] >= 0:
            out[s] = pos[i]
            continue
        cand, d = index.query(pts[i], cover * (1 + 1e-9),
                              return_distances=True)
        keep = pos[cand] >= 0
        assert keep.any(), 'net does not cover point %i' % i
        # candidates ascend in index: argmin keeps the lowest of equal ones
        out[s] = pos[cand[keep][np.argmin(d[keep])]]
    return out
