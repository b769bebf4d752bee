# coding=utf-8
from __future__ import division

from fractions import Fraction
from itertools import product

import numpy as np

from carnotPotential.exceptions import (StratificationError, JacobiError,
                                        UnsupportedStep)
from carnotPotential.group.GroupSpec import GroupSpec

# deepest commutator the compiled BCH series carries
MAX_STEP = 4


def makeGroup(spec, name=None):
    '''
    validate a StrataSpec and return the GroupSpec

    checks: grading [V_i, V_j] in V_(i+j), antisymmetry, Jacobi identity on
    all basis triples (exact, rational) and generation [V_1, V_i] = V_(i+1)
    '''
    dims = spec.layer_dims
    if not dims or any(d <= 0 for d in dims):
        raise StratificationError(
            'layer_dims must be nonempty and positive, got %s' % (dims,))
    r = len(dims)
    if r > MAX_STEP:
        raise UnsupportedStep('step %i > %i is not supported' % (r, MAX_STEP))

    offsets = np.concatenate(([0], np.cumsum(dims)))
    n = int(offsets[-1])

    def flat(i, a):
        if not (1 <= i <= r and 1 <= a <= dims[i - 1]):
            raise StratificationError('no basis vector X_%i%i' % (i, a))
        return int(offsets[i - 1]) + a - 1

    given = {}
    for (i, a, j, b), targets in spec.brackets.items():
        A, B = flat(i, a), flat(j, b)
        vec = {}
        for k, l, c in targets:
            if c == 0:
                continue
            if k != i + j:
                raise StratificationError(
                    '[X_%i%i, X_%i%i] has a component in layer %i' % (
                        i, a, j, b, k))
            K = flat(k, l)
            vec[K] = vec.get(K, Fraction(0)) + c
        vec = {K: c for K, c in vec.items() if c != 0}
        if A == B and vec:
            raise StratificationError('[X, X] must vanish')
        if (A, B) in given and given[(A, B)] != vec:
            raise StratificationError('conflicting entries for one bracket')
        given[(A, B)] = vec

    table = {}
    for (A, B), vec in given.items():
        neg = {K: -c for K, c in vec.items()}
        if (B, A) in given and given[(B, A)] != neg:
            raise StratificationError(
                'brackets %s and %s are not antisymmetric' % ((A, B), (B, A)))
        if vec:
            table[(A, B)] = vec
            table[(B, A)] = neg

    _checkJacobi(table, n)
    _checkGeneration(table, dims, offsets)

    C = np.zeros((n, n, n))
    for (A, B), vec in table.items():
        for K, c in vec.items():
            C[A, B, K] = float(c)
    return GroupSpec(spec, C, table, name=name)


def bracketExact(table, u, v):
    '''bracket of two sparse rational vectors {index: Fraction}'''
    out = {}
    for A, ua in u.items():
        for B, vb in v.items():
            vec = table.get((A, B))
            if vec is None:
                continue
            f = ua * vb
            for K, c in vec.items():
                out[K] = out.get(K, Fraction(0)) + c * f
    return {K: c for K, c in out.items() if c != 0}


def _checkJacobi(table, n):
    for A, B, C in product(range(n), repeat=3):
        eA, eB, eC = {A: Fraction(1)}, {B: Fraction(1)}, {C: Fraction(1)}
        total = {}
        for x, y, z in ((eA, eB, eC), (eB, eC, eA), (eC, eA, eB)):
            for K, c in bracketExact(table, x,
                                     bracketExact(table, y, z)).items():
                total[K] = total.get(K, Fraction(0)) + c
        if any(c != 0 for c in total.values()):
            raise JacobiError('Jacobi identity fails on basis triple %s'
                              % ((A, B, C),))


def _checkGeneration(table, dims, offsets):
    # [V_1, V_i] must span V_(i+1)
    for i in range(1, len(dims)):
        lo, hi = offsets[i], offsets[i + 1]
        rows = []
        for A in range(offsets[0], offsets[1]):
            for B in range(offsets[i - 1], offsets[i]):
                vec = table.get((A, B), {})
                row = np.zeros(hi - lo)
                for K, c in vec.items():
                    row[K - lo] = float(c)
                rows.append(row)
        rank = np.linalg.matrix_rank(np.array(rows)) if rows else 0
        if rank != dims[i]:
            raise StratificationError(
                '[V_1, V_%i] spans a %i-dim subspace of V_%i (dim %i)' % (
                    i, rank, i + 1, dims[i]))
