# coding=utf-8
from __future__ import division

import numpy as np
import pytest

from carnotPotential.exceptions import (DegenerateParams, InvalidExponents,
                                        InvalidParams, NoConvergence)
from carnotPotential.group import builtin
from carnotPotential.potentials import AtomicMeasure
from carnotPotential.spatial import shellCloud
from carnotPotential.capacity import (CapacityParams, CompactSet,
                                      degeneracyVerdict, removabilityVerdict,
                                      removabilityThreshold,
                                      KernelQuadrature, dualObjective,
                                      capacityLower, capacityUpper,
                                      degeneracyDecay,
                                      extremalInequalityCheck)
from carnotPotential.capacity.verdicts import (IDENTICALLY_ZERO,
                                               NONDEGENERATE, REMOVABLE,
                                               NON_REMOVABLE)


@pytest.fixture(scope='module')
def wideCloud(H1):
    return shellCloud(H1, radius=8, spacing=0.1)


@pytest.fixture(scope='module')
def nearCloud(H1):
    return shellCloud(H1, radius=4, spacing=0.1)


def test_degeneracy_verdicts():
    assert degeneracyVerdict(CapacityParams(2, 2), 4) == IDENTICALLY_ZERO
    assert degeneracyVerdict(CapacityParams(2, 1.5), 4) == NONDEGENERATE
    assert degeneracyVerdict(CapacityParams(1, 5), 5) == IDENTICALLY_ZERO
    with pytest.raises(InvalidParams):
        CapacityParams(0, 2)
    with pytest.raises(InvalidParams):
        CapacityParams(1, 1)


def test_removability_verdicts():
    assert removabilityVerdict(2, 3, 4) == REMOVABLE
    assert removabilityVerdict(2, 1.5, 4) == NON_REMOVABLE
    # boundary p q/(q-p+1) = M
    assert removabilityVerdict(2, 2, 4) == REMOVABLE
    assert removabilityThreshold(2, 4) == 2
    with pytest.raises(InvalidExponents):
        removabilityVerdict(2, 0.5, 4)
    with pytest.raises(InvalidExponents):
        removabilityVerdict(4, 5, 4)


def test_from_exponents():
    P = CapacityParams.fromExponents(2, 3)
    assert (P.alpha, P.s) == (2, 1.5)
    assert P.sDual == pytest.approx(3)


def test_compact_set(H1):
    E = CompactSet(H1, [[0, 0, 0]])
    assert E.radius == 1 and E.n == 1
    with pytest.raises(InvalidParams):
        CompactSet(H1, np.empty((0, 3)))
    with pytest.raises(InvalidParams):
        CompactSet(H1, [[1, 0, 0]], center=[0, 0, 0], radius=0.5)
    F = E.union(CompactSet(H1, [[0.2, 0, 0]]))
    assert F.n == 2 and F.radius == 1


def test_singleton_direct_sum(H1, wideCloud):
    params = CapacityParams(1, 1.5)
    E = CompactSet(H1, [[0, 0, 0]])
    res = capacityLower(E, params, wideCloud)
    assert res.converged and not res.warnings

    sd, M = params.sDual, H1.M
    d = H1.hnorm(wideCloud.points)
    keep = d > 0
    gamma = (M - params.alpha) * sd
    J = (wideCloud.volumes[keep] * d[keep] ** -((M - params.alpha) * sd)).sum()
    J += H1.unitBallVolume() * M * 8.0 ** (M - gamma) / (gamma - M)
    assert res.value == pytest.approx(J ** -(params.s - 1), rel=1e-10)
    assert res.witness.mass() == pytest.approx(res.value)


def test_dilation_scaling(H1, nearCloud):
    params = CapacityParams(1, 1.5)
    for pts in ([[0, 0, 0]], [[0.3, 0, 0], [0, 0.2, 0.1]]):
        E = CompactSet(H1, pts, center=H1.identity(), radius=0.4)
        a = capacityLower(E, params, nearCloud, tol=1e-10)
        b = capacityLower(E.dilate(2), params, nearCloud.dilate(2),
                          tol=1e-10)
        assert b.value / a.value == pytest.approx(
            2 ** (H1.M - params.alpha * params.s), rel=1e-6)


def test_separated_points_add_up(H1, nearCloud):
    params = CapacityParams(1, 1.5)
    e = H1.identity()
    single = [capacityLower(CompactSet(H1, [x], center=e, radius=0.3),
                            params, nearCloud).value
              for x in ([0.3, 0, 0], [-0.3, 0, 0])]
    pair = capacityLower(CompactSet(H1, [[0.3, 0, 0], [-0.3, 0, 0]],
                                    center=e, radius=0.3),
                         params, nearCloud).value
    assert pair <= sum(single) * (1 + 1e-9)
    assert pair == pytest.approx(sum(single), rel=0.1)


def test_monotone_under_inclusion(H1, nearCloud):
    params = CapacityParams(1, 1.5)
    e = H1.identity()
    small = CompactSet(H1, [[0.3, 0, 0]], center=e, radius=0.4)
    big = small.union(CompactSet(H1, [[0, 0.2, 0.1], [-0.2, 0, 0]]))
    a = capacityLower(small, params, nearCloud)
    b = capacityLower(big, params, nearCloud, warm_start=a)
    assert b.value >= a.value * (1 - 1e-12)
    assert all(np.diff(b.history) >= -1e-12 * b.history[-1])


def test_strict_cap(H1, nearCloud):
    E = CompactSet(H1, [[0.3, 0, 0], [-0.3, 0, 0], [0, 0.2, 0]],
                   center=H1.identity(), radius=0.4)
    with pytest.raises(NoConvergence) as err:
        capacityLower(E, CapacityParams(1, 1.5), nearCloud, max_iter=1,
                      strict=True)
    assert err.value.result.iterations == 1


def test_degenerate(H1, nearCloud):
    params = CapacityParams(2, 2)
    E = CompactSet(H1, [[0, 0, 0]], radius=0.1)
    with pytest.raises(DegenerateParams):
        capacityLower(E, params, nearCloud)
    decay = degeneracyDecay(E, params, nearCloud, factors=(1, 2, 4))
    assert (np.diff(decay) < 0).all()
    with pytest.raises(InvalidParams):
        degeneracyDecay(E, params, nearCloud, factors=(1, 8))


def test_quadrature(H1, nearCloud):
    params = CapacityParams(1, 1.5)
    atoms = [[0.3, 0, 0], [0, 0.2, 0.1], [-0.2, 0, 0]]
    quad = KernelQuadrature(atoms, params, nearCloud, H1.identity(), 2.0)
    w = np.array([0.2, 0.5, 0.3])
    J, grad = quad.evaluate(w)
    assert (w * grad).sum() == pytest.approx(J, rel=1e-12)
    # objective is invariant under scaling of the weights
    assert quad.objective(3 * w) == pytest.approx(quad.objective(w),
                                                  rel=1e-12)
    E = CompactSet(H1, atoms, center=H1.identity(), radius=0.4)
    assert dualObjective(E, w, params, nearCloud) == pytest.approx(
        KernelQuadrature(atoms, params, nearCloud, H1.identity(),
                         3.2).objective(w))

    shrunk = KernelQuadrature(atoms, params, nearCloud, H1.identity(), 10)
    assert shrunk.warnings and shrunk.domain_radius == 4
    with pytest.raises(InvalidParams):
        KernelQuadrature(atoms, params, nearCloud, H1.identity(), 10,
                         shrink=False)
    with pytest.raises(InvalidParams):
        KernelQuadrature(atoms, params, nearCloud, H1.identity(), 0.25)


def test_upper_heuristic(H1, nearCloud):
    params = CapacityParams(1, 1.5)
    E = CompactSet(H1, [[0, 0, 0]], radius=0.5)
    up = capacityUpper(E, params, nearCloud)
    assert 0 < up < np.inf


def test_extremal_equality(H1, wideCloud):
    p, q = 1.5, 3
    params = CapacityParams.fromExponents(p, q)
    E = CompactSet(H1, [[0, 0, 0]])
    res = capacityLower(E, params, wideCloud)
    check = extremalInequalityCheck(res.witness, p, q, wideCloud,
                                    center=res.center,
                                    domain_radius=res.domain_radius)
    assert check['ok']
    assert check['max'] == pytest.approx(1, rel=1e-9)

    doubled = AtomicMeasure(H1, res.witness.atoms, 2 * res.witness.masses)
    check2 = extremalInequalityCheck(doubled, p, q, wideCloud,
                                     center=res.center,
                                     domain_radius=res.domain_radius)
    assert check2['max'] / check['max'] == pytest.approx(
        2 ** (params.sDual - 1), rel=1e-9)
    assert not check2['ok']

    normalized = extremalInequalityCheck(doubled, p, q, wideCloud,
                                         normalize=True, center=res.center,
                                         domain_radius=res.domain_radius)
    assert normalized['max'] == pytest.approx(1, rel=1e-9)


def test_extremal_zero_measure(H1, nearCloud):
    zero = AtomicMeasure(H1, [[0, 0, 0]], [0])
    check = extremalInequalityCheck(zero, 2, 3, nearCloud)
    assert check['max'] == 0 and check['ok']


def test_other_groups():
    E3 = builtin('E3')
    cloud = shellCloud(E3, radius=8, spacing=0.1)
    params = CapacityParams(1, 1.2)
    res = capacityLower(CompactSet(E3, [[0, 0, 0]]), params, cloud)
    assert 0 < res.value < np.inf
