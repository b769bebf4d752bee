# coding=utf-8
from __future__ import division

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from carnotPotential.exceptions import InvalidAlpha, InvalidParams
from carnotPotential.potentials import (AtomicMeasure, GridDensity,
                                        MeasureSum, WolffParams, wolff,
                                        wolffField, riesz, rieszField,
                                        rieszLowerConstant, restrictToBall,
                                        ballMass, carrierMasses, readMeasure,
                                        writeMeasure)
from carnotPotential.potentials.wolff import wolffWindow
from carnotPotential.spatial import latticeCloud


def _randomAtoms(g, n, seed, scale=1.0):
    rng = np.random.default_rng(seed)
    pts = rng.uniform(-scale, scale, (n, g.N))
    return AtomicMeasure(g, pts, rng.uniform(0.1, 1.0, n))


def test_atom_closed_form(H1):
    atom = AtomicMeasure(H1, [[1, 0, 0]], [1])
    # (p-1)/(M-p) (d^-(M-p) - R^-(M-p)) = 1/2 (1 - 1/4)
    assert abs(wolff(atom, H1.identity(), WolffParams(1, 2, 2)) -
               0.375) < 1e-12
    assert abs(wolff(atom, H1.identity(), WolffParams(1, 2)) - 0.5) < 1e-12


def test_window(H1):
    atom = AtomicMeasure(H1, [[1, 0, 0]], [1])
    x = H1.identity()
    P = WolffParams(1, 2, 2)
    assert wolffWindow(atom, x, P, 1e-3) == pytest.approx(0.375, abs=1e-12)
    # mass only enters beyond t = d = 1
    assert wolffWindow(atom, x, P, 1.5) == pytest.approx(
        0.5 * (1.5 ** -2 - 0.25), abs=1e-12)


def test_zero_measure(H1):
    zero = AtomicMeasure(H1, [[1, 0, 0]], [0])
    empty = AtomicMeasure(H1, np.empty((0, 3)), [])
    for mu in (zero, empty):
        assert wolff(mu, [0.3, 0.1, 0], WolffParams(1, 2, 5)) == 0
        assert wolff(mu, [0.3, 0.1, 0], WolffParams(1, 3)) == 0


def test_global_divergence(H1):
    atom = AtomicMeasure(H1, [[1, 0, 0]], [1])
    # alpha p >= M: the tail int^inf diverges for every nonzero measure
    for P in (WolffParams(2, 2), WolffParams(1.5, 3)):
        assert np.isinf(wolff(atom, H1.identity(), P))
        assert np.isinf(wolffWindow(atom, H1.identity(), P, 0.1))
        assert wolff(atom.scaled(0), H1.identity(), P) == 0
    assert np.isfinite(wolff(atom, H1.identity(), WolffParams(2, 2, 5)))
    assert np.isinf(wolff(atom, [1, 0, 0], WolffParams(1, 2, 1)))


def test_negative_masses(H1):
    with pytest.raises(InvalidParams):
        AtomicMeasure(H1, [[1, 0, 0]], [-1])
    with pytest.raises(InvalidParams):
        WolffParams(1, 1)


def test_field_matches_pointwise(H1):
    mu = _randomAtoms(H1, 100, 0)
    X = np.random.default_rng(1).uniform(-1, 1, (1000, 3))
    for params in (WolffParams(1, 2, 1.5), WolffParams(0.5, 3),
                   WolffParams(1, 1.5, 0.7)):
        field = wolffField(mu, X, params)
        ref = [wolff(mu, x, params) for x in X[:50]]
        np.testing.assert_array_equal(field[:50], ref)
        perm = np.random.default_rng(2).permutation(len(X))
        np.testing.assert_array_equal(wolffField(mu, X[perm], params),
                                      field[perm])


@settings(max_examples=20, deadline=None)
@given(st.floats(0.25, 4), st.floats(1.2, 3.5))
def test_dilation_covariance(t, p):
    from carnotPotential.group import builtin
    g = builtin('H1')
    mu = _randomAtoms(g, 20, 5)
    mu_t = AtomicMeasure(g, g.dilate(t, mu.atoms), mu.masses)
    x = np.array([0.2, -0.4, 0.3])
    M, alpha, R = g.M, 1.0, 1.7
    lhs = wolff(mu_t, g.dilate(t, x), WolffParams(alpha, p, t * R))
    rhs = t ** (-(M - alpha * p) / (p - 1)) * wolff(mu, x,
                                                    WolffParams(alpha, p, R))
    assert lhs == pytest.approx(rhs, rel=1e-9)


def test_linear_at_p2(H1):
    a = _randomAtoms(H1, 10, 7)
    b = _randomAtoms(H1, 10, 8)
    X = np.random.default_rng(9).uniform(-1, 1, (50, 3))
    P = WolffParams(1, 2, 2)
    np.testing.assert_allclose(wolffField(MeasureSum(a, b), X, P),
                               wolffField(a, X, P) + wolffField(b, X, P),
                               rtol=1e-12)


def test_density_rules(unitCloud, H1):
    mu = GridDensity(unitCloud, 1.0)
    x = H1.identity()
    exact = wolff(mu, x, WolffParams(1, 2, 2))
    mid = wolff(mu, x, WolffParams(1, 2, 2, quad_ratio=0.95,
                                   rule='midpoint'))
    assert np.isfinite(exact) and exact > 0
    assert abs(mid - exact) / exact < 0.1


def _oracle(m, d, alpha, p, R, M):
    beta = (M - alpha * p) / (p - 1)
    return m ** (1 / (p - 1)) * (d ** -beta - R ** -beta) / beta


def test_atom_oracle_through_density_path(H1):
    # the atom becomes the mass of one fine lattice cell, all other cells
    # carry zero density
    cloud = latticeCloud(H1, radius=0.5, spacing=0.05)
    rng = np.random.default_rng(21)
    n = 0
    while n < 100:
        j = rng.integers(cloud.n)
        x = rng.uniform(-1.5, 1.5, 3)
        d = H1.distances(x, cloud.points[j])[0]
        if not 0.3 <= d <= 1.0:
            continue
        n += 1
        m = rng.uniform(0.5, 2)
        alpha = rng.uniform(0.5, 1.2)
        p = (1.5, 2.0, 3.0)[n % 3]
        R = d * rng.uniform(2, 4)
        density = np.zeros(cloud.n)
        density[j] = m / cloud.volumes[j]
        mu = GridDensity(cloud, density)
        expected = _oracle(m, d, alpha, p, R, H1.M)
        atom = AtomicMeasure(H1, [cloud.points[j]], [m])
        assert wolff(atom, x, WolffParams(alpha, p, R)) == pytest.approx(
            expected, rel=1e-9)
        assert wolff(mu, x, WolffParams(alpha, p, R)) == pytest.approx(
            expected, rel=1e-9)
        mid = wolff(mu, x, WolffParams(alpha, p, R, quad_ratio=0.9998,
                                       rule='midpoint'))
        assert abs(mid - expected) / expected <= 0.005


def test_midpoint_ratio_refinement(unitCloud, H1):
    mu = GridDensity(unitCloud, 1 + unitCloud.points[:, 0] ** 2)
    X = np.array([[0, 0, 0], [0.3, -0.2, 0.1], [1.2, 0, 0]])
    exact = wolffField(mu, X, WolffParams(1, 2, 2))
    prev = None
    for ratio in (0.99, 0.99 ** 0.5, 0.99 ** 0.25):
        mid = wolffField(mu, X, WolffParams(1, 2, 2, quad_ratio=ratio,
                                            rule='midpoint'))
        if prev is not None:
            assert (np.abs(mid - prev) / mid < 0.005).all()
        prev = mid
    assert (np.abs(prev - exact) / exact < 0.005).all()


def test_riesz_wolff_comparable_at_p2(H1):
    # W^inf_(alpha,2) of an atom at distance d is d^-(M-2alpha)/(M-2alpha)
    rng = np.random.default_rng(31)
    ratios = []
    for seed in range(50):
        mu = _randomAtoms(H1, 15, 100 + seed)
        X = rng.uniform(-2, 2, (20, 3))
        ratios.append(wolffField(mu, X, WolffParams(1, 2)) /
                      rieszField(mu, X, 2))
    ratios = np.concatenate(ratios)
    lo, hi = ratios[:500].min(), ratios[:500].max()
    assert ((ratios[500:] >= lo / 2) & (ratios[500:] <= hi * 2)).all()
    np.testing.assert_allclose(ratios, 1 / (H1.M - 2), rtol=1e-9)


def test_monotone_in_radius_and_measure(H1, unitCloud):
    X = np.random.default_rng(41).uniform(-1, 1, (40, 3))
    a = _randomAtoms(H1, 20, 42)
    b = _randomAtoms(H1, 10, 43)
    dens = GridDensity(unitCloud, 1 + unitCloud.points[:, 1] ** 2)
    more = GridDensity(unitCloud, dens.density + unitCloud.points[:, 0] ** 2)
    for mu, nu in ((a, MeasureSum(a, b)), (dens, more)):
        prev = np.zeros(len(X))
        # R above the cell scale of the density
        for R in (0.5, 1.0, 2.0, np.inf):
            P = WolffParams(1, 2, R)
            w = wolffField(mu, X, P)
            assert (w >= prev * (1 - 1e-12)).all()
            assert (wolffField(nu, X, P) >= w * (1 - 1e-12)).all()
            prev = w


def test_density_sums_merge(unitCloud):
    a = GridDensity(unitCloud, 1.0)
    b = GridDensity(unitCloud, 2.0)
    s = MeasureSum(a, b)
    assert len(s.parts) == 1
    assert s.mass() == pytest.approx(3 * unitCloud.totalVolume)


def test_riesz(H1):
    atom = AtomicMeasure(H1, [[2, 0, 0]], [1])
    assert riesz(atom, H1.identity(), 2) == pytest.approx(0.25)
    assert np.isinf(riesz(atom, [2, 0, 0], 2))
    with pytest.raises(InvalidAlpha):
        riesz(atom, H1.identity(), 4)


def test_riesz_density_skips_own_cell(coarseCloud):
    mu = GridDensity(coarseCloud, 1.0)
    v = rieszField(mu, coarseCloud.points[:10], 2)
    assert np.isfinite(v).all() and (v > 0).all()


def test_riesz_lower_constant(H1):
    rng = np.random.default_rng(11)
    for seed in range(3):
        mu = _randomAtoms(H1, 30, seed, scale=0.4)
        mu = restrictToBall(mu, H1.identity(), 1.0)
        X = rng.uniform(-3, 3, (200, 3))
        c = rieszLowerConstant(mu, X, 2, 1.0)
        assert 0 < c < np.inf
        lhs = rieszField(mu, X, 2)
        rhs = mu.mass() / (H1.hnorm(X) + 1.0) ** 2
        assert (lhs >= c * rhs * (1 - 1e-12)).all()


def test_ball_mass_atoms(H1):
    atom = AtomicMeasure(H1, [[0.5, 0, 0]], [1])
    assert ballMass(atom, H1.identity(), 0.5) == 0
    assert ballMass(atom, H1.identity(), 0.50001) == 1
    two = AtomicMeasure(H1, [[0.1, 0, 0], [0, 0.2, 0]], [2, 3])
    assert ballMass(two, H1.identity(), 1) == 5
    assert ballMass(two, H1.identity(), 0) == 0


def test_ball_mass_density(H1):
    cloud = latticeCloud(H1, radius=1, spacing=0.05)
    mu = GridDensity(cloud, 1.0)
    full = ballMass(mu, H1.identity(), 1.0)
    half = ballMass(mu, H1.identity(), 0.5)
    assert full == pytest.approx(mu.mass())
    assert full / half == pytest.approx(16, rel=0.15)


def test_restrict(H1, coarseCloud):
    mu = _randomAtoms(H1, 40, 3)
    np.testing.assert_array_equal(
        restrictToBall(mu, H1.identity(), 100).masses, mu.masses)
    assert restrictToBall(mu, [5, 5, 5], 1e-9).isZero()
    with pytest.raises(InvalidParams):
        restrictToBall(mu, H1.identity(), 0)

    dens = GridDensity(coarseCloud, np.linspace(0, 1, coarseCloud.n))
    x, r = np.array([0.2, 0.1, 0.0]), 0.6
    inside = restrictToBall(dens, x, r).mass()
    d = H1.distances(x, coarseCloud.points)
    outside = dens.masses[d >= r].sum()
    assert inside + outside == pytest.approx(dens.mass())


def test_carrier_masses(H1, coarseCloud):
    mu = _randomAtoms(H1, 25, 4, scale=0.5)
    m = carrierMasses(mu, coarseCloud)
    assert m.sum() == pytest.approx(mu.mass())
    dens = GridDensity(coarseCloud, 2.0)
    np.testing.assert_array_equal(carrierMasses(dens, coarseCloud),
                                  dens.masses)


def test_measure_files(tmp_path, H1, coarseCloud):
    mu = _randomAtoms(H1, 5, 6)
    path = str(tmp_path / 'atoms.txt')
    writeMeasure(mu, path)
    back = readMeasure(H1, path)
    np.testing.assert_array_equal(back.atoms, mu.atoms)
    np.testing.assert_array_equal(back.masses, mu.masses)

    dens = GridDensity(coarseCloud, np.linspace(0, 1, coarseCloud.n))
    path = str(tmp_path / 'dens.txt')
    writeMeasure(dens, path, cloud_path=str(tmp_path / 'cloud.txt'))
    back = readMeasure(H1, path)
    np.testing.assert_array_equal(back.density, dens.density)
    np.testing.assert_array_equal(back.cloud.points, coarseCloud.points)
