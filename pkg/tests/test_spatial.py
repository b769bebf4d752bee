# coding=utf-8
from __future__ import division

import numpy as np
import pytest

from carnotPotential.exceptions import (TooManyPoints, EmptyCloud,
                                        ScaleOutOfRange, InvalidParams)
from carnotPotential.group import builtin
from carnotPotential.spatial import (PointCloud, latticeCloud, shellCloud,
                                     ballQuery, buildFamily, CubeRef,
                                     writeCloud, readCloud, writeFamily,
                                     readFamily)
from carnotPotential.spatial.DyadicFamily import overlapCount, maxOverlap

# relative change of the max overlap under a 2x refinement of the sample
OVERLAP_TOLERANCE = 0.5


def test_euclidean_lattice():
    g = builtin('E1')
    cloud = latticeCloud(g, radius=1, spacing=0.5)
    np.testing.assert_allclose(np.sort(cloud.points[:, 0]), [-0.5, 0, 0.5])
    assert cloud.cell_volume == 0.5


def test_cell_volume_scaling(H1):
    a = latticeCloud(H1, radius=1, spacing=0.2)
    b = latticeCloud(H1, radius=1, spacing=0.1)
    assert a.cell_volume / b.cell_volume == pytest.approx(8)
    assert (H1.hnorm(b.points) < 1).all()


def test_lattice_volume_law(H1):
    radii = np.array([0.5, 1.0, 2.0])
    vols = [latticeCloud(H1, radius=r, spacing=0.04 * r).totalVolume
            for r in radii]
    slope = np.polyfit(np.log(radii), np.log(vols), 1)[0]
    assert abs(slope - 4) < 0.08


def test_too_many_points(H1):
    with pytest.raises(TooManyPoints):
        latticeCloud(H1, radius=1, spacing=1e-3)


def test_translated_lattice(H1):
    c = np.array([0.5, -0.2, 0.1])
    cloud = latticeCloud(H1, center=c, radius=0.5, spacing=0.1)
    assert (H1.distances(c, cloud.points) < 0.5 * (1 + 1e-9)).all()


def test_shell_cloud(H1):
    base = latticeCloud(H1, radius=1, spacing=0.25)
    cloud = shellCloud(H1, 8, 0.25)
    assert cloud.radius == 8
    assert cloud.n > base.n
    # each annulus 2^(j-1) <= |x| < 2^j carries the dilated unit annulus
    ring = base.volumes[H1.hnorm(base.points) >= 0.5].sum()
    norms = H1.hnorm(cloud.points)
    for j in (1, 2, 3):
        sel = (norms >= 2 ** (j - 1)) & (norms < 2 ** j)
        assert cloud.volumes[sel].sum() == pytest.approx(ring * 2 ** (4 * j))


def test_cloud_dilation(coarseCloud):
    d = coarseCloud.dilate(2)
    assert d.totalVolume == pytest.approx(16 * coarseCloud.totalVolume)
    assert d.radius == 2 * coarseCloud.radius


def test_point_outside_ball(H1):
    with pytest.raises(InvalidParams):
        PointCloud(H1, [[2, 0, 0]], cell_volume=1, radius=1)


def test_ball_query_trivial(coarseCloud, H1):
    assert len(ballQuery(coarseCloud, H1.identity(), 0)) == 0
    i = 17
    x = coarseCloud.points[i]
    d = H1.distances(x, coarseCloud.points)
    d[i] = np.inf
    np.testing.assert_array_equal(ballQuery(coarseCloud, x, 0.5 * d.min()),
                                  [i])


def test_ball_query_brute_force(coarseCloud, H1):
    rng = np.random.default_rng(3)
    for _ in range(50):
        x = rng.uniform(-1, 1, 3)
        t = rng.uniform(0.01, 1.5)
        brute = np.flatnonzero(H1.distances(x, coarseCloud.points) < t)
        np.testing.assert_array_equal(ballQuery(coarseCloud, x, t), brute)


def test_ball_query_engel():
    g = builtin('engel')
    cloud = latticeCloud(g, radius=1, spacing=0.2)
    rng = np.random.default_rng(4)
    for _ in range(20):
        x = rng.uniform(-0.5, 0.5, 4)
        t = rng.uniform(0.05, 1)
        brute = np.flatnonzero(g.distances(x, cloud.points) < t)
        np.testing.assert_array_equal(ballQuery(cloud, x, t), brute)


def test_single_point_family(H1):
    cloud = PointCloud(H1, [[0, 0, 0]], cell_volume=1.0)
    fam = buildFamily(cloud, -2, 0)
    for k in fam.levels:
        assert fam.nCubes(k) == 1
        assert overlapCount(fam, CubeRef(k, 0)) == 1


def test_family_errors(H1, coarseCloud):
    with pytest.raises(EmptyCloud):
        buildFamily(PointCloud(H1, np.empty((0, 3)), cell_volume=1), 0, 1)
    with pytest.raises(ScaleOutOfRange):
        buildFamily(coarseCloud, 1, 0)
    with pytest.raises(ScaleOutOfRange):
        buildFamily(coarseCloud, 0, 1, lam=1)
    with pytest.raises(ScaleOutOfRange):
        buildFamily(coarseCloud, 1, 2)


def test_euclidean_family():
    g = builtin('E1')
    cloud = latticeCloud(g, radius=1, spacing=0.05)
    fam = buildFamily(cloud, -3, -1, lam=2, separation=1.0)
    cert = fam.certificate
    assert cert['partition'] and cert['nesting']
    for k in fam.levels:
        # leaf cubes are disjoint intervals of lattice points
        for cube in fam.cubes(k):
            x = np.sort(cloud.points[fam.members(cube), 0])
            assert np.allclose(np.diff(x), 0.05)
    assert max(maxOverlap(fam).values()) <= 20


def test_heisenberg_family(unitCloud):
    fam = buildFamily(unitCloud, -2, 0)
    cert = fam.certificate
    assert cert['partition']
    assert cert['nesting']
    assert cert['sandwich_outer_violations'] == 0
    assert cert['sandwich_inner_violations'] == 0
    # every point lies in exactly one cube per level
    for k in fam.levels:
        assert fam.cubeMasses(k, np.ones(unitCloud.n)).sum() == unitCloud.n
    cube = fam.cubes(-1)[0]
    for child in fam.children(cube):
        assert fam.parent(child) == cube
    assert fam.containing(5)[0].level == -2


def test_overlap_stable_under_refinement(H1):
    a = buildFamily(latticeCloud(H1, radius=1, spacing=0.2), -1, 0)
    b = buildFamily(latticeCloud(H1, radius=1, spacing=0.1), -1, 0)
    oa, ob = maxOverlap(a), maxOverlap(b)
    # one cube at the top: exact under refinement
    assert oa[0] == ob[0] == 1
    # Q** of a level -1 cube covers the unit ball: the overlap is the net
    # size, which moves with the sample by at most OVERLAP_TOLERANCE
    assert oa[-1] == a.nCubes(-1) and ob[-1] == b.nCubes(-1)
    assert abs(ob[-1] - oa[-1]) <= OVERLAP_TOLERANCE * oa[-1]


def test_cloud_and_family_files(tmp_path, coarseCloud):
    cpath = str(tmp_path / 'c.txt')
    writeCloud(coarseCloud, cpath)
    cloud = readCloud(coarseCloud.group, cpath)
    np.testing.assert_array_equal(cloud.points, coarseCloud.points)
    assert cloud.cell_volume == coarseCloud.cell_volume

    fam = buildFamily(cloud, -1, 0)
    fpath = str(tmp_path / 'f.txt')
    writeFamily(fam, fpath)
    back = readFamily(cloud, fpath)
    for k in fam.levels:
        np.testing.assert_array_equal(back.labels[k], fam.labels[k])
        np.testing.assert_array_equal(back.centers[k], fam.centers[k])
