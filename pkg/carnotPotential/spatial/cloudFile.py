# coding=utf-8
'''
line oriented text formats

cloud::

    cloud <N> <cell_volume | *> <radius> <center coordinates>
    <coordinates> [volume]          (one point per line, volume if '*')

family::

    family <m> <k_top> <lambda> <separation> <volume mode>
    cube <level> <index> <center point index> <parent index | -1> <count>
    labels <level> <label of point 0> <label of point 1> ...
'''
import numpy as np

from carnotPotential.exceptions import InvalidParams, ShapeMismatch
from carnotPotential.spatial.PointCloud import PointCloud
from carnotPotential.spatial.DyadicFamily import DyadicFamily, certify


def writeCloud(cloud, path):
    uniform = cloud.cell_volume is not None
    with open(path, 'w') as f:
        f.write('cloud %i %s %.17g %s\n' % (
            cloud.group.N, '%.17g' % cloud.cell_volume if uniform else '*',
            cloud.radius, ' '.join('%.17g' % v for v in cloud.center)))
        for p, v in zip(cloud.points, cloud.volumes):
            line = ' '.join('%.17g' % c for c in p)
            if not uniform:
                line += ' %.17g' % v
            f.write(line + '\n')


def readCloud(g, path):
    with open(path, 'r') as f:
        head = f.readline().split()
        if not head or head[0] != 'cloud':
            raise InvalidParams('%s is not a cloud file' % path)
        if int(head[1]) != g.N:
            raise ShapeMismatch('cloud has %s coordinates, group %i' % (
                head[1], g.N))
        rows = np.loadtxt(f, ndmin=2)
    center = np.array(head[4:], dtype=float)
    radius = float(head[3])
    if head[2] == '*':
        return PointCloud(g, rows[:, :g.N], volumes=rows[:, g.N],
                          center=center, radius=radius)
    return PointCloud(g, rows.reshape(-1, g.N), cell_volume=float(head[2]),
                      center=center, radius=radius)


def writeFamily(family, path):
    with open(path, 'w') as f:
        f.write('family %i %i %.17g %.17g %s\n' % (
            family.m, family.k_top, family.lam, family.separation,
            family.volume_mode))
        for k in family.levels:
            counts = np.bincount(family.labels[k],
                                 minlength=family.nCubes(k))
            for j, c in enumerate(family.centers[k]):
                parent = family.parents[k][j] if k < family.k_top else -1
                f.write('cube %i %i %i %i %i\n' % (k, j, c, parent,
                                                   counts[j]))
        for k in family.levels:
            f.write('labels %i %s\n' % (
                k, ' '.join(str(v) for v in family.labels[k])))


def readFamily(cloud, path):
    centers, parents, labels = {}, {}, {}
    with open(path, 'r') as f:
        head = f.readline().split()
        if not head or head[0] != 'family':
            raise InvalidParams('%s is not a family file' % path)
        m, k_top = int(head[1]), int(head[2])
        lam, sep, mode = float(head[3]), float(head[4]), head[5]
        for line in f:
            rec = line.split()
            if not rec:
                continue
            if rec[0] == 'cube':
                k = int(rec[1])
                centers.setdefault(k, []).append(int(rec[3]))
                parents.setdefault(k, []).append(int(rec[4]))
            elif rec[0] == 'labels':
                labels[int(rec[1])] = np.array(rec[2:], dtype=np.int64)
    centers = {k: np.array(v, dtype=np.int64) for k, v in centers.items()}
    parents = {k: np.array(v, dtype=np.int64) for k, v in parents.items()
               if k < k_top}
    fam = DyadicFamily(cloud, m, k_top, lam, sep, centers, labels, parents,
                       volume=mode)
    fam.certificate = certify(fam)
    return fam
