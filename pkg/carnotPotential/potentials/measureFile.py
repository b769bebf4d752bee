# coding=utf-8
'''
measure text format, either atoms::

    atoms
    <coordinates> <mass>        (one atom per line)

or a density on a cloud file::

    density <cloud file, relative to the measure file>
    <density value>             (one per cloud point, cloud order)
'''
import os

import numpy as np

from carnotPotential.exceptions import InvalidParams
from carnotPotential.potentials.measures import AtomicMeasure, GridDensity
from carnotPotential.spatial.cloudFile import readCloud, writeCloud


def readMeasure(g, path):
    with open(path, 'r') as f:
        head = f.readline().split()
        if not head:
            raise InvalidParams('empty measure file %s' % path)
        rows = np.loadtxt(f, ndmin=1)
    if head[0] == 'atoms':
        rows = np.asarray(rows, dtype=float).reshape(-1, g.N + 1)
        return AtomicMeasure(g, rows[:, :g.N], rows[:, g.N])
    if head[0] == 'density':
        cloud = readCloud(g, os.path.join(os.path.dirname(str(path)),
                                          head[1]))
        return GridDensity(cloud, np.ravel(rows))
    raise InvalidParams("unknown measure kind '%s'" % head[0])


def writeMeasure(mu, path, cloud_path=None):
    with open(path, 'w') as f:
        if isinstance(mu, AtomicMeasure):
            f.write('atoms\n')
            for a, m in zip(mu.atoms, mu.masses):
                f.write('%s %.17g\n' % (' '.join('%.17g' % c for c in a), m))
            return
        assert cloud_path is not None, 'a density needs a cloud file'
        writeCloud(mu.cloud, cloud_path)
        rel = os.path.relpath(str(cloud_path),
                              os.path.dirname(os.path.abspath(str(path))))
        f.write('density %s\n' % rel)
        for v in mu.density:
            f.write('%.17g\n' % v)
