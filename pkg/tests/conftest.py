# coding=utf-8
import pytest

from carnotPotential.group import builtin
from carnotPotential.spatial import latticeCloud


@pytest.fixture(scope='session')
def H1():
    return builtin('H1')


@pytest.fixture(scope='session')
def E3():
    return builtin('E3')


@pytest.fixture(scope='session')
def unitCloud(H1):
    '''H1 lattice on B_1(e), spacing 0.1'''
    return latticeCloud(H1, radius=1.0, spacing=0.1)


@pytest.fixture(scope='session')
def coarseCloud(H1):
    '''H1 lattice on B_1(e), spacing 0.2'''
    return latticeCloud(H1, radius=1.0, spacing=0.2)
