# coding=utf-8
import re

from carnotPotential.exceptions import UnknownName
from carnotPotential.group.StrataSpec import StrataSpec
from carnotPotential.group.makeGroup import makeGroup


def euclidean(n):
    return makeGroup(StrataSpec([n]), name='E%i' % n)


def heisenberg(n=1):
    '''H^n: layers (2n, 1), [X_i, X_(n+i)] = T'''
    brackets = {(1, i, 1, n + i): [(2, 1, 1)] for i in range(1, n + 1)}
    return makeGroup(StrataSpec([2 * n, 1], brackets), name='H%i' % n)


def engel():
    '''layers (2, 1, 1), [X_1, X_2] = X_3, [X_1, X_3] = X_4'''
    brackets = {(1, 1, 1, 2): [(2, 1, 1)],
                (1, 1, 2, 1): [(3, 1, 1)]}
    return makeGroup(StrataSpec([2, 1, 1], brackets), name='engel')


def builtin(name, n=None):
    '''
    :param name: 'euclidean' (needs n), 'E<n>', 'heisenberg', 'H<n>', 'engel'
    '''
    key = name.strip().lower()
    if key == 'euclidean':
        if n is None:
            raise UnknownName('euclidean needs a dimension, e.g. E3')
        return euclidean(int(n))
    if key == 'heisenberg':
        return heisenberg(int(n or 1))
    if key == 'engel':
        return engel()
    m = re.match(r'^([eh])(\d+)$', key)
    if m and int(m.group(2)) > 0:
        k = int(m.group(2))
        return euclidean(k) if m.group(1) == 'e' else heisenberg(k)
    raise UnknownName("unknown group '%s'" % name)
