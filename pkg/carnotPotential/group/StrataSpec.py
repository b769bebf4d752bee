# coding=utf-8
from fractions import Fraction


class StrataSpec(object):
    '''
    layer dimensions and the sparse bracket table of a stratified
    nilpotent Lie algebra

    :param layer_dims: (dim V_1, ..., dim V_r)
    :param brackets: {(i, a, j, b): [(k, l, c), ...]} meaning
        [X_ia, X_jb] = sum c X_kl, all indices 1-based, c rational
    '''

    def __init__(self, layer_dims, brackets=None):
        self.layer_dims = tuple(int(d) for d in layer_dims)
        self.brackets = {}
        for key, targets in (brackets or {}).items():
            key = tuple(int(v) for v in key)
            assert len(key) == 4, 'bracket key must be (i, a, j, b)'
            self.brackets[key] = [(int(k), int(l), Fraction(c))
                                  for k, l, c in targets]

    @property
    def step(self):
        return len(self.layer_dims)

    def __repr__(self):
        return 'StrataSpec(layer_dims=%s, %i brackets)' % (
            list(self.layer_dims), len(self.brackets))
