# coding=utf-8
from __future__ import division
from __future__ import print_function

import numpy as np


def safeRatio(a, b, debug=False):
    '''
    a/b with 0/0 := 1 (printed if [debug]); x/0 gives inf, inf/inf gives 1
    '''
    if a == 0 and b == 0:
        if debug:
            print('ratio 0/0 set to 1')
        return 1.0
    if np.isinf(a) and np.isinf(b):
        return 1.0
    if b == 0:
        return np.inf
    return a / b
