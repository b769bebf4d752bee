# coding=utf-8
'''
group spec text format::

    # comment
    layers 2 1
    bracket 1 1 1 2 : 2 1 1
    bracket i a j b : k l c ; k l c ...

indices are 1-based, c is a rational (1, -1/2, 0.25 ...)
'''
from fractions import Fraction

from carnotPotential.exceptions import StratificationError
from carnotPotential.group.StrataSpec import StrataSpec
from carnotPotential.group.makeGroup import makeGroup


def readStrataSpec(path):
    dims = None
    brackets = {}
    with open(path, 'r') as f:
        for n, line in enumerate(f):
            line = line.split('#')[0].strip()
            if not line:
                continue
            head, _, rest = line.partition(' ')
            if head == 'layers':
                dims = [int(v) for v in rest.split()]
            elif head == 'bracket':
                key, _, targets = rest.partition(':')
                key = tuple(int(v) for v in key.split())
                entries = []
                for t in targets.split(';'):
                    t = t.split()
                    if not t:
                        continue
                    if len(t) != 3 or len(key) != 4:
                        raise StratificationError(
                            'malformed bracket in line %i' % (n + 1))
                    entries.append((int(t[0]), int(t[1]), Fraction(t[2])))
                brackets.setdefault(key, []).extend(entries)
            else:
                raise StratificationError(
                    "unknown record '%s' in line %i" % (head, n + 1))
    if dims is None:
        raise StratificationError('no layers record in %s' % path)
    return StrataSpec(dims, brackets)


def loadGroupSpec(path):
    return makeGroup(readStrataSpec(path), name=str(path))


def saveGroupSpec(spec, path):
    with open(path, 'w') as f:
        f.write('layers %s\n' % ' '.join(str(d) for d in spec.layer_dims))
        for key in sorted(spec.brackets):
            targets = ' ; '.join('%i %i %s' % (k, l, c)
                                 for k, l, c in spec.brackets[key])
            f.write('bracket %s : %s\n' % (' '.join(str(v) for v in key),
                                           targets))
