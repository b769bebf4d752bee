'''
Carnot groups of step <= 4 in exponential coordinates
'''
from carnotPotential.group.StrataSpec import StrataSpec
from carnotPotential.group.GroupSpec import GroupSpec
from carnotPotential.group.makeGroup import makeGroup
from carnotPotential.group.builtin import builtin, euclidean, heisenberg, engel
from carnotPotential.group.groupFile import (loadGroupSpec, readStrataSpec,
                                             saveGroupSpec)
