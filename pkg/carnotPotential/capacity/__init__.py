'''
Riesz capacities C_(alpha,s) from the dual (measure) side
'''
from carnotPotential.capacity.CapacityParams import CapacityParams
from carnotPotential.capacity.CompactSet import CompactSet
from carnotPotential.capacity.verdicts import (degeneracyVerdict,
                                               removabilityVerdict,
                                               removabilityThreshold)
from carnotPotential.capacity.kernelQuadrature import (KernelQuadrature,
                                                       dualObjective)
from carnotPotential.capacity.capacityLower import (capacityLower,
                                                    CapacityResult)
from carnotPotential.capacity.capacityUpper import capacityUpper
from carnotPotential.capacity.degeneracyDecay import degeneracyDecay
from carnotPotential.capacity.extremalInequalityCheck import \
    extremalInequalityCheck
