'''
solvability of -Delta_p u = u^q + omega through Wolff potentials
'''
from carnotPotential.laneEmden.constants import (condC0, kappaBound,
                                                 structuralFactor,
                                                 liouvilleExponent)
from carnotPotential.laneEmden.constantRecursion import (constantRecursion,
                                                         fixedPointExists,
                                                         recursionLimit)
from carnotPotential.laneEmden.PotentialCarrier import PotentialCarrier
from carnotPotential.laneEmden.conditions import (checkConditionV,
                                                  checkConditionIV,
                                                  checkConditionIII,
                                                  solvabilityThreshold,
                                                  randomBalls)
from carnotPotential.laneEmden.SolveConfig import SolveConfig, IterDiagnostics
from carnotPotential.laneEmden.picardSolve import picardSolve
from carnotPotential.laneEmden.liouvilleProbe import liouvilleProbe
