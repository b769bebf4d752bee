'''
measures, Wolff and Riesz potentials
'''
from carnotPotential.potentials.measures import (AtomicMeasure, GridDensity,
                                                 MeasureSum, restrictToBall,
                                                 ballMass, carrierMasses)
from carnotPotential.potentials.WolffParams import WolffParams
from carnotPotential.potentials.wolff import WolffOperator, wolff, wolffField
from carnotPotential.potentials.riesz import (riesz, rieszField,
                                              rieszLowerConstant)
from carnotPotential.potentials.measureFile import readMeasure, writeMeasure
