'''
dyadic functionals and their continuous counterparts
'''
from carnotPotential.calculus.safeRatio import safeRatio
from carnotPotential.calculus.aFunctionals import aFunctionals
from carnotPotential.calculus.bFunctionals import bFunctionals
from carnotPotential.calculus.dyadicMaximal import dyadicMaximal
from carnotPotential.calculus.dzeCheck import dzeCheck
from carnotPotential.calculus.energyEquivalence import (energyEquivalence,
                                                        discreteEnergy)
from carnotPotential.calculus.wolffInequality import wolffInequality
from carnotPotential.calculus.experiments import runExperiment, calibrate
