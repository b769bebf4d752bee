'''
finite carriers of Haar measure, rho-ball queries and dyadic cube families
'''
from carnotPotential.spatial.PointCloud import PointCloud
from carnotPotential.spatial.latticeCloud import latticeCloud, shellCloud
from carnotPotential.spatial.ballQuery import BallIndex, ballQuery
from carnotPotential.spatial.DyadicFamily import (DyadicFamily, CubeRef,
                                                  certify, overlapCount,
                                                  maxOverlap)
from carnotPotential.spatial.buildFamily import buildFamily
from carnotPotential.spatial.cloudFile import (writeCloud, readCloud,
                                               writeFamily, readFamily)
