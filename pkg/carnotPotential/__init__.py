# coding=utf-8
'''
carnotPotential - nonlinear potential theory on Carnot groups

Wolff and Riesz potentials, dyadic cube families, Riesz capacities and
the potential iteration for -Delta_p u = u^q + omega on stratified groups
'''
__version__ = '0.1.0'
