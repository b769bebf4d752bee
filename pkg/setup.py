# coding=utf-8
'''
usage:
 (sudo) python setup.py +
     install        ... local
     sdist          ... source archive
     develop        ... editable install for running the tests
'''
import os
import re

from setuptools import setup, find_packages


HERE = os.path.abspath(os.path.dirname(__file__))


def read(*names):
    """Return the text of a file below the project root, '' if missing."""
    path = os.path.join(HERE, *names)
    if not os.path.exists(path):
        print('%s not found ... skipping' % path)
        return ''
    with open(path, 'r') as f:
        return f.read()


def version():
    m = re.search(r"^__version__ = '([^']+)'",
                  read('carnotPotential', '__init__.py'), re.M)
    return m.group(1) if m else '0.0.0'


def scripts():
    bindir = os.path.join(HERE, 'bin')
    if not os.path.isdir(bindir):
        return []
    return [os.path.join('bin', name) for name in sorted(os.listdir(bindir))]


setup(
    name='carnotPotential',
    version=version(),
    license='GPLv3',
    description='Wolff potentials, Riesz capacities and Lane-Emden type '
                'equations on Carnot groups',
    long_description='\n\n'.join(
        read(name) for name in ('README.rst', 'CHANGES.rst', 'AUTHORS.rst')),
    keywords='carnot group heisenberg wolff potential capacity p-laplacian',
    packages=find_packages(exclude=['tests', 'tests.*']),
    scripts=scripts(),
    python_requires='>=3.8',
    install_requires=['numpy', 'scipy', 'numba'],
    extras_require={'test': ['pytest', 'hypothesis']},
    classifiers=[
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: GNU General Public License (GPL)',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    zip_safe=False,
)
