#!/usr/bin/env python

import os

import setuptools
from setuptools import setup


# Utility function to read the README file.
# Used for the long_description.


def read(fname):
    return open(os.path.join(os.path.dirname(__file__), fname)).read()


def version():
    with open(os.path.join(os.path.dirname(__file__), 'sksuper',
                           '__init__.py')) as f:
        for line in f:
            if line.startswith('__version__'):
                return line.split('=')[1].strip().strip("'\"")
    raise RuntimeError("no __version__ in sksuper/__init__.py")


setup(
    name='scikit-supergeom',
    version=version(),
    author='scikit-supergeom developers',
    description="Computational Riemannian supergeometry: Grassmann "
                "algebras, Lie superalgebras, graded metrics and "
                "supergeodesics",
    long_description=read('README.md'),
    packages=setuptools.find_packages(exclude=['doc']),
    package_data={'sksuper': ['data/*.json']},
    install_requires=['six', 'numpy', 'scipy>=1.3'],  # essential deps only
    python_requires='>=3.4',
    entry_points={'console_scripts': ['sksuper = sksuper.cli:main']},
    keywords='supergeometry Lie superalgebra geodesic',
    license='BSD',
    classifiers=['Development Status :: 3 - Alpha',
                 "License :: OSI Approved :: BSD License",
                 "Programming Language :: Python :: 3",
                 "Topic :: Scientific/Engineering :: Mathematics",
                 "Topic :: Scientific/Engineering :: Physics",
                 "Topic :: Software Development :: Libraries",
                 "Intended Audience :: Science/Research",
                 "Intended Audience :: Developers",
                 ],
    )
