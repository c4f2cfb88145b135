#!/usr/bin/env python
# encoding: utf-8

import os
import sys

from setuptools import find_packages, setup

name = "sysgeom"
description = "systoles of flat cone surfaces and optimal systolic inequalities"
try:
    long_description = open('README.md').read()
except IOError:
    long_description = description
year = "2026"


try:
    sys.path.append(os.path.dirname(os.path.abspath(__file__)) + "/" + name)
    from sysgeom import __version__ as version
except Exception:
    version = "unknown"


_install_requires = [
    'SciPy>=1.1',
    'NumPy>=1.15',
    'networkx>=2.2',
    'h5py>=2.8',
]


def _get_install_requires(req, not_on_rtd=['scipy', 'numpy']):
    """Remove packages which cannot be installed on readthedocs.org

    scipy and numpy are available on readthedocs as system packages,
    but they must not appear in install_requires.

    """
    on_rtd = os.environ.get('READTHEDOCS') == 'True'
    if on_rtd:
        req = [dep for dep in req
               if all(blocker.lower() not in dep.lower()
                      for blocker in not_on_rtd)]
    return req


if __name__ == '__main__':
    setup(
        name=name,
        version=version,
        packages=find_packages(exclude=['tests']),
        package_data={name: ['data/*.surf', 'data/points/*.json']},
        license="BSD",
        description=description,
        long_description=long_description,
        long_description_content_type='text/markdown',
        install_requires=_get_install_requires(_install_requires),
        python_requires='>=3.7',
        setup_requires=['pytest-runner'],
        tests_require=['pytest>=3.6', 'hypothesis>=3.66'],
        entry_points={'console_scripts': ['sysgeom=sysgeom.cli:main']},
        classifiers=[
            "Development Status :: 3 - Alpha",
            "Operating System :: OS Independent",
            "License :: OSI Approved :: BSD License",
            "Programming Language :: Python :: 3",
            "Intended Audience :: Science/Research",
            "Topic :: Scientific/Engineering :: Mathematics"
        ],
        platforms=['ALL'],
    )
