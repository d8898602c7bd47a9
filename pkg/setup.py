# -*- coding: utf-8 -*-
#
# This file is part of BJ-Symmetry.
# Copyright (C) 2026 BJ-Symmetry developers.
#
# BJ-Symmetry is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Birkhoff-James orthogonality and operator symmetry in finite dimension."""

import os

from setuptools import find_packages, setup

readme = open('README.rst').read()
history = open('CHANGES.rst').read()

tests_require = [
    'pytest>=6,<9',
    'pytest-cov>=2.10',
    'pytest-isort>=1.2',
    'pytest-pycodestyle>=2.2',
    'pytest-pydocstyle>=2.2',
    'iniconfig>=1.1.1',
]

extras_require = {
    'docs': [
        'Sphinx>=3',
    ],
    'tests': tests_require,
}

extras_require['all'] = []
for reqs in extras_require.values():
    extras_require['all'].extend(reqs)

install_requires = [
    'Flask>=2.0',
    'click>=8.0',
    'numpy>=1.22',
    'scipy>=1.8',
    'pydantic>=2.0',
]

packages = find_packages(exclude=['tests', 'examples', 'examples.*'])


# Get the version string. Cannot be done with import!
g = {}
with open(os.path.join('bj_symmetry', 'version.py'), 'rt') as fp:
    exec(fp.read(), g)
    version = g['__version__']

setup(
    name='bj-symmetry',
    version=version,
    description=__doc__,
    long_description=readme + '\n\n' + history,
    keywords='Birkhoff-James orthogonality operator symmetry Banach',
    license='GPLv2',
    author='BJ-Symmetry developers',
    packages=packages,
    zip_safe=False,
    include_package_data=True,
    platforms='any',
    python_requires='>=3.8',
    entry_points={
        'console_scripts': [
            'bj-symmetry = bj_symmetry.cli:cli',
        ],
    },
    extras_require=extras_require,
    install_requires=install_requires,
    tests_require=tests_require,
    classifiers=[
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: GNU General Public License v2 (GPLv2)',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: Implementation :: CPython',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Development Status :: 3 - Alpha',
    ],
)
