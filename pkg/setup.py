#!/usr/bin/env python

from os import path

from setuptools import setup, find_packages

this_directory = path.abspath(path.dirname(__file__))
with open(path.join(this_directory, 'README.md'), encoding='utf-8') as f:
    long_description = f.read()

setup(
    name='braidtk',
    version="0.1.0",
    description='Positive permutation braids: Garside normal forms, summit set conjugacy, '
                'Burau invariants and a knot census',
    long_description=long_description,
    long_description_content_type='text/markdown',
    classifiers=['Programming Language :: Python :: 3 :: Only'],
    py_modules=['braidtk'],
    install_requires=[
        'arrow>=1.2.3',
        'jsonschema>=2.6.0',
        'singer-python>=6.0.0,<7',
        'sympy>=1.9'
    ],
    setup_requires=[
        "pytest-runner"
    ],
    tests_require=[
        "chance==0.110",
        "hypothesis>=6.0",
        "pytest>=7.0"
    ],
    entry_points='''
      [console_scripts]
      braidtk=braidtk:cli
    ''',
    packages=find_packages(exclude=['tests'])
)
