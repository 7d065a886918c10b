#!/usr/bin/env python

__all__ = [
    'VERSION'
]

import setuptools

with open('README.md', 'r') as fp:
    long_description = fp.read()

MAJOR = 0
MINOR = 1
MICRO = 0
ISRELEASED = False
VERSION = '%d.%d.%d' % (MAJOR, MINOR, MICRO)


setuptools.setup(
    name='patternpress',
    version=VERSION,
    description='Pattern probability estimators, redundancy bounds and a '
                'pattern compressor for sequences over unknown alphabets',
    long_description=long_description,
    long_description_content_type='text/markdown',
    packages=setuptools.find_packages(exclude=['tests', 'examples', 'examples.*']),
    classifiers=[
        'Programming Language :: Python :: 3',
        'License :: OSI Approved :: MIT License',
        'Operating System :: Unix',
        'Operating System :: Microsoft :: Windows',
        'Natural Language :: English',
        'Intended Audience :: Science/Research',
        'Environment :: Console'
    ],
    python_requires='>=3.8',
    include_package_data=True,
    install_requires=[
        'numpy>=1.20',
        'scipy>=1.7',
        'pandas',
        'PyYAML>=5.3.1',
        'tqdm',
        'pytest>=7.4',
    ],
    extras_require={
        'testing': ['pytest'],
        'coverage': ['pytest-cov', 'codecov'],
        'styling': ['isort']
    },
    entry_points={
        'console_scripts': [
            'patternpress=patternpress.scripts.cli:main'
        ]
    }
)
