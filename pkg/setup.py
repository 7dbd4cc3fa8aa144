# -*- coding: utf-8 -*-

from setuptools import setup, find_packages

long_desc = '''
Exact rational computations for six-dimensional almost abelian solvmanifolds:
Chevalley-Eilenberg cohomology, Mostow condition and modification, lattice
integrality, cohomology of the compact quotients, minimal models, formality,
symplectic and Lefschetz properties.  Comes with the ``solvcoh`` command line.
'''

requires = ['sympy>=1.1', 'nbformat>=4']

setup(
    name='solvcoh',
    version='0.3.0',
    license='BSD',
    author='solvcoh developers',
    description='Cohomology, minimal models and formality of almost abelian solvmanifolds.',
    long_description=long_desc,
    zip_safe=False,
    classifiers=[
        'Development Status :: 4 - Beta',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: BSD License',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    platforms='any',
    packages=find_packages(exclude=['tests']),
    include_package_data=True,
    python_requires='>=3.5',
    install_requires=requires,
    extras_require={
        'docs': ['sphinx', 'sphinx_rtd_theme'],
        'tests': ['pytest'],
    },
    tests_require=['pytest'],
    entry_points={
        'console_scripts': ['solvcoh=solvcoh.cli:run'],
    },
)
