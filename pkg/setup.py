############################################################
# modnet: modularity tests for weighted signed networks    #
# MIT Licence                                              #
# A setuptools based setup module                          #
############################################################

import glob

from setuptools import setup

setup(
    name='modnet',

    version='1.0',

    description='Modularity tests for weighted signed networks',

    long_description=('modnet tests whether a weighted signed network has community '
                      'structure, using the modularity of the split given by the top '
                      'eigenvector and its random-matrix null laws, and runs the Monte '
                      'Carlo studies that calibrate those tests.'),

    license='MIT',

    packages=[
        'netCommands'
    ],

    py_modules=[
        "distributions",
        "ensembles",
        "hypotests",
        "ModNetApp",
        "ModNetCommon",
        "ModNetProcess",
        "ModNetVersion",
        "ModNetWorker",
        "netio",
        "simharness",
        "spectral"
    ],

    install_requires=[
        'simplejson',
        'numpy>=1.17',
        'scipy>=1.0',
        'pandas'
    ],

    include_package_data=True,

    data_files=[
        ('share/modnet', glob.glob('share/*'))
    ],

    scripts=['modnet.py']
)
