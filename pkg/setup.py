# Copyright 2021 Vasily Rudchenko - dot2bgraph
# Copyright 2026 gaussquot developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import pathlib
from setuptools import setup, find_packages

NAME = 'gaussquot'
VERSION = '0.1.0'

SHORT_DESCRIPTION = '''
A CLI to count Gaussian primes in sectors and find quotients of Gaussian primes in any region.
'''.strip()

README = (pathlib.Path(__file__).parent / 'README.md').read_text()

DEPENDENCIES = [
    'numpy',
    'scipy',
    'mpmath',
    'Pillow',
    'tqdm',
    'yaspin',
]

setup(
    name=NAME,
    version=VERSION,
    description=SHORT_DESCRIPTION,
    long_description=README,
    long_description_content_type='text/markdown',

    author='gaussquot developers',
    license='Apache Software License',

    python_requires='>=3.8',
    install_requires=DEPENDENCIES,

    entry_points={
        'console_scripts': [NAME + ' = gaussquot.main:main'],
    },

    classifiers=[
        'Development Status :: 4 - Beta',

        'Intended Audience :: Education',
        'Intended Audience :: Science/Research',

        'Topic :: Scientific/Engineering :: Mathematics',

        'License :: OSI Approved :: Apache Software License',

        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
    ],

    keywords=[
        'gaussian',
        'primes',
        'number',
        'theory',
        'sieve',
        'density',
        'command',
        'line',
        'cli',
    ],

    packages=find_packages(exclude=['tests', 'tests.*']),
    include_package_data=True,
)
