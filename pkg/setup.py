#!/usr/bin/env python
# Copyright 2014, Quixey Inc.
# 
# Licensed under the Apache License, Version 2.0 (the "License"); you may not
# use this file except in compliance with the License. You may obtain a copy of
# the License at
# 
#      http://www.apache.org/licenses/LICENSE-2.0
# 
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
# WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
# License for the specific language governing permissions and limitations under
# the License.

from setuptools import setup, find_packages
from tunnelcert import __version__ as tunnelcert_version

tests_require = [
    'pytest>=6.0',
    'coverage>=5.0',
]

setup(name='tunnelcert',
      version=tunnelcert_version,
      description='Certifies unknotting tunnels from ball-and-beam patterns.',
      author='Adam Gray, Akshay Dayal',
      author_email='adam@addumb.com',
      packages=find_packages(exclude=["tests*"]),
      scripts=['tcert.py'],
      python_requires='>=3.6',
      tests_require = tests_require,
      extras_require = {'test': tests_require},
      install_requires = [
          'numpy>=1.17',
          'scipy>=1.6',
      ]
    )
