# Copyright 2026 micut authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""setup.py for micut."""
import setuptools

with open('README.md', 'r') as fh:
  long_description = fh.read()

setuptools.setup(
    name='micut',
    version='0.1.0',
    author='micut authors',
    description=('Maximum independent cut, its reductions and the '
                 'anti-coordination games behind it'),
    long_description=long_description,
    long_description_content_type='text/markdown',
    packages=setuptools.find_packages(exclude=['examples', 'examples.*']),
    classifiers=[
        'Programming Language :: Python :: 3',
        'License :: OSI Approved :: Apache Software License',
        'Operating System :: OS Independent',
    ],
    install_requires=[
        'networkx>=3.0',
        'numpy',
        'PyYAML',
        'jsonschema',
        'google-cloud-logging>=3.0',
    ],
    package_dir={
        '': '.',
    },
    package_data={
        # Include the JSON report schemas.
        '': ['*.json'],
    },
    entry_points={
        'console_scripts': ['micut=micut.cli:main'],
    },
    python_requires='>=3.11',
    zip_safe=False,
)
