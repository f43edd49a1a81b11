import io
import os
from setuptools import setup

# Python setup file.
# See http://packages.python.org/an_example_pypi_project/setuptools.html

MAIN_PACKAGE = 'qtmpy'
PACKAGE_PATH = os.path.abspath(os.path.join(os.path.dirname(__file__), MAIN_PACKAGE))

# Version.
version_path = os.path.join(PACKAGE_PATH, 'VERSION')
with open(version_path) as f:
    VERSION = f.read().strip()

# Readme.
readme_path = os.path.abspath(os.path.join(os.path.dirname(__file__), 'README.rst'))
with io.open(readme_path, encoding='utf-8') as f:
    README = f.read()

setup(
    name=MAIN_PACKAGE,
    version=VERSION,
    description=(
        "Package for simulating quantum Turing machines and verifying their unitarity and halting behavior"),
    long_description=README,
    long_description_content_type='text/x-rst',
    license="3-clause BSD",
    keywords="quantum turing machine unitarity halting simulation",
    python_requires='>=3.8',
    install_requires=[
        'jinja2>=3.1.4',
        'numpy>=1.21',
        'scipy>=1.7',
        'simplejson>=3.16,<3.19',
        'PyYAML>=6.0.1',
        'cerberus>=1.3.4',
    ],
    packages=[
        MAIN_PACKAGE,
        'qtmpy/development',
        'qtmpy/examples',
        'qtmpy/examples/gallery',
        'qtmpy/io',
        'qtmpy/machine',
        'qtmpy/simulate',
        'qtmpy/tests',
    ],
    package_data={
        MAIN_PACKAGE: ['VERSION', 'license.txt', 'templates/*', 'examples/machines/*.json',
                       'examples/reports/*.txt'],
    },
    include_package_data=True,
    entry_points={
        'console_scripts': ['qtmpy=qtmpy.cli:main'],
    },
    classifiers=[
        "Development Status :: 4 - Beta",
        "Environment :: Console",
        "License :: OSI Approved :: BSD License",
        "Programming Language :: Python :: 3.8",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Physics",
    ],
)
