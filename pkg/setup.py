# :coding: utf-8

import os
import re

from setuptools import setup, find_packages


ROOT_PATH = os.path.dirname(os.path.realpath(__file__))
SOURCE_PATH = os.path.join(ROOT_PATH, "source")
README_PATH = os.path.join(ROOT_PATH, "README.rst")

PACKAGE_NAME = "borosmoll"

# Read version from source.
with open(
    os.path.join(SOURCE_PATH, PACKAGE_NAME, "_version.py")
) as _version_file:
    VERSION = re.match(
        r".*__version__ = \"(.*?)\"", _version_file.read(), re.DOTALL
    ).group(1)


# Compute dependencies.
INSTALL_REQUIRES = [
    "click >= 7, < 9",
    "coloredlogs >= 14.0, < 16",
    "colorama >= 0.3.9, < 1",
    "scipy >= 1.5, < 2",
    "wiz-env >= 3, < 4"
]
DOC_REQUIRES = [
    "sphinx >= 1.8, < 8",
    "sphinx_rtd_theme >= 0.1.6, < 2",
    "lowdown >= 0.1.0, < 2",
    "sphinx-click >= 1.2.0"
]
TEST_REQUIRES = [
    "mpmath >= 1.1, < 2",
    "pytest >= 4, < 8",
    "pytest-cov >= 2, < 5",
    "pytest-mock >= 1, < 4",
    "pytest-runner >= 2.7, < 7",
    "pytest-xdist >= 1.18, < 4"
]

setup(
    name="borosmoll",
    version=VERSION,
    description=(
        "Exact verification of inequalities on Boros-Moll polynomial "
        "coefficients"
    ),
    long_description=open(README_PATH).read(),
    keywords="boros-moll, log-concavity, exact arithmetic",
    packages=find_packages(SOURCE_PATH),
    package_dir={
        "": "source",
    },
    include_package_data=True,
    python_requires=">= 3.8",
    install_requires=INSTALL_REQUIRES,
    tests_require=TEST_REQUIRES,
    extras_require={
        "doc": DOC_REQUIRES,
        "test": TEST_REQUIRES,
        "dev": DOC_REQUIRES + TEST_REQUIRES
    },
    zip_safe=False,
    entry_points={
        "console_scripts": [
            "borosmoll = borosmoll.__main__:main"
        ]
    },
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: GNU Lesser General Public License v3 "
        "(LGPLv3)",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
