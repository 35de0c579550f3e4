"""Builds the `_dsfttd` extension directly with setuptools.

The CMake build remains the primary path for the C++ library, CLI, and test
suite; this file only exists so `pip install -e . --no-build-isolation`
produces the python package without requiring a CMake-aware backend.
"""

from glob import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "dsfttd._dsfttd",
    sorted(glob("src/*.cpp")) + ["python/module.cpp"],
    include_dirs=["include", "vendor"],
    libraries=["armadillo"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
