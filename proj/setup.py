"""Builds the _piharmonic extension by driving the project's CMake build.

Editable installs drop the module next to python/piharmonic/__init__.py;
wheel builds place it in the staging tree setuptools hands us.
"""

import os
import subprocess
import sys
from pathlib import Path

import pybind11
from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        out_dir = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)
        source_dir = Path(__file__).resolve().parent
        subprocess.run(
            [
                "cmake",
                "-S", str(source_dir),
                "-B", str(build_dir),
                "-DCMAKE_BUILD_TYPE=Release",
                "-DPIHARMONIC_BUILD_PYTHON=ON",
                "-DPIHARMONIC_BUILD_CLI=OFF",
                "-DPIHARMONIC_BUILD_TESTS=OFF",
                f"-Dpybind11_DIR={pybind11.get_cmake_dir()}",
                f"-DPython3_EXECUTABLE={sys.executable}",
                f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={out_dir}",
            ],
            check=True,
        )
        subprocess.run(
            [
                "cmake",
                "--build", str(build_dir),
                "--target", "_piharmonic",
                f"-j{os.cpu_count() or 2}",
            ],
            check=True,
        )


setup(
    ext_modules=[CMakeExtension("piharmonic._piharmonic")],
    cmdclass={"build_ext": CMakeBuild},
)
