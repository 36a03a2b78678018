"""Builds the compiled extension by delegating to the project's CMake build."""

import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = Path(__file__).resolve().parent
        out_dir = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        out_dir.mkdir(parents=True, exist_ok=True)
        build_dir = Path(self.build_temp).resolve() / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)

        cfg = "Debug" if self.debug else "Release"
        configure = [
            "cmake",
            str(source_dir),
            "-DRECTIFY_BUILD_PYTHON=ON",
            f"-DCMAKE_BUILD_TYPE={cfg}",
            f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={out_dir}",
            f"-DPython_EXECUTABLE={sys.executable}",
        ]
        env = os.environ.copy()
        subprocess.run(configure, cwd=build_dir, env=env, check=True)
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_rectify", "--parallel"],
            cwd=build_dir,
            env=env,
            check=True,
        )


setup(
    ext_modules=[CMakeExtension("rectify._rectify")],
    cmdclass={"build_ext": CMakeBuild},
)
