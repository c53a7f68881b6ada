"""Build shim: compile the pybind11 module through the project's CMake tree.

The extension target is `caydeg_pymod` (output name `_core`); its artifact is
placed wherever setuptools expects the extension for the current build mode
(inplace for editable installs, the wheel staging dir otherwise).
"""

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
        out_dir = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        out_dir.mkdir(parents=True, exist_ok=True)
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)
        source_dir = Path(__file__).resolve().parent
        subprocess.run(
            [
                "cmake",
                "-S", str(source_dir),
                "-B", str(build_dir),
                "-DCMAKE_BUILD_TYPE=Release",
                "-DSKBUILD=ON",
                f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={out_dir}",
                f"-DPython_EXECUTABLE={sys.executable}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "caydeg_pymod", "-j"],
            check=True,
        )


setup(
    ext_modules=[CMakeExtension("caydeg._core")],
    cmdclass={"build_ext": CMakeBuild},
)
