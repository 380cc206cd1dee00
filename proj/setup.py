"""Builds the _gibbslab extension by driving the project's CMake build."""

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
        # ext_fullpath already ends in gibbslab/_gibbslab.<abi>.so
        out_dir = Path(self.get_ext_fullpath(ext.name)).parent.resolve()
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)
        cfg = "Release"
        args = [
            "cmake",
            str(Path(__file__).parent.resolve()),
            f"-DCMAKE_BUILD_TYPE={cfg}",
            "-DGIBBSLAB_BUILD_TESTS=OFF",
            f"-DGIBBSLAB_INSTALL_MODULE_DIR={out_dir}",
            f"-DPython3_EXECUTABLE={sys.executable}",
        ]
        try:
            import pybind11

            args.append(f"-Dpybind11_DIR={pybind11.get_cmake_dir()}")
        except ImportError:
            pass
        subprocess.run(args, cwd=build_dir, check=True)
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_gibbslab", "-j", str(os.cpu_count() or 2)],
            cwd=build_dir,
            check=True,
        )
        subprocess.run(
            ["cmake", "--install", ".", "--component", "Unspecified"],
            cwd=build_dir,
            check=False,
        )
        # Fall back to copying the built module directly.
        built = list(build_dir.glob("_gibbslab*.so")) + list(build_dir.glob("_gibbslab*.pyd"))
        out_dir.mkdir(parents=True, exist_ok=True)
        for f in built:
            target = out_dir / f.name
            target.write_bytes(f.read_bytes())


setup(
    ext_modules=[CMakeExtension("gibbslab._gibbslab")],
    cmdclass={"build_ext": CMakeBuild},
)
