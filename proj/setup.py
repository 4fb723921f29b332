"""Builds the compiled module by driving the project's CMake tree.

The single extension `addlawkit._core` links the static core library; all
configuration lives in CMakeLists.txt, so a pip build and a plain CMake
build produce the same module.
"""

import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source = Path(__file__).parent.resolve()
        build_dir = Path(self.build_temp).resolve() / "cmake"
        out_dir = Path(self.get_ext_fullpath(ext.name)).parent.resolve()
        subprocess.run(
            [
                "cmake",
                "-S", str(source),
                "-B", str(build_dir),
                "-DCMAKE_BUILD_TYPE=Release",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "addlawkit_core"],
            check=True,
        )
        self.mkpath(str(out_dir))
        built = build_dir / "python" / "addlawkit"
        for so in built.glob("_core.*"):
            self.copy_file(str(so), str(out_dir / so.name))


setup(
    ext_modules=[Extension("addlawkit._core", sources=[])],
    cmdclass={"build_ext": CMakeBuild},
)
