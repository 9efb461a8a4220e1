"""Build script for the optional compiled grid kernel.

The package is pure Python by default. When Cython and a C compiler are
available, ``dashforge.gridkernel._cgrid`` is compiled for faster layout
math; otherwise the build silently falls back to the pure-Python kernel
(``dashforge.gridkernel._pure``), which implements the identical API.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Tolerate a failing extension build; the pure kernel still works."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - toolchain dependent
            print(f"warning: compiled grid kernel skipped ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover - toolchain dependent
            print(f"warning: building {ext.name} failed ({exc}); "
                  "using pure-Python kernel")


def extensions():
    if os.environ.get("DASHFORGE_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:  # pragma: no cover - cython not installed
        return []
    return cythonize(
        [
            Extension(
                "dashforge.gridkernel._cgrid",
                ["src/dashforge/gridkernel/_cgrid.pyx"],
            )
        ],
        language_level=3,
    )


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": optional_build_ext},
)
