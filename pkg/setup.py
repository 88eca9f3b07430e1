"""Build script for the optional compiled series kernel.

The package works without the extension (a pure-Python kernel is selected at
import time), so a failed compile downgrades to a warning instead of aborting
the install.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # compiler or toolchain missing
            warnings.warn(
                f"could not build {ext.name!r} ({exc}); "
                "falling back to the pure-Python kernel"
            )


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        warnings.warn("Cython not available; using the pure-Python kernel")
        return []
    return cythonize(
        [
            Extension(
                "qzeta._kernels._series",
                ["src/qzeta/_kernels/_series.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
