"""Build script for the optional compiled kernel extension.

The package works without the extension (a pure-NumPy fallback is selected
at import time), so a failed compilation downgrades to a warning instead of
aborting the install.
"""

import warnings

import numpy
from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the extension if possible, warn and continue otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, bad toolchain, ...
            warnings.warn(f"compiled kernels skipped ({exc}); "
                          "falling back to pure-Python backend")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"building {ext.name} failed ({exc}); "
                          "falling back to pure-Python backend")


extension = Extension(
    "qdephase._core",
    ["src/qdephase/_core.pyx"],
    include_dirs=[numpy.get_include()],
    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    extra_compile_args=["-O3"],
)


def _ext_modules():
    from Cython.Build import cythonize

    return cythonize([extension], language_level="3")


setup(
    ext_modules=_ext_modules(),
    cmdclass={"build_ext": OptionalBuildExt},
)
