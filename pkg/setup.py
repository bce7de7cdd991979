"""Build the optional Cython kernel core.

The package works without the compiled extension (``eoent._kernels_py`` is
used instead), so a failed or skipped build is not fatal.
"""
import os

from setuptools import setup
from setuptools.extension import Extension

ext_modules = []
if not os.environ.get("EOENT_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "eoent._kernels",
                    ["src/eoent/_kernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={
                "language_level": 3,
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )

setup(ext_modules=ext_modules)
