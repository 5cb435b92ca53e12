"""Build hook for the optional compiled kernels.

The package is fully functional without a compiler: politenum.kernels falls
back to the vectorized pure-Python implementations when politenum._speedups
is missing. Set POLITENUM_NO_EXT=1 to skip the extension build entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("POLITENUM_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("politenum._speedups", ["src/politenum/_speedups.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
