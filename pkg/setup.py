"""Build script for the optional compiled simplex kernel.

The package works without the extension (a numpy fallback is selected at
import time), so a missing Cython toolchain only costs speed.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("homproj._simplex_cy", ["src/homproj/_simplex_cy.pyx"])],
        compiler_directives={"language_level": 3},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
