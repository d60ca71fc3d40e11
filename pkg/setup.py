"""Build script: compiles the optional Cython kernel extension.

The package is fully functional without the extension (a pure-Python
twin of every kernel is selected at import time), so any build failure
here downgrades to a source-only install instead of aborting.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/charmonoid/_kernels_cy.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - environment without Cython/cc
    print(f"charmonoid: skipping compiled kernels ({exc!r})")

setup(ext_modules=ext_modules)
