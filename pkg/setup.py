"""Build shim: compiles the optional Cython search kernel.

The package is fully functional without the extension; a pure-Python
implementation of the same search is selected at import when the compiled
module is unavailable. Build in place with:

    python setup.py build_ext --inplace
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/physcomp/assembly/_speedups.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
