"""Build shim: compile the optional Cython kernel if a toolchain is present.

The package is fully functional without the extension; kernels.py falls back
to the numpy implementation at import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/castleqec/_accel.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception:
    pass

setup(ext_modules=ext_modules)
