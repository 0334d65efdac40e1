"""Builds the optional Cython kernel.

When Cython or a C compiler is missing the package still installs and the
pure-Python kernels are used instead.
"""
from setuptools import setup, Extension

try:
    from Cython.Build import cythonize
except ImportError:  # pragma: no cover
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext = Extension(
        "resurgence.kernels._ckernels",
        ["src/resurgence/kernels/_ckernels.pyx"],
        extra_compile_args=["-O3"],
        optional=True,
    )
    ext_modules = cythonize([ext], compiler_directives={"language_level": "3"})

setup(ext_modules=ext_modules)
