"""Build hook for the optional compiled alignment kernel.

The package is pure Python plus one accelerator module. If Cython (or a C
compiler) is unavailable the build still succeeds and the aligner falls back
to the interpreted kernel at import time.
"""
import os

from setuptools import setup

ext_modules = []
if os.environ.get("GECKIT_NO_EXTENSION") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/geckit/_align_c.pyx"],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
