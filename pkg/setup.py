import os

from setuptools import setup

ext_modules = []
if os.environ.get("STAIRCASE_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/staircase/_kernel.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # No Cython available: install the pure-Python package only.
        ext_modules = []

setup(ext_modules=ext_modules)
