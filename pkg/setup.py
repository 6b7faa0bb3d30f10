"""Build script: compiles the branch-and-bound kernel when Cython is available.

The package works without the extension (a pure-Python kernel is selected at
import time); set RBLAB_NO_EXT=1 to skip compilation explicitly.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("RBLAB_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "rblab._kernel",
                    ["src/rblab/_kernel.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
