"""Build script: compiles the optional integer-kernel extension.

The package is fully functional without the extension (a pure-Python kernel is
selected at import time); building it just makes the law suite much faster.
Set HESITANT_PURE=1 to skip compilation entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("HESITANT_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "hesitant._kernel._ckernel",
                    sources=["src/hesitant/_kernel/_ckernel.pyx"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
