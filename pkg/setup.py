"""Build script for the optional compiled canonical-labeling kernel.

The package works without the extension (a pure-Python kernel is selected
at import time); building it just makes exhaustive enumeration much faster.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "totalirr._canon",
                ["src/totalirr/_canon.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
else:
    ext_modules = []

setup(ext_modules=ext_modules)
