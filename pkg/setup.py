"""Build script: compiles the optional Cython kernel extension.

If Cython or a C compiler is unavailable the install still succeeds and the
package falls back to the pure-Python kernels at import time.
"""

import sys

from setuptools import Extension, setup


def _extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        sys.stderr.write("domce: Cython not available, building pure-Python only\n")
        return []
    return cythonize(
        [
            Extension(
                "domce._ckernels",
                ["src/domce/_ckernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )


setup(ext_modules=_extensions())
