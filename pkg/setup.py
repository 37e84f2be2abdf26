"""Build script: compiles the optional Cython kernel.

The package is fully functional without the extension (a pure-Python
kernel is selected at import time), so a failed compile only costs speed.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "gruff._kernel.ckernel",
                ["src/gruff/_kernel/ckernel.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    sys.stderr.write(f"warning: Cython kernel not built ({exc}); pure-Python kernel will be used\n")

setup(ext_modules=ext_modules)
