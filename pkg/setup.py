"""Build script: compiles the optional kernel extension.

The package works without it (jordanmm.kernels falls back to NumPy), so a
missing compiler or Cython only costs speed.  Set JORDANMM_NO_EXT=1 to skip
the extension build entirely.
"""

import os

from setuptools import Extension, setup

extensions = []
if not os.environ.get("JORDANMM_NO_EXT"):
    try:
        import numpy
        from Cython.Build import cythonize

        extensions = cythonize(
            [
                Extension(
                    "jordanmm._speedups",
                    ["src/jordanmm/_speedups.pyx"],
                    include_dirs=[numpy.get_include()],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError as exc:
        print(f"jordanmm: building without compiled kernels ({exc})")

setup(ext_modules=extensions)
