"""Build script for the optional compiled kernel extension.

The package is fully functional without the extension (a NumPy fallback is
selected at import time), so any build failure here downgrades to a pure-
Python install instead of aborting.
"""

from setuptools import setup

try:
    import numpy as np
    from Cython.Build import cythonize
    from setuptools import Extension

    extensions = cythonize(
        [
            Extension(
                "cosmoevo._kernels_c",
                sources=["src/cosmoevo/_kernels_c.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        compiler_directives={
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "language_level": "3",
        },
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
