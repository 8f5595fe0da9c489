import numpy as np
from setuptools import setup
from setuptools.extension import Extension

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "specsense._solver_core",
                ["src/specsense/_solver_core.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    # Cython unavailable: install the pure-Python package; the solver falls
    # back to the numpy backend at import time.
    extensions = []

setup(ext_modules=extensions)
