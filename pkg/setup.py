import numpy
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# The compiled kernel is optional: without it the package falls back to the
# pure-Python implementation selected in sqkdsim.kernels at import time.
extensions = []
if cythonize is not None:
    extensions = cythonize(
        [
            Extension(
                "sqkdsim.kernels._fast",
                ["src/sqkdsim/kernels/_fast.pyx"],
                include_dirs=[numpy.get_include()],
                optional=True,
            )
        ],
        language_level=3,
    )

setup(ext_modules=extensions)
