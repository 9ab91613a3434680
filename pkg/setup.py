# Build the compiled search kernels in place with:
#   python setup.py build_ext --inplace
# The package works without the extension (pure-Python kernels are selected
# at import time), so the build degrades gracefully when Cython or a C
# compiler is unavailable.

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = []
if cythonize is not None:
    extensions = cythonize(
        [
            Extension(
                "conceptlab._kernels._speedups",
                ["src/conceptlab/_kernels/_speedups.pyx"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=extensions)
