from setuptools import setup
from setuptools.extension import Extension

# The compiled Jacobi kernel is optional: when Cython (or a C compiler) is
# unavailable the package falls back to the pure NumPy implementation of the
# identical sweep, selected at import time in finosc.spectral.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "finosc._jacobi",
                ["src/finosc/_jacobi.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
