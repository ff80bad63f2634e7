from setuptools import Extension, setup

# The compiled kernels are optional: without Cython (or a working C
# toolchain) the package installs anyway and falls back to the pure-Python
# kernels at import time.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("gcdlcm._core", ["src/gcdlcm/_core.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
