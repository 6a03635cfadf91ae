"""Builds the optional compiled mutation-scan kernel.

The package is fully functional without it: evopu._kernels falls back to a
numpy implementation when the extension is missing.
"""

from setuptools import Extension, setup

try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "evopu._kernels._mutscan",
                ["src/evopu/_kernels/_mutscan.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
