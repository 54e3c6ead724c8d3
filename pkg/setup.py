"""Build hook for the optional compiled kernels.

The extension is marked optional: if no compiler is available the package
still installs and :mod:`gaussline.kernels` falls back to pure Python.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pragma: no cover
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "gaussline._kernels",
                ["src/gaussline/_kernels.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
