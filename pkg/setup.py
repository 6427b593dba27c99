"""Build the optional compiled kernel.

The package works without it; gf.py falls back to the pure-Python
implementation when the extension is missing or fails to import.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "krstrata._gfkernel",
                ["src/krstrata/_gfkernel.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
