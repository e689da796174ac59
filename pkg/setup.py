"""Build hook for the optional compiled enumeration kernels.

The package runs fine as pure Python; the extension only speeds up the
exhaustive-search inner loops. If Cython or a C compiler is missing the
build continues without it and the pure kernels are used at runtime.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    extensions = []
else:
    extensions = cythonize(
        [
            Extension(
                "treebed._kernels",
                ["src/treebed/_kernels.pyx"],
                optional=True,
            )
        ],
        language_level="3",
    )

setup(ext_modules=extensions)
