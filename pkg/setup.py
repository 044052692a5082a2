"""Build script: compiles the AGM kernel extension when Cython is available.

The package works without the extension (a pure-Python kernel is selected
at import time), so the extension is best-effort.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "ellipmeans._agm_cy",
                ["src/ellipmeans/_agm_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
