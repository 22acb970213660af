import os

from setuptools import setup

_PYX = "src/triplepoint/_termkernel_c.pyx"

ext_modules = []
if os.environ.get("TRIPLEPOINT_PURE") != "1" and os.path.exists(_PYX):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "triplepoint._termkernel_c",
                    [_PYX],
                    extra_compile_args=["-O2"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # No Cython available: install with the pure-Python kernel only.
        ext_modules = []

setup(ext_modules=ext_modules)
