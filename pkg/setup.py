"""Build the optional compiled GF(p) kernels; the package works without them."""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("NAKAYAMA_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("nakayama._ckernels", ["src/nakayama/_ckernels.pyx"])],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
