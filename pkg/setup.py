"""Build the optional Cython kernels; the package falls back to pure Python without them."""
import os

import numpy as np
from setuptools import Extension, setup

ext_modules = []
if os.environ.get("ZDG_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        try:
            ext_modules = cythonize(
                [
                    Extension(
                        "zdg._ckernels",
                        ["src/zdg/_ckernels.pyx"],
                        include_dirs=[np.get_include()],
                        extra_compile_args=["-O3"],
                        optional=True,
                    )
                ],
                compiler_directives={"language_level": "3"},
            )
        except Exception as exc:  # noqa: BLE001
            print(f"zdg: skipping compiled kernels ({exc})")
            ext_modules = []

setup(ext_modules=ext_modules)
