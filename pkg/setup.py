import os

import numpy
from setuptools import Extension, setup

# The compiled kernels are an optimization, not a requirement: the package
# falls back to the numpy implementations in tailcast.kernels.pure when the
# extension is absent.  Set TAILCAST_SKIP_EXT=1 to install without compiling.
if os.environ.get("TAILCAST_SKIP_EXT"):
    ext_modules = []
else:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "tailcast.kernels._ctail",
                ["src/tailcast/kernels/_ctail.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
