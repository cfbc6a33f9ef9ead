import os

import numpy as np
from setuptools import Extension, setup

# LIPGAIN_NO_EXT=1 installs the pure-Python kernels only.
ext_modules = []
if not os.environ.get("LIPGAIN_NO_EXT"):
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "lipgain._kernels",
                ["src/lipgain/_kernels.pyx"],
                include_dirs=[np.get_include()],
                # compensated sums and libm parity need strict IEEE semantics
                extra_compile_args=["-O2", "-fno-fast-math", "-ffp-contract=off"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
