"""Build script for the optional compiled rank-kernel extension.

The package works without the extension (a NumPy fallback is selected at
import time), but the Cython kernel speeds up the permutation-test inner
loops considerably.
"""

import numpy as np
from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [
    Extension(
        "circxi._ext",
        ["src/circxi/_ext.pyx"],
        include_dirs=[np.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
]

setup(ext_modules=cythonize(extensions, language_level=3))
