"""Build hook for the optional compiled polynomial kernels.

The package works without them; ``higgslab.kernels`` falls back to the
pure-Python implementation when the extension is absent.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pragma: no cover
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("higgslab._ckernels", ["src/higgslab/_ckernels.pyx"])],
        compiler_directives={"language_level": "3", "boundscheck": False,
                             "wraparound": False, "cdivision": True},
    )

setup(ext_modules=ext_modules)
