import os

from setuptools import Extension, setup

# The compiled kernel is optional: the package falls back to the pure-Python
# implementation when the extension is absent (see bottcoh._backend).
ext_modules = []
if not os.environ.get("BOTTCOH_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("bottcoh._fastcore", ["src/bottcoh/_fastcore.pyx"])],
            language_level="3",
        )

setup(ext_modules=ext_modules)
