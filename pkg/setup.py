import os

from setuptools import Extension, setup

# The compiled kernel module is optional: the package falls back to the
# pure-Python twin in apobern._kernels._pure when the extension is absent.
ext_modules = []
if os.environ.get("APOBERN_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext = Extension(
            "apobern._kernels._speedups",
            sources=["src/apobern/_kernels/_speedups.pyx"],
        )
        ext.optional = True
        ext_modules = cythonize([ext], language_level="3")
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
