from setuptools import Extension, setup

# The compiled alignment core is optional: if Cython or a C compiler is
# missing the package falls back to the pure-Python kernel at import time.
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "speech_clarity.align._core",
                ["src/speech_clarity/align/_core.pyx"],
                include_dirs=[numpy.get_include()],
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
