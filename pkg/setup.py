from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "hankelforge._core",
                ["src/hankelforge/_core.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # No Cython: the pure-Python kernels in hankelforge._core_py take over.
    extensions = []

setup(ext_modules=extensions)
