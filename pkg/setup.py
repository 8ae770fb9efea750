from setuptools import Extension, setup
from Cython.Build import cythonize

setup(
    ext_modules=cythonize(
        [Extension("ftprop._kernels", sources=["src/ftprop/_kernels.pyx"])],
        language_level="3",
    ),
)
