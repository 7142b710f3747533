from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # No Cython at build time: install pure-Python only, the kernel
    # dispatcher falls back automatically.
    extensions = []
else:
    extensions = cythonize(
        [Extension("dseq._corrcore", ["src/dseq/_corrcore.pyx"], optional=True)],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=extensions)
