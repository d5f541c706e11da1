from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # The package runs on the pure-Python kernels without the extension.
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "fbblat._kernel.fastcore",
                ["src/fbblat/_kernel/fastcore.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
