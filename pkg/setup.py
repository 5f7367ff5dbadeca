import os

from setuptools import Extension, setup

# Strict IEEE semantics are load-bearing: the proven error bounds assume one
# rounding per operation, so fused multiply-add contraction and value-changing
# optimizations must stay off.  -O3 alone (no -ffast-math) keeps gcc/clang
# IEEE-conformant; -ffp-contract=off makes the no-FMA guarantee explicit.
KERNEL_FLAGS = ["-O3", "-ffp-contract=off"]

extensions = [
    Extension(
        "fastnorm._kernels",
        ["src/fastnorm/_kernels.pyx"],
        extra_compile_args=KERNEL_FLAGS,
    )
]

if os.environ.get("FASTNORM_SKIP_EXT"):
    ext_modules = []
else:
    from Cython.Build import cythonize

    ext_modules = cythonize(extensions, language_level=3)

setup(ext_modules=ext_modules)
