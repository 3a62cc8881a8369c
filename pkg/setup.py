"""Build script for the compiled band-kernel extension.

The extension is optional: if compilation fails the package installs
anyway and falls back to the pure-NumPy kernels at import time.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Degrade to the pure-Python kernels when the compiler is unavailable."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001
            print(f"warning: skipping compiled kernels ({exc}); "
                  "pure-NumPy fallback will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            print(f"warning: could not build {ext.name} ({exc}); "
                  "pure-NumPy fallback will be used")


def extensions():
    import numpy as np
    from Cython.Build import cythonize

    ext = Extension(
        "factorkf._bandkernels",
        ["src/factorkf/_bandkernels.pyx"],
        include_dirs=[np.get_include()],
        # -ffp-contract=off keeps results bitwise identical to the NumPy
        # fallback (no FMA fusion of a*b+c).
        extra_compile_args=["-O3", "-ffp-contract=off"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    return cythonize([ext], language_level=3)


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
