"""Build script: compiles the optional GF(p) elimination kernel.

The compiled extension is a pure speedup; if Cython or a C compiler is
unavailable the package installs anyway and falls back to the numpy
implementation in ``tatecoh._gfpkernel_py``.
"""
import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


def make_ext_modules():
    if os.environ.get("TATECOH_NO_EXT"):
        return []
    try:
        import numpy
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        return []
    ext = Extension(
        "tatecoh._gfpkernel",
        sources=["src/tatecoh/_gfpkernel.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    return cythonize([ext], compiler_directives={
        "language_level": 3,
        "boundscheck": False,
        "wraparound": False,
        "cdivision": True,
    })


class OptionalBuildExt(build_ext):
    """Swallow compiler failures; the package works without the extension."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001 - any build failure is non-fatal
            print(f"warning: building the C kernel failed ({exc}); "
                  "using the pure-python backend")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            print(f"warning: {ext.name} failed to compile ({exc}); "
                  "using the pure-python backend")


setup(ext_modules=make_ext_modules(), cmdclass={"build_ext": OptionalBuildExt})
