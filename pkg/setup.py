"""Build hook for the optional compiled counting kernel.

The package is fully functional without the extension (a numpy fallback is
selected at import time), so any failure here is downgraded to a warning
rather than aborting the install.
"""

import warnings

from setuptools import setup
from setuptools.command.build_ext import build_ext


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        warnings.warn("Cython unavailable; installing without the compiled kernel")
        return []
    return cythonize(
        ["src/genfrob/_kernel/_ckernel.pyx"],
        compiler_directives={"language_level": "3"},
    )


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            warnings.warn(f"compiled kernel build failed ({exc}); using the numpy fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"compiled kernel build failed ({exc}); using the numpy fallback")


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
