"""Build script: compiles the optional solver speedup extension.

The package is fully functional without the extension; the solver falls
back to the pure-Python engine when the compiled module is unavailable.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the extension if possible, otherwise install pure-Python only."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler or Cython missing
            sys.stderr.write(
                "warning: building the solver extension failed (%s); "
                "falling back to the pure-Python engine\n" % exc
            )

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            sys.stderr.write(
                "warning: %s failed to compile (%s); the pure-Python engine "
                "will be used instead\n" % (ext.name, exc)
            )


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "rainbowdom.solver._speedups",
        ["src/rainbowdom/solver/_speedups.pyx"],
        language="c++",
        extra_compile_args=["-O2", "-std=c++11"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
