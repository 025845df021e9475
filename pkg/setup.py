"""Build script: compiles the optional Monte-Carlo kernel extension.

The package works without the extension (a pure-Python kernel is selected
at import time), so a failed compile only costs speed.  Set SDC_PURE_PYTHON=1
to skip the extension build entirely.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext
from setuptools.errors import CCompilerError, ExecError, PlatformError


class optional_build_ext(build_ext):
    """Build the extension if possible, otherwise install pure-Python only."""

    def run(self):
        try:
            super().run()
        except (CCompilerError, ExecError, PlatformError, FileNotFoundError) as exc:
            print(f"warning: extension build skipped ({exc}); "
                  "falling back to the pure-Python kernel")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except (CCompilerError, ExecError, PlatformError, FileNotFoundError) as exc:
            print(f"warning: building {ext.name} failed ({exc}); "
                  "falling back to the pure-Python kernel")


ext_modules = []
cmdclass = {}
if not os.environ.get("SDC_PURE_PYTHON"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("warning: Cython not available; building without the compiled kernel")
    else:
        ext_modules = cythonize(
            [Extension("sdc._kernel", ["src/sdc/_kernel.pyx"])],
            compiler_directives={"language_level": "3"},
        )
        cmdclass["build_ext"] = optional_build_ext

setup(ext_modules=ext_modules, cmdclass=cmdclass)
