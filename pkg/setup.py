import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Skip the extension when no compiler is available; the package falls back to Python."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001
            self.warn("compiled kernels not built (%s); using pure-Python fallback" % exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            self.warn("compiled kernels not built (%s); using pure-Python fallback" % exc)


def extensions():
    if os.environ.get("INTERVALNEST_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension("intervalnest._kernels", ["src/intervalnest/_kernels.pyx"],
                    extra_compile_args=["-O3"])
    try:
        return cythonize([ext], compiler_directives={"language_level": "3"}, quiet=True)
    except Exception as exc:  # noqa: BLE001
        print("cythonize failed (%s); installing without compiled kernels" % exc)
        return []


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
