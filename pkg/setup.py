"""Build script: compiles the coordinate-arithmetic kernel when Cython is
available.  The package works without the extension (pure-Python fallback
selected at import), so any build failure downgrades to a plain install."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/lpcalc/_kernel.pyx"],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - depends on build host
    print(f"lpcalc: building without compiled kernel ({exc})")

setup(ext_modules=ext_modules)
