import platform

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # the numpy fallback is used at import time
    ext_modules = []
else:
    flags = ["-O3"]
    if platform.machine().lower() in ("x86_64", "amd64"):
        flags.append("-mpopcnt")
    ext_modules = cythonize(
        [Extension("z4gbent._kernels", ["src/z4gbent/_kernels.pyx"], extra_compile_args=flags)],
        compiler_directives={"language_level": 3},
    )

setup(ext_modules=ext_modules)
