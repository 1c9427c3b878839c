from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "gsisemigroups._core",
    sources=[
        "src/semigroup.cpp",
        "src/classification.cpp",
        "src/gluing.cpp",
        "src/enumeration.cpp",
        "src/even_frobenius.cpp",
        "src/render.cpp",
        "src/python_module.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
