# Always prefer setuptools over distutils
from setuptools import setup, find_packages

setup(
    name="lerchlib",
    version="1.0.0",
    description="lerchlib",
    long_description="High-precision evaluation and zero finding for the Lerch zeta-function",
    url="",
    author="",
    author_email="",
    license="MPL2",
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: Mozilla Public License 2.0",
        "Programming Language :: Python :: 3",
    ],
    keywords="lerch zeta zeros",
    packages=find_packages(exclude=["contrib", "docs", "test", "test.*"]),
    install_requires=[
        "psutil", "numpy", "pandas", "aenum", "mpmath>=1.2"
    ],
    extras_require={},
    package_data={},
    data_files=[
        ("Tools/lerchlib/lerchtable", ["files/lerchtable/lambdas.json"]),
    ],
    entry_points={
        "console_scripts": [
            "lercheval = lerchlib.scripts.lercheval:cli",
            "lerchzeros = lerchlib.scripts.lerchzeros:cli",
            "lerchtable = lerchlib.scripts.lerchtable:cli",
            "lerchverify = lerchlib.scripts.lerchverify:cli",
            "lerchdeep = lerchlib.scripts.lerchdeep:cli",
        ]
    },
    python_requires=">=3.8"
)
