from setuptools import setup, find_packages

# defines __version__
exec(open("cubealg/_version.py").read())

setup(
    name="cubealg",
    version=__version__,
    description=
        "Exact Groebner and descent bases for unit-cube quotient algebras",
    long_description=open("README.rst").read(),
    license="MIT",
    packages=find_packages(exclude=["cubealg.tests"]),
    package_data={'cubealg': ['py.typed']},
    python_requires=">=3.8",
    entry_points={
        "console_scripts": ["cubealg = cubealg._cli:main"],
    },
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: Implementation :: CPython",
        "Programming Language :: Python :: Implementation :: PyPy",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3 :: Only",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
