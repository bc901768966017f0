"""z2kit setup configuration."""

from setuptools import find_packages, setup

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name="z2kit",
    version="0.1.0",
    description="Z[Z/2]-module decomposition, free resolutions and exact M_r ⊗ O_n verification",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["_tests*", "examples*"]),
    python_requires=">=3.10",
    install_requires=[
        "pydantic>=2.4.0",
        "pydantic-settings>=2.0.0",
        "python-dotenv>=0.19.0",
        "sympy>=1.14",
    ],
    extras_require={
        "dev": [
            "black>=22.3.0",
            "hypothesis>=6.80.0",
            "isort>=5.10.1",
            "mypy>=0.961",
            "pytest>=7.1.2",
            "pytest-cov>=3.0.0",
            "ruff>=0.0.260",
        ],
    },
    entry_points={
        "console_scripts": [
            "z2kit=z2kit.cli:main",
        ],
    },
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
