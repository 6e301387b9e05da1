from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name="regfiber",
    version="1.0.0",
    description="Regularity criterion checks for affine Springer fibers of GL(n) in exact arithmetic",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(include=["regfiber", "regfiber.*"]),
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
    ],
    python_requires=">=3.9",
    install_requires=[],
    extras_require={
        "test": ["pytest>=7", "sympy>=1.10"],
    },
    entry_points={
        "console_scripts": [
            "regfiber=regfiber.cli:main",
        ],
    },
    include_package_data=True,
    package_data={
        "regfiber": ["fixtures/*.json"],
    },
)
