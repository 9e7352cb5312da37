from setuptools import setup, find_packages


setup(
    name="sdimring",
    version="1.0",
    description="Exact verification of strong metric dimension formulas for "
    "intersection graphs of ideals in products of chain rings",
    license="GPL",
    packages=find_packages(),
    install_requires=[
        "numpy",
        "scipy",
        "pandas>=1.5",
        "tqdm",
    ],
    extras_require={
        "test": ["pytest", "hypothesis"],
    },
    entry_points={
        "console_scripts": ["sdimring=sdimring.cli:main"],
    },
    python_requires=">=3.8",
)
