from setuptools import setup, find_packages

setup(
    name="py-threshold",
    version="0.1.0",
    description="Random threshold graphs via creation sequences: closed-form invariants, exact distributions, oracles",
    long_description=open("README.md", encoding="utf-8").read(),
    long_description_content_type="text/markdown",
    author="DAN-MU-ZI",
    author_email="danmuzi@example.com",
    url="https://github.com/DAN-MU-ZI/pythresh",
    packages=find_packages(include=["pythresh", "pythresh.*"]),
    python_requires=">=3.8",
    install_requires=[
        "numpy>=1.17",
    ],
    extras_require={
        "dev": [
            "pytest",
            "pytest-cov",
            "hypothesis",
            "networkx",
            "scipy",
        ],
    },
    entry_points={
        "console_scripts": [
            "pythresh=pythresh.cli:main",
        ],
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
