"""
TODO
"""

import setuptools


VERSION = {
    "major": 0,
    "minor": 1,
    "patch": 0,
}


with open("README.md", "r") as handler:
    long_description = handler.read()


setuptools.setup(
    name="PingPongUnits",
    version="{}.{}.{}".format(
        VERSION.get("major"), VERSION.get("minor"), VERSION.get("patch")
    ),
    description="Exact Pell and Gauss units in quaternion orders over Q(sqrt(-d)), with machine-checked Ping-Pong and free-semigroup certificates.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    license="MIT",
    classifiers=[
        "License :: OSI Approved :: MIT License",
        "Intended Audience :: Science/Research",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Operating System :: POSIX",
        "Operating System :: Unix",
        "Operating System :: MacOS",
    ],
    packages=setuptools.find_packages(exclude=["tests", "tests.*"]),
    install_requires=["schema>=0.7.4", "pyyaml>=5.4.1", "click>=7.1.2", "mpmath>=1.2.1"],
    entry_points={
        "console_scripts": [
            "pingpong-units=PingPongUnits.cli:entry_point",
        ],
    },
    python_requires=">=3.8",
)
