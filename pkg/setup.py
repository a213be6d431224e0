# -*- coding: utf-8 -*-


"""setup.py: setuptools control."""


from setuptools import find_packages, setup

from darbouxverifier.version import string as version_string

with open("README.md", "rb") as f:
    long_description = f.read().decode("utf-8")


setup(
    name="darboux-verifier",
    packages=find_packages(exclude=["tests", "examples", "examples.*"]),
    package_data={"darbouxverifier.aux": ["config_schema.yaml"]},
    entry_points={
        "console_scripts": [
            "darboux-verifier = darbouxverifier.darbouxverifier:main"
        ]
    },
    install_requires=[
        "numpy",
        "jsonschema>=4",
        "ruamel.yaml",
        "wrapt",
    ],
    extras_require={"test": ["pytest"]},
    python_requires=">=3.8",
    version=version_string,
    description="Certified Darboux and Riemann-Stieltjes enclosures and a change-of-variable verifier",
    long_description=long_description,
    long_description_content_type="text/markdown",
)
