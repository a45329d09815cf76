from setuptools import setup

with open("README.md", "r") as fh:
    long_description = fh.read()

setup(
    name="fordspheres",
    version="0.1",
    keywords="Ford circles Ford spheres Heegner Eisenstein Gaussian",
    description="Exact arithmetic for Ford circles and Ford spheres over imaginary quadratic rings.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    zip_safe=False,
    python_requires=">=3.9",
    install_requires=["numpy", "sympy"],
    entry_points={"console_scripts": ["fordspheres=fordspheres.cli:main"]},
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
    packages=["fordspheres"],
)
