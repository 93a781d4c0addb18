from setuptools import find_namespace_packages, setup

setup(
    author="Benoit Lagae",
    author_email="benoit.lagae@hotmail.com",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Environment :: Console",
        "Intended Audience :: Education",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Natural Language :: English",
        "Operating System :: OS Independent",
        "Operating System :: POSIX",
        "Programming Language :: Python :: 3.9",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Topic :: Utilities",
    ],
    description="Multidimensional sieve for Boolean matrices up to cyclic row and column rotation",
    keywords=["combinatorics", "sieve", "boolean matrices", "burnside", "enumeration"],
    license="MIT",
    long_description="""mdsieve scans all m x n Boolean matrices with a crossing-out board addressed by
    row codes, and lists one representative of every class of matrices that are equal up to moving
    the last row or the last column to the first place. Independent oracles check every count.""",
    name="mdsieve",
    packages=find_namespace_packages(include=["mdsieve", "mdsieve.*"]),
    install_requires=["bitarray>=2.5", "click", "pyYAML"],
    python_requires=">=3.9",
    version="0.1.0",
    zip_safe=False,
    package_data={"mdsieve": ["py.typed"]},
    entry_points={"console_scripts": ["mdsieve=mdsieve.cli:mdsieve"]},
)
