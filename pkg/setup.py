from setuptools import find_packages, setup

install_requires = [
  "mpmath>=1.3.0",
  "pydantic>=2.9.0",
  "rich>=13.7.0",
  "sympy>=1.12",
  "tqdm>=4.66.0",
]

extras_require = {
  "testing": [
    "hypothesis>=6.100.0",
    "pytest>=8.0.0",
  ],
}

setup(
  name="trislope",
  version="0.1.0",
  packages=find_packages(exclude=["test", "test.*", "examples", "examples.*"]),
  python_requires=">=3.9",
  install_requires=install_requires,
  extras_require=extras_require,
  entry_points={"console_scripts": ["trislope = trislope.main:run"]},
)
