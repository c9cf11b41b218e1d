# this property will be overwritten by value from pyproject.toml
__version__ = "0.0.0"
