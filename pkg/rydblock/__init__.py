"""Rydberg local-blockade simulation, embedding sweeps and MIS drive optimization."""

from .utility_library.shared.config import PACKAGE_VERSION

__version__ = PACKAGE_VERSION
