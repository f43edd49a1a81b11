"""
This module contains the unit tests for the Python modules.
"""
