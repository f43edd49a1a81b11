"""
Examples
========
This module provides the gallery of machine files in ``machines/``
and a script that validates and runs all of them.
"""
