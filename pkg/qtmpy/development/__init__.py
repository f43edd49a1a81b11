"""
This module contains

- :func:`validate <qtmpy.development.validator.validate>` that checks the local
  transition function against the conditions (a) to (d) and returns a
  :func:`ValidationReport <qtmpy.development.validator.ValidationReport>` with the witnesses of all violations,
- :func:`cross_check <qtmpy.development.oracle.cross_check>` that builds the time evolution
  on a cyclic tape and compares its unitarity with the result of the validator, and
- the module :mod:`qtmpy.development.generators` with random machines and states for the tests.

"""
