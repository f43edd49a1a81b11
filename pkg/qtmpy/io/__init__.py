"""
This module contains

 - the functions *encode* and *decode* that map :math:`\\Gamma`-strings to the data slot of a tape,
 - the functions *read_machine* and *write_machine* for machine files,
 - the function *load_settings* that reads the default tolerances and limits, and
 - the class *Reporter* that can be used to report to the standard output and standard error streams.
"""
