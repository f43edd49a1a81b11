"""
This module contains
the one-step operator and its powers in :mod:`qtmpy.simulate.transition`,
the observables and the measurements in :mod:`qtmpy.simulate.measurement`,
and the halting protocol in :mod:`qtmpy.simulate.halting`.

All functions take the local transition function, an instance of
:class:`qtmpy.simulate.transition.LocalTransitionFunction`, and return
new states. No function modifies its arguments.
"""
