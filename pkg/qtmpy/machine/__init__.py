"""
This module contains the classes

- :func:`MachineSpec <qtmpy.machine.definition.MachineSpec>` that holds the symbol sets
  and the local transition function of a quantum Turing machine,
- :func:`Tape <qtmpy.machine.tape.Tape>`, a bilateral infinite tape with finitely many non-blank cells,
- :func:`Configuration <qtmpy.machine.configuration.Configuration>`, the label of a
  computational basis state, and
- :func:`QuantumState <qtmpy.machine.state.QuantumState>`, a finite superposition of configurations.

All of them are immutable values.
"""
