#!/usr/bin/env python
# -*- coding: utf-8 -*-
#######################################################
# Random machines and states for the test suites.
#######################################################
"""
Random local transition functions and states.

All functions take a seeded ``numpy.random.Generator`` so that every
machine can be reproduced from its seed.
"""
import math

import numpy as np
from scipy.linalg import qr

from qtmpy.machine.definition import MachineSpec
from qtmpy.simulate.transition import MOVES

_S = 1 / math.sqrt(2)

# Entries of magnitude one, used for columns with a single entry.
PHASES = (1, -1, 1j, -1j, (1 + 1j) * _S, (1 - 1j) * _S, (-1 + 1j) * _S, (-1 - 1j) * _S)

# Positive entries, used for columns with more than one entry.
WEIGHTS = (_S, 0.5)

ENTRY_SET = PHASES + WEIGHTS


def symbols(nQ, nS):
    """ Return the processor and tape symbols ``(["q0", ...], ["B", "a", "b", ...])``."""
    Q = [f"q{i}" for i in range(nQ)]
    S = ["B"] + [chr(ord('a') + i) for i in range(nS - 1)]
    return Q, S


def _machine(nQ, nS, entries):
    Q, S = symbols(nQ, nS)
    return MachineSpec(Q, S, Q[0], Q[-1], S[0], entries)


def haar_unitary(n, rng):
    """ Return a Haar-random unitary matrix of size ``n x n``.

    :param n: The dimension.
    :param rng: A ``numpy.random.Generator``.
    """
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    q, r = qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_sparse_machine(rng, nQ, nS, maxEntries=3):
    """ Return a machine whose columns have up to ``maxEntries`` entries from :data:`ENTRY_SET`.

    :param rng: A ``numpy.random.Generator``.
    :param nQ: The number of processor symbols.
    :param nS: The number of tape symbols.
    :param maxEntries: The largest number of entries of one column.

    A column with one entry takes a value from :data:`PHASES`,
    a column with more entries takes values from :data:`WEIGHTS`.
    Most of these machines are not unitary.
    """
    Q, S = symbols(nQ, nS)
    targets = [(p, tau, d) for p in Q for tau in S for d in MOVES]
    entries = dict()
    for q in Q:
        for sigma in S:
            k = int(rng.integers(0, maxEntries + 1))
            chosen = rng.choice(len(targets), size=k, replace=False)
            for i in chosen:
                values = PHASES if k == 1 else WEIGHTS
                entries[(q, sigma) + targets[i]] = complex(values[int(rng.integers(len(values)))])
    return _machine(nQ, nS, entries)


def haar_column_machine(rng, nQ, nS):
    """ Return a machine whose columns are orthonormal, but which is generically not unitary.

    The columns are the first :math:`|Q||\\Sigma|` columns of a Haar-random
    unitary of dimension :math:`3|Q||\\Sigma|`, hence conditions (a) and (b) hold
    and conditions (c) and (d) fail for almost all samples.
    """
    Q, S = symbols(nQ, nS)
    rows = [(p, tau, d) for p in Q for tau in S for d in MOVES]
    V = haar_unitary(len(rows), rng)
    entries = dict()
    for j, (q, sigma) in enumerate((q, sigma) for q in Q for sigma in S):
        for i, row in enumerate(rows):
            entries[(q, sigma) + row] = complex(V[i, j])
    return _machine(nQ, nS, entries)


def _directions(rng, Q):
    return {p: int(rng.choice(MOVES)) for p in Q}


def permutation_machine(rng, nQ, nS, phases=False):
    """ Return a unitary machine that permutes the pairs :math:`(q, \\sigma)`.

    :param rng: A ``numpy.random.Generator``.
    :param nQ: The number of processor symbols.
    :param nS: The number of tape symbols.
    :param phases: If ``True``, every entry is multiplied with a random element of :data:`PHASES`.

    Every target state :math:`p` has one head direction, so
    the conditions (c) and (d) hold.
    """
    Q, S = symbols(nQ, nS)
    pairs = [(q, sigma) for q in Q for sigma in S]
    perm = rng.permutation(len(pairs))
    dirs = _directions(rng, Q)
    entries = dict()
    for j, src in enumerate(pairs):
        p, tau = pairs[int(perm[j])]
        amp = complex(PHASES[int(rng.integers(len(PHASES)))]) if phases else 1 + 0j
        entries[src + (p, tau, dirs[p])] = amp
    return _machine(nQ, nS, entries)


def phase_machine(rng, nQ, nS):
    """ Return a permutation machine with random phases."""
    return permutation_machine(rng, nQ, nS, phases=True)


def mixing_machine(rng, nQ, nS):
    """ Return a unitary machine with dense columns.

    With a Haar-random unitary :math:`V` on the pairs :math:`(q, \\sigma)` and
    one head direction :math:`d_p` per state, the entries are
    :math:`D(q, \\sigma, p, \\tau, d_p) = V_{(p, \\tau), (q, \\sigma)}`.
    """
    Q, S = symbols(nQ, nS)
    pairs = [(q, sigma) for q in Q for sigma in S]
    V = haar_unitary(len(pairs), rng)
    dirs = _directions(rng, Q)
    entries = dict()
    for j, src in enumerate(pairs):
        for i, (p, tau) in enumerate(pairs):
            entries[src + (p, tau, dirs[p])] = complex(V[i, j])
    return _machine(nQ, nS, entries)


def halting_safe_machine(rng):
    """ Return a unitary machine that satisfies the stationarity condition from a blank tape.

    The machine has the states ``q0``, ``q1`` and ``qf``, the tape symbols
    ``B``, ``a`` and ``b``, and always moves right.
    From a blank tape, the running branches keep the tape blank while a
    Haar-random unitary decides in every step between continuing in ``q0`` or ``q1``
    and halting after writing ``a`` or ``b``. The halted branch moves right over
    blank cells forever.
    """
    Q = ["q0", "q1", "qf"]
    S = ["B", "a", "b"]
    W = haar_unitary(4, rng)
    sources = [("q0", "B"), ("q1", "B"), ("q0", "a"), ("q1", "a")]
    targets = [("q0", "B"), ("q1", "B"), ("qf", "a"), ("qf", "b")]
    entries = dict()
    for j, src in enumerate(sources):
        for i, tgt in enumerate(targets):
            entries[src + tgt + (1,)] = complex(W[i, j])
    rest = {("qf", "B"): ("qf", "B"),
            ("q0", "b"): ("q0", "a"),
            ("q1", "b"): ("q0", "b"),
            ("qf", "a"): ("q1", "a"),
            ("qf", "b"): ("q1", "b")}
    for src, tgt in rest.items():
        entries[src + tgt + (1,)] = 1 + 0j
    return MachineSpec(Q, S, "q0", "qf", "B", entries)


def random_machine(rng, nQ, nS):
    """ Return a machine from a family that is drawn at random.

    :return: The tuple ``(family, machine)``.
    """
    families = {'sparse': random_sparse_machine,
                'haar-columns': haar_column_machine,
                'permutation': permutation_machine,
                'phase': phase_machine,
                'mixing': mixing_machine}
    name = sorted(families)[int(rng.integers(len(families)))]
    return name, families[name](rng, nQ, nS)


def random_state(rng, machine, size=4, maxCell=3):
    """ Return a random normalized superposition of ``size`` configurations.

    :param rng: A ``numpy.random.Generator``.
    :param machine: The machine.
    :param size: The number of configurations that are drawn. Duplicates are merged.
    :param maxCell: Tape symbols and head positions are in ``[-maxCell, maxCell]``.
    """
    from qtmpy.machine.state import QuantumState

    Q = machine.processorSymbols
    S = machine.tapeSymbols
    amps = dict()
    for _ in range(size):
        cells = {int(c): S[int(rng.integers(len(S)))]
                 for c in rng.integers(-maxCell, maxCell + 1, size=2)}
        config = machine.configuration(Q[int(rng.integers(len(Q)))], machine.tape(cells),
                                       int(rng.integers(-maxCell, maxCell + 1)))
        amps[config] = amps.get(config, 0j) + complex(rng.standard_normal(), rng.standard_normal())
    return QuantumState(machine, amps).normalized()
