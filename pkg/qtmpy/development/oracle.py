#!/usr/bin/env python
# -*- coding: utf-8 -*-
#######################################################
# Brute-force unitarity check on a cyclic tape of N cells.
#######################################################
"""
Independent check of the unitarity conditions.

The time evolution is written as a dense matrix on a tape with ``N`` cells
where the head moves modulo ``N``. The matrix is unitary if the local
transition function satisfies the conditions (a) to (d) and ``N >= 3``.
For ``N >= 5``, the converse holds too. For ``N = 4``, the overlaps of a
left and a right move that reach the same cell from two sides are added up,
and for ``N = 3`` the same happens for a move and a stay. Hence, the matrix may be
unitary even though the local transition function is not.
"""
import itertools

import numpy as np

# Smallest tape on which the three head displacements are distinct.
MIN_CELLS = 3

# Largest dimension of the matrix that will be built.
MAX_DIMENSION = 10000


class DimensionError(ValueError):
    """ Exception that is raised if the cyclic matrix would be too large."""

    def __init__(self, dimension, maxDimension):
        ValueError.__init__(
            self, f"Dimension {dimension} of the cyclic configuration space exceeds the limit {maxDimension}.")
        self.dimension = dimension
        self.maxDimension = maxDimension


class CyclicConfigSpace(object):
    """ Configurations on a cyclic tape with ``cellCount`` cells.

    :param machine: The machine, an instance of :class:`qtmpy.machine.definition.MachineSpec`.
    :param cellCount: The number of cells :math:`N`, at least ``3``.

    A configuration is a tuple ``(q, word, head)`` where ``word`` is a tuple
    of :math:`N` tape symbols and ``0 <= head < N``.
    The index of a configuration is its position in the lexicographic order
    of ``(q, word, head)``, using the order of the symbols of the machine
    and with cell ``0`` being the most significant letter of ``word``.

    Usage: Type

       >>> from qtmpy.machine.definition import MachineSpec
       >>> from qtmpy.development.oracle import CyclicConfigSpace
       >>> m = MachineSpec(["q"], ["B", "1"], "q", "q", "B")
       >>> s = CyclicConfigSpace(m, 3)
       >>> s.dimension
       24
       >>> s.configuration(4)
       ('q', ('B', 'B', '1'), 1)

    """

    def __init__(self, machine, cellCount):
        if isinstance(cellCount, bool) or not isinstance(cellCount, int):
            raise ValueError(f"Number of cells must be an integer, received '{cellCount}'.")
        if cellCount < MIN_CELLS:
            raise ValueError(f"Number of cells must be at least {MIN_CELLS}, received {cellCount}.")
        self._machine = machine
        self._cellCount = cellCount
        self._nQ = len(machine.processorSymbols)
        self._nS = len(machine.tapeSymbols)

    @property
    def machine(self):
        return self._machine

    @property
    def cellCount(self):
        return self._cellCount

    @property
    def dimension(self):
        """ The number :math:`|Q| \\cdot |\\Sigma|^N \\cdot N` of configurations."""
        return self._nQ * self._nS**self._cellCount * self._cellCount

    def index(self, q, word, head):
        """ Return the index of the configuration ``(q, word, head)``."""
        N = self._cellCount
        if len(word) != N:
            raise ValueError(f"Tape word must have {N} symbols, received {len(word)}.")
        if not 0 <= head < N:
            raise ValueError(f"Head position must be in [0, {N}), received {head}.")
        w = 0
        for s in word:
            w = w * self._nS + self._machine.tapeIndex(s)
        return (self._machine.processorIndex(q) * self._nS**N + w) * N + head

    def configuration(self, index):
        """ Return the configuration ``(q, word, head)`` with index ``index``."""
        if not 0 <= index < self.dimension:
            raise ValueError(f"Index must be in [0, {self.dimension}), received {index}.")
        N = self._cellCount
        rest, head = divmod(index, N)
        qi, w = divmod(rest, self._nS**N)
        word = list()
        for _ in range(N):
            w, si = divmod(w, self._nS)
            word.append(self._machine.tapeSymbols[si])
        return (self._machine.processorSymbols[qi], tuple(reversed(word)), head)

    def __iter__(self):
        """ Iterate over all configurations in the order of their index."""
        N = self._cellCount
        for q in self._machine.processorSymbols:
            for word in itertools.product(self._machine.tapeSymbols, repeat=N):
                for head in range(N):
                    yield (q, word, head)

    def __len__(self):
        return self.dimension


def build_cyclic_matrix(d_fn, space, maxDimension=MAX_DIMENSION):
    """ Return the matrix of one step on the cyclic tape.

    :param d_fn: The local transition function.
    :param space: The configuration space, an instance of :class:`CyclicConfigSpace`.
    :param maxDimension: The largest dimension that is accepted.
    :return: A dense complex numpy array ``U`` with ``U[to, from]`` being the amplitude
             to go from configuration ``from`` to configuration ``to``.

    A :class:`DimensionError` is raised if the dimension exceeds ``maxDimension``.
    """
    dim = space.dimension
    if dim > maxDimension:
        raise DimensionError(dim, maxDimension)
    N = space.cellCount
    U = np.zeros((dim, dim), dtype=complex)
    for frm, (q, word, head) in enumerate(space):
        for (p, tau, d), amp in d_fn._column(q, word[head]):
            newWord = word[:head] + (tau,) + word[head + 1:]
            U[space.index(p, newWord, (head + d) % N), frm] += amp
    return U


def is_unitary(matrix, tolerance=1E-9):
    """ Check whether ``matrix`` is unitary.

    :param matrix: A square matrix.
    :param tolerance: The tolerance for the deviation.
    :return: The tuple ``(flag, deviation)`` where ``deviation`` is the largest
             magnitude of an entry of :math:`U^\\dagger U - I` or :math:`U U^\\dagger - I`.

    Usage: Type

       >>> import numpy as np
       >>> from qtmpy.development.oracle import is_unitary
       >>> is_unitary(np.eye(3))
       (True, 0.0)

    """
    M = np.asarray(matrix)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"Matrix must be square, received shape {M.shape}.")
    eye = np.eye(M.shape[0])
    H = M.conj().T
    dev = max(np.abs(H @ M - eye).max(initial=0.0), np.abs(M @ H - eye).max(initial=0.0))
    dev = float(dev)
    return (dev <= tolerance, dev)


class OracleReport(object):
    """ Comparison of the verdict of the validator with the verdict of the cyclic matrix.

    :param cellCount: The number of cells.
    :param dimension: The dimension of the matrix.
    :param unitary: ``True`` if the cyclic matrix is unitary.
    :param deviation: The deviation of the cyclic matrix from unitarity.
    :param validation: The :class:`qtmpy.development.validator.ValidationReport`.
    """

    def __init__(self, cellCount, dimension, unitary, deviation, validation):
        self.cellCount = cellCount
        self.dimension = dimension
        self.unitary = unitary
        self.deviation = deviation
        self.validation = validation

    @property
    def agree(self):
        return self.unitary == self.validation.passed

    def to_dict(self):
        return {'cells': self.cellCount,
                'dimension': self.dimension,
                'unitary': self.unitary,
                'deviation': self.deviation,
                'validator_passed': self.validation.passed,
                'failed_conditions': self.validation.failedConditions(),
                'agree': self.agree}


def cross_check(d_fn, cellCount, tolerance=1E-9, maxDimension=MAX_DIMENSION):
    """ Build the cyclic matrix and compare its unitarity with the validator.

    :param d_fn: The local transition function.
    :param cellCount: The number of cells.
    :param tolerance: The tolerance for both checks.
    :param maxDimension: The largest dimension that is accepted.
    :return: An instance of :class:`OracleReport`.
    """
    from qtmpy.development.validator import validate

    space = CyclicConfigSpace(d_fn.machine, cellCount)
    U = build_cyclic_matrix(d_fn, space, maxDimension)
    flag, dev = is_unitary(U, tolerance)
    return OracleReport(cellCount, space.dimension, flag, dev, validate(d_fn, tolerance))
