#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
import math

# Amplitudes with a magnitude at or below this value are removed
# after each linear operation.
DROP_THRESHOLD = 1E-15

# Tolerance on the norm for a state to count as normalized.
NORM_TOLERANCE = 1E-10


class QuantumState(object):
    """ Class that represents a state of a quantum Turing machine with finite support.

    :param machine: The machine, an instance of :class:`qtmpy.machine.definition.MachineSpec`.
    :param amplitudes: A dictionary that maps instances of
                       :class:`qtmpy.machine.configuration.Configuration` to complex amplitudes.

    Amplitudes whose magnitude is at most ``DROP_THRESHOLD`` are not stored.
    Instances are immutable; all operations return new states.
    """
    __slots__ = ('_machine', '_amplitudes')

    def __init__(self, machine, amplitudes=None):
        self._machine = machine
        self._amplitudes = dict()
        if amplitudes is not None:
            for config, amp in amplitudes.items():
                amp = complex(amp)
                if abs(amp) > DROP_THRESHOLD:
                    self._amplitudes[config] = amp

    @property
    def machine(self):
        return self._machine

    def amplitude(self, configuration):
        """ Return the amplitude of ``configuration``, which is zero outside the support."""
        return self._amplitudes.get(configuration, 0j)

    def support(self):
        """ Return the configurations with non-zero amplitude, in canonical order."""
        return sorted(self._amplitudes.keys(), key=self._machine.configurationKey)

    def items(self):
        """ Return the ``(configuration, amplitude)`` pairs in canonical order."""
        return [(c, self._amplitudes[c]) for c in self.support()]

    def amplitudes(self):
        """ Return a copy of the amplitude dictionary."""
        return dict(self._amplitudes)

    def norm(self):
        """ Return the norm :math:`\\|\\psi\\|`."""
        return math.sqrt(math.fsum(abs(a)**2 for a in self._amplitudes.values()))

    def isNormalized(self, tolerance=NORM_TOLERANCE):
        """ Return ``True`` if :math:`|\\|\\psi\\| - 1| \\le` ``tolerance``."""
        return abs(self.norm() - 1.0) <= tolerance

    def normalized(self):
        """ Return this state divided by its norm.

        A ``ValueError`` is raised for the zero state.
        """
        nor = self.norm()
        if nor == 0:
            raise ValueError("Cannot normalize the zero state.")
        return self * (1.0 / nor)

    def filter(self, predicate):
        """ Return the state with the amplitudes of the configurations for which
            ``predicate`` is ``False`` set to zero.
        """
        return QuantumState(self._machine,
                            {c: a for c, a in self._amplitudes.items() if predicate(c)})

    def distance(self, other):
        """ Return :math:`\\|\\psi - \\phi\\|`."""
        return (self - other).norm()

    def _check_compatible(self, other):
        if not isinstance(other, QuantumState):
            raise ValueError(f"Expected a QuantumState, received '{other}'.")
        if self._machine != other._machine:
            raise ValueError("The states are defined over different machines.")

    def __add__(self, other):
        self._check_compatible(other)
        acc = dict(self._amplitudes)
        for c, a in other._amplitudes.items():
            acc[c] = acc.get(c, 0j) + a
        return QuantumState(self._machine, acc)

    def __sub__(self, other):
        return self + other * (-1.0)

    def __mul__(self, scalar):
        return QuantumState(self._machine, {c: a * scalar for c, a in self._amplitudes.items()})

    __rmul__ = __mul__

    def __len__(self):
        return len(self._amplitudes)

    def __iter__(self):
        return iter(self.items())

    def __repr__(self):
        terms = " + ".join(f"({a.real:.6g}{a.imag:+.6g}j){c}" for c, a in self.items())
        return f"QuantumState({terms if terms else '0'})"


def zero_state(machine):
    """ Return the zero vector of the state space of ``machine``."""
    return QuantumState(machine)


def basis_state(machine, configuration):
    """ Return the computational basis state :math:`|C\\rangle`.

    :param machine: The machine.
    :param configuration: The configuration :math:`C`.
    """
    machine.processorIndex(configuration.processor)
    return QuantumState(machine, {configuration: 1.0})


def inner_product(left, right):
    """ Return :math:`\\langle` ``left`` :math:`|` ``right`` :math:`\\rangle`.

    The inner product is conjugate-linear in ``left`` and linear in ``right``.
    A ``ValueError`` is raised if the states belong to different machines.
    """
    left._check_compatible(right)
    small, large = (left, right) if len(left) <= len(right) else (right, left)
    terms = []
    for c, a in small._amplitudes.items():
        b = large._amplitudes.get(c)
        if b is not None:
            terms.append(a.conjugate() * b if small is left else b.conjugate() * a)
    return complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))


def initial_state(machine, inputTape):
    """ Return the initial state :math:`|q_0\\rangle|T_{in}\\rangle|0\\rangle`.

    :param machine: The machine.
    :param inputTape: The input tape, for example as returned by
                      :func:`qtmpy.io.codec.encode`.
    """
    return basis_state(machine, machine.configuration(machine.initial, inputTape, 0))
