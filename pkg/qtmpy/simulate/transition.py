#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
from qtmpy.machine.configuration import Configuration
from qtmpy.machine.state import QuantumState

MOVES = (-1, 0, 1)


class LocalTransitionFunction(object):
    """ Class that represents the local transition function :math:`D` of a machine.

    :param machine: The machine, an instance of :class:`qtmpy.machine.definition.MachineSpec`,
                    whose symbols are used by the entries.
    :param entries: A dictionary that maps ``(q, sigma, p, tau, d)`` to a complex amplitude.

    The entry :math:`D(q, \\sigma, p, \\tau, d) = c` is the instruction:
    if the processor is in ``q`` and the head reads ``sigma``, then with
    amplitude ``c`` the processor enters ``p``, the head writes ``tau``
    and moves by ``d``, where ``d`` is ``-1`` (left), ``0`` (stay) or ``1`` (right).

    Keys that are not present have amplitude zero, and zero amplitudes are not stored.
    Whether the symbols belong to the machine is checked by :meth:`checkSymbols`,
    which :class:`qtmpy.machine.definition.MachineSpec` calls on construction.

    Instances are normally not constructed directly but obtained
    from :attr:`qtmpy.machine.definition.MachineSpec.transition`.
    """

    def __init__(self, machine, entries):
        self._machine = machine
        self._entries = dict()
        # Column index (q, sigma) -> list of ((p, tau, d), amplitude)
        self._columns = dict()
        # Row index (p, tau, d) -> list of ((q, sigma), amplitude)
        self._rows = dict()
        for key, amp in entries.items():
            if len(key) != 5:
                raise ValueError(f"Transition key {key} must have the form (q, sigma, p, tau, d).")
            q, sigma, p, tau, d = key
            if isinstance(d, bool) or d not in MOVES:
                raise ValueError(f"Head move {d} in transition {key} must be -1, 0 or 1.")
            amp = complex(amp)
            if amp == 0:
                continue
            key = (q, sigma, p, tau, int(d))
            self._entries[key] = amp
            self._columns.setdefault((q, sigma), []).append(((p, tau, int(d)), amp))
            self._rows.setdefault((p, tau, int(d)), []).append(((q, sigma), amp))

    @property
    def machine(self):
        return self._machine

    def amplitude(self, q, sigma, p, tau, d):
        """ Return :math:`D(q, \\sigma, p, \\tau, d)`."""
        return self._entries.get((q, sigma, p, tau, d), 0j)

    def entries(self):
        """ Return a copy of the dictionary of non-zero entries."""
        return dict(self._entries)

    def column(self, q, sigma):
        """ Return the non-zero entries for processor ``q`` reading ``sigma``.

        :return: A dictionary that maps ``(p, tau, d)`` to the amplitude.
        """
        return dict(self._columns.get((q, sigma), []))

    def _column(self, q, sigma):
        return self._columns.get((q, sigma), ())

    def _row(self, p, tau, d):
        return self._rows.get((p, tau, d), ())

    def isUnidirectional(self):
        """ Return ``True`` if the head moves at every step, i.e., no entry has ``d = 0``.

        For such functions, condition (d) of the unitarity characterization
        holds automatically.
        """
        return all(key[4] != 0 for key in self._entries)

    def checkSymbols(self):
        """ Raise a ``ValueError`` if an entry uses a symbol that does not belong to the machine.
        """
        Q = set(self._machine.processorSymbols)
        S = set(self._machine.tapeSymbols)
        for key in self._entries:
            q, sigma, p, tau, _ = key
            for sym, allowed, kind in ((q, Q, "processor"), (sigma, S, "tape"),
                                       (p, Q, "processor"), (tau, S, "tape")):
                if sym not in allowed:
                    raise ValueError(f"Transition {key} uses '{sym}', which is not a {kind} symbol.")

    def __len__(self):
        return len(self._entries)

    def __repr__(self):
        return f"LocalTransitionFunction({len(self._entries)} entries)"


def matrix_element(d_fn, to, frm):
    """ Return the matrix element :math:`\\langle` ``to`` :math:`|U|` ``frm`` :math:`\\rangle`.

    :param d_fn: The local transition function.
    :param to: The target configuration.
    :param frm: The source configuration.

    The element is zero unless the tapes agree on all cells other than the
    head position of ``frm`` and the head moves by at most one cell.
    Otherwise, it is the entry of ``d_fn`` selected by the head displacement.
    """
    d = to.head - frm.head
    if d not in MOVES:
        return 0j
    blank = frm.tape.blank
    if frm.tape.write(frm.head, blank) != to.tape.write(frm.head, blank):
        return 0j
    return d_fn.amplitude(frm.processor, frm.tape.read(frm.head),
                          to.processor, to.tape.read(frm.head), d)


def apply_step(d_fn, state):
    """ Return :math:`U|\\psi\\rangle` for one computational step.

    :param d_fn: The local transition function.
    :param state: The state :math:`|\\psi\\rangle`, an instance of
                  :class:`qtmpy.machine.state.QuantumState`.

    Each configuration :math:`(q, T, \\xi)` in the support contributes
    its amplitude times :math:`D(q, T(\\xi), p, \\tau, d)` to
    :math:`(p, T^\\tau_\\xi, \\xi + d)`.
    """
    acc = dict()
    for config, amp in state.amplitudes().items():
        sigma = config.tape.read(config.head)
        for (p, tau, d), c in d_fn._column(config.processor, sigma):
            target = Configuration(p, config.tape.write(config.head, tau), config.head + d)
            acc[target] = acc.get(target, 0j) + amp * c
    return QuantumState(state.machine, acc)


def apply_step_adjoint(d_fn, state):
    """ Return :math:`U^\\dagger|\\psi\\rangle`.

    :param d_fn: The local transition function.
    :param state: The state :math:`|\\psi\\rangle`.

    A configuration :math:`(p, T', \\xi')` is reached from sources whose head was at
    :math:`\\xi = \\xi' - d` and which wrote :math:`\\tau = T'(\\xi)`.
    The adjoint sends it back to :math:`(q, T'^\\sigma_\\xi, \\xi)` with the
    conjugate amplitude for every non-zero :math:`D(q, \\sigma, p, \\tau, d)`.
    """
    acc = dict()
    for config, amp in state.amplitudes().items():
        for d in MOVES:
            xi = config.head - d
            tau = config.tape.read(xi)
            for (q, sigma), c in d_fn._row(config.processor, tau, d):
                source = Configuration(q, config.tape.write(xi, sigma), xi)
                acc[source] = acc.get(source, 0j) + amp * c.conjugate()
    return QuantumState(state.machine, acc)


def evolve(d_fn, state, steps):
    """ Return :math:`U^t|\\psi\\rangle` with :math:`t` = ``steps``.

    :param d_fn: The local transition function.
    :param state: The initial state.
    :param steps: The number of steps, a non-negative integer.
    """
    if isinstance(steps, bool) or not isinstance(steps, int) or steps < 0:
        raise ValueError(f"Number of steps must be a non-negative integer, received '{steps}'.")
    for _ in range(steps):
        state = apply_step(d_fn, state)
    return state
