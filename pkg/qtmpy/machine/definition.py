#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
from qtmpy.machine.configuration import Configuration
from qtmpy.machine.tape import Tape


class MachineSpec(object):
    """ Class that defines a quantum Turing machine.

    :param processorSymbols: The processor symbols :math:`Q`, as an ordered sequence.
    :param tapeSymbols: The tape symbols :math:`\\Sigma`, as an ordered sequence.
    :param initial: The initial processor symbol :math:`q_0`.
    :param final: The final processor symbol :math:`q_f`.
    :param blank: The blank symbol :math:`B`.
    :param entries: A dictionary that maps ``(q, sigma, p, tau, d)`` to
                    the complex amplitude :math:`D(q, \\sigma, p, \\tau, d)`
                    of the local transition function.

    The alphabet :math:`\\Gamma` is the set of tape symbols without the blank.
    The order of ``processorSymbols`` and ``tapeSymbols`` defines the
    numbering of the symbols that is used by the observables and
    in all reports.

    The initial and final processor symbols may only coincide if
    :math:`Q` has a single element. Such a machine is called
    degenerate, see :meth:`isDegenerate`.

    Usage: Type

       >>> from qtmpy.machine.definition import MachineSpec
       >>> m = MachineSpec(["q"], ["B"], "q", "q", "B", {("q", "B", "q", "B", 1): 1.0})
       >>> m.alphabet
       ()
       >>> m.transition.amplitude("q", "B", "q", "B", 1)
       (1+0j)

    """

    def __init__(self, processorSymbols, tapeSymbols, initial, final, blank, entries=None):
        from qtmpy.simulate.transition import LocalTransitionFunction

        self._processorSymbols = tuple(processorSymbols)
        self._tapeSymbols = tuple(tapeSymbols)
        if len(self._processorSymbols) == 0:
            raise ValueError("The set of processor symbols must not be empty.")
        if len(self._tapeSymbols) == 0:
            raise ValueError("The set of tape symbols must not be empty.")
        for name, symbols in (("processor", self._processorSymbols), ("tape", self._tapeSymbols)):
            if len(set(symbols)) != len(symbols):
                raise ValueError(f"The {name} symbols {list(symbols)} contain duplicates.")
        if initial not in self._processorSymbols:
            raise ValueError(f"Initial symbol '{initial}' is not a processor symbol.")
        if final not in self._processorSymbols:
            raise ValueError(f"Final symbol '{final}' is not a processor symbol.")
        if initial == final and len(self._processorSymbols) > 1:
            raise ValueError(
                f"Initial and final symbol are both '{initial}', which is only allowed if there is one processor symbol.")
        if blank not in self._tapeSymbols:
            raise ValueError(f"Blank symbol '{blank}' is not a tape symbol.")

        self._initial = initial
        self._final = final
        self._blank = blank
        self._alphabet = tuple(s for s in self._tapeSymbols if s != blank)
        self._processorIndex = {q: i for i, q in enumerate(self._processorSymbols)}
        self._tapeIndex = {s: i for i, s in enumerate(self._tapeSymbols)}
        self._transition = LocalTransitionFunction(self, entries if entries is not None else {})
        self._transition.checkSymbols()

    @property
    def processorSymbols(self):
        """ The processor symbols :math:`Q`."""
        return self._processorSymbols

    @property
    def tapeSymbols(self):
        """ The tape symbols :math:`\\Sigma`."""
        return self._tapeSymbols

    @property
    def alphabet(self):
        """ The alphabet :math:`\\Gamma`, which are the tape symbols without the blank."""
        return self._alphabet

    @property
    def initial(self):
        return self._initial

    @property
    def final(self):
        return self._final

    @property
    def blank(self):
        return self._blank

    @property
    def transition(self):
        """ The local transition function, an instance of
            :class:`qtmpy.simulate.transition.LocalTransitionFunction`.
        """
        return self._transition

    def isDegenerate(self):
        """ Return ``True`` if the initial and the final processor symbol coincide."""
        return self._initial == self._final

    def processorIndex(self, q):
        """ Return the index of the processor symbol ``q``."""
        try:
            return self._processorIndex[q]
        except KeyError:
            raise ValueError(f"'{q}' is not a processor symbol.")

    def tapeIndex(self, sigma):
        """ Return the index of the tape symbol ``sigma``."""
        try:
            return self._tapeIndex[sigma]
        except KeyError:
            raise ValueError(f"'{sigma}' is not a tape symbol.")

    def tape(self, cells=None):
        """ Return a tape over the tape symbols of this machine.

        :param cells: An optional dictionary that maps cell indices to symbols.
        """
        return Tape(self._tapeSymbols, self._blank, cells)

    def configuration(self, processor, tape=None, head=0):
        """ Return a configuration of this machine.

        :param processor: The processor symbol.
        :param tape: The tape, or a dictionary of cells. Defaults to the blank tape.
        :param head: The head position.
        """
        self.processorIndex(processor)
        if not isinstance(tape, Tape):
            tape = self.tape(tape)
        elif tape.blank != self._blank or tape.symbols != self._tapeSymbols:
            raise ValueError(f"Tape {tape} is not defined over the tape symbols of this machine.")
        return Configuration(processor, tape, head)

    def configurationKey(self, configuration):
        """ Return a sort key that orders configurations by processor symbol, head position and tape.
        """
        return (self._processorIndex[configuration.processor],
                configuration.head,
                tuple((c, self._tapeIndex[s]) for c, s in configuration.tape.items()))

    def __eq__(self, other):
        if not isinstance(other, MachineSpec):
            return NotImplemented
        if self is other:
            return True
        return (self._processorSymbols == other._processorSymbols
                and self._tapeSymbols == other._tapeSymbols
                and self._initial == other._initial
                and self._final == other._final
                and self._blank == other._blank
                and self._transition.entries() == other._transition.entries())

    def __ne__(self, other):
        ret = self.__eq__(other)
        return ret if ret is NotImplemented else not ret

    def __hash__(self):
        return hash((self._processorSymbols, self._tapeSymbols, self._initial, self._final, self._blank))

    def __repr__(self):
        return (f"MachineSpec(Q={list(self._processorSymbols)}, Sigma={list(self._tapeSymbols)}, "
                f"initial='{self._initial}', final='{self._final}', blank='{self._blank}', "
                f"entries={len(self._transition)})")
