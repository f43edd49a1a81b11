#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
from collections import namedtuple

from qtmpy.machine.tape import check_cell


class Configuration(namedtuple('Configuration', ['processor', 'tape', 'head'])):
    """ Configuration of a quantum Turing machine.

    :param processor: The processor symbol :math:`q`.
    :param tape: The tape, an instance of :class:`qtmpy.machine.tape.Tape`.
    :param head: The head position :math:`\\xi`, an integer.

    A configuration labels one state of the computational basis.
    It is hashable and can therefore be used as a key of the amplitude map
    of :class:`qtmpy.machine.state.QuantumState`.
    """
    __slots__ = ()

    def __new__(cls, processor, tape, head):
        return super(Configuration, cls).__new__(cls, processor, tape, check_cell(head))

    def scanned(self):
        """ Return the symbol under the head."""
        return self.tape.read(self.head)

    def __str__(self):
        return f"|{self.processor}, {self.tape}, {self.head}>"
