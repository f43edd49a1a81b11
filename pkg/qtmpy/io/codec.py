#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
import numbers


class DataSlot(object):
    """ Class that defines the data slot, the tape cells that carry the input and the output.

    :param start: The first cell :math:`m_0` of the slot.
    :param step: The distance between consecutive cells of the slot.
    :param numbering: Optional function that maps the index :math:`n` to the cell :math:`m_n`.
                      If specified, ``start`` and ``step`` are ignored.

    The numbering must be strictly increasing and non-negative.
    By default, the slot is :math:`m_n = n`.

    Usage: Type

       >>> from qtmpy.io.codec import DataSlot
       >>> s = DataSlot(step=2)
       >>> [s.cell(n) for n in range(4)]
       [0, 2, 4, 6]

    """

    def __init__(self, start=0, step=1, numbering=None):
        if numbering is None:
            for name, val in (("start", start), ("step", step)):
                if isinstance(val, bool) or not isinstance(val, numbers.Integral):
                    raise ValueError(f"Argument {name}={val} must be an integer.")
            if start < 0:
                raise ValueError(f"Argument start={start} must not be negative.")
            if step < 1:
                raise ValueError(f"Argument step={step} must be positive.")
        elif not callable(numbering):
            raise ValueError("Argument numbering must be callable.")
        self._start = int(start)
        self._step = int(step)
        self._numbering = numbering

    def cell(self, n):
        """ Return the cell :math:`m_n` of the slot index ``n``."""
        if n < 0:
            raise ValueError(f"Slot index {n} must not be negative.")
        if self._numbering is None:
            return self._start + self._step * n
        m = self._numbering(n)
        if m < 0 or (n > 0 and m <= self._numbering(n - 1)):
            raise ValueError(f"Slot numbering is not strictly increasing and non-negative at index {n}.")
        return m

    def __eq__(self, other):
        if not isinstance(other, DataSlot):
            return NotImplemented
        if self._numbering is not None or other._numbering is not None:
            return self._numbering is other._numbering
        return (self._start, self._step) == (other._start, other._step)

    def __hash__(self):
        return hash((self._start, self._step, self._numbering))

    def __repr__(self):
        if self._numbering is None:
            return f"DataSlot(start={self._start}, step={self._step})"
        return f"DataSlot(numbering={self._numbering!r})"


class GammaString(tuple):
    """ A finite string over the alphabet :math:`\\Gamma`, stored as a tuple of symbols.

    The string representation concatenates the symbols if they all consist
    of a single character, and separates them by a space otherwise.
    """

    def __new__(cls, symbols=(), alphabet=None):
        ret = super(GammaString, cls).__new__(cls, symbols)
        if alphabet is not None:
            for s in ret:
                if s not in alphabet:
                    raise ValueError(f"Symbol '{s}' of '{ret}' is not in the alphabet {list(alphabet)}.")
        return ret

    @staticmethod
    def fromText(text, alphabet):
        """ Parse ``text`` into a :class:`GammaString`.

        :param text: The text. If all symbols of ``alphabet`` are single characters,
                     each character is a symbol. Otherwise, symbols are separated
                     by white space or commas.
        :param alphabet: The alphabet :math:`\\Gamma`.
        """
        if all(len(s) == 1 for s in alphabet):
            symbols = [c for c in text if not c.isspace()]
        else:
            symbols = text.replace(",", " ").split()
        return GammaString(symbols, alphabet)

    def __str__(self):
        if all(len(s) == 1 for s in self):
            return "".join(self)
        return " ".join(self)

    def __repr__(self):
        return f"GammaString({str(self)!r})"


def encode(slot, x, machine):
    """ Return the tape that represents the :math:`\\Gamma`-string ``x``.

    :param slot: The data slot, an instance of :class:`DataSlot`.
    :param x: The string, a sequence of symbols of the alphabet of ``machine``.
    :param machine: The machine, which defines the tape symbols and the blank.

    The cell :math:`m_n` holds ``x[n]`` for :math:`0 \\le n < |x|`, and every other cell is blank.
    """
    x = GammaString(x, machine.alphabet)
    return machine.tape({slot.cell(n): s for n, s in enumerate(x)})


def decode(slot, tape):
    """ Return the :math:`\\Gamma`-string that is represented by ``tape``.

    :param slot: The data slot, an instance of :class:`DataSlot`.
    :param tape: The tape.

    The length of the output is the least index :math:`n` with a blank at
    the cell :math:`m_n`, and the symbol at :math:`n` is the content of
    the cell :math:`m_n`. Cells outside the slot are ignored.
    """
    symbols = list()
    n = 0
    while True:
        s = tape.read(slot.cell(n))
        if s == tape.blank:
            return GammaString(symbols)
        symbols.append(s)
        n += 1
