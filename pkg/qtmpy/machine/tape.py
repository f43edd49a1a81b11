#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
import numbers

# Cells are stored as signed 64 bit integers.
MAX_CELL = 2**63 - 1


def check_cell(cell):
    """ Return ``cell`` if it is a valid cell index.

    :param cell: The cell index.

    A ``ValueError`` is raised if ``cell`` is not an integer, and
    an ``OverflowError`` if it does not fit into a signed 64 bit integer.
    """
    if isinstance(cell, bool) or not isinstance(cell, numbers.Integral):
        raise ValueError(f"Cell index must be an integer, received '{cell}'.")
    if abs(cell) > MAX_CELL:
        raise OverflowError(f"Cell index {cell} exceeds the representable range.")
    return int(cell)


class Tape(object):
    """ Class that represents the content of a bilateral infinite tape.

    :param symbols: The tape symbols :math:`\\Sigma`, as a sequence.
    :param blank: The blank symbol, which must be an element of ``symbols``.
    :param cells: An optional dictionary that maps cell indices to symbols.

    Only the non-blank cells are stored. Entries of ``cells`` that are
    equal to ``blank`` are dropped, hence two tapes are equal
    if and only if they read the same symbol on every cell.

    Usage: Type

       >>> from qtmpy.machine.tape import Tape
       >>> t = Tape(["B", "a", "b"], "B", {0: "a", 1: "B"})
       >>> t.read(0), t.read(1), t.read(-7)
       ('a', 'B', 'B')
       >>> t.write(1, "b")
       Tape({0: 'a', 1: 'b'})

    """
    __slots__ = ('_symbols', '_blank', '_cells', '_hash')

    def __init__(self, symbols, blank, cells=None):
        self._symbols = tuple(symbols)
        if blank not in self._symbols:
            raise ValueError(f"Blank symbol '{blank}' is not a tape symbol.")
        self._blank = blank
        self._cells = dict()
        self._hash = None
        if cells is not None:
            for cell, symbol in cells.items():
                self._check_symbol(symbol)
                if symbol != blank:
                    self._cells[check_cell(cell)] = symbol

    def _check_symbol(self, symbol):
        if symbol not in self._symbols:
            raise ValueError(f"Symbol '{symbol}' is not a tape symbol.")

    @property
    def symbols(self):
        """ The tape symbols."""
        return self._symbols

    @property
    def blank(self):
        """ The blank symbol."""
        return self._blank

    def read(self, cell):
        """ Return the symbol at the cell ``cell``.

        :param cell: The cell index, which may be negative.
        :return: The stored symbol, or the blank symbol if none is stored.
        """
        return self._cells.get(cell, self._blank)

    def write(self, cell, symbol):
        """ Return a new tape that has ``symbol`` at the cell ``cell``.

        :param cell: The cell index.
        :param symbol: The symbol to be written.
        :return: A new instance of :class:`Tape`.

        The tape on which this method is called is not changed.
        A ``ValueError`` is raised if ``symbol`` is not a tape symbol.
        """
        self._check_symbol(symbol)
        cell = check_cell(cell)
        if self._cells.get(cell, self._blank) == symbol:
            return self
        new = Tape.__new__(Tape)
        new._symbols = self._symbols
        new._blank = self._blank
        new._cells = dict(self._cells)
        new._hash = None
        if symbol == self._blank:
            del new._cells[cell]
        else:
            new._cells[cell] = symbol
        return new

    def cells(self):
        """ Return a dictionary with the non-blank cells."""
        return dict(self._cells)

    def items(self):
        """ Return the non-blank cells as a list of ``(cell, symbol)`` pairs, sorted by cell."""
        return sorted(self._cells.items())

    def isBlank(self):
        """ Return ``True`` if all cells are blank."""
        return len(self._cells) == 0

    def __len__(self):
        return len(self._cells)

    def __eq__(self, other):
        if not isinstance(other, Tape):
            return NotImplemented
        return self._blank == other._blank and self._cells == other._cells

    def __ne__(self, other):
        ret = self.__eq__(other)
        return ret if ret is NotImplemented else not ret

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._blank, frozenset(self._cells.items())))
        return self._hash

    def __repr__(self):
        content = ", ".join(f"{c}: {s!r}" for c, s in self.items())
        return f"Tape({{{content}}})"

    def __str__(self):
        return "{" + ", ".join(f"{c}:{s}" for c, s in self.items()) + "}"


def tape_read(tape, cell):
    """ Return the symbol of ``tape`` at the cell ``cell``.

    :param tape: An instance of :class:`Tape`.
    :param cell: The cell index.
    """
    return tape.read(cell)


def tape_write(tape, cell, symbol):
    """ Return a copy of ``tape`` with ``symbol`` written at the cell ``cell``.

    :param tape: An instance of :class:`Tape`.
    :param cell: The cell index.
    :param symbol: The tape symbol. Writing the blank symbol removes the entry.
    """
    return tape.write(cell, symbol)
