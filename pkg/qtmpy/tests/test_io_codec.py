#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
import itertools
import unittest

from qtmpy.io.codec import DataSlot, GammaString, decode, encode
from qtmpy.machine.definition import MachineSpec


class Test_io_Codec(unittest.TestCase):
    """
       This class contains the unit tests for
       :mod:`qtmpy.io.codec`.
    """

    def setUp(self):
        self._m = MachineSpec(["q0", "qf"], ["B", "a", "b"], "q0", "qf", "B")

    def test_encode(self):
        m = self._m
        self.assertEqual(encode(DataSlot(), "ab", m), m.tape({0: "a", 1: "b"}))
        self.assertEqual(encode(DataSlot(), "", m), m.tape())
        self.assertEqual(encode(DataSlot(step=2), "ab", m), m.tape({0: "a", 2: "b"}))
        self.assertRaises(ValueError, encode, DataSlot(), "aB", m)

    def test_decode(self):
        m = self._m
        self.assertEqual(decode(DataSlot(), m.tape({0: "a", 1: "b"})), GammaString("ab"))
        self.assertEqual(decode(DataSlot(), m.tape()), GammaString())
        self.assertEqual(decode(DataSlot(), m.tape({0: "a", 2: "b"})), GammaString("a"))
        self.assertEqual(decode(DataSlot(step=2), m.tape({0: "a", 2: "b"})), GammaString("ab"))

    def test_decode_ignores_cells_outside_slot(self):
        m = self._m
        slot = DataSlot(start=1, step=3)
        t = m.tape({1: "b", 4: "a", 0: "a", 2: "b", 10: "a", -5: "b"})
        self.assertEqual(decode(slot, t), GammaString("ba"))

    def test_round_trip(self):
        """ Decoding inverts encoding on all strings up to length 8."""
        m = self._m
        for slot in (DataSlot(), DataSlot(step=2), DataSlot(numbering=lambda n: n * n + n)):
            n = 0
            for length in range(9):
                for x in itertools.product(m.alphabet, repeat=length):
                    x = GammaString(x)
                    self.assertEqual(decode(slot, encode(slot, x, m)), x)
                    n += 1
            self.assertEqual(n, 511)

    def test_data_slot(self):
        self.assertEqual([DataSlot(start=3, step=2).cell(n) for n in range(3)], [3, 5, 7])
        self.assertEqual(DataSlot(), DataSlot(start=0, step=1))
        self.assertRaises(ValueError, DataSlot, -1)
        self.assertRaises(ValueError, DataSlot, 0, 0)
        self.assertRaises(ValueError, DataSlot, 0, 1.5)
        self.assertRaises(ValueError, DataSlot, numbering=3)
        self.assertRaises(ValueError, DataSlot().cell, -1)
        s = DataSlot(numbering=lambda n: 5 - n)
        self.assertEqual(s.cell(0), 5)
        self.assertRaises(ValueError, s.cell, 1)

    def test_gamma_string(self):
        x = GammaString.fromText("ab a", ("a", "b"))
        self.assertEqual(x, ("a", "b", "a"))
        self.assertEqual(str(x), "aba")
        y = GammaString.fromText("x1, x2 x1", ("x1", "x2"))
        self.assertEqual(y, ("x1", "x2", "x1"))
        self.assertEqual(str(y), "x1 x2 x1")
        self.assertRaises(ValueError, GammaString.fromText, "abc", ("a", "b"))
        self.assertEqual(str(GammaString()), "")


if __name__ == '__main__':
    unittest.main()
