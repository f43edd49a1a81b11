#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
import io
import os
import shutil
import tempfile
import unittest
from contextlib import redirect_stderr

import numpy as np

import qtmpy.development.generators as g
import qtmpy.io.machinefile as mf
from qtmpy.io.reporter import Reporter

HEADER = """{
  "processor_symbols": ["q"],
  "initial": "q",
  "final": "q",
  "tape_symbols": ["B", "a"],
  "blank": "B",
  "transitions": [
"""


def text(*records):
    return HEADER + ",\n".join(records) + "\n  ]\n}\n"


def record(state="q", read="B", next_state="q", write="B", move='1', amplitude='[1.0, 0.0]'):
    return (f'    {{"state": "{state}", "read": "{read}", "next_state": "{next_state}", '
            f'"write": "{write}", "move": {move}, "amplitude": {amplitude}}}')


class Test_io_MachineFile(unittest.TestCase):
    """
       This class contains the unit tests for
       :mod:`qtmpy.io.machinefile`.
    """

    def setUp(self):
        self._reporter = Reporter()

    def _assertError(self, txt, line, fragment):
        with self.assertRaises(mf.MachineFileError) as context:
            mf.loads(txt, "test.json", self._reporter)
        self.assertEqual(context.exception.lineNumber, line)
        self.assertIn(fragment, context.exception.message)
        self.assertTrue(str(context.exception).startswith(f"test.json:{line}: "))

    def test_loads(self):
        f = mf.loads(text(record(), record(read="a", write="a", amplitude='[0.0, -1]')))
        m = f.machine
        self.assertEqual(m.tapeSymbols, ("B", "a"))
        self.assertEqual(m.transition.amplitude("q", "a", "q", "a", 1), -1j)
        self.assertIsNone(f.description)

    def test_gallery_round_trip(self):
        """ The gallery files are in canonical form."""
        names = mf.gallery_names()
        self.assertEqual(len(names), 8)
        for name in names:
            fil = os.path.join(mf.GALLERY, f"{name}.json")
            with open(fil, mode='r', encoding='utf-8') as f:
                txt = f.read()
            mfil = mf.loads(txt, fil)
            self.assertEqual(mf.dumps(mfil.machine, mfil.description), txt, name)
            self.assertIsNotNone(mfil.description)

    def test_random_round_trip(self):
        rng = np.random.default_rng(6)
        for _ in range(50):
            _, m = g.random_machine(rng, 2, 2)
            txt = mf.dumps(m)
            m2 = mf.loads(txt).machine
            self.assertEqual(m, m2)
            self.assertEqual(mf.dumps(m2), txt)

    def test_write_and_read(self):
        dirNam = tempfile.mkdtemp(prefix='tmp-qtmpy-')
        try:
            fil = os.path.join(dirNam, "coin.json")
            m = mf.gallery_machine("coin")
            mf.write_machine(m, fil, "coin")
            self.assertEqual(mf.read_machine(fil), m)
            self.assertEqual(mf.read_machine_file(fil).description, "coin")
        finally:
            shutil.rmtree(dirNam)
        self.assertRaises(mf.MachineFileError, mf.read_machine, os.path.join(dirNam, "missing.json"))

    def test_malformed_amplitude(self):
        self._assertError(text(record(), record(read="a", amplitude='"0.5"')), 9, "Invalid transition 1")
        self._assertError(text(record(amplitude='[1.0]')), 8, "Invalid transition 0")
        self._assertError(text(record(amplitude='[NaN, 0]')), 8, "finite")

    def test_invalid_json(self):
        txt = text(record(), record(read="a")).replace('"read": "a",', '"read": "a"')
        self._assertError(txt, 9, "Invalid json")

    def test_invalid_move(self):
        self._assertError(text(record(), record(read="a", move='2')), 9, "move")

    def test_duplicate(self):
        self._assertError(text(record(), record(amplitude='[0.5, 0.0]')), 9, "duplicate")

    def test_undeclared_symbol(self):
        self._assertError(text(record(), record(read="a", write="c")), 9, "'write' is 'c'")

    def test_header_errors(self):
        self._assertError(text(record()).replace('"initial": "q"', '"initial": "x"'), 3, "Initial")
        self._assertError(text(record()).replace('"blank": "B"', '"blank": "X"'), 6, "Blank")
        with self.assertRaises(mf.MachineFileError) as context:
            mf.loads(text(record()).replace('  "blank": "B",\n', ''), "test.json")
        self.assertIn("blank", context.exception.message)

    def test_zero_amplitude_warning(self):
        err = io.StringIO()
        with redirect_stderr(err):
            m = mf.loads(text(record(), record(read="a", amplitude='[0, 0]')), "test.json", self._reporter).machine
        self.assertEqual(len(m.transition), 1)
        self.assertEqual(self._reporter.getNumberOfWarnings(), 1)
        self.assertIn("test.json:9", err.getvalue())


if __name__ == '__main__':
    unittest.main()
