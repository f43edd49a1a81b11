#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
import io
import os
import shutil
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout

from qtmpy.io.reporter import Reporter


class Test_io_Reporter(unittest.TestCase):
    """
       This class contains the unit tests for
       :mod:`qtmpy.io.reporter`.
    """

    def setUp(self):
        self._temDir = tempfile.mkdtemp(prefix='tmp-qtmpy-')

    def tearDown(self):
        shutil.rmtree(self._temDir)

    def test_counters(self):
        r = Reporter()
        err = io.StringIO()
        with redirect_stderr(err):
            r.writeWarning("w1")
            r.writeWarning("w2")
            r.writeError("e1")
        self.assertEqual(r.getNumberOfWarnings(), 2)
        self.assertEqual(r.getNumberOfErrors(), 1)
        self.assertEqual(err.getvalue(), "*** Warning: w1\n*** Warning: w2\n*** Error: e1\n")

    def test_not_verbose(self):
        r = Reporter(verbose=False)
        err = io.StringIO()
        with redirect_stderr(err):
            r.writeError("e1")
        self.assertEqual(err.getvalue(), "e1\n")

    def test_output(self):
        r = Reporter()
        out = io.StringIO()
        with redirect_stdout(out):
            r.writeOutput("line 1")
            r.writeOutput("line 2\n")
        self.assertEqual(out.getvalue(), "line 1\nline 2\n")

    def test_log_file(self):
        fil = os.path.join(self._temDir, "qtmpy.log")
        with open(fil, mode='w', encoding='utf-8') as f:
            f.write("old content\n")
        r = Reporter(fil)
        self.assertFalse(os.path.exists(fil))
        with redirect_stdout(io.StringIO()), redirect_stderr(io.StringIO()):
            r.writeOutput("result")
            r.writeError("e1")
            r.logToFile(False)
            r.writeOutput("not logged")
        with open(fil, mode='r', encoding='utf-8') as f:
            self.assertEqual(f.read(), "result\n*** Error: e1\n")

    def test_log_without_file(self):
        r = Reporter()
        self.assertRaises(ValueError, r.logToFile)
        r.logToFile(False)


if __name__ == '__main__':
    unittest.main()
