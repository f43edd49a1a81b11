#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
import io
import os
import shutil
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout

import simplejson

import qtmpy.cli as cli
from qtmpy.io.machinefile import GALLERY


REPORTS = os.path.join(os.path.dirname(GALLERY), 'reports')


def machine(name):
    return os.path.join(GALLERY, f"{name}.json")


class Test_cli(unittest.TestCase):
    """
       This class contains the unit tests for
       :mod:`qtmpy.cli`.
    """

    def setUp(self):
        self._temDir = tempfile.mkdtemp(prefix='tmp-qtmpy-')
        self._environ = {k: os.environ.pop(k) for k in ('QTM_SEED', 'QTM_CONFIG') if k in os.environ}

    def tearDown(self):
        shutil.rmtree(self._temDir)
        os.environ.update(self._environ)

    def _main(self, *argv):
        """ Run the command line interface and return the exit code, the output and the errors."""
        out = io.StringIO()
        err = io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            ret = cli.main(list(argv))
        return ret, out.getvalue(), err.getvalue()

    def test_validate(self):
        ret, out, _ = self._main("validate", machine("identity"))
        self.assertEqual(ret, cli.EXIT_OK)
        self.assertEqual(sum(1 for line in out.splitlines() if line.startswith("PASS")), 4)
        self.assertTrue(out.endswith("Result: UNITARY\n"))

    def test_validate_violation(self):
        ret, out, _ = self._main("validate", machine("head-splitter"))
        self.assertEqual(ret, cli.EXIT_VIOLATION)
        self.assertIn("FAIL (c)", out)
        self.assertIn("residual 0.5", out)
        self.assertIn("Result: NOT UNITARY", out)

    def _assertReport(self, name, out, machineName):
        """ Compare a text report with the stored report 'name', with the machine path replaced by its file name."""
        with open(os.path.join(REPORTS, name)) as f:
            expected = f.read()
        self.assertEqual(out.replace(machine(machineName), f"{machineName}.json"), expected)

    def test_reports_unchanged(self):
        ret, out, _ = self._main("validate", machine("identity"))
        self.assertEqual(ret, cli.EXIT_OK)
        self._assertReport("validate-identity.txt", out, "identity")
        ret, out, _ = self._main("oracle", machine("identity"), "--cells", "3")
        self.assertEqual(ret, cli.EXIT_OK)
        self._assertReport("oracle-identity.txt", out, "identity")

    def test_validate_json(self):
        ret, out, _ = self._main("validate", machine("coin"), "--json")
        self.assertEqual(ret, cli.EXIT_OK)
        data = simplejson.loads(out)
        self.assertTrue(data['passed'])
        self.assertEqual([c['name'] for c in data['conditions']], ['a', 'b', 'c', 'd'])

    def test_malformed_file(self):
        fil = os.path.join(self._temDir, "bad.json")
        with open(machine("coin"), mode='r', encoding='utf-8') as f:
            txt = f.read()
        with open(fil, mode='w', encoding='utf-8') as f:
            f.write(txt.replace('"amplitude": [1.0, 0.0]}', '"amplitude": "1"}', 1))
        ret, out, err = self._main("validate", fil)
        self.assertEqual(ret, cli.EXIT_ERROR)
        self.assertEqual(out, "")
        self.assertIn(f"{fil}:11: ", err)

    def test_missing_file(self):
        ret, _, err = self._main("validate", os.path.join(self._temDir, "missing.json"))
        self.assertEqual(ret, cli.EXIT_ERROR)
        self.assertIn("missing.json", err)

    def test_usage_errors(self):
        self.assertEqual(self._main()[0], cli.EXIT_ERROR)
        self.assertEqual(self._main("validate")[0], cli.EXIT_ERROR)
        self.assertEqual(self._main("simulate", machine("coin"))[0], cli.EXIT_ERROR)
        self.assertEqual(self._main("run", machine("coin"), "--steps", "-1")[0], cli.EXIT_ERROR)
        self.assertEqual(self._main("validate", machine("coin"), "--tolerance", "0")[0], cli.EXIT_ERROR)

    def test_run(self):
        ret, out, _ = self._main("run", machine("write-1-and-halt"), "--steps", "3")
        self.assertEqual(ret, cli.EXIT_OK)
        self.assertIn('P("1") = 1\n', out)
        self.assertIn("Not halted: 0\n", out)

        ret, out, _ = self._main("run", machine("coin"), "--json")
        self.assertEqual(ret, cli.EXIT_OK)
        data = simplejson.loads(out)
        self.assertFalse(data['sampled'])
        self.assertEqual(data['steps'], 10)
        self.assertEqual(sorted(data['distribution']), ["a", "b"])
        for p in data['distribution'].values():
            self.assertAlmostEqual(p, 0.5, places=12)
        self.assertAlmostEqual(data['norm'], 1.0, places=12)

    def test_run_not_unitary(self):
        ret, out, err = self._main("run", machine("head-splitter"))
        self.assertEqual(ret, cli.EXIT_VIOLATION)
        self.assertEqual(out, "")
        self.assertIn("conditions c fail", err)

    def test_run_invalid_input(self):
        ret, _, err = self._main("run", machine("coin"), "--input", "ac")
        self.assertEqual(ret, cli.EXIT_ERROR)
        self.assertIn("Symbol 'c'", err)

    def test_run_sampled(self):
        ret, out, _ = self._main("run", machine("coin"), "--seed", "7", "--json")
        self.assertEqual(ret, cli.EXIT_OK)
        data = simplejson.loads(out)
        self.assertTrue(data['sampled'])
        self.assertTrue(data['halted'])
        self.assertEqual(data['halt_step'], 1)
        self.assertEqual(data['trace'], [1])
        self.assertIn(data['output'], ["a", "b"])
        # Same seed, same run.
        self.assertEqual(self._main("run", machine("coin"), "--seed", "7", "--json")[1], out)

    def test_run_seed_from_environment(self):
        os.environ['QTM_SEED'] = "7"
        try:
            ret, out, _ = self._main("run", machine("coin"))
        finally:
            del os.environ['QTM_SEED']
        self.assertEqual(ret, cli.EXIT_OK)
        self.assertIn("Seed: 7\n", out)
        self.assertIn("Halted at step 1\n", out)

    def test_compare_halting(self):
        ret, out, _ = self._main("compare-halting", machine("coin"))
        self.assertEqual(ret, cli.EXIT_OK)
        self.assertIn("Stationarity: satisfied", out)
        self.assertTrue(out.endswith("Result: DISTRIBUTIONS AGREE\n"))

        ret, out, _ = self._main("compare-halting", machine("write-1-and-halt"), "--steps", "4", "--json")
        self.assertEqual(ret, cli.EXIT_OK)
        self.assertIs(simplejson.loads(out)['verdict'], True)

    def test_compare_halting_not_stationary(self):
        ret, out, _ = self._main("compare-halting", machine("processor-hadamard"), "--steps", "1")
        self.assertEqual(ret, cli.EXIT_NOT_STATIONARY)
        self.assertIn("Stationarity: VIOLATED", out)
        self.assertIn('t=1 output "" deviation 0.5', out)
        self.assertTrue(out.endswith("Result: NO VERDICT, stationarity is not satisfied\n"))

    def test_oracle(self):
        ret, out, _ = self._main("oracle", machine("identity"), "--cells", "3")
        self.assertEqual(ret, cli.EXIT_OK)
        self.assertIn("Dimension: 3\n", out)
        self.assertIn("deviation 0\n", out)
        self.assertIn("Result: AGREE", out)

        ret, out, _ = self._main("oracle", machine("head-splitter"), "--cells", "4")
        self.assertEqual(ret, cli.EXIT_OK)
        self.assertIn("Cyclic matrix: NOT UNITARY", out)
        self.assertIn("Result: AGREE", out)

    def test_oracle_limits(self):
        ret, _, err = self._main("oracle", machine("coin"), "--cells", "12")
        self.assertEqual(ret, cli.EXIT_ERROR)
        self.assertIn("10000", err)
        self.assertEqual(self._main("oracle", machine("coin"), "--cells", "2")[0], cli.EXIT_ERROR)

    def test_config_and_log(self):
        cfg = os.path.join(self._temDir, "settings.yml")
        log = os.path.join(self._temDir, "qtmpy.log")
        with open(cfg, mode='w', encoding='utf-8') as f:
            f.write("oracle_cells: 3\n")
        ret, out, _ = self._main("oracle", machine("identity"), "--config", cfg, "--log", log)
        self.assertEqual(ret, cli.EXIT_OK)
        self.assertIn("Cells: 3\n", out)
        with open(log, mode='r', encoding='utf-8') as f:
            self.assertEqual(f.read(), out)

    def test_output_is_stable(self):
        for argv in (("validate", machine("stay-right-splitter")),
                     ("run", machine("processor-hadamard"), "--steps", "4"),
                     ("compare-halting", machine("coin"), "--steps", "5", "--json")):
            self.assertEqual(self._main(*argv), self._main(*argv))


if __name__ == '__main__':
    unittest.main()
