#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
import math
import unittest

import numpy as np

import qtmpy.development.generators as g
from qtmpy.development.validator import validate
from qtmpy.io.machinefile import gallery_machine
from qtmpy.machine.definition import MachineSpec

S = 1 / math.sqrt(2)


class Test_development_Validator(unittest.TestCase):
    """
       This class contains the unit tests for
       :mod:`qtmpy.development.validator`.
    """

    def test_identity(self):
        m = MachineSpec(["q0", "qf"], ["B", "a"], "q0", "qf", "B",
                        {(q, s, q, s, 0): 1 for q in ("q0", "qf") for s in ("B", "a")})
        r = validate(m.transition)
        self.assertTrue(r.passed)
        self.assertEqual(r.failedConditions(), [])
        self.assertEqual(r.witnesses(), [])
        self.assertFalse(r.unidirectional)

    def test_head_splitter(self):
        r = validate(gallery_machine("head-splitter").transition)
        self.assertFalse(r.passed)
        self.assertEqual(r.failedConditions(), ['c'])
        self.assertEqual(len(r.condition_c.witnesses), 1)
        w = r.condition_c.witnesses[0]
        self.assertEqual(w.indices, (("q", "B", "B"), ("q", "B", "B")))
        self.assertAlmostEqual(w.residual, 0.5, delta=1E-12)
        self.assertTrue(r.condition_a.passed)

    def test_stay_right_splitter(self):
        r = validate(gallery_machine("stay-right-splitter").transition)
        self.assertEqual(r.failedConditions(), ['d'])
        self.assertAlmostEqual(r.condition_d.maxResidual, 0.5, delta=1E-12)
        self.assertTrue(r.condition_a.passed)

    def test_not_machine(self):
        r = validate(gallery_machine("not-machine").transition)
        self.assertTrue(r.passed)
        self.assertTrue(r.unidirectional)

    def test_condition_a_and_b(self):
        # Two columns that are mapped onto the same target
        m = MachineSpec(["q"], ["B", "a"], "q", "q", "B",
                        {("q", "B", "q", "B", 1): 1, ("q", "a", "q", "B", 1): 1})
        r = validate(m.transition)
        self.assertEqual(r.failedConditions(), ['b'])
        self.assertEqual(r.condition_b.witnesses[0].indices, (("q", "B"), ("q", "a")))
        self.assertAlmostEqual(r.condition_b.witnesses[0].residual, 1, delta=1E-15)
        # Missing column
        m = MachineSpec(["q"], ["B", "a"], "q", "q", "B", {("q", "B", "q", "B", 1): 1})
        r = validate(m.transition)
        self.assertIn('a', r.failedConditions())
        self.assertEqual(r.condition_a.witnesses[0].indices, (("q", "a"),))

    def test_errors(self):
        self.assertRaises(ValueError, MachineSpec, ["q"], ["B"], "q", "q", "B", {("q", "B", "q", "X", 1): 1})
        m = gallery_machine("coin")
        self.assertRaises(ValueError, validate, m.transition, 0)
        self.assertRaises(ValueError, validate, m.transition, -1E-9)

    def test_gallery(self):
        expected = {"identity": True, "right-mover": True, "not-machine": True,
                    "head-splitter": False, "stay-right-splitter": False,
                    "write-1-and-halt": True, "coin": True, "processor-hadamard": True}
        for name, passed in expected.items():
            self.assertEqual(validate(gallery_machine(name).transition).passed, passed, name)

    def test_valid_families(self):
        rng = np.random.default_rng(11)
        for nQ, nS in ((1, 1), (1, 2), (2, 1), (2, 2), (3, 2)):
            for _ in range(5):
                for fam in (g.permutation_machine, g.phase_machine, g.mixing_machine):
                    m = fam(rng, nQ, nS)
                    self.assertTrue(validate(m.transition).passed, f"{fam.__name__} {nQ} {nS}")
            self.assertTrue(validate(g.halting_safe_machine(rng).transition).passed)

    def test_haar_columns(self):
        """ Orthonormal columns satisfy (a) and (b), but generically not (c) and (d)."""
        rng = np.random.default_rng(12)
        for _ in range(20):
            r = validate(g.haar_column_machine(rng, 2, 2).transition)
            self.assertTrue(r.condition_a.passed)
            self.assertTrue(r.condition_b.passed)
            self.assertFalse(r.condition_c.passed)
            self.assertFalse(r.condition_d.passed)

    def test_unidirectional(self):
        """ Tables in which the head always moves never violate condition (d)."""
        rng = np.random.default_rng(13)
        for _ in range(200):
            m = g.random_sparse_machine(rng, 2, 2)
            entries = {k: v for k, v in m.transition.entries().items() if k[4] != 0}
            m = MachineSpec(m.processorSymbols, m.tapeSymbols, m.initial, m.final, m.blank, entries)
            r = validate(m.transition)
            self.assertTrue(r.unidirectional)
            self.assertTrue(r.condition_d.passed)

    def test_witnesses_exceed_tolerance(self):
        rng = np.random.default_rng(14)
        for _ in range(100):
            _, m = g.random_machine(rng, 2, 2)
            r = validate(m.transition)
            for name, w in r.witnesses():
                self.assertGreater(w.residual, r.tolerance)
            self.assertEqual(r.passed, len(r.witnesses()) == 0)

    def test_to_dict(self):
        d = validate(gallery_machine("head-splitter").transition).to_dict()
        self.assertFalse(d['passed'])
        self.assertEqual([c['name'] for c in d['conditions']], ['a', 'b', 'c', 'd'])
        self.assertEqual(d['conditions'][2]['witnesses'][0]['indices'], [["q", "B", "B"], ["q", "B", "B"]])


if __name__ == '__main__':
    unittest.main()
