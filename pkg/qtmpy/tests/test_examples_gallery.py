#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
import unittest


class Test_example_gallery(unittest.TestCase):
    """
       This class contains the unit tests for
       :mod:`qtmpy.examples.gallery.runGallery`.
    """

    def test_checkMachine(self):
        import qtmpy.examples.gallery.runGallery as r

        self.assertIn("unitary: True   oracle agrees: True   halting: agree", r.checkMachine("coin"))
        self.assertIn("halting: agree", r.checkMachine("write-1-and-halt"))
        self.assertIn("halting: not stationary", r.checkMachine("processor-hadamard"))
        line = r.checkMachine("head-splitter")
        self.assertIn("unitary: False", line)
        self.assertNotIn("halting", line)

    def test_all_machines_agree_with_oracle(self):
        import qtmpy.examples.gallery.runGallery as r
        from qtmpy.io.machinefile import gallery_names

        for name in gallery_names():
            self.assertIn("oracle agrees: True ", r.checkMachine(name), name)


if __name__ == '__main__':
    unittest.main()
