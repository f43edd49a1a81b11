#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
from multiprocessing import Pool

from qtmpy.io.machinefile import gallery_machine, gallery_names

# Number of steps of the halting comparison.
STEPS = 10


def checkMachine(name):
    """ Validate one gallery machine, cross-check it on a cyclic tape and,
        if it is unitary, compare the halting protocols from a blank tape.

    :param name: The name of the machine, such as ``coin``.
    :return: A line of text that summarizes the results.
    """
    from qtmpy.development.oracle import cross_check
    from qtmpy.simulate.halting import compare_protocols

    m = gallery_machine(name)
    ora = cross_check(m.transition, 4)
    line = f"{name:22s} unitary: {str(ora.validation.passed):5s}  oracle agrees: {str(ora.agree):5s}"
    if ora.validation.passed:
        cmp = compare_protocols(m.transition, m.configuration(m.initial), STEPS)
        if cmp.verdict is None:
            verdict = "not stationary"
        else:
            verdict = "agree" if cmp.verdict else "DIFFER"
        line += f"  halting: {verdict}, max difference {cmp.maxDifference:.3g}"
    return line


def main():
    """ Main method that checks all machines of the gallery in parallel.
    """
    po = Pool()
    lines = po.map(checkMachine, gallery_names())
    po.close()
    po.join()
    for line in lines:
        print(line)


# Main function
if __name__ == '__main__':
    main()
