#!/usr/bin/env python
# -*- coding: utf-8 -*-
#######################################################
# Command line interface.
#######################################################
"""
Command line interface of qtmpy.

The subcommands are

 - ``validate``, which checks the conditions (a) to (d) of a machine file,
 - ``run``, which computes the output distribution or samples one run of the halting protocol,
 - ``compare-halting``, which compares the halting protocol with a single measurement, and
 - ``oracle``, which builds the matrix on a cyclic tape and compares its unitarity with ``validate``.

The exit codes are

 - ``0`` on success,
 - ``1`` on a usage error, an invalid machine file or an exceeded limit,
 - ``2`` if the machine is not unitary, or if the output distributions differ
   although the stationarity condition holds,
 - ``3`` if the stationarity condition does not hold, and
 - ``4`` if the cyclic matrix and the validator disagree.

Usage: Type

.. code-block:: bash

   qtmpy validate qtmpy/examples/machines/coin.json
   qtmpy run qtmpy/examples/machines/coin.json --steps 3
   qtmpy compare-halting qtmpy/examples/machines/coin.json --steps 3
   qtmpy oracle qtmpy/examples/machines/head-splitter.json --cells 4

"""
import argparse
import os
import sys

import simplejson

from qtmpy.io.reporter import Reporter

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VIOLATION = 2
EXIT_NOT_STATIONARY = 3
EXIT_DISAGREE = 4

# Number of witnesses, violations and configurations that are listed in the text reports.
MAX_LISTED = 10

_TEMPLATES = os.path.join(os.path.dirname(__file__), 'templates')


def _num(x):
    """ Format a float for the reports."""
    return f"{float(x) + 0.0:.10g}"


def _amplitude(c):
    return f"{c.real + 0.0:+.10g}{c.imag + 0.0:+.10g}j"


def _indices(indices):
    return " / ".join("(" + ", ".join(str(s) for s in i) + ")" for i in indices)


def _render(name, context):
    import jinja2

    env = jinja2.Environment(loader=jinja2.FileSystemLoader(_TEMPLATES),
                             trim_blocks=True, lstrip_blocks=True, keep_trailing_newline=True)
    env.filters['num'] = _num
    env.filters['indices'] = _indices
    return env.get_template(name).render(**context)


def _emit(reporter, args, template, context, data):
    """ Write the report, either as text rendered from ``template`` or as json."""
    if args.json:
        reporter.writeOutput(simplejson.dumps(data, sort_keys=True, indent=2))
    else:
        reporter.writeOutput(_render(template, context))


class _ArgumentParser(argparse.ArgumentParser):
    """ Argument parser that exits with code ``1`` on a usage error."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _positive_float(text):
    try:
        val = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not a number")
    if not val > 0:
        raise argparse.ArgumentTypeError(f"'{text}' must be positive")
    return val


def _non_negative_int(text):
    try:
        val = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not an integer")
    if val < 0:
        raise argparse.ArgumentTypeError(f"'{text}' must not be negative")
    return val


def create_parser():
    """ Return the argument parser."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('machine', help='machine file (json)')
    common.add_argument('--json', action='store_true', default=False,
                        help='write the report as json (default: False)')
    common.add_argument('--config', default=None,
                        help='yaml file with settings that override the defaults (default: $QTM_CONFIG)')
    common.add_argument('--log', default=None, help='also write all messages to this file')

    parser = _ArgumentParser(
        prog='qtmpy', description='Simulate and verify quantum Turing machines.')
    sub = parser.add_subparsers(dest='command', metavar='command', parser_class=_ArgumentParser)
    sub.required = True

    p = sub.add_parser('validate', parents=[common], help='check the unitarity conditions (a) to (d)')
    p.add_argument('--tolerance', type=_positive_float, default=None,
                   help='tolerance of the residuals (default: from the settings)')
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser('run', parents=[common], help='compute the output distribution')
    p.add_argument('--input', default="", help='input string, written to the data slot (default: "")')
    p.add_argument('--steps', type=_non_negative_int, default=10, help='number of steps (default: 10)')
    p.add_argument('--seed', type=_non_negative_int, default=None,
                   help='seed for one sampled run of the halting protocol (default: $QTM_SEED)')
    p.set_defaults(func=cmd_run)

    p = sub.add_parser('compare-halting', parents=[common],
                       help='compare the halting protocol with a single measurement')
    p.add_argument('--input', default="", help='input string, written to the data slot (default: "")')
    p.add_argument('--steps', type=_non_negative_int, default=10, help='number of steps (default: 10)')
    p.add_argument('--tolerance', type=_positive_float, default=None,
                   help='tolerance of the comparison (default: from the settings)')
    p.set_defaults(func=cmd_compare_halting)

    p = sub.add_parser('oracle', parents=[common], help='check unitarity on a cyclic tape')
    p.add_argument('--cells', type=_non_negative_int, default=None,
                   help='number of cells of the cyclic tape, at least 3 (default: from the settings)')
    p.add_argument('--tolerance', type=_positive_float, default=None,
                   help='tolerance of both checks (default: from the settings)')
    p.set_defaults(func=cmd_oracle)
    return parser


def _initial(machine, args):
    from qtmpy.io.codec import DataSlot, GammaString, encode

    x = GammaString.fromText(args.input, machine.alphabet)
    return x, machine.configuration(machine.initial, encode(DataSlot(), x, machine), 0)


def _require_valid(machine, settings, reporter):
    """ Return ``True`` if the machine is unitary, and write an error otherwise."""
    from qtmpy.development.validator import validate

    rep = validate(machine.transition, settings['validation_tolerance'])
    if not rep.passed:
        reporter.writeError(
            f"Machine is not unitary, conditions {', '.join(rep.failedConditions())} fail. "
            "Run 'qtmpy validate' for the witnesses.")
    return rep.passed


def cmd_validate(args, machine, settings, reporter):
    """ Check the conditions (a) to (d) and return ``0`` if they hold and ``2`` otherwise."""
    from qtmpy.development.validator import validate

    tol = args.tolerance if args.tolerance is not None else settings['validation_tolerance']
    rep = validate(machine.transition, tol)
    data = rep.to_dict()
    data['machine'] = args.machine
    context = dict(data, fileName=args.machine, maxWitnesses=MAX_LISTED)
    _emit(reporter, args, 'validate.txt', context, data)
    return EXIT_OK if rep.passed else EXIT_VIOLATION


def cmd_run(args, machine, settings, reporter):
    """ Compute the output distribution after ``--steps`` steps, or sample one run
        of the halting protocol if a seed is given.
    """
    from qtmpy.io.codec import DataSlot
    from qtmpy.machine.state import basis_state
    from qtmpy.simulate.halting import output_distribution_unmonitored, run_protocol_sampled
    from qtmpy.simulate.transition import evolve

    if not _require_valid(machine, settings, reporter):
        return EXIT_VIOLATION
    x, initial = _initial(machine, args)
    seed = args.seed if args.seed is not None else settings['seed']
    data = {'machine': args.machine, 'input': str(x), 'steps': args.steps}
    if seed is not None:
        res = run_protocol_sampled(machine.transition, initial, args.steps, seed, DataSlot())
        data.update({'sampled': True, 'seed': seed, 'halted': res.halted, 'halt_step': res.haltStep,
                     'output': None if res.output is None else str(res.output),
                     'trace': list(res.trace)})
        context = dict(data, fileName=args.machine, haltStep=res.haltStep)
    else:
        state = evolve(machine.transition, basis_state(machine, initial), args.steps)
        dist = output_distribution_unmonitored(machine.transition, initial, args.steps, DataSlot())
        support = [{'configuration': str(c), 'amplitude': _amplitude(a)} for c, a in state.items()]
        data.update({'sampled': False,
                     'norm': state.norm(),
                     'support': [{'configuration': str(c), 'amplitude': [a.real, a.imag]}
                                 for c, a in state.items()],
                     'distribution': {str(s): dist.probabilities[s] for s in dist.strings()},
                     'residual': dist.residual})
        context = dict(data, fileName=args.machine, support=support, maxSupport=MAX_LISTED,
                       distribution=[{'string': str(s), 'probability': dist.probabilities[s]}
                                     for s in dist.strings()])
    _emit(reporter, args, 'run.txt', context, data)
    return EXIT_OK


def cmd_compare_halting(args, machine, settings, reporter):
    """ Compare the output distributions with and without monitoring of the halt flag.

    :return: ``0`` if the stationarity condition holds and the distributions agree,
             ``3`` if the stationarity condition does not hold, and ``2`` if it holds
             but the distributions differ.
    """
    from qtmpy.io.codec import DataSlot
    from qtmpy.simulate.halting import compare_protocols

    if not _require_valid(machine, settings, reporter):
        return EXIT_VIOLATION
    tol = args.tolerance if args.tolerance is not None else settings['distribution_tolerance']
    x, initial = _initial(machine, args)
    cmp = compare_protocols(machine.transition, initial, args.steps, tol, DataSlot())
    data = cmp.to_dict()
    data.update({'machine': args.machine, 'input': str(x)})
    rows = [{'string': str(s),
             'monitored': cmp.monitored.probability(s),
             'unmonitored': cmp.unmonitored.probability(s),
             'difference': cmp.differences[s]} for s in cmp.strings()]
    context = {'fileName': args.machine, 'input': str(x), 'steps': args.steps, 'tolerance': tol,
               'stationarity': cmp.stationarity, 'maxViolations': MAX_LISTED, 'rows': rows,
               'monitored': cmp.monitored, 'unmonitored': cmp.unmonitored,
               'residualDifference': cmp.residualDifference, 'maxDifference': cmp.maxDifference,
               'haltMass': [{'step': k, 'mass': cmp.monitored.haltMass[k]}
                            for k in sorted(cmp.monitored.haltMass)],
               'verdict': cmp.verdict}
    _emit(reporter, args, 'compare.txt', context, data)
    if cmp.verdict is None:
        return EXIT_NOT_STATIONARY
    return EXIT_OK if cmp.verdict else EXIT_VIOLATION


def cmd_oracle(args, machine, settings, reporter):
    """ Build the matrix on a cyclic tape and compare its unitarity with the validator.

    :return: ``0`` if both agree and ``4`` otherwise.
    """
    from qtmpy.development.oracle import cross_check

    cells = args.cells if args.cells is not None else settings['oracle_cells']
    tol = args.tolerance if args.tolerance is not None else settings['validation_tolerance']
    rep = cross_check(machine.transition, cells, tol, settings['oracle_max_dimension'])
    data = rep.to_dict()
    data['machine'] = args.machine
    _emit(reporter, args, 'oracle.txt', dict(data, fileName=args.machine), data)
    return EXIT_OK if rep.agree else EXIT_DISAGREE


def main(argv=None):
    """ Run the command line interface and return the exit code.

    :param argv: The arguments, defaults to ``sys.argv[1:]``.
    """
    from qtmpy.io.machinefile import MachineFileError, read_machine
    from qtmpy.io.settings import load_settings

    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code
    reporter = Reporter(args.log)
    try:
        settings = load_settings(args.config)
        machine = read_machine(args.machine, reporter)
        return args.func(args, machine, settings, reporter)
    except MachineFileError as e:
        reporter.writeError(e.diagnostic())
    except (ValueError, OverflowError) as e:
        reporter.writeError(str(e))
    return EXIT_ERROR


if __name__ == '__main__':
    sys.exit(main())
