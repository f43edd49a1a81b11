#!/usr/bin/env python
# -*- coding: utf-8 -*-
#######################################################
# Halting protocol: the halt flag is measured after
# every step, and the data slot once the flag is 1.
#######################################################
"""
The halting protocol and the verification that monitoring the halt flag
does not change the output distribution.

With :math:`P = [\\![\\hat{n}_0 = 1]\\!]` and :math:`Q_j = [\\![\\hat{T}(S) = T_j]\\!]`,
the probability of the output :math:`T_j` is
:math:`\\|P Q_j U^N|C\\rangle\\|^2` without monitoring, and
:math:`\\sum_{K=0}^N \\|P Q_j (U P^\\perp)^K|C\\rangle\\|^2` if the halt
flag is measured after every step. Both agree if the machine does not
change the halt flag nor the slot string once the flag is set.
"""
import math
from collections import namedtuple

import numpy as np

from qtmpy.io.codec import DataSlot, GammaString, decode, encode
from qtmpy.machine.configuration import Configuration
from qtmpy.machine.state import QuantumState, basis_state, inner_product
from qtmpy.simulate.measurement import HaltFlag, TapeSlotString, sample_measure
from qtmpy.simulate.transition import apply_step

# Tolerance for the equality of probabilities and for the stationarity condition.
DEFAULT_TOLERANCE = 1E-10


class OutputDistribution(object):
    """ Probability distribution of the output :math:`\\Gamma`-string.

    :param probabilities: Dictionary that maps :class:`qtmpy.io.codec.GammaString` to its probability.
    :param residual: Probability that the machine has not halted.
    :param haltMass: Dictionary that maps the step :math:`K` to the probability of halting at :math:`K`.
    :param machine: The machine, used to order the strings.
    """

    def __init__(self, probabilities, residual, haltMass, machine):
        self.probabilities = dict(probabilities)
        self.residual = residual
        self.haltMass = dict(haltMass)
        self._machine = machine

    def probability(self, x):
        """ Return the probability of the output ``x``.

        :param x: A :class:`qtmpy.io.codec.GammaString`, a sequence of symbols,
                  or text that is parsed with :meth:`qtmpy.io.codec.GammaString.fromText`.
        """
        x = TapeSlotString(self._machine).normalize(x)
        if not isinstance(x, GammaString):
            return 0.0
        return self.probabilities.get(x, 0.0)

    def strings(self):
        """ Return the outputs with non-zero probability, by length and then lexicographically."""
        from qtmpy.simulate.measurement import string_index
        alphabet = self._machine.alphabet
        return sorted(self.probabilities.keys(), key=lambda x: string_index(x, alphabet))

    def halted(self):
        """ Return the total probability of all outputs."""
        return math.fsum(self.probabilities.values())

    def total(self):
        return self.halted() + self.residual

    def to_dict(self):
        return {'probabilities': {str(x): self.probabilities[x] for x in self.strings()},
                'residual': self.residual,
                'halt_mass': {str(k): self.haltMass[k] for k in sorted(self.haltMass)}}


class StationarityReport(object):
    """ Report of :func:`check_halt_stationarity`.

    :param violations: List of :class:`StationarityViolation`.
    :param budget: The number of steps that were checked.
    :param tolerance: The tolerance.
    """

    def __init__(self, violations, budget, tolerance):
        self.violations = list(violations)
        self.budget = budget
        self.tolerance = tolerance

    @property
    def satisfied(self):
        return len(self.violations) == 0

    def firstViolationStep(self):
        """ Return the first step at which the condition is violated, or ``None``."""
        return min((v.step for v in self.violations), default=None)

    def to_dict(self):
        return {'satisfied': self.satisfied,
                'budget': self.budget,
                'tolerance': self.tolerance,
                'violations': [{'step': v.step, 'string': str(v.string), 'deviation': v.deviation}
                               for v in self.violations]}


StationarityViolation = namedtuple('StationarityViolation', ['step', 'string', 'deviation'])

HaltRunResult = namedtuple('HaltRunResult', ['halted', 'haltStep', 'output', 'trace', 'seed'])
HaltRunResult.__doc__ = """ Result of :func:`run_protocol_sampled`.

    ``halted`` is ``True`` if the halt flag was measured as ``1``,
    in which case ``haltStep`` is the step :math:`K` and ``output`` the measured string.
    Otherwise both are ``None``.
    ``trace`` is the list of halt flag outcomes after the steps ``1, ..., K``.
"""

LemmaViolation = namedtuple('LemmaViolation', ['step', 'relation', 'string', 'residual'])

LEMMA_RELATIONS = ('halted-invariance', 'no-crossing', 'no-unhalting', 'single-step', 'orthogonality')


class LemmaReport(object):
    """ Report of :func:`check_halting_lemmas`.

    The relations are, for :math:`\\psi = U^t|C\\rangle`,

    - ``halted-invariance``: :math:`P Q_j U P Q_j \\psi = U P Q_j \\psi`,
    - ``no-crossing``: :math:`P Q_j U P Q_j^\\perp \\psi = 0`,
    - ``no-unhalting``: :math:`P^\\perp U P \\psi = 0`,
    - ``single-step``: :math:`\\|P Q_j U\\psi\\|^2 = \\|P Q_j\\psi\\|^2 + \\|P Q_j U P^\\perp\\psi\\|^2`,
    - ``orthogonality``: :math:`\\langle U P Q_j\\psi | P Q_j U P^\\perp\\psi\\rangle = 0`.
    """

    def __init__(self, maxResidual, violations, steps, tolerance):
        self.maxResidual = dict(maxResidual)
        self.violations = list(violations)
        self.steps = steps
        self.tolerance = tolerance

    @property
    def satisfied(self):
        return len(self.violations) == 0


class ProtocolComparison(object):
    """ Report of :func:`compare_protocols`.

    :param stationarity: The :class:`StationarityReport`.
    :param monitored: The :class:`OutputDistribution` with monitoring of the halt flag.
    :param unmonitored: The :class:`OutputDistribution` of a single measurement after the last step.
    :param tolerance: The tolerance for the comparison.
    """

    def __init__(self, stationarity, monitored, unmonitored, steps, tolerance):
        self.stationarity = stationarity
        self.monitored = monitored
        self.unmonitored = unmonitored
        self.steps = steps
        self.tolerance = tolerance
        keys = set(monitored.probabilities) | set(unmonitored.probabilities)
        self.differences = {x: abs(monitored.probability(x) - unmonitored.probability(x)) for x in keys}
        self.maxDifference = max(self.differences.values(), default=0.0)
        self.residualDifference = abs(monitored.residual - unmonitored.residual)

    @property
    def agree(self):
        """ ``True`` if both distributions and residuals agree within the tolerance."""
        return self.maxDifference <= self.tolerance and self.residualDifference <= self.tolerance

    @property
    def verdict(self):
        """ ``True`` or ``False`` if the stationarity condition is satisfied,
            in which case the distributions must agree, and ``None`` otherwise.
        """
        if not self.stationarity.satisfied:
            return None
        return self.agree

    def strings(self):
        from qtmpy.simulate.measurement import string_index
        alphabet = self.monitored._machine.alphabet
        return sorted(self.differences.keys(), key=lambda x: string_index(x, alphabet))

    def to_dict(self):
        return {'steps': self.steps,
                'tolerance': self.tolerance,
                'stationarity': self.stationarity.to_dict(),
                'monitored': self.monitored.to_dict(),
                'unmonitored': self.unmonitored.to_dict(),
                'differences': {str(x): self.differences[x] for x in self.strings()},
                'max_difference': self.maxDifference,
                'residual_difference': self.residualDifference,
                'verdict': self.verdict}


def _require_valid(d_fn):
    """ Raise a ``ValueError`` if ``d_fn`` does not define a unitary time evolution."""
    from qtmpy.development.validator import validate
    rep = validate(d_fn)
    if not rep.passed:
        raise ValueError(
            f"Local transition function violates the unitarity conditions {rep.failedConditions()}.")


def _as_state(d_fn, initial):
    """ Return ``initial`` as a state. A configuration is turned into its basis state."""
    if isinstance(initial, Configuration):
        return basis_state(d_fn.machine, initial)
    return initial


def _split_halted(state, slot):
    """ Split ``state`` into the halted parts :math:`P Q_j \\psi`, one per slot string,
        and the part :math:`P^\\perp \\psi` that has not halted.

    :return: The tuple ``(halted, running)``, where ``halted`` maps each string to a state.
    """
    final = state.machine.final
    halted = dict()
    running = dict()
    for config, amp in state.amplitudes().items():
        if config.processor == final:
            halted.setdefault(decode(slot, config.tape), dict())[config] = amp
        else:
            running[config] = amp
    return ({x: QuantumState(state.machine, a) for x, a in halted.items()},
            QuantumState(state.machine, running))


def _halted_part(state, slot, x):
    """ Return :math:`P Q_x \\psi`."""
    final = state.machine.final
    return state.filter(lambda c: c.processor == final and decode(slot, c.tape) == x)


def check_halt_stationarity(d_fn, initial, budget, tolerance=DEFAULT_TOLERANCE, slot=None):
    """ Check that the halt flag and the slot string do not change once the flag is set.

    :param d_fn: The local transition function, which must be unitary.
    :param initial: The initial configuration, or a state.
    :param budget: The last step :math:`t` that is checked.
    :param tolerance: The tolerance for the deviation.
    :param slot: The data slot. Defaults to :math:`m_n = n`.
    :return: An instance of :class:`StationarityReport`.

    For each :math:`t = 0, \\ldots,` ``budget`` with :math:`\\phi_t = U^t|C\\rangle`
    and each string :math:`T_j` in the halted part of :math:`\\phi_t`, this function checks
    :math:`U P Q_j \\phi_t = P Q_j U P Q_j \\phi_t`.
    The check is restricted to the trajectory of ``initial``.
    """
    _require_valid(d_fn)
    if budget < 0:
        raise ValueError(f"Budget must not be negative, received '{budget}'.")
    slot = slot if slot is not None else DataSlot()
    violations = list()
    phi = _as_state(d_fn, initial)
    for t in range(budget + 1):
        if t > 0:
            phi = apply_step(d_fn, phi)
        halted, _ = _split_halted(phi, slot)
        for x in sorted(halted, key=lambda s: (len(s), tuple(s))):
            moved = apply_step(d_fn, halted[x])
            kept = _halted_part(moved, slot, x)
            dev = moved.distance(kept)
            if dev > tolerance:
                violations.append(StationarityViolation(t, x, dev))
    return StationarityReport(violations, budget, tolerance)


def _accumulate(halted, probabilities):
    mass = 0.0
    for x, part in halted.items():
        p = part.norm()**2
        probabilities[x] = probabilities.get(x, 0.0) + p
        mass += p
    return mass


def output_distribution_unmonitored(d_fn, initial, steps, slot=None):
    """ Return the output distribution of a single measurement after ``steps`` steps.

    :param d_fn: The local transition function, which must be unitary.
    :param initial: The initial configuration, or a state.
    :param steps: The number of steps :math:`N`.
    :param slot: The data slot. Defaults to :math:`m_n = n`.
    :return: An instance of :class:`OutputDistribution` with
             probabilities :math:`\\|P Q_j U^N|C\\rangle\\|^2` and residual
             :math:`\\|P^\\perp U^N|C\\rangle\\|^2`.
    """
    from qtmpy.simulate.transition import evolve
    _require_valid(d_fn)
    slot = slot if slot is not None else DataSlot()
    phi = evolve(d_fn, _as_state(d_fn, initial), steps)
    halted, running = _split_halted(phi, slot)
    probabilities = dict()
    mass = _accumulate(halted, probabilities)
    return OutputDistribution(probabilities, running.norm()**2, {steps: mass}, d_fn.machine)


def output_distribution_monitored(d_fn, initial, budget, slot=None):
    """ Return the output distribution if the halt flag is measured after every step.

    :param d_fn: The local transition function, which must be unitary.
    :param initial: The initial configuration, or a state.
    :param budget: The last step :math:`N` at which the halt flag is measured.
    :param slot: The data slot. Defaults to :math:`m_n = n`.
    :return: An instance of :class:`OutputDistribution` with probabilities
             :math:`\\sum_{K=0}^N \\|P Q_j (U P^\\perp)^K|C\\rangle\\|^2`
             and residual :math:`\\|P^\\perp (U P^\\perp)^N|C\\rangle\\|^2`.

    The term :math:`K = 0` is the probability that the initial state has already halted.
    """
    _require_valid(d_fn)
    if budget < 0:
        raise ValueError(f"Budget must not be negative, received '{budget}'.")
    slot = slot if slot is not None else DataSlot()
    probabilities = dict()
    haltMass = dict()
    phi = _as_state(d_fn, initial)
    for k in range(budget + 1):
        if k > 0:
            phi = apply_step(d_fn, running)
        halted, running = _split_halted(phi, slot)
        haltMass[k] = _accumulate(halted, probabilities)
    return OutputDistribution(probabilities, running.norm()**2, haltMass, d_fn.machine)


def compare_protocols(d_fn, initial, steps, tolerance=DEFAULT_TOLERANCE, slot=None):
    """ Compare the output distributions with and without monitoring of the halt flag.

    :param d_fn: The local transition function, which must be unitary.
    :param initial: The initial configuration, or a state.
    :param steps: The number of steps :math:`N`, used for both protocols.
    :param tolerance: The tolerance for the stationarity check and the comparison.
    :param slot: The data slot. Defaults to :math:`m_n = n`.
    :return: An instance of :class:`ProtocolComparison`.

    If the stationarity condition holds up to ``steps``, the distributions
    must agree, and :attr:`ProtocolComparison.verdict` tells whether they do.
    Otherwise, the differences are only reported.
    """
    stationarity = check_halt_stationarity(d_fn, initial, steps, tolerance, slot)
    monitored = output_distribution_monitored(d_fn, initial, steps, slot)
    unmonitored = output_distribution_unmonitored(d_fn, initial, steps, slot)
    return ProtocolComparison(stationarity, monitored, unmonitored, steps, tolerance)


def run_protocol_sampled(d_fn, initial, budget, seed, slot=None):
    """ Run the halting protocol once, with random measurement outcomes.

    :param d_fn: The local transition function, which must be unitary.
    :param initial: The initial configuration, or a normalized state.
    :param budget: The maximum number of steps.
    :param seed: The seed of the random number generator, or a ``numpy.random.Generator``.
    :param slot: The data slot. Defaults to :math:`m_n = n`.
    :return: An instance of :class:`HaltRunResult`.

    After every step, the halt flag is measured and the state is replaced by the
    post-measurement state. Once the outcome is ``1``, the slot string is measured
    and returned as the output. If the initial state has already halted,
    the machine halts at step ``0``. The result is determined by ``seed``.
    """
    _require_valid(d_fn)
    if budget < 0:
        raise ValueError(f"Budget must not be negative, received '{budget}'.")
    slot = slot if slot is not None else DataSlot()
    if isinstance(seed, np.random.Generator):
        rng = seed
        seed = None
    else:
        rng = np.random.default_rng(seed)
    machine = d_fn.machine
    flag = HaltFlag(machine)
    slotString = TapeSlotString(machine, slot)
    phi = _as_state(d_fn, initial)
    trace = list()

    value, phi = sample_measure(phi, flag, rng)
    if value == 1:
        output, _ = sample_measure(phi, slotString, rng)
        return HaltRunResult(True, 0, output, trace, seed)
    for k in range(1, budget + 1):
        phi = apply_step(d_fn, phi)
        value, phi = sample_measure(phi, flag, rng)
        trace.append(value)
        if value == 1:
            output, _ = sample_measure(phi, slotString, rng)
            return HaltRunResult(True, k, output, trace, seed)
    return HaltRunResult(False, None, None, trace, seed)


def check_halting_lemmas(d_fn, initial, steps, tolerance=DEFAULT_TOLERANCE, slot=None):
    """ Check the relations that show that monitoring does not change the output distribution.

    :param d_fn: The local transition function, which must be unitary.
    :param initial: The initial configuration, or a state.
    :param steps: The relations are checked for :math:`\\psi = U^t|C\\rangle`, :math:`0 \\le t <` ``steps``.
    :param tolerance: The tolerance for the residuals.
    :param slot: The data slot. Defaults to :math:`m_n = n`.
    :return: An instance of :class:`LemmaReport`.
    """
    _require_valid(d_fn)
    slot = slot if slot is not None else DataSlot()
    maxResidual = {r: 0.0 for r in LEMMA_RELATIONS}
    violations = list()

    def record(t, relation, x, residual):
        maxResidual[relation] = max(maxResidual[relation], residual)
        if residual > tolerance:
            violations.append(LemmaViolation(t, relation, x, residual))

    psi = _as_state(d_fn, initial)
    for t in range(steps):
        Upsi = apply_step(d_fn, psi)
        halted, running = _split_halted(psi, slot)
        Urunning = apply_step(d_fn, running)
        haltedAfter, _ = _split_halted(Upsi, slot)
        # P^perp U P psi
        Uhalted = apply_step(d_fn, psi - running)
        record(t, 'no-unhalting', None, Uhalted.filter(lambda c: c.processor != d_fn.machine.final).norm())
        for x in sorted(set(halted) | set(haltedAfter), key=lambda s: (len(s), tuple(s))):
            PQpsi = halted.get(x, QuantumState(psi.machine))
            UPQpsi = apply_step(d_fn, PQpsi)
            # P Q_j U P Q_j^perp psi, where Q_j^perp is restricted to the halted part
            others = (psi - running) - PQpsi
            record(t, 'no-crossing', x, _halted_part(apply_step(d_fn, others), slot, x).norm())
            record(t, 'halted-invariance', x, _halted_part(UPQpsi, slot, x).distance(UPQpsi))
            PQUrunning = _halted_part(Urunning, slot, x)
            lhs = _halted_part(Upsi, slot, x).norm()**2
            rhs = PQpsi.norm()**2 + PQUrunning.norm()**2
            record(t, 'single-step', x, abs(lhs - rhs))
            record(t, 'orthogonality', x, abs(inner_product(UPQpsi, PQUrunning)))
        psi = Upsi
    return LemmaReport(maxResidual, violations, steps, tolerance)


def compute(machine, x, steps, slot=None):
    """ Run the computation of ``machine`` on the input ``x``.

    :param machine: The machine.
    :param x: The input :math:`\\Gamma`-string.
    :param steps: The number of steps.
    :param slot: The data slot. Defaults to :math:`m_n = n`.
    :return: The :class:`OutputDistribution` of a single measurement after ``steps`` steps.

    The input is encoded into the data slot, the machine is prepared in
    :math:`|q_0\\rangle|T_{in}\\rangle|0\\rangle`, evolved, and the slot string is
    measured and decoded.
    """
    slot = slot if slot is not None else DataSlot()
    tape = encode(slot, x, machine)
    initial = machine.configuration(machine.initial, tape, 0)
    return output_distribution_unmonitored(machine.transition, initial, steps, slot)
