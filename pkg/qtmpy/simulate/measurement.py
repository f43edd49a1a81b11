#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
"""
Observables on the configuration space and measurements that satisfy the projection postulate.

Only the observables of the computational basis are available:
:class:`ProcessorState`, :class:`TapeCell`, :class:`HeadPosition`,
:class:`TapeSlotString` and :class:`HaltFlag`.
"""
import math
from collections import namedtuple

from qtmpy.io.codec import DataSlot, GammaString, decode
from qtmpy.machine.state import DROP_THRESHOLD, NORM_TOLERANCE


class ProcessorState(object):
    """ The observable :math:`\\hat{q}` with outcome :math:`n` for the processor symbol :math:`q_n`.

    :param machine: The machine, which defines the numbering of the processor symbols.
    """

    def __init__(self, machine):
        self.machine = machine

    def value(self, configuration):
        return self.machine.processorIndex(configuration.processor)

    def sortKey(self, value):
        return value

    def __repr__(self):
        return "ProcessorState()"


class TapeCell(object):
    """ The observable :math:`\\hat{T}(m)` whose outcome is the symbol in the cell ``m``.

    :param machine: The machine, which defines the order of the tape symbols.
    :param cell: The cell index :math:`m`.
    """

    def __init__(self, machine, cell):
        from qtmpy.machine.tape import check_cell
        self.machine = machine
        self.cell = check_cell(cell)

    def value(self, configuration):
        return configuration.tape.read(self.cell)

    def sortKey(self, value):
        return self.machine.tapeIndex(value)

    def __repr__(self):
        return f"TapeCell({self.cell})"


class HeadPosition(object):
    """ The observable :math:`\\hat{\\xi}` whose outcome is the head position."""

    def value(self, configuration):
        return configuration.head

    def sortKey(self, value):
        return value

    def __repr__(self):
        return "HeadPosition()"


class TapeSlotString(object):
    """ The observable :math:`\\hat{T}(S)` whose outcome is the string in the data slot.

    :param machine: The machine, which defines the order of the alphabet.
    :param slot: The data slot. Defaults to :math:`m_n = n`.

    The outcome is the decoded :math:`\\Gamma`-string. Outcomes are ordered by
    :func:`slot_string_index`.
    """

    def __init__(self, machine, slot=None):
        self.machine = machine
        self.slot = slot if slot is not None else DataSlot()

    def value(self, configuration):
        return decode(self.slot, configuration.tape)

    def sortKey(self, value):
        return string_index(value, self.machine.alphabet)

    def normalize(self, value):
        """ Return ``value`` as a :class:`qtmpy.io.codec.GammaString`.

        Text is split into symbols by :meth:`qtmpy.io.codec.GammaString.fromText`.
        Values that are not strings over the alphabet are returned unchanged,
        hence they match no configuration.
        """
        if isinstance(value, GammaString):
            return value
        try:
            if isinstance(value, str):
                return GammaString.fromText(value, self.machine.alphabet)
            return GammaString(value, self.machine.alphabet)
        except (TypeError, ValueError):
            return value

    def __repr__(self):
        return f"TapeSlotString({self.slot!r})"


class HaltFlag(object):
    """ The halt flag :math:`\\hat{n}_0 = |q_f\\rangle\\langle q_f|`,
        with outcome ``1`` if and only if the processor is in :math:`q_f`.

    :param machine: The machine, which defines :math:`q_f`.
    """

    def __init__(self, machine):
        self.machine = machine

    def value(self, configuration):
        return 1 if configuration.processor == self.machine.final else 0

    def sortKey(self, value):
        return value

    def __repr__(self):
        return "HaltFlag()"


class Projector(object):
    """ Spectral projection onto the span of the configurations that satisfy ``predicate``.

    :param predicate: Function that maps a configuration to ``True`` or ``False``.
    :param label: Text used in reports, such as ``[[n0=1]]``.

    Projectors of the computational basis commute, and their product is
    the conjunction of the predicates, see :meth:`__and__`.
    """

    def __init__(self, predicate, label=""):
        self._predicate = predicate
        self.label = label

    def __call__(self, configuration):
        return bool(self._predicate(configuration))

    def __and__(self, other):
        return Projector(lambda c: self(c) and other(c), f"{self.label}{other.label}")

    def complement(self):
        """ Return the projector :math:`I - P`."""
        return Projector(lambda c: not self(c), f"{self.label}^perp")

    def __repr__(self):
        return f"Projector({self.label})"


def _normalize(kind, value):
    """ Convert ``value`` to the type of the outcomes of ``kind``, if ``kind`` defines a conversion."""
    norm = getattr(kind, 'normalize', None)
    return value if norm is None else norm(value)


Outcome = namedtuple('Outcome', ['value', 'probability', 'state'])


class OutcomeDistribution(object):
    """ Distribution of the outcomes of a measurement.

    :param outcomes: List of :class:`Outcome` with the outcome value, its probability
                     and the normalized post-measurement state, in canonical order.
    :param kind: The observable that was measured, used to convert the values
                 passed to :meth:`probability` and :meth:`state`.
    """

    def __init__(self, outcomes, kind=None):
        self._outcomes = list(outcomes)
        self._kind = kind

    def values(self):
        return [o.value for o in self._outcomes]

    def probability(self, value):
        """ Return the probability of ``value``, which is zero if it is not an outcome."""
        value = _normalize(self._kind, value)
        for o in self._outcomes:
            if o.value == value:
                return o.probability
        return 0.0

    def state(self, value):
        """ Return the post-measurement state for ``value``."""
        value = _normalize(self._kind, value)
        for o in self._outcomes:
            if o.value == value:
                return o.state
        raise ValueError(f"'{value}' is not an outcome of this measurement.")

    def total(self):
        return math.fsum(o.probability for o in self._outcomes)

    def __iter__(self):
        return iter(self._outcomes)

    def __len__(self):
        return len(self._outcomes)

    def __getitem__(self, i):
        return self._outcomes[i]


def spectral_projection(kind, value):
    """ Return the projector :math:`[\\![\\hat{A} = a]\\!]`.

    :param kind: The observable :math:`\\hat{A}`.
    :param value: The outcome :math:`a`.

    Values that are not in the spectrum of the observable yield the empty
    projector, which annihilates every state.
    """
    value = _normalize(kind, value)
    return Projector(lambda c: kind.value(c) == value, f"[[{kind!r}={value}]]")


def project(state, proj):
    """ Return :math:`P|\\psi\\rangle`, which is not normalized.

    :param state: The state.
    :param proj: The projector, an instance of :class:`Projector`.
    """
    return state.filter(proj)


def _outcome_parts(state, kind):
    """ Return a dictionary that maps each outcome value to the dictionary of amplitudes
        of the configurations with this value.
    """
    parts = dict()
    for config, amp in state.amplitudes().items():
        parts.setdefault(kind.value(config), dict())[config] = amp
    return parts


def measure(state, kind):
    """ Return the outcome distribution of measuring ``kind`` in ``state``.

    :param state: A normalized state.
    :param kind: The observable.
    :return: An instance of :class:`OutcomeDistribution`.

    The probability of each outcome is the squared norm of the projected state,
    and the post-measurement state is the normalized projection.
    Outcomes with a probability below ``1E-15`` are omitted.
    A ``ValueError`` is raised if ``state`` is not normalized.
    """
    from qtmpy.machine.state import QuantumState

    if not state.isNormalized(NORM_TOLERANCE):
        raise ValueError(f"Measurement requires a normalized state, received a state with norm {state.norm()}.")
    outcomes = list()
    for value, amps in _outcome_parts(state, kind).items():
        part = QuantumState(state.machine, amps)
        prob = part.norm()**2
        if prob < DROP_THRESHOLD:
            continue
        outcomes.append(Outcome(value, prob, part * (1.0 / math.sqrt(prob))))
    outcomes.sort(key=lambda o: kind.sortKey(o.value))
    return OutcomeDistribution(outcomes, kind)


def sample_measure(state, kind, rng):
    """ Measure ``kind`` in ``state`` and return one random outcome.

    :param state: A normalized state.
    :param kind: The observable.
    :param rng: A seeded ``numpy.random.Generator``.
    :return: The tuple ``(value, post-measurement state)``.

    The outcome is drawn by inverting the cumulative distribution over the
    outcomes in canonical order, hence the result is determined by the state of ``rng``.
    """
    dist = measure(state, kind)
    u = rng.random() * dist.total()
    cum = 0.0
    for o in dist:
        cum += o.probability
        if u < cum:
            return (o.value, o.state)
    last = dist[len(dist) - 1]
    return (last.value, last.state)


def string_index(x, alphabet):
    """ Return the index of the string ``x`` in the length-lexicographic enumeration
        of the strings over ``alphabet``, starting with ``1`` for the empty string.
    """
    k = len(alphabet)
    pos = {s: i for i, s in enumerate(alphabet)}
    n = len(x)
    if k == 0:
        if n > 0:
            raise ValueError(f"String '{x}' is not over the empty alphabet.")
        return 1
    shorter = n if k == 1 else (k**n - 1) // (k - 1)
    rank = 0
    for s in x:
        if s not in pos:
            raise ValueError(f"Symbol '{s}' is not in the alphabet {list(alphabet)}.")
        rank = rank * k + pos[s]
    return 1 + shorter + rank


def slot_string_index(slot, tape, alphabet):
    """ Return the index :math:`\\lambda_j` of the string in the data slot of ``tape``.

    :param slot: The data slot.
    :param tape: The tape.
    :param alphabet: The alphabet :math:`\\Gamma` in the order of the machine.

    The strings are enumerated by length and then lexicographically,
    starting with ``1`` for the empty string.

    Usage: Type

       >>> from qtmpy.io.codec import DataSlot
       >>> from qtmpy.machine.tape import Tape
       >>> from qtmpy.simulate.measurement import slot_string_index
       >>> t = Tape(["B", "a", "b"], "B", {0: "a", 1: "a"})
       >>> slot_string_index(DataSlot(), t, ("a", "b"))
       4

    """
    return string_index(decode(slot, tape), alphabet)
