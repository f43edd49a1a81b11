#!/usr/bin/env python
# -*- coding: utf-8 -*-
#######################################################
# Validation of local transition functions against the
# unitarity characterization, conditions (a) to (d).
#######################################################
from collections import namedtuple

import numpy as np

from qtmpy.simulate.transition import MOVES

# Default tolerance for the residuals of the conditions.
DEFAULT_TOLERANCE = 1E-9

CONDITIONS = ('a', 'b', 'c', 'd')

_DESCRIPTIONS = {
    'a': "columns are normalized",
    'b': "distinct columns are orthogonal",
    'c': "left and right moves do not overlap",
    'd': "moves and stays do not overlap"}

Witness = namedtuple('Witness', ['indices', 'residual'])
Witness.__doc__ = """ A violation of one condition.

    ``indices`` is ``((q, sigma),)`` for condition (a),
    ``((q, sigma), (q', sigma'))`` for condition (b), and
    ``((q, sigma, tau), (q', sigma', tau'))`` for conditions (c) and (d).
    ``residual`` is the magnitude of the difference between the sum and its expected value.
"""


class ConditionResult(object):
    """ Result of checking one condition.

    :param name: The condition, one of ``'a'``, ``'b'``, ``'c'`` or ``'d'``.
    :param witnesses: The list of :class:`Witness` whose residual exceeds the tolerance.
    :param maxResidual: The largest residual over all index tuples, including those that pass.
    """

    def __init__(self, name, witnesses, maxResidual):
        self.name = name
        self.description = _DESCRIPTIONS[name]
        self.witnesses = list(witnesses)
        self.maxResidual = maxResidual

    @property
    def passed(self):
        return len(self.witnesses) == 0


class ValidationReport(object):
    """ Report of :func:`validate`.

    :param results: Dictionary that maps the condition name to its :class:`ConditionResult`.
    :param tolerance: The tolerance that was used.
    :param unidirectional: ``True`` if no entry lets the head stay in place.

    The report passes if and only if all four conditions pass.
    """

    def __init__(self, results, tolerance, unidirectional):
        self._results = results
        self.tolerance = tolerance
        self.unidirectional = unidirectional

    def condition(self, name):
        """ Return the :class:`ConditionResult` of condition ``name``."""
        return self._results[name]

    @property
    def condition_a(self):
        return self._results['a']

    @property
    def condition_b(self):
        return self._results['b']

    @property
    def condition_c(self):
        return self._results['c']

    @property
    def condition_d(self):
        return self._results['d']

    @property
    def passed(self):
        return all(self._results[n].passed for n in CONDITIONS)

    def failedConditions(self):
        """ Return the names of the conditions that failed."""
        return [n for n in CONDITIONS if not self._results[n].passed]

    def witnesses(self):
        """ Return a list of ``(condition, witness)`` pairs for all violations."""
        return [(n, w) for n in CONDITIONS for w in self._results[n].witnesses]

    def to_dict(self):
        """ Return the report as a dictionary that can be serialized to json."""
        return {
            'passed': self.passed,
            'tolerance': self.tolerance,
            'unidirectional': self.unidirectional,
            'conditions': [
                {'name': n,
                 'description': self._results[n].description,
                 'passed': self._results[n].passed,
                 'max_residual': self._results[n].maxResidual,
                 'witnesses': [{'indices': [list(i) for i in w.indices], 'residual': w.residual}
                               for w in self._results[n].witnesses]}
                for n in CONDITIONS]}


def transition_tensor(d_fn):
    """ Return the local transition function as a dense array.

    :param d_fn: The local transition function.
    :return: A complex numpy array ``D`` of shape ``(|Q|, |Sigma|, |Q|, |Sigma|, 3)``
             where the last index is ``d + 1``.
    """
    machine = d_fn.machine
    nQ = len(machine.processorSymbols)
    nS = len(machine.tapeSymbols)
    D = np.zeros((nQ, nS, nQ, nS, len(MOVES)), dtype=complex)
    for (q, sigma, p, tau, d), amp in d_fn.entries().items():
        D[machine.processorIndex(q), machine.tapeIndex(sigma),
          machine.processorIndex(p), machine.tapeIndex(tau), d + 1] = amp
    return D


def _witnesses(residuals, tolerance, label):
    """ Return the witnesses for all entries of ``residuals`` that exceed ``tolerance``."""
    ret = list()
    for idx in np.argwhere(residuals > tolerance):
        ret.append(Witness(label(tuple(int(i) for i in idx)), float(residuals[tuple(idx)])))
    return ret


def validate(d_fn, tolerance=DEFAULT_TOLERANCE):
    """ Check whether the local transition function ``d_fn`` defines a unitary time evolution.

    :param d_fn: The local transition function, an instance of
                 :class:`qtmpy.simulate.transition.LocalTransitionFunction`.
    :param tolerance: The tolerance for the residuals, which must be positive.
    :return: An instance of :class:`ValidationReport`.

    The time evolution is unitary if and only if the following four conditions hold:

    (a) :math:`\\sum_{p,\\tau,d}|D(q,\\sigma,p,\\tau,d)|^2 = 1` for every :math:`(q,\\sigma)`,

    (b) :math:`\\sum_{p,\\tau,d} D(q',\\sigma',p,\\tau,d)^* D(q,\\sigma,p,\\tau,d) = 0`
        for every :math:`(q,\\sigma) \\ne (q',\\sigma')`,

    (c) :math:`\\sum_{p} D(q',\\sigma',p,\\tau',1)^* D(q,\\sigma,p,\\tau,-1) = 0`
        for every :math:`(q,\\sigma,\\tau)` and :math:`(q',\\sigma',\\tau')`,

    (d) :math:`\\sum_{p, d=0,1} D(q',\\sigma',p,\\tau',d-1)^* D(q,\\sigma,p,\\tau,d) = 0`
        for every :math:`(q,\\sigma,\\tau)` and :math:`(q',\\sigma',\\tau')`.

    All index tuples that violate a condition are reported, not just the first one.
    A ``ValueError`` is raised if an entry uses a symbol that is not in the machine.

    Usage: Type

       >>> import math
       >>> from qtmpy.machine.definition import MachineSpec
       >>> from qtmpy.development.validator import validate
       >>> s = 1/math.sqrt(2)
       >>> m = MachineSpec(["q"], ["B"], "q", "q", "B",
       ...                 {("q", "B", "q", "B", 1): s, ("q", "B", "q", "B", -1): s})
       >>> r = validate(m.transition)
       >>> r.failedConditions()
       ['c']

    """
    if not tolerance > 0:
        raise ValueError(f"Tolerance must be positive, received '{tolerance}'.")
    d_fn.checkSymbols()

    machine = d_fn.machine
    Q = machine.processorSymbols
    S = machine.tapeSymbols
    nQ = len(Q)
    nS = len(S)
    D = transition_tensor(d_fn)
    Dl = D[..., 0]
    Ds = D[..., 1]
    Dr = D[..., 2]

    def col(i):
        return (Q[i // nS], S[i % nS])

    # (a) and (b) from the Gram matrix of the columns.
    M = D.reshape(nQ * nS, -1)
    G = M.conj() @ M.T
    resA = np.abs(np.real(np.diag(G)) - 1.0)
    resB = np.abs(np.triu(G, k=1))

    # (c) and (d) with axes (q, sigma, tau, q', sigma', tau').
    C = np.einsum('uvpw,xypt->xytuvw', Dr.conj(), Dl)
    E = (np.einsum('uvpw,xypt->xytuvw', Dl.conj(), Ds)
         + np.einsum('uvpw,xypt->xytuvw', Ds.conj(), Dr))
    resC = np.abs(C)
    resD = np.abs(E)

    def pair(idx):
        return ((Q[idx[0]], S[idx[1]], S[idx[2]]), (Q[idx[3]], S[idx[4]], S[idx[5]]))

    results = {
        'a': ConditionResult('a', _witnesses(resA, tolerance, lambda i: (col(i[0]),)),
                             float(resA.max(initial=0.0))),
        'b': ConditionResult('b', _witnesses(resB, tolerance, lambda i: (col(i[0]), col(i[1]))),
                             float(resB.max(initial=0.0))),
        'c': ConditionResult('c', _witnesses(resC, tolerance, pair),
                             float(resC.max(initial=0.0))),
        'd': ConditionResult('d', _witnesses(resD, tolerance, pair),
                             float(resD.max(initial=0.0)))}
    return ValidationReport(results, tolerance, d_fn.isUnidirectional())
