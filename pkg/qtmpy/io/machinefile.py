#!/usr/bin/env python
# -*- coding: utf-8 -*-
#######################################################
# Reader and writer for machine files.
#######################################################
"""
Machine files are json files that declare the processor symbols with the
initial and final symbol, the tape symbols with the blank, and the non-zero
entries of the local transition function, for example

.. code-block:: javascript

   {
     "processor_symbols": ["q0", "qf"],
     "initial": "q0",
     "final": "qf",
     "tape_symbols": ["B", "1"],
     "blank": "B",
     "transitions": [
       {"state": "q0", "read": "B", "next_state": "qf", "write": "1", "move": 1, "amplitude": [1.0, 0.0]}
     ]
   }

Amplitudes are pairs ``[real part, imaginary part]``.
"""
import math
import os
import re

import simplejson

from qtmpy.io.reporter import Reporter

SCHEMA_FILE = os.path.join(os.path.dirname(__file__), os.path.pardir, 'templates', 'machinefile_schema.py')

_HEADER_KEYS = ('description', 'processor_symbols', 'initial', 'final', 'tape_symbols', 'blank')

# Maps the start of an error message of MachineSpec to the key it refers to.
_ERROR_KEYS = (('initial', 'initial'), ('final', 'final'), ('blank', 'blank'), ('the tape', 'tape_symbols'))


class MachineFileError(ValueError):
    """ Exception that is raised if a machine file is invalid.

    :param message: The error message.
    :param fileName: The name of the file, or ``None``.
    :param lineNumber: The line of the error, or ``None``.
    """

    def __init__(self, message, fileName=None, lineNumber=None):
        self.message = message
        self.fileName = fileName
        self.lineNumber = lineNumber
        ValueError.__init__(self, self.diagnostic())

    def diagnostic(self):
        """ Return the message in the form ``file:line: message``."""
        loc = self.fileName if self.fileName is not None else "<string>"
        if self.lineNumber is not None:
            loc += f":{self.lineNumber}"
        return f"{loc}: {self.message}"


class MachineFile(object):
    """ The content of a machine file.

    :param machine: The machine, an instance of :class:`qtmpy.machine.definition.MachineSpec`.
    :param description: Optional description of the machine.
    :param fileName: The name of the file the machine was read from, or ``None``.
    """

    def __init__(self, machine, description=None, fileName=None):
        self.machine = machine
        self.description = description
        self.fileName = fileName


def _line(text, idx):
    return text.count('\n', 0, idx) + 1


def _line_of_key(text, key):
    m = re.search(r'"' + re.escape(key) + r'"\s*:', text)
    return _line(text, m.start()) if m else None


def _record_lines(text):
    """ Return the line numbers of the records of the ``transitions`` array.

    The text must be valid json.
    """
    m = re.search(r'"transitions"\s*:\s*\[', text)
    if m is None:
        return []
    decoder = simplejson.JSONDecoder()
    lines = list()
    idx = m.end()
    ws = re.compile(r'[\s,]*')
    try:
        while True:
            idx = ws.match(text, idx).end()
            if idx >= len(text) or text[idx] == ']':
                break
            lines.append(_line(text, idx))
            _, idx = decoder.raw_decode(text, idx)
    except simplejson.JSONDecodeError:
        pass
    return lines


def _schema_error(errors, text, fileName):
    """ Return a :class:`MachineFileError` for the first cerberus error."""
    key = sorted(errors)[0]
    detail = errors[key]
    if key == 'transitions' and isinstance(detail, list) and len(detail) > 0 and isinstance(detail[0], dict):
        idx = sorted(k for k in detail[0] if isinstance(k, int))
        if len(idx) > 0:
            lines = _record_lines(text)
            i = idx[0]
            return MachineFileError(f"Invalid transition {i}: {detail[0][i]}",
                                    fileName, lines[i] if i < len(lines) else None)
    return MachineFileError(f"Invalid field '{key}': {detail}", fileName, _line_of_key(text, key))


def loads(text, fileName=None, reporter=None):
    """ Parse the content of a machine file.

    :param text: The json text.
    :param fileName: The name of the file, used in the error messages.
    :param reporter: Optional :class:`qtmpy.io.reporter.Reporter` for warnings.
    :return: An instance of :class:`MachineFile`.

    A :class:`MachineFileError` with the line number is raised if the text is
    not valid json, does not match the schema in ``templates/machinefile_schema.py``,
    uses undeclared symbols, has a non-finite amplitude or declares the
    same key ``(state, read, next_state, write, move)`` twice.
    """
    import json
    from cerberus import Validator
    from qtmpy.machine.definition import MachineSpec

    reporter = reporter if reporter is not None else Reporter()
    try:
        data = simplejson.loads(text)
    except simplejson.JSONDecodeError as e:
        raise MachineFileError(f"Invalid json: {e.msg}", fileName, e.lineno)
    if not isinstance(data, dict):
        raise MachineFileError("Machine file must contain a json object.", fileName, 1)

    with open(SCHEMA_FILE, mode='r', encoding='utf-8') as f:
        schema = json.load(f)
    v = Validator(schema)
    if not v.validate(data):
        raise _schema_error(v.errors, text, fileName)

    lines = _record_lines(text)
    Q = data['processor_symbols']
    S = data['tape_symbols']
    entries = dict()
    for i, rec in enumerate(data['transitions']):
        line = lines[i] if i < len(lines) else None
        for field, allowed in (('state', Q), ('read', S), ('next_state', Q), ('write', S)):
            if rec[field] not in allowed:
                raise MachineFileError(f"Transition {i}: '{field}' is '{rec[field]}', which is not declared.",
                                       fileName, line)
        if isinstance(rec['move'], bool):
            raise MachineFileError(f"Transition {i}: 'move' must be -1, 0 or 1.", fileName, line)
        re_, im = rec['amplitude']
        if isinstance(re_, bool) or isinstance(im, bool) or not (math.isfinite(re_) and math.isfinite(im)):
            raise MachineFileError(f"Transition {i}: amplitude must be a pair of finite numbers.",
                                   fileName, line)
        key = (rec['state'], rec['read'], rec['next_state'], rec['write'], rec['move'])
        if key in entries:
            raise MachineFileError(f"Transition {i}: duplicate entry {list(key)}.", fileName, line)
        amp = complex(re_, im)
        if amp == 0:
            reporter.writeWarning(f"{fileName or '<string>'}:{line}: Transition {i} has amplitude zero.")
        entries[key] = amp

    try:
        machine = MachineSpec(Q, S, data['initial'], data['final'], data['blank'], entries)
    except ValueError as e:
        msg = str(e).lower()
        key = next((k for p, k in _ERROR_KEYS if msg.startswith(p)), 'processor_symbols')
        raise MachineFileError(str(e), fileName, _line_of_key(text, key))
    return MachineFile(machine, data.get('description'), fileName)


def _number(x):
    # Adding 0.0 turns -0.0 into 0.0.
    return simplejson.dumps(float(x) + 0.0)


def dumps(machine, description=None):
    """ Return the canonical machine file of ``machine``.

    :param machine: The machine.
    :param description: Optional description.
    :return: The json text.

    The transitions are sorted by the symbol order of the machine and written
    one per line, hence the text of a machine that is read and written again
    does not change.
    """
    header = {'description': description,
              'processor_symbols': list(machine.processorSymbols),
              'initial': machine.initial,
              'final': machine.final,
              'tape_symbols': list(machine.tapeSymbols),
              'blank': machine.blank}
    lines = ["{"]
    for k in _HEADER_KEYS:
        if header[k] is None:
            continue
        lines.append(f'  "{k}": {simplejson.dumps(header[k])},')

    def order(item):
        (q, sigma, p, tau, d), _ = item
        return (machine.processorIndex(q), machine.tapeIndex(sigma),
                machine.processorIndex(p), machine.tapeIndex(tau), d)

    records = list()
    for (q, sigma, p, tau, d), amp in sorted(machine.transition.entries().items(), key=order):
        records.append(
            f'    {{"state": {simplejson.dumps(q)}, "read": {simplejson.dumps(sigma)}, '
            f'"next_state": {simplejson.dumps(p)}, "write": {simplejson.dumps(tau)}, '
            f'"move": {d}, "amplitude": [{_number(amp.real)}, {_number(amp.imag)}]}}')
    if len(records) == 0:
        lines.append('  "transitions": []')
    else:
        lines.append('  "transitions": [')
        lines.append(",\n".join(records))
        lines.append('  ]')
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_machine_file(fileName, reporter=None):
    """ Read the machine file ``fileName`` and return a :class:`MachineFile`."""
    try:
        with open(fileName, mode='r', encoding='utf-8') as f:
            text = f.read()
    except OSError as e:
        raise MachineFileError(f"Cannot read file: {e.strerror}", fileName)
    return loads(text, fileName, reporter)


def read_machine(fileName, reporter=None):
    """ Read the machine file ``fileName``.

    :param fileName: The name of the file.
    :param reporter: Optional :class:`qtmpy.io.reporter.Reporter` for warnings.
    :return: An instance of :class:`qtmpy.machine.definition.MachineSpec`.

    Usage: Type

       >>> import os
       >>> import qtmpy.io.machinefile as mf
       >>> m = mf.read_machine(os.path.join(mf.GALLERY, "coin.json"))
       >>> m.alphabet
       ('a', 'b')

    """
    return read_machine_file(fileName, reporter).machine


def write_machine(machine, fileName, description=None):
    """ Write ``machine`` to the file ``fileName`` in canonical form."""
    with open(fileName, mode='w', encoding='utf-8') as f:
        f.write(dumps(machine, description))


# Directory with the machines of the gallery.
GALLERY = os.path.abspath(os.path.join(os.path.dirname(__file__), os.path.pardir, 'examples', 'machines'))


def gallery_machine(name):
    """ Return the gallery machine ``name``, such as ``"coin"`` or ``"head-splitter"``."""
    return read_machine(os.path.join(GALLERY, f"{name}.json"))


def gallery_names():
    """ Return the sorted names of the gallery machines."""
    return sorted(f[:-5] for f in os.listdir(GALLERY) if f.endswith('.json'))
