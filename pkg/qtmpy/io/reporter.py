#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
class Reporter(object):
    """ Class that is used to report results, warnings and errors.

    :param fileName: Optional name of a log file. If ``None``, nothing is logged to a file.
    :param verbose: If ``False``, the prefixes ``*** Error: `` and ``*** Warning: `` are omitted.

    Results are written to the standard output stream, errors and warnings
    to the standard error stream. If ``fileName`` is given, all messages are
    also appended to this file, which is deleted when the reporter is constructed.

    Usage: Type

       >>> from qtmpy.io.reporter import Reporter
       >>> r = Reporter()
       >>> r.writeWarning("Budget exhausted.") # doctest: +SKIP
       *** Warning: Budget exhausted.
       >>> r.getNumberOfWarnings()
       1

    """

    def __init__(self, fileName=None, verbose=True):
        self._verbose = verbose
        self._iWar = 0
        self._iErr = 0
        self._logFil = fileName
        self._logToFile = fileName is not None
        if self._logToFile:
            self.deleteLogFile()

    def deleteLogFile(self):
        """ Deletes the log file if it exists.
        """
        import os
        if self._logFil is not None and os.path.isfile(self._logFil):
            try:
                os.remove(self._logFil)
            except FileNotFoundError:
                pass

    def logToFile(self, log=True):
        """ Enable or disable logging to the file ``fileName``.

        :param log: If ``True``, then all messages are also written to the log file.

        A ``ValueError`` is raised if the reporter has no log file.
        """
        if log and self._logFil is None:
            raise ValueError("Reporter was constructed without a log file.")
        self._logToFile = log

    def getNumberOfErrors(self):
        """ Returns the number of error messages that were written.

        :return : The number of error messages that were written.
        """
        return self._iErr

    def getNumberOfWarnings(self):
        """ Returns the number of warning messages that were written.

        :return : The number of warning messages that were written.
        """
        return self._iWar

    def writeError(self, message):
        """ Writes an error message.

        :param message: The message to be written.

        Note that this method adds a new line character at the end of the message.
        """
        self._iErr += 1
        self._writeErrorOrWarning(True, message)

    def writeWarning(self, message):
        """ Writes a warning message.

        :param message: The message to be written.

        Note that this method adds a new line character at the end of the message.
        """
        self._iWar += 1
        self._writeErrorOrWarning(False, message)

    def _log(self, msg):
        if self._logToFile:
            with open(self._logFil, mode="a", encoding="utf-8") as fil:
                fil.write(msg)

    def _writeErrorOrWarning(self, isError, message):
        import sys

        msg = ""
        if self._verbose:
            msg += "*** Error: " if isError else "*** Warning: "
        msg += message + "\n"
        sys.stderr.write(msg)
        self._log(msg)

    def writeOutput(self, message):
        """ Writes a message to the standard output.

        :param message: The message to be written.

        Note that this method adds a new line character at the end of the message,
        unless the message already ends with one.
        """
        import sys

        msg = message if message.endswith("\n") else message + "\n"
        self._log(msg)
        sys.stdout.write(msg)
