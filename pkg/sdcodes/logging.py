import inspect
import logging
import os
import sys
from logging import handlers
from typing import Optional

from .config import Settings

LOGGER_NAME = "sdcodes"

_configured = False


class CodesLogger(logging.Logger):
    """
    Logger whose ``f*`` methods take an unevaluated f-string.

    The string is evaluated in the caller's frame, and only when the level is
    enabled. Records carry the caller's file, function and line.
    """

    def fdebug(self, fstr, *args):
        self.__deferred_flog(fstr, logging.DEBUG, *args)

    def finfo(self, fstr, *args):
        self.__deferred_flog(fstr, logging.INFO, *args)

    def fwarning(self, fstr, *args):
        self.__deferred_flog(fstr, logging.WARNING, *args)

    def makeRecord(
        self,
        name,
        level,
        fn,
        lno,
        msg,
        args,
        exc_info,
        func=None,
        extra=None,
        sinfo=None,
    ):
        # extra may replace filename, funcName and lineno
        record = logging.getLogRecordFactory()(
            name, level, fn, lno, msg, args, exc_info, func, sinfo
        )
        record.__dict__.update(extra or {})
        return record

    def __deferred_flog(self, fstr, level, *args):
        if not self.isEnabledFor(level):
            return
        frame = inspect.currentframe().f_back.f_back  # type: ignore
        try:
            code = frame.f_code
            extra = {
                "filename": os.path.split(code.co_filename)[-1],
                "funcName": code.co_name,
                "lineno": frame.f_lineno,
            }
            message = eval('f"' + fstr + '"', frame.f_globals, frame.f_locals)
        except Exception as e:
            self.error(f"Error {e} converting args to str {fstr}")
        else:
            self.log(level, message, extra=extra)
        finally:
            del frame


def get_logger() -> CodesLogger:
    """
    Package logger used by library modules.

    Carries only a NullHandler until :func:`create_logger` has configured it.
    """
    previous = logging.getLoggerClass()
    logging.setLoggerClass(CodesLogger)
    try:
        logger = logging.getLogger(LOGGER_NAME)
    finally:
        logging.setLoggerClass(previous)
    if not logger.handlers:
        logger.addHandler(logging.NullHandler())
        logger.propagate = False
    return logger  # type: ignore


def create_logger(
    settings: Optional[Settings] = None, verbose: bool = False
) -> CodesLogger:
    global _configured
    settings = settings or Settings.from_env()
    logger = get_logger()
    if _configured:
        return logger
    level = getattr(logging, settings.log_level.strip().upper(), None)
    format = [
        "%(asctime)s",
        "%(levelname)s",
        "%(threadName)s",
        "%(filename)s:%(funcName)s:%(lineno)s",
        "%(message)s",
    ]
    if not isinstance(level, int):
        logger.warning("Invalid SDCODES_LOG_LEVEL: %r, using INFO.", settings.log_level)
        level = logging.INFO
    if level >= logging.INFO:
        format.pop(2)
    formatter = logging.Formatter(" | ".join(format), datefmt="%H:%M:%S")
    if settings.log_file:
        handler = handlers.RotatingFileHandler(
            settings.log_file, maxBytes=1024 * 1024, backupCount=1
        )
        handler.formatter = formatter
        logger.addHandler(handler)
    if verbose:
        stream = logging.StreamHandler(sys.stderr)
        stream.formatter = formatter
        logger.addHandler(stream)
        level = logging.DEBUG
    logger.setLevel(level)
    _configured = True
    logger.info("Logger created")
    return logger
