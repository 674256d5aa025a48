# standard library
import enum
import logging

# 3rd party libraries

# project libraries

LOGGER_NAME = "GaloisCover"

LOG_LEVELS = [
  logging.CRITICAL,
  logging.DEBUG,
  logging.ERROR,
  logging.FATAL,
  logging.INFO,
  logging.WARNING,
  ]

LOG_LEVEL_NAMES = [
  'critical',
  'debug',
  'error',
  'fatal',
  'info',
  'warning'
  ]

class ExitCode(enum.IntEnum):
  OK = 0
  MISMATCH = 2
  OVERFLOW = 3
  INVALID_ARGUMENTS = 4

# *******************************************************************
# exceptions
# *******************************************************************
class GaloisCoverError(Exception):
  """
  Base class for every error raised by the library
  """
  exit_code = ExitCode.MISMATCH

class InvalidArgumentError(GaloisCoverError, ValueError):
  exit_code = ExitCode.INVALID_ARGUMENTS

class AmbientMismatchError(InvalidArgumentError):
  """
  Two values built over different strand or generator counts were combined
  """

class VerificationMismatchError(GaloisCoverError):
  exit_code = ExitCode.MISMATCH

class CosetOverflowError(GaloisCoverError):
  """
  The coset enumeration needed more live cosets than its budget allows

  This signals an exhausted budget, not a mathematical failure
  """
  exit_code = ExitCode.OVERFLOW

  def __init__(self, max_cosets, live_cosets, message=None):
    self.max_cosets = max_cosets
    self.live_cosets = live_cosets
    if not message:
      message = "Coset budget of {} exceeded with {} live cosets".format(max_cosets, live_cosets)
    GaloisCoverError.__init__(self, message)

# *******************************************************************
# logging
# *******************************************************************
def get_logger():
  return logging.getLogger(LOGGER_NAME)

def set_logging(level=logging.WARNING):
  """
  Setup the overall logging environment. Messages always go to stderr so
  stdout stays reserved for the requested artifacts
  """
  logger = get_logger()
  logger.setLevel(level)

  # reset any existing handlers
  logger.handlers = []
  logger.propagate = False

  formatter = logging.Formatter('[%(asctime)s]\t%(message)s', '%Y-%m-%d %H:%M:%S')
  stream_handler = logging.StreamHandler() # defaults to sys.stderr
  stream_handler.setFormatter(formatter)
  logger.addHandler(stream_handler)

  return logger

def log(message='', err=None, level='info'):
  """
  Log a message on the shared library logger
  """
  if not level.lower() in LOG_LEVEL_NAMES: level = 'info'

  if err:
    level = 'error'
    message += ' Threw exception:\n\t{}'.format(err)

  logger = get_logger()
  try:
    func = getattr(logger, level.lower())
    func(message)
  except Exception as log_err:
    logger.critical("Could not write to log. Threw exception:\n\t{}".format(log_err))

class CoreApi(object):
  def __init__(self, log_at_level=None):
    self._log_at_level = None
    self.logger = get_logger()
    if log_at_level is None:
      # keep whatever the entry point configured
      self._log_at_level = self.logger.getEffectiveLevel()
    else:
      self.log_at_level = log_at_level

  # *******************************************************************
  # properties
  # *******************************************************************
  @property
  def log_at_level(self): return self._log_at_level

  @log_at_level.setter
  def log_at_level(self, value):
    """
    Make sure logging is always set at a valid level
    """
    if value in LOG_LEVELS:
      self._log_at_level = value
      self.logger = set_logging(self._log_at_level)
    else:
      if not self._log_at_level:
        self._log_at_level = logging.WARNING
        self.logger = set_logging(self._log_at_level)

  # *******************************************************************
  # methods
  # *******************************************************************
  def log(self, message='', err=None, level='info'):
    """
    Log a message
    """
    log(message=message, err=err, level=level)
