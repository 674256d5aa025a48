# standard library
import dataclasses
import logging
import os
import re

# 3rd party libraries

# project libraries
from .core import InvalidArgumentError, log
from .cosets import DEFAULT_MAX_COSETS, Strategy

LOCAL_CONFIG_PATH = '~/.galoiscover/config'

ENV_MAX_COSETS = 'GALOISCOVER_MAX_COSETS'
ENV_REPORT_BUCKET = 'GALOISCOVER_REPORT_BUCKET'
ENV_REPORT_PREFIX = 'GALOISCOVER_REPORT_PREFIX'

CONFIG_LINE_PATTERN = re.compile(r'(?P<key>\w+) = (?P<val>[^\n]+)')

FORMATS = ('text', 'json')
STAGES = ('raw', 'g1', 'simplified')
KINDS = ('factorization', 'presentation')

def _positive_int(key, value):
  try:
    number = int(str(value).replace('_', ''))
  except ValueError:
    raise InvalidArgumentError("{} must be an integer, got [{}]".format(key, value))
  if number < 1:
    raise InvalidArgumentError("{} must be >= 1, got {}".format(key, number))
  return number

def _log_level(value):
  if isinstance(value, int): return value
  level = logging.getLevelName(str(value).upper())
  if not isinstance(level, int):
    raise InvalidArgumentError("Unknown log level [{}]".format(value))
  return level

@dataclasses.dataclass
class Settings(object):
  """
  Defaults shared by every command
  """
  max_cosets: int = DEFAULT_MAX_COSETS
  strategy: Strategy = Strategy.HLT
  log_level: int = logging.WARNING
  report_bucket: str = None
  report_prefix: str = 'reports'

  @classmethod
  def load(cls, path=LOCAL_CONFIG_PATH, environ=None):
    """
    Built-in defaults, then the local config file, then the environment
    """
    settings = cls()
    settings.update(read_local_config(path))
    environ = os.environ if environ is None else environ
    from_env = {}
    if environ.get(ENV_MAX_COSETS): from_env['max_cosets'] = environ[ENV_MAX_COSETS]
    if environ.get(ENV_REPORT_BUCKET): from_env['report_bucket'] = environ[ENV_REPORT_BUCKET]
    if environ.get(ENV_REPORT_PREFIX): from_env['report_prefix'] = environ[ENV_REPORT_PREFIX]
    settings.update(from_env)
    return settings

  def update(self, values):
    for key, value in values.items():
      if value is None: continue
      if key == 'max_cosets':
        self.max_cosets = _positive_int(key, value)
      elif key == 'strategy':
        try:
          self.strategy = Strategy(str(value).lower())
        except ValueError:
          raise InvalidArgumentError("Unknown strategy [{}]".format(value))
      elif key == 'log_level':
        self.log_level = _log_level(value)
      elif key == 'report_bucket':
        self.report_bucket = str(value).strip() or None
      elif key == 'report_prefix':
        self.report_prefix = str(value).strip().strip('/')
      else:
        log("Ignoring unknown setting [{}]".format(key), level='warning')
    return self

def read_local_config(path=LOCAL_CONFIG_PATH):
  """
  key = value pairs from a local config file, similar to the AWS CLI files.
  A missing file gives no settings
  """
  config_path = os.path.expanduser(path)
  values = {}
  if not os.path.exists(config_path): return values
  log("Found local config file at [{}]".format(config_path), level='debug')
  try:
    with open(config_path, 'r') as fh:
      for line in fh:
        m = CONFIG_LINE_PATTERN.search(line)
        if m: values[m.group('key')] = m.group('val').strip()
  except Exception as err:
    log("Could not read and process local config file.", err=err)
  return values

@dataclasses.dataclass
class RunConfig(object):
  """
  One command line invocation
  """
  command: str
  k: int = None
  k_from: int = None
  k_to: int = None
  max_cosets: int = DEFAULT_MAX_COSETS
  strategy: Strategy = Strategy.HLT
  raw: bool = False
  out: str = None
  out_dir: str = '.'
  format: str = 'text'
  stage: str = 'raw'
  kind: str = None
  log_level: int = logging.WARNING
  publish: bool = False

  def validate(self):
    if self.command == 'verify':
      if self.k is None or self.k < 4:
        raise InvalidArgumentError("verify needs --k >= 4, got {}".format(self.k))
    elif self.command == 'batch':
      if self.k_from is None or self.k_to is None:
        raise InvalidArgumentError("batch needs --k-from and --k-to")
      if self.k_from < 4:
        raise InvalidArgumentError("batch needs --k-from >= 4, got {}".format(self.k_from))
      if self.k_from > self.k_to:
        raise InvalidArgumentError("--k-from {} is above --k-to {}".format(self.k_from, self.k_to))
    elif self.command == 'emit':
      if self.kind not in KINDS:
        raise InvalidArgumentError("Can only emit {}, got [{}]".format(" or ".join(KINDS), self.kind))
      if self.k is None or self.k < 4:
        raise InvalidArgumentError("emit needs --k >= 4, got {}".format(self.k))
      if self.format not in FORMATS:
        raise InvalidArgumentError("Unknown format [{}]".format(self.format))
      if self.stage not in STAGES:
        raise InvalidArgumentError("Unknown stage [{}]".format(self.stage))
    else:
      raise InvalidArgumentError("Unknown command [{}]".format(self.command))
    if self.max_cosets < 1:
      raise InvalidArgumentError("--max-cosets must be >= 1, got {}".format(self.max_cosets))
    return self
