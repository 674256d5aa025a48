# standard library
import argparse
import json
import os
import sys

# 3rd party libraries

# project libraries
from .config import ENV_REPORT_BUCKET, FORMATS, KINDS, STAGES, RunConfig, Settings
from .core import CosetOverflowError, ExitCode, GaloisCoverError, InvalidArgumentError, VerificationMismatchError, log, set_logging
from .cosets import Strategy
from .fp_groups import tietze_simplify
from .monodromy import format_factorization, full_factorization
from .publisher import ReportPublisher
from .van_kampen import format_presentation, presentation_G, presentation_G1, presentation_to_json
from .verification import verify_simply_connected

SUMMARY_COLUMNS = ['k', 'k!', 'g1_order', 'c1_squared', 'classification', 'verdict']

def build_parser(settings):
  common = argparse.ArgumentParser(add_help=False)
  common.add_argument('--log-level', default=None, help="Logging level for the messages written to stderr")
  common.add_argument('--publish', action='store_true', help="Also copy report JSON to the configured S3 bucket")

  enumeration = argparse.ArgumentParser(add_help=False)
  enumeration.add_argument('--max-cosets', type=int, default=settings.max_cosets, help="Live coset budget of the enumeration")
  enumeration.add_argument('--strategy', choices=[s.value for s in Strategy], default=settings.strategy.value, help="Coset enumeration strategy")

  parser = argparse.ArgumentParser(prog='galoiscover', description="Fundamental groups of Galois covers of degenerations to cones over chains of planes")
  subparsers = parser.add_subparsers(dest='command', required=True)

  verify = subparsers.add_parser('verify', parents=[common, enumeration], help="Verify G1 = S_k and the triviality of the fundamental group")
  verify.add_argument('--k', type=int, required=True, help="Number of planes")
  verify.add_argument('--raw', action='store_true', help="Enumerate the unsimplified G1 presentation")
  verify.add_argument('--out', default=None, help="Report path, stdout when omitted")

  batch = subparsers.add_parser('batch', parents=[common, enumeration], help="Verify a range of k")
  batch.add_argument('--k-from', type=int, required=True)
  batch.add_argument('--k-to', type=int, required=True)
  batch.add_argument('--out-dir', default='.', help="Directory for the reports and summary.tsv")

  emit = subparsers.add_parser('emit', parents=[common], help="Write a factorization or a presentation")
  emit.add_argument('kind', choices=KINDS)
  emit.add_argument('--k', type=int, required=True)
  emit.add_argument('--stage', choices=STAGES, default='raw')
  emit.add_argument('--format', choices=FORMATS, default='text')
  emit.add_argument('--out', default=None)

  return parser

def _run_config(args, settings):
  values = {'command': args.command, 'log_level': settings.log_level, 'publish': args.publish}
  if args.log_level: values['log_level'] = Settings().update({'log_level': args.log_level}).log_level
  for name in ('k', 'k_from', 'k_to', 'max_cosets', 'raw', 'out', 'out_dir', 'format', 'stage', 'kind'):
    if hasattr(args, name): values[name] = getattr(args, name)
  if hasattr(args, 'strategy'): values['strategy'] = Strategy(args.strategy)
  return RunConfig(**values).validate()

# *******************************************************************
# output
# *******************************************************************
def write_output(text, path=None):
  """
  Write to path, or to stdout when no path is given. Always UTF-8 with LF
  line endings
  """
  if path:
    directory = os.path.dirname(path)
    if directory: os.makedirs(directory, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='\n') as fh:
      fh.write(text)
    log("Wrote [{}]".format(path))
  else:
    sys.stdout.write(text)
    sys.stdout.flush()

def report_json(report):
  return json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"

def _publisher(config, settings):
  if not config.publish: return None
  return ReportPublisher(settings.report_bucket, settings.report_prefix)

def _write_report(report, path, publisher):
  body = report_json(report)
  write_output(body, path)
  if publisher: publisher.publish("report_k{}.json".format(report.k), body)

# *******************************************************************
# commands
# *******************************************************************
def cmd_verify(config, settings):
  publisher = _publisher(config, settings)
  try:
    report = verify_simply_connected(config.k, max_cosets=config.max_cosets, strategy=config.strategy, raw=config.raw)
  except (CosetOverflowError, VerificationMismatchError) as err:
    if getattr(err, 'report', None) is not None: _write_report(err.report, config.out, publisher)
    raise
  _write_report(report, config.out, publisher)
  if not report.pi1_trivial:
    raise VerificationMismatchError("G1 for k={} has order {}, expected {}".format(config.k, report.g1_order, report.expected_order))
  return ExitCode.OK

def cmd_batch(config, settings):
  publisher = _publisher(config, settings)
  os.makedirs(config.out_dir, exist_ok=True)
  rows = ["\t".join(SUMMARY_COLUMNS)]
  mismatch, overflow = False, False
  for k in range(config.k_from, config.k_to + 1):
    path = os.path.join(config.out_dir, "report_k{}.json".format(k))
    try:
      report = verify_simply_connected(k, max_cosets=config.max_cosets, strategy=config.strategy)
      verdict = 'true' if report.pi1_trivial else 'false'
      mismatch = mismatch or not report.pi1_trivial
    except CosetOverflowError as err:
      log("k={} overflowed: {}".format(k, err), level='warning')
      report = err.report
      verdict = 'overflow'
      overflow = True
    except VerificationMismatchError as err:
      log("k={} failed verification: {}".format(k, err), level='error')
      report = err.report
      verdict = 'false'
      mismatch = True
    _write_report(report, path, publisher)
    g1_order = '' if report.g1_order is None else str(report.g1_order)
    rows.append("\t".join([str(k), str(report.expected_order), g1_order, str(report.c1_squared), report.classification, verdict]))
  write_output("\n".join(rows) + "\n", os.path.join(config.out_dir, 'summary.tsv'))
  if mismatch: return ExitCode.MISMATCH
  if overflow: return ExitCode.OVERFLOW
  return ExitCode.OK

def emit_text(config):
  """
  The requested artifact as text; identical inputs give identical bytes
  """
  f = full_factorization(config.k)
  if config.kind == 'factorization':
    if config.format == 'json':
      payload = {'k': config.k, 'ambient_lines': f.ambient_lines, 'factors': [factor.to_dict() for factor in f]}
      return json.dumps(payload, indent=2) + "\n"
    return format_factorization(f)

  p = presentation_G(f)
  if config.stage in ('g1', 'simplified'): p = presentation_G1(p)
  if config.stage == 'simplified': p = tietze_simplify(p)
  return presentation_to_json(p) if config.format == 'json' else format_presentation(p)

def cmd_emit(config, settings):
  write_output(emit_text(config), config.out)
  return ExitCode.OK

COMMANDS = {
  'verify': cmd_verify,
  'batch': cmd_batch,
  'emit': cmd_emit,
  }

def main(argv=None, settings=None):
  try:
    settings = settings or Settings.load()
  except GaloisCoverError as err:
    set_logging()
    log("Invalid settings.", err=err)
    return int(err.exit_code)

  parser = build_parser(settings)
  try:
    args = parser.parse_args(argv)
  except SystemExit as err:
    # argparse uses 2 for bad usage
    return int(ExitCode.OK) if not err.code else int(ExitCode.INVALID_ARGUMENTS)

  try:
    config = _run_config(args, settings)
    set_logging(config.log_level)
    if config.publish and not settings.report_bucket:
      raise InvalidArgumentError("--publish needs a report bucket, set {}".format(ENV_REPORT_BUCKET))
    return int(COMMANDS[config.command](config, settings))
  except CosetOverflowError as err:
    log("Coset enumeration ran out of budget.", err=err)
    return int(err.exit_code)
  except GaloisCoverError as err:
    log("Could not complete [{}].".format(args.command), err=err)
    return int(err.exit_code)
