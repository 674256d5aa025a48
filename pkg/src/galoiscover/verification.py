# standard library
import dataclasses
import math
import time

# 3rd party libraries

# project libraries
from .core import CosetOverflowError, InvalidArgumentError, VerificationMismatchError, log
from .cosets import DEFAULT_MAX_COSETS, Strategy, todd_coxeter
from .fp_groups import edge_homomorphism, image_order, tietze_simplify, verify_homomorphism
from .invariants import chern_data
from .monodromy import exponent_sum, full_factorization
from .van_kampen import PROJECTIVE_TAG, GroupPresentation, presentation_G, presentation_G1

SCHEMA_VERSION = 1

# relators of the simplified presentation up to this length are tried first
SHORTCUT_RELATOR_LENGTH = 12

@dataclasses.dataclass
class VerificationReport(object):
  k: int
  d: int
  m: int
  factor_count: int
  relator_count: int
  exponent_sum: int
  expected_order: int
  hom_verified: bool
  surjective: bool
  c1_squared: int
  classification: str
  g1_order: int = None
  max_cosets_used: int = 0
  runtime_ms: int = 0

  @property
  def isomorphic(self):
    """
    G1 is isomorphic to S_k when the verified surjection is a bijection;
    None while the order is unknown
    """
    if self.g1_order is None: return None
    return self.hom_verified and self.surjective and self.g1_order == self.expected_order

  @property
  def pi1_trivial(self):
    # the kernel of G1 -> S_k is the fundamental group of the Galois cover
    return self.isomorphic

  def to_dict(self):
    return {
      'schema_version': SCHEMA_VERSION,
      'k': self.k,
      'd': self.d,
      'm': self.m,
      'factor_count': self.factor_count,
      'relator_count': self.relator_count,
      'exponent_sum': self.exponent_sum,
      'g1_order': None if self.g1_order is None else str(self.g1_order),
      'expected_order': str(self.expected_order),
      'hom_verified': self.hom_verified,
      'surjective': self.surjective,
      'pi1_trivial': self.pi1_trivial,
      'c1_squared': str(self.c1_squared),
      'classification': self.classification,
      'max_cosets_used': self.max_cosets_used,
      'runtime_ms': self.runtime_ms,
      }

def shortest_relators(p, max_length=SHORTCUT_RELATOR_LENGTH):
  keep = [index for index, relator in enumerate(p.relators) if len(relator) <= max_length]
  return GroupPresentation(p.generators, [p.relators[i] for i in keep], p.stage, [p.provenance[i] for i in keep], ambient_lines=p.ambient_lines)

def group_order(p, expected_order=None, max_cosets=DEFAULT_MAX_COSETS, strategy=Strategy.HLT):
  """
  (order, peak live cosets) of the group presented by p

  When expected_order is a proven lower bound for the order, the shortest
  relators are enumerated first inside a budget of twice that bound. The
  group they present maps onto the one p presents, so hitting the bound
  there settles the order without the full enumeration
  """
  if expected_order is not None:
    sub = shortest_relators(p)
    if len(sub) < len(p):
      budget = min(max_cosets, 2 * expected_order)
      try:
        result = todd_coxeter(sub, max_cosets=budget, strategy=strategy)
        if result.order == expected_order:
          log("The {} shortest relators already give order {}".format(len(sub), result.order))
          return result.order, result.max_cosets_used
        log("The shortest relators give order {}, enumerating all relators".format(result.order))
      except CosetOverflowError:
        log("The shortest relators overflow {} cosets, enumerating all relators".format(budget))
  result = todd_coxeter(p, max_cosets=max_cosets, strategy=strategy)
  return result.order, result.max_cosets_used

def verify_simply_connected(k, max_cosets=DEFAULT_MAX_COSETS, strategy=Strategy.HLT, raw=False):
  """
  Build the factorization, both presentations and the edge homomorphism
  for k planes, and decide whether G1 -> S_k is an isomorphism

  A CosetOverflowError raised by the enumeration carries the partial
  report as its report attribute
  """
  if k < 4: raise InvalidArgumentError("Verification needs k >= 4, got {}".format(k))
  started = time.perf_counter()
  strategy = Strategy(strategy)

  f = full_factorization(k)
  g = presentation_G(f)
  g1 = presentation_G1(g)
  target = g1 if raw else tietze_simplify(g1)

  phi = edge_homomorphism(k)
  check = verify_homomorphism(g1, phi)
  expected = math.factorial(k)
  surjective = image_order(phi) == expected
  chern = chern_data(k)
  report = VerificationReport(
    k=k,
    d=chern.d,
    m=chern.m,
    factor_count=len(f),
    relator_count=len(g),
    exponent_sum=exponent_sum(f),
    expected_order=expected,
    hom_verified=check.ok,
    surjective=surjective,
    c1_squared=chern.c1_squared,
    classification=chern.classification.value,
    )

  # the image order bounds |G1| from below only through a verified surjection;
  # raw runs always enumerate every relator
  lower_bound = expected if check.ok and surjective and not raw else None
  try:
    report.g1_order, report.max_cosets_used = group_order(target, lower_bound, max_cosets, strategy)
  except CosetOverflowError as err:
    report.max_cosets_used = err.live_cosets
    report.runtime_ms = int((time.perf_counter() - started) * 1000)
    err.report = report
    raise

  report.runtime_ms = int((time.perf_counter() - started) * 1000)
  if report.g1_order < expected and check.ok and surjective:
    err = VerificationMismatchError("|G1| = {} is below the order {} of its image".format(report.g1_order, expected))
    err.report = report
    raise err
  log("k={} |G1|={} pi1 trivial: {}".format(k, report.g1_order, report.pi1_trivial))
  return report

@dataclasses.dataclass(frozen=True)
class NegativeControl(object):
  k: int
  dropped: str
  relators_dropped: int
  order: int
  expected_order: int

  @property
  def overflowed(self): return self.order is None

  @property
  def order_matches(self): return self.order == self.expected_order

def negative_control(k, drop=PROJECTIVE_TAG, max_cosets=DEFAULT_MAX_COSETS, strategy=Strategy.HLT):
  """
  Enumerate G1 again without every relator tagged drop (the projective
  relator by default, or a cusp family such as 'M5:cusp'). The order can
  only grow; whether it still equals k! is reported, an overflow as None
  """
  if k < 4: raise InvalidArgumentError("Negative controls need k >= 4, got {}".format(k))
  g1 = presentation_G1(presentation_G(full_factorization(k)))
  keep = [index for index, tag in enumerate(g1.provenance) if tag != drop]
  if len(keep) == len(g1):
    raise InvalidArgumentError("No relator is tagged [{}]".format(drop))
  reduced = GroupPresentation(g1.generators, [g1.relators[i] for i in keep], g1.stage, [g1.provenance[i] for i in keep], ambient_lines=g1.ambient_lines)
  expected = math.factorial(k)
  try:
    order = todd_coxeter(tietze_simplify(reduced), max_cosets=max_cosets, strategy=strategy).order
  except CosetOverflowError:
    order = None
  if order is not None and order < expected:
    raise VerificationMismatchError("Dropping [{}] gave order {} below {}".format(drop, order, expected))
  log("Without [{}] the order is {}".format(drop, order if order is not None else 'beyond the budget'))
  return NegativeControl(k, drop, len(g1) - len(keep), order, expected)
