# standard library
import dataclasses
import enum

# 3rd party libraries

# project libraries
from .braids import BraidWord, HalfTwistLetter, Side, StrandLabel, conjugate, power
from .core import InvalidArgumentError, log

class Compound(enum.Enum):
  BRANCH = 'branch'
  NODE_PAIR = 'node_pair'
  NODE_QUAD = 'node_quad'
  CUSP = 'cusp'

def label(value): return StrandLabel.parse(value)

def primed(index): return StrandLabel(index, True)

def unprimed(index): return StrandLabel(index, False)

# *******************************************************************
# factors
# *******************************************************************
@dataclasses.dataclass(frozen=True)
class MonodromyFactor(object):
  """
  (Z_{ab}^power)^conjugator for a below or above axis half-twist Z_{ab}
  """
  core_a: StrandLabel
  core_b: StrandLabel
  side: Side
  power: int
  conjugator: BraidWord
  tag: str = ''
  compound: Compound = Compound.BRANCH

  def __post_init__(self):
    core = HalfTwistLetter(self.core_a, self.core_b, self.side, 1)
    if self.power not in (1, 2, 3):
      raise InvalidArgumentError("Factor power must be 1, 2 or 3, got {}".format(self.power))
    if core.q > 2 * self.conjugator.ambient_lines:
      raise InvalidArgumentError("Factor {} lies outside {} lines".format(core, self.conjugator.ambient_lines))
    object.__setattr__(self, 'core_a', core.a)
    object.__setattr__(self, 'core_b', core.b)
    object.__setattr__(self, 'side', core.side)

  @property
  def ambient_lines(self): return self.conjugator.ambient_lines

  @property
  def core_letter(self): return HalfTwistLetter(self.core_a, self.core_b, self.side, 1)

  @property
  def exponent(self):
    """
    Contribution to the degree diagnostic. The four squares of a quadruple
    node are credited 1 each, so the compound counts 4 like a node pair
    """
    if self.compound is Compound.NODE_QUAD: return self.power // 2
    return self.power

  def braid(self):
    core = BraidWord((self.core_letter,), ambient_lines=self.ambient_lines)
    return conjugate(power(core, self.power), self.conjugator)

  def conjugated_by(self, c):
    return dataclasses.replace(self, conjugator=self.conjugator * c)

  def format(self):
    conj = ",".join(str(letter) for letter in self.conjugator.letters) or "e"
    return "[{}] Z({},{}) side={} pow={} conj={}".format(self.tag, self.core_a.name, self.core_b.name, self.side.value, self.power, conj)

  def to_dict(self):
    return {
      'tag': self.tag,
      'a': self.core_a.name,
      'b': self.core_b.name,
      'side': self.side.value,
      'pow': self.power,
      'conj': [str(letter) for letter in self.conjugator.letters],
      }

class Factorization(object):
  """
  Ordered list of atomic factors over a fixed number of lines
  """
  def __init__(self, factors=(), ambient_lines=1):
    self.factors = tuple(factors)
    self.ambient_lines = ambient_lines
    for factor in self.factors:
      if factor.ambient_lines != ambient_lines:
        raise InvalidArgumentError("Factor [{}] is over {} lines, expected {}".format(factor.format(), factor.ambient_lines, ambient_lines))

  def __len__(self): return len(self.factors)

  def __iter__(self): return iter(self.factors)

  def __getitem__(self, index): return self.factors[index]

  def __add__(self, other):
    return Factorization(self.factors + tuple(other), ambient_lines=self.ambient_lines)

  @property
  def tags(self): return [factor.tag for factor in self.factors]

  def conjugated_by(self, c):
    return Factorization([factor.conjugated_by(c) for factor in self.factors], ambient_lines=self.ambient_lines)

  def __str__(self): return format_factorization(self)

# *******************************************************************
# compounds
# *******************************************************************
def pair_twist(single, line, sign=1, ambient_lines=None):
  """
  Braid word of Z^{2 sign}_{i, j j'}: the full twist of strand i around both
  strands of line j. Twisting around j' first makes the word the full twist
  around the pair as a whole
  """
  single = label(single)
  j, j_prime = unprimed(line), primed(line)
  if ambient_lines is None: ambient_lines = max(line, single.index)
  twist_primed = HalfTwistLetter(single, j_prime, Side.BELOW, 1)
  twist = HalfTwistLetter(single, j, Side.BELOW, 1)
  word = BraidWord((twist_primed, twist_primed, twist, twist), ambient_lines=ambient_lines)
  return word if sign > 0 else ~word

def _distinct(*labels):
  if len(set(labels)) != len(labels):
    raise InvalidArgumentError("Compound operands must be distinct strands: {}".format(", ".join(l.name for l in labels)))

def expand_compound(kind, operands, ambient_lines, conjugator=None, side=Side.BELOW, tag=''):
  """
  Expand a compound braid into atomic factors

    node_pair (i, j, j')       -> Z^2_{ij}, Z^2_{ij'}
    node_quad (i, i', j, j')   -> Z^2_{i'j'}, Z^2_{ij'}, Z^2_{i'j}, Z^2_{ij}
    cusp      (i, j, j')       -> Z^3_{ij} conjugated by e, Z_{jj'}, Z_{jj'}^-1

  conjugator is applied after the compound's own conjugators
  """
  kind = Compound(kind) if not isinstance(kind, Compound) else kind
  if conjugator is None: conjugator = BraidWord((), ambient_lines=ambient_lines)
  side = Side(side) if not isinstance(side, Side) else side
  tag = tag or kind.value
  try:
    operands = [label(operand) for operand in operands]
  except InvalidArgumentError as err:
    raise InvalidArgumentError("Malformed operands for {}: {}".format(kind.value, err))

  def factor(a, b, power, conj):
    return MonodromyFactor(a, b, side, power, conj, tag=tag, compound=kind)

  if kind is Compound.NODE_PAIR:
    if len(operands) != 3: raise InvalidArgumentError("node_pair takes (i, j, j')")
    i, j, j_prime = operands
    _distinct(i, j, j_prime)
    return [factor(i, j, 2, conjugator), factor(i, j_prime, 2, conjugator)]

  if kind is Compound.NODE_QUAD:
    if len(operands) != 4: raise InvalidArgumentError("node_quad takes (i, i', j, j')")
    i, i_prime, j, j_prime = operands
    _distinct(i, i_prime, j, j_prime)
    return [
      factor(i_prime, j_prime, 2, conjugator),
      factor(i, j_prime, 2, conjugator),
      factor(i_prime, j, 2, conjugator),
      factor(i, j, 2, conjugator),
      ]

  if kind is Compound.CUSP:
    if len(operands) != 3: raise InvalidArgumentError("cusp takes (i, j, j')")
    i, j, j_prime = operands
    _distinct(i, j, j_prime)
    twist = BraidWord((HalfTwistLetter(j, j_prime, Side.BELOW, 1),), ambient_lines=ambient_lines)
    return [
      factor(i, j, 3, conjugator),
      factor(i, j, 3, twist * conjugator),
      factor(i, j, 3, ~twist * conjugator),
      ]

  raise InvalidArgumentError("Cannot expand a {} compound".format(kind.value))

def branch(a, b, ambient_lines, conjugator=None, tag=''):
  if conjugator is None: conjugator = BraidWord((), ambient_lines=ambient_lines)
  return MonodromyFactor(label(a), label(b), Side.BELOW, 1, conjugator, tag=tag or Compound.BRANCH.value, compound=Compound.BRANCH)

# *******************************************************************
# factorizations
# *******************************************************************
def build_M(k, ambient_lines=None):
  """
  Factors of the outer (k-1)-point

    M_k = Z^3_{(k-1)(k-1)',k}
          . prod_{j=1}^{k-2} (Z^2_{jj',k})^{prod_{t=j+1}^{k-2} Z^-2_{tt',k}}
          . prod_{j=1}^{k-2} Zbar^2_{jj',k'}
          . (Z_{kk'})^{Z^2_{(k-1)(k-1)',k}}
  """
  if k < 2: raise InvalidArgumentError("build_M needs k >= 2, got {}".format(k))
  n = ambient_lines or k
  if n < k: raise InvalidArgumentError("M_{} needs at least {} lines".format(k, k))
  prefix = "M{}".format(k)
  empty = BraidWord((), ambient_lines=n)

  def tagged(kind): return "{}:{}".format(prefix, kind.value)

  factors = expand_compound(Compound.CUSP, (unprimed(k), unprimed(k - 1), primed(k - 1)), n, tag=tagged(Compound.CUSP))
  for j in range(1, k - 1):
    conj = empty
    for t in range(j + 1, k - 1):
      conj = conj * pair_twist(unprimed(k), t, -1, ambient_lines=n)
    factors += expand_compound(Compound.NODE_PAIR, (unprimed(k), unprimed(j), primed(j)), n, conjugator=conj, tag=tagged(Compound.NODE_PAIR))
  for j in range(1, k - 1):
    factors += expand_compound(Compound.NODE_PAIR, (primed(k), unprimed(j), primed(j)), n, side=Side.ABOVE, tag=tagged(Compound.NODE_PAIR))
  factors.append(branch(unprimed(k), primed(k), n, conjugator=pair_twist(unprimed(k), k - 1, 1, ambient_lines=n), tag=tagged(Compound.BRANCH)))

  log("Built {} with {} factors".format(prefix, len(factors)), level='debug')
  return Factorization(factors, ambient_lines=n)

def build_B3(ambient_lines=3):
  """
  The base of the recursion

    Z^3_{1',22'} . (Z_{11'})^{Z^2_{1',22'}} . (Z^3_{22',3})^{Z^2_{1',22'}}
    . (Z_{33'})^{Z^2_{22',3} Z^2_{1',22'}} . Z^2_{11',33'}
  """
  n = ambient_lines
  if n < 3: raise InvalidArgumentError("B_3 needs at least 3 lines")

  def tagged(kind): return "B3:{}".format(kind.value)

  around_two = pair_twist(primed(1), 2, 1, ambient_lines=n)
  factors = expand_compound(Compound.CUSP, (primed(1), unprimed(2), primed(2)), n, tag=tagged(Compound.CUSP))
  factors.append(branch(unprimed(1), primed(1), n, conjugator=around_two, tag=tagged(Compound.BRANCH)))
  factors += expand_compound(Compound.CUSP, (unprimed(3), unprimed(2), primed(2)), n, conjugator=around_two, tag=tagged(Compound.CUSP))
  factors.append(branch(unprimed(3), primed(3), n, conjugator=pair_twist(unprimed(3), 2, 1, ambient_lines=n) * around_two, tag=tagged(Compound.BRANCH)))
  factors += expand_compound(Compound.NODE_QUAD, (unprimed(1), primed(1), unprimed(3), primed(3)), n, tag=tagged(Compound.NODE_QUAD))
  return Factorization(factors, ambient_lines=n)

def build_B(k, ambient_lines=None):
  """
  B_k = M_k . (B_{k-1})^{Z^2_{(k-1)(k-1)',k}}, with B_3 as the base
  """
  if k < 3: raise InvalidArgumentError("build_B needs k >= 3, got {}".format(k))
  n = ambient_lines or k
  if k == 3: return build_B3(ambient_lines=n)
  outer = pair_twist(unprimed(k), k - 1, 1, ambient_lines=n)
  return build_M(k, ambient_lines=n) + build_B(k - 1, ambient_lines=n).conjugated_by(outer)

def full_factorization(k):
  """
  Braids of the cone over the chain of k planes: the n = k-1 outer 1-points
  each give Z_{jj'}, and the outer (k-1)-point gives B_n
  """
  if k < 4: raise InvalidArgumentError("full_factorization needs k >= 4, got {}".format(k))
  n = k - 1
  vertices = [branch(unprimed(j), primed(j), n, tag="vertex:{}".format(Compound.BRANCH.value)) for j in range(1, n + 1)]
  result = Factorization(vertices, ambient_lines=n) + build_B(n, ambient_lines=n)
  log("Factorization for k={} has {} atomic factors".format(k, len(result)))
  return result

def exponent_sum(f):
  return sum(factor.exponent for factor in f)

def strip_outer(f, outer):
  """
  Remove the trailing conjugator outer from every factor
  """
  count = len(outer.letters)
  stripped = []
  for factor in f:
    letters = factor.conjugator.letters
    if count and letters[-count:] != outer.letters:
      raise InvalidArgumentError("Factor [{}] does not end with {}".format(factor.format(), outer))
    stripped.append(dataclasses.replace(factor, conjugator=BraidWord(letters[:len(letters) - count], ambient_lines=f.ambient_lines)))
  return Factorization(stripped, ambient_lines=f.ambient_lines)

def format_factorization(f):
  return "".join("{}\n".format(factor.format()) for factor in f)
