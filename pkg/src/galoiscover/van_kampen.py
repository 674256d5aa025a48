# standard library
import collections
import enum
import json

# 3rd party libraries

# project libraries
from .braids import CALIBRATED_CONVENTION, BraidWord, Side, above_conjugator, act_on_letters
from .core import InvalidArgumentError, log
from .free_groups import FreeWord, commutator, cyclically_reduce, format_word, generator_name, paper_equal, parse_word, triple

class Stage(enum.Enum):
  G = 'G'
  G1 = 'G1'
  SIMPLIFIED = 'simplified'

PROJECTIVE_TAG = 'projective'
SQUARE_TAG = 'square'

class GroupPresentation(object):
  """
  Generators (as positions) and cyclically reduced relators, each relator
  carrying the tag of the factor it came from
  """
  def __init__(self, generators, relators, stage=Stage.G, provenance=None, ambient_lines=None):
    self.generators = tuple(generators)
    self.relators = tuple(relators)
    self.stage = stage
    self.provenance = tuple(provenance) if provenance is not None else ('',) * len(self.relators)
    self.ambient_lines = ambient_lines if ambient_lines is not None else (max(self.generators) + 1) // 2 if self.generators else 0
    if len(self.provenance) != len(self.relators):
      raise InvalidArgumentError("Every relator needs a provenance tag")

  @property
  def generator_count(self): return len(self.generators)

  @property
  def generator_names(self): return [generator_name(position) for position in self.generators]

  def __len__(self): return len(self.relators)

  def __str__(self): return format_presentation(self)

# *******************************************************************
# relators
# *******************************************************************
def relators_of_factor(f, convention=CALIBRATED_CONVENTION):
  """
  Van Kampen relators of an atomic factor (Z_{ab}^power)^c

  With A, B the images of Γ_a, Γ_b under the action of c:
    power 1 -> A B^-1
    power 2 -> [A, B]
    power 3 -> <A, B>
  An above-axis core Zbar_{ab} = W^-1 Z_{ab} W is handled by acting with W c
  """
  core = f.core_letter
  conjugator = f.conjugator
  if f.side is Side.ABOVE:
    conjugator = BraidWord(above_conjugator(core.p, core.q), ambient_lines=f.ambient_lines) * conjugator
  n = f.ambient_lines
  a = FreeWord(act_on_letters(conjugator, (core.p,), convention), ambient_lines=n, reduced=True)
  b = FreeWord(act_on_letters(conjugator, (core.q,), convention), ambient_lines=n, reduced=True)
  if f.power == 1:
    relator = a * ~b
  elif f.power == 2:
    relator = commutator(a, b)
  else:
    relator = triple(a, b)
  relator = cyclically_reduce(relator)
  return [relator] if relator else []

def projective_relator(n):
  """
  Γ_n' Γ_n Γ_{n-1}' Γ_{n-1} ... Γ_1' Γ_1
  """
  if n < 1: raise InvalidArgumentError("The projective relator needs n >= 1")
  letters = []
  for j in range(n, 0, -1):
    letters.extend((2 * j, 2 * j - 1))
  return FreeWord(letters, ambient_lines=n)

def presentation_G(f, convention=CALIBRATED_CONVENTION):
  relators, provenance = [], []
  dropped = 0
  for factor in f:
    words = relators_of_factor(factor, convention)
    if not words: dropped += 1
    for word in words:
      relators.append(word)
      provenance.append(factor.tag)
  if dropped:
    log("Dropped {} empty relators".format(dropped))
  relators.append(projective_relator(f.ambient_lines))
  provenance.append(PROJECTIVE_TAG)
  generators = range(1, 2 * f.ambient_lines + 1)
  return GroupPresentation(generators, relators, Stage.G, provenance, ambient_lines=f.ambient_lines)

def presentation_G1(p):
  """
  G1 = G / <Γ_j^2, Γ_j'^2>
  """
  if p.stage is not Stage.G:
    raise InvalidArgumentError("G1 is built from a presentation of G, got stage {}".format(p.stage.value))
  squares = [FreeWord((position, position), ambient_lines=p.ambient_lines) for position in p.generators]
  return GroupPresentation(p.generators, p.relators + tuple(squares), Stage.G1, p.provenance + (SQUARE_TAG,) * len(squares), ambient_lines=p.ambient_lines)

# *******************************************************************
# export
# *******************************************************************
def format_presentation(p):
  lines = ["gens: {}".format(" ".join(p.generator_names))]
  lines.extend(format_word(relator) for relator in p.relators)
  return "\n".join(lines) + "\n"

def presentation_to_dict(p):
  return {
    'stage': p.stage.value,
    'gens': p.generator_names,
    'relators': [{'tag': tag, 'word': format_word(relator)} for tag, relator in zip(p.provenance, p.relators)],
    }

def presentation_to_json(p):
  return json.dumps(presentation_to_dict(p), indent=2) + "\n"

# *******************************************************************
# printed relations
# *******************************************************************
def _split_pair(body):
  depth = 0
  for offset, char in enumerate(body):
    if char in '{[<': depth += 1
    elif char in '}]>': depth -= 1
    elif char == ',' and depth == 0:
      return body[:offset], body[offset + 1:]
  raise InvalidArgumentError("Expected two words separated by a comma in [{}]".format(body))

def parse_relation(text, ambient_lines=None):
  """
  Relator of a relation written the way relations are usually printed:
  "[a,b]" (commutator), "<a,b>" (triple relation), "u=v" or a bare word
  """
  text = text.strip()
  if text.startswith('[') and text.endswith(']'):
    left, right = _split_pair(text[1:-1])
    return commutator(parse_word(left, ambient_lines), parse_word(right, ambient_lines))
  if text.startswith('<') and text.endswith('>'):
    left, right = _split_pair(text[1:-1])
    return triple(parse_word(left, ambient_lines), parse_word(right, ambient_lines))
  if '=' in text:
    left, right = text.split('=', 1)
    return parse_word(left, ambient_lines) * ~parse_word(right, ambient_lines)
  return parse_word(text, ambient_lines)

# relation families printed for the cone over six planes; the flag marks the
# families stated only after identifying each j' with j
PRINTED_RELATIONS_K6 = collections.OrderedDict([
  ('vertex', ["1=1'", "2=2'", "3=3'", "4=4'", "5=5'"]),
  ('cusp_M5', ["<4,5>", "<4',5>", "<4^{-1}4'4,5>"]),
  ('node_M5_first', ["[3'32'212^{-1}{2'}^{-1}3^{-1}{3'}^{-1},5]", "[3'32'21'2^{-1}{2'}^{-1}3^{-1}{3'}^{-1},5]"]),
  ('node_M5_second', ["[3'323^{-1}{3'}^{-1},5]", "[3'32'3^{-1}{3'}^{-1},5]"]),
  ('node_M5_third', ["[3,5]", "[3',5]"]),
  ('above_M5_first', ["[4'43'32'212^{-1}{2'}^{-1}3^{-1}{3'}^{-1}4^{-1}{4'}^{-1},5^{-1}5'5]", "[4'43'32'21'2^{-1}{2'}^{-1}3^{-1}{3'}^{-1}4^{-1}{4'}^{-1},5^{-1}5'5]"]),
  ('above_M5_second', ["[4'43'323^{-1}{3'}^{-1}4^{-1}{4'}^{-1},5^{-1}5'5]", "[4'43'32'3^{-1}{3'}^{-1}4^{-1}{4'}^{-1},5^{-1}5'5]"]),
  ('above_M5_third', ["[4'434^{-1}{4'}^{-1},5^{-1}5'5]", "[4'43'4^{-1}{4'}^{-1},5^{-1}5'5]"]),
  ('branch_M5', ["5'=54'454^{-1}{4'}^{-1}5^{-1}"]),
  ('cusp_M4', ["<3,545^{-1}>", "<3',545^{-1}>", "<3^{-1}3'3,545^{-1}>"]),
  ('node_M4_first', ["[2'212^{-1}{2'}^{-1},545^{-1}]", "[2'21'2^{-1}{2'}^{-1},545^{-1}]"]),
  ('node_M4_second', ["[2,545^{-1}]", "[2',545^{-1}]"]),
  ('above_M4_first', ["[3'32'212^{-1}{2'}^{-1}3^{-1}{3'}^{-1},54^{-1}4'45^{-1}]", "[3'32'21'2^{-1}{2'}^{-1}3^{-1}{3'}^{-1},54^{-1}4'45^{-1}]"]),
  ('above_M4_second', ["[3'323^{-1}{3'}^{-1},54^{-1}4'45^{-1}]", "[3'32'3^{-1}{3'}^{-1},54^{-1}4'45^{-1}]"]),
  ('branch_M4', ["3^{-1}{3'}^{-1}54^{-1}4'45^{-1}3'3=545^{-1}"]),
  ('cusp_B3_first', ["<1',2>", "<1',2'>", "<1',2^{-1}2'2>"]),
  ('branch_B3_first', ["1=2'21'2^{-1}{2'}^{-1}"]),
  ('cusp_B3_second', [
    "<2'21'2{1'}^{-1}2^{-1}{2'}^{-1},545^{-1}354^{-1}5^{-1}>",
    "<2'21'2'{1'}^{-1}2^{-1}{2'}^{-1},545^{-1}354^{-1}5^{-1}>",
    "<2'21'2^{-1}2'2{1'}^{-1}2^{-1}{2'}^{-1},545^{-1}354^{-1}5^{-1}>",
    ]),
  ('branch_B3_second', ["3=54^{-1}5^{-1}2'21'2^{-1}{2'}^{-1}{1'}^{-1}2^{-1}{2'}^{-1}545^{-1}3^{-1}3'354^{-1}5^{-1}2'21'2'2{1'}^{-1}2^{-1}{2'}^{-1}545^{-1}"]),
  ('node_B3', ["[1,545^{-1}354^{-1}5^{-1}]", "[1',545^{-1}354^{-1}5^{-1}]", "[1,545^{-1}3'54^{-1}5^{-1}]", "[1',545^{-1}3'54^{-1}5^{-1}]"]),
  ('projective', ["5'54'43'32'21'1"]),
  ])

IDENTIFIED_FAMILIES = frozenset(['cusp_B3_second'])

def relation_families(k=6):
  """
  The printed relation families as relators, keyed by family name. Only the
  cone over six planes has its relations printed in full
  """
  if k != 6: raise InvalidArgumentError("Printed relations exist for k=6 only, got {}".format(k))
  return collections.OrderedDict((family, [parse_relation(text, ambient_lines=5) for text in relations]) for family, relations in PRINTED_RELATIONS_K6.items())

def calibrate(p):
  """
  For every printed family, whether each of its relations equals some
  relator of the presentation p of G for six planes, up to rotation and
  inversion
  """
  results = collections.OrderedDict()
  for family, relations in relation_families(6).items():
    identified = family in IDENTIFIED_FAMILIES
    matched = True
    for expected in relations:
      if not any(paper_equal(expected, relator, identified=identified) for relator in p.relators):
        log("Printed relation {} [{}] has no generated counterpart".format(family, format_word(expected)), level='debug')
        matched = False
    results[family] = matched
  return results

def unmatched_relators(p):
  """
  Relators of p that equal no printed relation of any family, as
  (index, tag, relator)
  """
  printed = [(relation, family in IDENTIFIED_FAMILIES) for family, relations in relation_families(6).items() for relation in relations]
  unmatched = []
  for index, (tag, relator) in enumerate(zip(p.provenance, p.relators)):
    if not any(paper_equal(relation, relator, identified=identified) for relation, identified in printed):
      log("Generated relator {} [{}] {} matches no printed family".format(index, tag, format_word(relator)), level='debug')
      unmatched.append((index, tag, relator))
  return unmatched
