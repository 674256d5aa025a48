# standard library
import dataclasses
import enum
import functools
import re

# 3rd party libraries
from sympy.combinatorics import Permutation

# project libraries
from .core import AmbientMismatchError, InvalidArgumentError
from .free_groups import FreeWord, GeneratorSymbol, generator_name, partner, substitute_letters

class Side(enum.Enum):
  BELOW = 'below'
  ABOVE = 'above'

class ActionConvention(enum.Enum):
  """
  How a below-axis half-twist on positions p < q acts on the free group

  DEFAULT   x_p -> x_p x_q x_p^-1, x_q -> x_p, every other generator fixed
  MIRRORED  x_p -> x_q, x_q -> x_q x_p x_q^-1, and every x_r with p < r < q
            conjugated by x_q x_p^-1 so the product x_q ... x_p is preserved

  MIRRORED is the one the van Kampen relations are calibrated against
  """
  DEFAULT = 'default'
  MIRRORED = 'mirrored'

CALIBRATED_CONVENTION = ActionConvention.MIRRORED

# *******************************************************************
# strands and letters
# *******************************************************************
@dataclasses.dataclass(frozen=True, order=True)
class StrandLabel(GeneratorSymbol):
  """
  Strand j or j' of the braid; strand and generator positions coincide
  """

  @classmethod
  def parse(cls, value):
    if isinstance(value, StrandLabel): return value
    if isinstance(value, GeneratorSymbol): return cls(value.index, value.primed)
    if isinstance(value, int): return cls.from_position(value)
    m = re.fullmatch(r"\s*(\d+)\s*('?)\s*", str(value))
    if not m:
      raise InvalidArgumentError("Not a strand label: [{}]".format(value))
    return cls(int(m.group(1)), bool(m.group(2)))

def _side(value):
  if isinstance(value, Side): return value
  try:
    return Side(str(value).lower())
  except ValueError:
    raise InvalidArgumentError("Side must be below or above, got [{}]".format(value))

@dataclasses.dataclass(frozen=True)
class HalfTwistLetter(object):
  a: StrandLabel
  b: StrandLabel
  side: Side = Side.BELOW
  sign: int = 1

  def __post_init__(self):
    a, b = StrandLabel.parse(self.a), StrandLabel.parse(self.b)
    if a == b:
      raise InvalidArgumentError("A half-twist needs two distinct strands, got {} twice".format(a))
    if a.position > b.position: a, b = b, a
    if self.sign not in (1, -1):
      raise InvalidArgumentError("Letter sign must be +1 or -1")
    object.__setattr__(self, 'a', a)
    object.__setattr__(self, 'b', b)
    object.__setattr__(self, 'side', _side(self.side))

  @property
  def p(self): return self.a.position

  @property
  def q(self): return self.b.position

  def inverse(self):
    return HalfTwistLetter(self.a, self.b, self.side, -self.sign)

  def __str__(self):
    head = "Zbar" if self.side is Side.ABOVE else "Z"
    tail = "^-1" if self.sign < 0 else ""
    return "{}({},{}){}".format(head, self.a.name, self.b.name, tail)

LETTER_PATTERN = re.compile(r"(?P<head>Zbar|Z)\((?P<a>\d+'?),(?P<b>\d+'?)\)(?P<inverse>\^-1)?")

def parse_letter(text):
  m = LETTER_PATTERN.fullmatch(text.strip())
  if not m:
    raise InvalidArgumentError("Not a half-twist letter: [{}]".format(text))
  side = Side.ABOVE if m.group('head') == 'Zbar' else Side.BELOW
  return HalfTwistLetter(StrandLabel.parse(m.group('a')), StrandLabel.parse(m.group('b')), side, -1 if m.group('inverse') else 1)

def _reduce_letters(letters):
  stack = []
  for letter in letters:
    if stack and stack[-1] == letter.inverse():
      stack.pop()
    else:
      stack.append(letter)
  return tuple(stack)

# *******************************************************************
# braid words
# *******************************************************************
class BraidWord(object):
  """
  A freely reduced product of half-twist letters on the 2n strands
  1, 1', ..., n, n'
  """
  __slots__ = ('_letters', '_ambient_lines')

  def __init__(self, letters=(), ambient_lines=1):
    self._letters = _reduce_letters(letters)
    self._ambient_lines = ambient_lines
    for letter in self._letters:
      if letter.q > 2 * ambient_lines:
        raise InvalidArgumentError("Letter {} lies outside {} lines".format(letter, ambient_lines))

  # *******************************************************************
  # properties
  # *******************************************************************
  @property
  def letters(self): return self._letters

  @property
  def ambient_lines(self): return self._ambient_lines

  @property
  def strand_count(self): return 2 * self._ambient_lines

  # *******************************************************************
  # methods
  # *******************************************************************
  def with_ambient(self, ambient_lines):
    return BraidWord(self._letters, ambient_lines=ambient_lines)

  def exponent_sum(self):
    return sum(letter.sign for letter in self._letters)

  def __len__(self): return len(self._letters)

  def __iter__(self): return iter(self._letters)

  def __bool__(self): return bool(self._letters)

  def __eq__(self, other):
    if isinstance(other, BraidWord):
      return self._letters == other._letters and self._ambient_lines == other._ambient_lines
    return NotImplemented

  def __hash__(self): return hash((self._letters, self._ambient_lines))

  def __mul__(self, other):
    if self._ambient_lines != other.ambient_lines:
      raise AmbientMismatchError("Cannot multiply braids on {} and {} lines".format(self._ambient_lines, other.ambient_lines))
    return BraidWord(self._letters + other.letters, ambient_lines=self._ambient_lines)

  def __invert__(self): return invert(self)

  def __str__(self): return " ".join(str(letter) for letter in self._letters) or "e"

  def __repr__(self): return "BraidWord<{}>".format(self)

def _minimal_lines(*labels):
  return max((label.position + 1) // 2 for label in labels)

def half_twist(a, b, side=Side.BELOW, ambient_lines=None):
  """
  The counterclockwise half-twist of strands a and b along a path below
  (or, for side=above, above) the real axis
  """
  a, b = StrandLabel.parse(a), StrandLabel.parse(b)
  if ambient_lines is None: ambient_lines = _minimal_lines(a, b)
  for label in (a, b):
    if label.position > 2 * ambient_lines:
      raise InvalidArgumentError("Strand {} is out of range for {} lines".format(label, ambient_lines))
  return BraidWord((HalfTwistLetter(a, b, _side(side), 1),), ambient_lines=ambient_lines)

def conjugate(x, c):
  """
  x^c = c^-1 x c
  """
  if x.ambient_lines != c.ambient_lines:
    raise AmbientMismatchError("Cannot conjugate a braid on {} lines by one on {} lines".format(x.ambient_lines, c.ambient_lines))
  return invert(c) * x * c

def invert(x):
  return BraidWord(tuple(letter.inverse() for letter in reversed(x.letters)), ambient_lines=x.ambient_lines)

def power(x, p):
  if p < 0: return power(invert(x), -p)
  return BraidWord(x.letters * p, ambient_lines=x.ambient_lines)

def above_conjugator(p, q):
  """
  Below-axis letters W with Zbar(p,q) = W^-1 Z(p,q) W

  W is the full twist of p with every strand strictly between p and q,
  nearest to q first, leaving out the partner strand of p
  """
  letters = []
  for r in range(q - 1, p, -1):
    if r == partner(p): continue
    letter = HalfTwistLetter(StrandLabel.from_position(p), StrandLabel.from_position(r), Side.BELOW, 1)
    letters.extend((letter, letter))
  return tuple(letters)

def below_letters(letter):
  """
  The letter itself when below the axis, its below-axis expansion otherwise
  """
  if letter.side is Side.BELOW: return (letter,)
  conjugator = above_conjugator(letter.p, letter.q)
  core = HalfTwistLetter(letter.a, letter.b, Side.BELOW, letter.sign)
  return tuple(l.inverse() for l in reversed(conjugator)) + (core,) + conjugator

@functools.lru_cache(maxsize=None)
def _letter_images(p, q, sign, convention):
  if convention is ActionConvention.MIRRORED:
    if sign > 0:
      images = {p: (q,), q: (q, p, -q)}
      for r in range(p + 1, q): images[r] = (q, -p, r, p, -q)
    else:
      images = {q: (p,), p: (-p, q, p)}
      for r in range(p + 1, q): images[r] = (-p, q, r, -q, p)
  else:
    if sign > 0:
      images = {p: (p, q, -p), q: (p,)}
    else:
      images = {p: (q,), q: (-q, p, q)}
  return images

def act_on_letters(c, letters, convention=CALIBRATED_CONVENTION):
  """
  Image of a letter tuple under action(c), applying c's letters first to last
  """
  for braid_letter in c.letters:
    for letter in below_letters(braid_letter):
      letters = substitute_letters(letters, _letter_images(letter.p, letter.q, letter.sign, convention))
  return letters

def act_on_word(c, w, convention=CALIBRATED_CONVENTION):
  return FreeWord(act_on_letters(c, w.letters, convention), ambient_lines=w.ambient_lines, reduced=True)

class FreeAutomorphism(object):
  """
  An automorphism of the free group on the 2n generators, given by the image
  of every generator
  """
  def __init__(self, images, ambient_lines, braid=None, convention=CALIBRATED_CONVENTION):
    self.ambient_lines = ambient_lines
    self.images = {}
    for position in range(1, 2 * ambient_lines + 1):
      image = images.get(position)
      if image is None: image = FreeWord((position,), ambient_lines=ambient_lines, reduced=True)
      self.images[position] = image if isinstance(image, FreeWord) else FreeWord(image, ambient_lines=ambient_lines)
    self._braid = braid
    self._convention = convention

  def __getitem__(self, key):
    position = key.position if isinstance(key, GeneratorSymbol) else key
    return self.images[position]

  def items(self): return self.images.items()

  def __call__(self, w):
    table = {position: image.letters for position, image in self.images.items()}
    return FreeWord(substitute_letters(w.letters, table), ambient_lines=w.ambient_lines, reduced=True)

  def __eq__(self, other):
    if isinstance(other, FreeAutomorphism): return self.images == other.images
    return NotImplemented

  def then(self, other):
    """
    Apply self first, then other
    """
    if self.ambient_lines != other.ambient_lines:
      raise AmbientMismatchError("Cannot compose automorphisms on {} and {} lines".format(self.ambient_lines, other.ambient_lines))
    return FreeAutomorphism({position: other(image) for position, image in self.images.items()}, self.ambient_lines)

  def inverse(self):
    if self._braid is None:
      raise InvalidArgumentError("Only automorphisms induced by a braid know their inverse")
    return action(invert(self._braid), self._convention)

  def is_identity(self):
    return all(image.letters == (position,) for position, image in self.images.items())

  def conjugated_generator(self, position):
    """
    (w, y) with image(x_position) = w y w^-1
    """
    letters = self.images[position].letters
    middle = len(letters) // 2
    if len(letters) % 2 == 0 or letters[middle] < 0:
      raise InvalidArgumentError("Image of {} is not a conjugate of a generator".format(generator_name(position)))
    head, tail = letters[:middle], letters[middle + 1:]
    if tuple(-l for l in reversed(head)) != tail:
      raise InvalidArgumentError("Image of {} is not a conjugate of a generator".format(generator_name(position)))
    return FreeWord(head, ambient_lines=self.ambient_lines, reduced=True), letters[middle]

  def permutation(self):
    """
    Permutation of the positions read off the conjugated generators
    """
    array_form = [self.conjugated_generator(position)[1] - 1 for position in range(1, 2 * self.ambient_lines + 1)]
    return Permutation(array_form)

  def by_name(self):
    return {generator_name(position): str(image) for position, image in self.images.items()}

def action(c, convention=CALIBRATED_CONVENTION):
  """
  The automorphism of the free group induced by the braid c

  Letters act in order, so action(c1 c2) = action(c2) o action(c1), matching
  the convention a^b = b^-1 a b for conjugated braids
  """
  images = {}
  for position in range(1, c.strand_count + 1):
    images[position] = FreeWord(act_on_letters(c, (position,), convention), ambient_lines=c.ambient_lines, reduced=True)
  return FreeAutomorphism(images, c.ambient_lines, braid=c, convention=convention)

def underlying_permutation(c):
  """
  Product of the letters' transpositions, as a permutation of the 0-based
  points 0 .. 2n-1
  """
  result = Permutation([], size=c.strand_count)
  for letter in c.letters:
    result = result * Permutation([[letter.p - 1, letter.q - 1]], size=c.strand_count)
  return result

def parse_braid_word(text, ambient_lines):
  text = text.strip()
  if text in ('', 'e'): return BraidWord((), ambient_lines=ambient_lines)
  return BraidWord([parse_letter(chunk) for chunk in text.split(',')], ambient_lines=ambient_lines)
