# standard library
import dataclasses
import re

# 3rd party libraries

# project libraries
from .core import AmbientMismatchError, InvalidArgumentError

# *******************************************************************
# generators
# *******************************************************************
@dataclasses.dataclass(frozen=True, order=True)
class GeneratorSymbol(object):
  """
  One of the generators Γ_j (primed=False) or Γ_j' (primed=True)

  Generators are ordered by position: Γ_j sits at 2j-1 and Γ_j' at 2j
  """
  index: int
  primed: bool = False

  def __post_init__(self):
    if self.index < 1:
      raise InvalidArgumentError("Generator index must be >= 1, got {}".format(self.index))

  @property
  def position(self): return 2 * self.index - (0 if self.primed else 1)

  @property
  def name(self): return "{}{}".format(self.index, "'" if self.primed else "")

  @classmethod
  def from_position(cls, position):
    if position < 1:
      raise InvalidArgumentError("Positions start at 1, got {}".format(position))
    return cls(index=(position + 1) // 2, primed=(position % 2 == 0))

  def __str__(self): return self.name

def generator_name(position):
  return GeneratorSymbol.from_position(position).name

def partner(position):
  """
  Position of the other strand of the same line (j <-> j')
  """
  return position + 1 if position % 2 else position - 1

# *******************************************************************
# words
# *******************************************************************
def free_reduce(letters):
  """
  Cancel adjacent x x^-1 pairs. Letters are signed positions
  """
  stack = []
  for letter in letters:
    if stack and stack[-1] == -letter:
      stack.pop()
    else:
      stack.append(letter)
  return tuple(stack)

class FreeWord(object):
  """
  A freely reduced word over Γ_1, Γ_1', ..., Γ_n, Γ_n'

  Letters are stored as signed positions: +p is the generator at position p,
  -p its inverse. The empty word is the identity
  """
  __slots__ = ('_letters', '_ambient_lines', '_hash')

  def __init__(self, letters=(), ambient_lines=None, reduced=False):
    letters = tuple(letters)
    if 0 in letters:
      raise InvalidArgumentError("0 is not a generator position")
    self._letters = letters if reduced else free_reduce(letters)
    self._ambient_lines = ambient_lines
    self._hash = None
    if ambient_lines is not None:
      for letter in self._letters:
        if abs(letter) > 2 * ambient_lines:
          raise InvalidArgumentError("Generator {} lies outside {} lines".format(generator_name(abs(letter)), ambient_lines))

  # *******************************************************************
  # properties
  # *******************************************************************
  @property
  def letters(self): return self._letters

  @property
  def ambient_lines(self): return self._ambient_lines

  # *******************************************************************
  # methods
  # *******************************************************************
  @classmethod
  def generator(cls, symbol, exponent=1, ambient_lines=None):
    if exponent not in (1, -1):
      raise InvalidArgumentError("Exponent must be +1 or -1")
    return cls((exponent * symbol.position,), ambient_lines=ambient_lines, reduced=True)

  def symbols(self):
    """
    The word as (GeneratorSymbol, exponent) pairs
    """
    return [(GeneratorSymbol.from_position(abs(letter)), 1 if letter > 0 else -1) for letter in self._letters]

  def with_ambient(self, ambient_lines):
    return FreeWord(self._letters, ambient_lines=ambient_lines, reduced=True)

  def __len__(self): return len(self._letters)

  def __iter__(self): return iter(self._letters)

  def __bool__(self): return bool(self._letters)

  def __eq__(self, other):
    if isinstance(other, FreeWord): return self._letters == other._letters
    return NotImplemented

  def __hash__(self):
    if self._hash is None: self._hash = hash(self._letters)
    return self._hash

  def __mul__(self, other): return multiply(self, other)

  def __invert__(self): return invert(self)

  def __str__(self): return format_word(self)

  def __repr__(self): return "FreeWord<{}>".format(format_word(self) or 'e')

def _ambient_of(u, v):
  if u.ambient_lines is not None and v.ambient_lines is not None and u.ambient_lines != v.ambient_lines:
    raise AmbientMismatchError("Cannot combine words over {} and {} lines".format(u.ambient_lines, v.ambient_lines))
  return u.ambient_lines if u.ambient_lines is not None else v.ambient_lines

def multiply(u, v):
  return FreeWord(u.letters + v.letters, ambient_lines=_ambient_of(u, v))

def invert(u):
  return FreeWord(tuple(-letter for letter in reversed(u.letters)), ambient_lines=u.ambient_lines, reduced=True)

def substitute_letters(letters, images):
  """
  Image of a letter tuple under a generator map

  images maps a position to the letter tuple of its image; positions missing
  from the map are fixed
  """
  result = []
  for letter in letters:
    image = images.get(abs(letter))
    if image is None:
      piece = (letter,)
    elif letter > 0:
      piece = image
    else:
      piece = tuple(-l for l in reversed(image))
    for l in piece:
      if result and result[-1] == -l:
        result.pop()
      else:
        result.append(l)
  return tuple(result)

def substitute(w, phi):
  """
  Apply the homomorphism phi to the word w

  phi is either a FreeAutomorphism or a dict from GeneratorSymbol / position
  to FreeWord
  """
  images = {}
  for key, value in (phi.items() if hasattr(phi, 'items') else phi):
    position = key.position if isinstance(key, GeneratorSymbol) else int(key)
    images[position] = value.letters if isinstance(value, FreeWord) else tuple(value)
  return FreeWord(substitute_letters(w.letters, images), ambient_lines=w.ambient_lines, reduced=True)

def cyclically_reduce(w):
  letters = w.letters
  start, end = 0, len(letters)
  while end - start > 1 and letters[start] == -letters[end - 1]:
    start += 1
    end -= 1
  if start == 0: return w
  return FreeWord(letters[start:end], ambient_lines=w.ambient_lines, reduced=True)

def canonical_cyclic(letters):
  """
  Smallest rotation of a cyclically reduced letter tuple or of its inverse

  Two relators with the same canonical form are equal up to rotation and
  inversion
  """
  if not letters: return ()
  inverse = tuple(-l for l in reversed(letters))
  best = None
  for candidate in (letters, inverse):
    for shift in range(len(candidate)):
      rotation = candidate[shift:] + candidate[:shift]
      if best is None or rotation < best: best = rotation
  return best

def identify_pairs(w):
  """
  Replace every Γ_j' by Γ_j, the identifications coming from the vertex
  branch points
  """
  letters = []
  for letter in w.letters:
    position = abs(letter)
    if position % 2 == 0: position -= 1
    letters.append(position if letter > 0 else -position)
  return FreeWord(letters, ambient_lines=w.ambient_lines)

def paper_equal(u, v, identified=False):
  """
  True when u and v are the same relator up to cyclic rotation and inversion,
  optionally after identifying each Γ_j' with Γ_j
  """
  if identified:
    u, v = identify_pairs(u), identify_pairs(v)
  return canonical_cyclic(cyclically_reduce(u).letters) == canonical_cyclic(cyclically_reduce(v).letters)

def commutator(a, b):
  return a * b * ~a * ~b

def triple(a, b):
  """
  <a, b> = a b a b^-1 a^-1 b^-1
  """
  return a * b * a * ~b * ~a * ~b

# *******************************************************************
# text format
# *******************************************************************
def format_word(w):
  tokens = []
  for letter in w.letters:
    name = generator_name(abs(letter))
    tokens.append(name if letter > 0 else "{}^-1".format(name))
  return " ".join(tokens)

TOKEN_PATTERN = re.compile(r"(?P<index>\d+)(?P<prime>'?)(?P<inverse>~?)")
COMPACT_PATTERN = re.compile(r"(?P<index>\d)(?P<prime>'?)(?P<inverse>~?)")

def parse_word(text, ambient_lines=None):
  """
  Read a word in the token format ("4 5^-1 4'") or in the compact form
  relations are usually printed in ("54'454^{-1}{4'}^{-1}5^{-1}", single
  digit indices only). Text without spaces that is a single token, such as
  "10" or "12'^-1", names one generator unless ambient_lines says there are
  fewer than ten lines. "e" and the empty string are the identity
  """
  text = text.strip()
  if text in ('', 'e'): return FreeWord((), ambient_lines=ambient_lines)
  normalized = text.replace("^{-1}", "~").replace("^-1", "~").replace("{", "").replace("}", "")
  single = TOKEN_PATTERN.fullmatch(normalized) is not None and (ambient_lines is None or ambient_lines >= 10)
  pattern = TOKEN_PATTERN if ' ' in normalized or single else COMPACT_PATTERN
  letters = []
  for chunk in normalized.split():
    offset = 0
    while offset < len(chunk):
      m = pattern.match(chunk, offset)
      if not m:
        raise InvalidArgumentError("Cannot parse [{}] at [{}]".format(text, chunk[offset:]))
      symbol = GeneratorSymbol(int(m.group('index')), bool(m.group('prime')))
      letters.append(-symbol.position if m.group('inverse') else symbol.position)
      offset = m.end()
  return FreeWord(letters, ambient_lines=ambient_lines)
