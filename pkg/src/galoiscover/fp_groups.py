# standard library
import collections

# 3rd party libraries
from sympy import Matrix, ZZ
from sympy.combinatorics import Permutation, PermutationGroup
from sympy.matrices.normalforms import invariant_factors

# project libraries
from .core import InvalidArgumentError, log
from .free_groups import FreeWord, GeneratorSymbol, canonical_cyclic, format_word, generator_name, substitute_letters
from .van_kampen import GroupPresentation, Stage

# *******************************************************************
# tietze transformations
# *******************************************************************
def _reduce(letters, involutions):
  """
  Free and cyclic reduction, also cancelling g g for every involution g
  """
  stack = []
  for letter in letters:
    if stack and (stack[-1] == -letter or (stack[-1] == letter and abs(letter) in involutions)):
      stack.pop()
    else:
      stack.append(letter)
  start, end = 0, len(stack)
  while end - start > 1:
    first, last = stack[start], stack[end - 1]
    if first == -last or (first == last and abs(first) in involutions):
      start += 1
      end -= 1
    else:
      break
  return tuple(stack[start:end])

def _is_square(letters):
  return len(letters) == 2 and letters[0] == letters[1]

def _elimination_candidate(relators, generators):
  """
  The lexicographically smallest relator that expresses one generator
  through another (or kills one), as (key, generator to eliminate, index)
  """
  best = None
  for index, letters in enumerate(relators):
    if len(letters) == 1:
      candidate = (letters, abs(letters[0]), index)
    elif len(letters) == 2 and abs(letters[0]) != abs(letters[1]):
      first, second = abs(letters[0]), abs(letters[1])
      primed = [position for position in (first, second) if position % 2 == 0]
      target = primed[0] if len(primed) == 1 else max(first, second)
      candidate = (canonical_cyclic(letters), target, index)
    else:
      continue
    if candidate[1] not in generators: continue
    if best is None or candidate[0] < best[0]: best = candidate
  return best

def _solve_for(letters, target):
  """
  Image of target read off the relator letters = e
  """
  if len(letters) == 1: return ()
  index = 0 if abs(letters[0]) == target else 1
  other = letters[1 - index]
  # target^e other = e (up to rotation) gives target^e = other^-1
  return (-other,) if letters[index] > 0 else (other,)

def _is_commutation(letters):
  return len(letters) == 4 and letters[0] == letters[2] > 0 and letters[1] == letters[3] > 0 and letters[0] != letters[1]

def _commuting_pairs(relators, involutions):
  """
  Pairs of involutions x, y with x y x y among the relators
  """
  pairs = set()
  for letters in relators:
    if _is_commutation(letters) and letters[0] in involutions and letters[1] in involutions:
      pairs.add(frozenset(letters[:2]))
  return pairs

def _cancel_commuting(letters, involutions, pairs):
  """
  Cyclically cancel two occurrences of an involution y when every letter
  between them commutes with y, so y w y becomes w
  """
  letters = list(letters)
  changed = True
  while changed and len(letters) > 1:
    changed = False
    for y in sorted(set(letters)):
      if y not in involutions: continue
      positions = [index for index, letter in enumerate(letters) if letter == y]
      if len(positions) < 2: continue
      for first, second in zip(positions, positions[1:] + positions[:1]):
        between = letters[first + 1:second] if first < second else letters[first + 1:] + letters[:second]
        if all(frozenset((y, abs(z))) in pairs for z in between):
          letters = [letter for index, letter in enumerate(letters) if index not in (first, second)]
          changed = True
          break
      if changed: break
  return _reduce(tuple(letters), involutions)

def _rewrite_by_commutations(relators, involutions):
  """
  Shorten every relator with the commutations present among the relators.
  The squares and commutations themselves are left alone
  """
  pairs = _commuting_pairs(relators, involutions)
  if not pairs: return relators, False
  rewritten, changed = [], False
  for letters in relators:
    if _is_square(letters) or _is_commutation(letters):
      rewritten.append(letters)
      continue
    shorter = _cancel_commuting(letters, involutions, pairs)
    if shorter != letters:
      changed = True
      log("Rewrote {} as {}".format(format_word(FreeWord(letters)), format_word(FreeWord(shorter)) or 'e'), level='debug')
    rewritten.append(shorter)
  return rewritten, changed

def _deduplicate(relators):
  seen = set()
  result = []
  for letters in relators:
    if not letters: continue
    key = canonical_cyclic(letters)
    if key in seen: continue
    seen.add(key)
    result.append(letters)
  return result

def tietze_simplify(p):
  """
  Simplify the presentation p without changing the group it presents

  Repeats until nothing changes:
    a generator whose square is a relator is treated as an involution, so
    g^-1 becomes g and g g cancels in every other relator
    a relator of length 2 on two generators (or of length 1) eliminates one
    generator, the primed one if exactly one is primed and otherwise the one
    at the larger position; the lexicographically smallest such relator goes
    first
    when x x, y y and x y x y are relators, y w y is shortened to w in
    every other relator whenever all letters of w commute with y, reading
    relators cyclically
    duplicates up to rotation and inversion are removed
  """
  generators = list(p.generators)
  relators = [r.letters for r in p.relators]
  involutions = set()
  eliminated = 0
  while True:
    squares = {abs(letters[0]) for letters in relators if _is_square(letters)}
    involutions |= squares

    reduced = []
    for letters in relators:
      if _is_square(letters):
        reduced.append((abs(letters[0]),) * 2)
        continue
      letters = tuple(abs(l) if abs(l) in involutions else l for l in letters)
      reduced.append(_reduce(letters, involutions))
    relators, rewritten = _rewrite_by_commutations(_deduplicate(reduced), involutions)
    relators = _deduplicate(relators)

    candidate = _elimination_candidate(relators, generators)
    if candidate is None:
      if rewritten: continue
      break
    _, target, index = candidate
    source = relators[index]
    image = _solve_for(source, target)
    log("Eliminating generator {} = {}".format(generator_name(target), format_word(FreeWord(image)) or 'e'), level='debug')
    images = {target: image}
    relators = [substitute_letters(letters, images) for offset, letters in enumerate(relators) if offset != index]
    generators.remove(target)
    involutions.discard(target)
    eliminated += 1

  log("Tietze simplification eliminated {} generators, {} relators remain".format(eliminated, len(relators)))
  words = [FreeWord(letters, ambient_lines=p.ambient_lines, reduced=True) for letters in relators]
  return GroupPresentation(generators, words, Stage.SIMPLIFIED, ['simplified'] * len(words), ambient_lines=p.ambient_lines)

# *******************************************************************
# homomorphisms onto the symmetric group
# *******************************************************************
HomomorphismCheck = collections.namedtuple('HomomorphismCheck', ['ok', 'failures'])

def edge_homomorphism(k):
  """
  Γ_j and Γ_j' both go to the transposition of planes j and j+1, the two
  planes meeting in line j. Points are 0-based, so this is (j-1 j)
  """
  if k < 2: raise InvalidArgumentError("The edge homomorphism needs k >= 2, got {}".format(k))
  phi = {}
  for j in range(1, k):
    transposition = Permutation([[j - 1, j]], size=k)
    phi[GeneratorSymbol(j, False)] = transposition
    phi[GeneratorSymbol(j, True)] = transposition
  return phi

def _images_by_position(phi):
  return {(symbol.position if isinstance(symbol, GeneratorSymbol) else int(symbol)): image for symbol, image in phi.items()}

def evaluate(w, phi):
  """
  Image of the word w under a map from generators to permutations
  """
  images = _images_by_position(phi)
  size = next(iter(images.values())).size if images else 1
  result = Permutation([], size=size)
  for letter in w.letters:
    try:
      image = images[abs(letter)]
    except KeyError:
      raise InvalidArgumentError("No image given for generator {}".format(generator_name(abs(letter))))
    result = result * (image if letter > 0 else ~image)
  return result

def verify_homomorphism(p, phi):
  """
  Check that every relator of p evaluates to the identity under phi.
  failures lists (index, tag, relator) for every relator that does not
  """
  failures = []
  for index, (tag, relator) in enumerate(zip(p.provenance, p.relators)):
    if not evaluate(relator, phi).is_Identity:
      log("Relator {} [{}] {} does not map to the identity".format(index, tag, format_word(relator)), level='error')
      failures.append((index, tag, relator))
  return HomomorphismCheck(not failures, failures)

def image_order(phi):
  """
  Order of the permutation group generated by the images, by Schreier-Sims
  """
  images = list(phi.values())
  if not images: return 1
  return int(PermutationGroup(images).order())

# *******************************************************************
# abelianization
# *******************************************************************
def relation_matrix(p):
  """
  Exponent sums of every generator in every relator
  """
  column = {position: index for index, position in enumerate(p.generators)}
  rows = []
  for relator in p.relators:
    row = [0] * len(p.generators)
    for letter in relator.letters:
      row[column[abs(letter)]] += 1 if letter > 0 else -1
    rows.append(row)
  return rows

def abelianization(p):
  """
  Elementary divisors of the abelianized group, 0 standing for a free Z
  factor. Units are left out, so a trivial group gives []
  """
  rank = len(p.generators)
  if rank == 0: return []
  rows = relation_matrix(p)
  if not rows: return [0] * rank
  factors = [abs(int(factor)) for factor in invariant_factors(Matrix(rows), domain=ZZ)]
  nonzero = [factor for factor in factors if factor != 0]
  return [factor for factor in nonzero if factor != 1] + [0] * (rank - len(nonzero))
