# standard library
import collections
import enum

# 3rd party libraries

# project libraries
from .core import CoreApi, CosetOverflowError, InvalidArgumentError

DEFAULT_MAX_COSETS = 1000000

class Strategy(enum.Enum):
  HLT = 'hlt'
  FELSCH = 'felsch'

class _BudgetReached(Exception):
  pass

EnumerationResult = collections.namedtuple('EnumerationResult', ['order', 'max_cosets_used', 'strategy'])

class CosetTable(CoreApi):
  """
  Todd-Coxeter coset enumeration over the trivial subgroup

  Row alpha holds the images of coset alpha under every generator and its
  inverse: column 2g is generator g, column 2g+1 its inverse, so the inverse
  of column c is c ^ 1. Coset 0 is the subgroup itself. Coincidences are
  tracked with the union-find array p, where p[alpha] == alpha marks a live
  coset
  """
  def __init__(self, presentation, max_cosets=DEFAULT_MAX_COSETS, log_at_level=None):
    CoreApi.__init__(self, log_at_level=log_at_level)
    if max_cosets < 1:
      raise InvalidArgumentError("max_cosets must be >= 1, got {}".format(max_cosets))
    self.presentation = presentation
    self.max_cosets = max_cosets
    self.columns = {}
    for offset, position in enumerate(presentation.generators):
      self.columns[position] = 2 * offset
      self.columns[-position] = 2 * offset + 1
    self.width = 2 * len(presentation.generators)
    self.relators = self._relator_columns(presentation.relators)

    self.table = [[None] * self.width]
    self.p = [0]
    self.live = 1
    self.peak = 1
    self.deductions = []

  def _relator_columns(self, relators):
    result = []
    for relator in relators:
      if not relator: continue
      try:
        result.append(tuple(self.columns[letter] for letter in relator.letters))
      except KeyError as err:
        raise InvalidArgumentError("Relator {} uses a generator outside the presentation: {}".format(relator, err))
    return result

  # *******************************************************************
  # properties
  # *******************************************************************
  @property
  def omega(self):
    """
    Live cosets in table order
    """
    return [alpha for alpha in range(len(self.p)) if self.p[alpha] == alpha]

  @property
  def order(self): return self.live

  def is_complete(self):
    return all(None not in self.table[alpha] for alpha in self.omega)

  def is_closed(self):
    """
    True when the table is complete and every relator reads as a loop from
    every live coset
    """
    if not self.is_complete(): return False
    for alpha in self.omega:
      for word in self.relators:
        beta = alpha
        for column in word:
          beta = self.table[beta][column]
        if beta != alpha: return False
    return True

  # *******************************************************************
  # definitions and coincidences
  # *******************************************************************
  def define(self, alpha, column, deduce=False):
    if self.live >= self.max_cosets:
      raise _BudgetReached()
    beta = len(self.table)
    self.table.append([None] * self.width)
    self.p.append(beta)
    self.table[alpha][column] = beta
    self.table[beta][column ^ 1] = alpha
    self.live += 1
    if self.live > self.peak: self.peak = self.live
    if deduce: self.deductions.append((alpha, column))

  def rep(self, alpha):
    p = self.p
    root = alpha
    while p[root] != root:
      root = p[root]
    while p[alpha] != root:
      p[alpha], alpha = root, p[alpha]
    return root

  def merge(self, alpha, beta, queue):
    phi, psi = self.rep(alpha), self.rep(beta)
    if phi != psi:
      mu, nu = min(phi, psi), max(phi, psi)
      self.p[nu] = mu
      self.live -= 1
      queue.append(nu)

  def coincidence(self, alpha, beta, deduce=False):
    table = self.table
    queue = collections.deque()
    self.merge(alpha, beta, queue)
    while queue:
      gamma = queue.popleft()
      for column in range(self.width):
        delta = table[gamma][column]
        if delta is None: continue
        table[delta][column ^ 1] = None
        if deduce: self.deductions.append((delta, column ^ 1))
        mu, nu = self.rep(gamma), self.rep(delta)
        if table[mu][column] is not None:
          self.merge(nu, table[mu][column], queue)
        elif table[nu][column ^ 1] is not None:
          self.merge(mu, table[nu][column ^ 1], queue)
        else:
          table[mu][column] = nu
          table[nu][column ^ 1] = mu

  # *******************************************************************
  # scans
  # *******************************************************************
  def scan(self, alpha, word, fill=False, deduce=False):
    """
    Trace word forwards and backwards from alpha. A gap of one letter is a
    deduction, a closed scan ending in two different cosets a coincidence.
    With fill=True gaps are closed by defining new cosets
    """
    table = self.table
    f, b = alpha, alpha
    i, j = 0, len(word) - 1
    while True:
      while i <= j and table[f][word[i]] is not None:
        f = table[f][word[i]]
        i += 1
      if i > j:
        if f != b: self.coincidence(f, b, deduce=deduce)
        return
      while j >= i and table[b][word[j] ^ 1] is not None:
        b = table[b][word[j] ^ 1]
        j -= 1
      if j < i:
        self.coincidence(f, b, deduce=deduce)
        return
      if j == i:
        table[f][word[i]] = b
        table[b][word[i] ^ 1] = f
        if deduce: self.deductions.append((f, word[i]))
        return
      if not fill: return
      self.define(f, word[i], deduce=deduce)

  def look_ahead(self):
    """
    Scan every relator at every live coset without defining anything, to
    recover space through coincidences
    """
    for beta in self.omega:
      for word in self.relators:
        if self.p[beta] != beta: break
        self.scan(beta, word)

  def compress(self, resume=0):
    """
    Drop the rows of dead cosets and renumber the live ones in order. Returns
    the new index of the first live coset at or after resume
    """
    live = self.omega
    renumber = {alpha: index for index, alpha in enumerate(live)}
    self.table = [[None if beta is None else renumber[beta] for beta in self.table[alpha]] for alpha in live]
    self.p = list(range(len(live)))
    return sum(1 for alpha in live if alpha < resume)

  # *******************************************************************
  # strategies
  # *******************************************************************
  def _overflow(self):
    self.log("Coset enumeration overflowed with {} live cosets (budget {})".format(self.live, self.max_cosets), level='warning')
    raise CosetOverflowError(self.max_cosets, self.peak)

  def run_hlt(self):
    """
    Relator scanning: fill every relator at each live coset in turn, then
    close the row. On reaching the budget a lookahead pass and a compaction
    are tried before giving up
    """
    alpha = 0
    while alpha < len(self.table):
      try:
        for word in self.relators:
          if self.p[alpha] != alpha: break
          self.scan(alpha, word, fill=True)
        if self.p[alpha] == alpha:
          for column in range(self.width):
            if self.table[alpha][column] is None: self.define(alpha, column)
      except _BudgetReached:
        before = self.live
        self.look_ahead()
        alpha = self.compress(resume=alpha)
        self.log("Lookahead recovered {} cosets".format(before - self.live), level='debug')
        if self.live >= self.max_cosets: self._overflow()
        continue
      alpha += 1

  def _conjugates_by_column(self):
    """
    Cyclic conjugates of the relators and their inverses, grouped by their
    first column
    """
    grouped = [[] for _ in range(self.width)]
    seen = set()
    for word in self.relators:
      inverse = tuple(column ^ 1 for column in reversed(word))
      for candidate in (word, inverse):
        for shift in range(len(candidate)):
          rotation = candidate[shift:] + candidate[:shift]
          if rotation in seen: continue
          seen.add(rotation)
          grouped[rotation[0]].append(rotation)
    return grouped

  def process_deductions(self, grouped):
    p, table = self.p, self.table
    while self.deductions:
      alpha, column = self.deductions.pop()
      if p[alpha] == alpha:
        for word in grouped[column]:
          self.scan(alpha, word, deduce=True)
          if p[alpha] != alpha: break
      beta = table[alpha][column]
      if beta is not None and p[beta] == beta:
        for word in grouped[column ^ 1]:
          self.scan(beta, word, deduce=True)
          if p[beta] != beta: break

  def run_felsch(self):
    """
    Definition-eager enumeration: define the first empty entry and process
    every consequence through the cyclic conjugates of the relators
    """
    grouped = self._conjugates_by_column()
    for word in self.relators:
      self.scan(0, word, deduce=True)
    self.process_deductions(grouped)
    alpha = 0
    while alpha < len(self.table):
      for column in range(self.width):
        if self.p[alpha] != alpha: break
        if self.table[alpha][column] is None:
          try:
            self.define(alpha, column, deduce=True)
          except _BudgetReached:
            self._overflow()
          self.process_deductions(grouped)
      alpha += 1

  def enumerate(self, strategy=Strategy.HLT):
    strategy = Strategy(strategy)
    self.log("Enumerating cosets of {} generators and {} relators with {} (budget {})".format(
      len(self.presentation.generators), len(self.relators), strategy.value, self.max_cosets))
    if strategy is Strategy.HLT:
      self.run_hlt()
    else:
      self.run_felsch()
    self.log("Coset enumeration finished with {} cosets (peak {})".format(self.live, self.peak))
    return EnumerationResult(self.live, self.peak, strategy)

def todd_coxeter(p, max_cosets=DEFAULT_MAX_COSETS, strategy=Strategy.HLT):
  """
  Order of the group presented by p. Raises CosetOverflowError when the
  enumeration needs more than max_cosets live cosets
  """
  return CosetTable(p, max_cosets=max_cosets).enumerate(strategy)
