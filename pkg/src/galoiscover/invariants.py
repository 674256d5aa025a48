# standard library
import dataclasses
import enum
import math

# 3rd party libraries

# project libraries
from .core import InvalidArgumentError

class Classification(enum.Enum):
  GENERAL_TYPE = 'general_type'
  NOT_DETERMINED = 'not_determined'

@dataclasses.dataclass(frozen=True)
class ChernData(object):
  """
  Degree d of the generic projection, degree m of its branch curve and the
  Chern number c1^2 of the Galois cover
  """
  d: int
  m: int
  c1_squared: int
  classification: Classification = Classification.NOT_DETERMINED

  def to_dict(self):
    return {
      'd': self.d,
      'm': self.m,
      'c1_squared': str(self.c1_squared),
      'classification': self.classification.value,
      }

def degeneration_params(k):
  """
  (d, m, n_lines) for the cone over a chain of k planes meeting in k-1 lines
  """
  if k < 3: raise InvalidArgumentError("Degenerations need k >= 3, got {}".format(k))
  n_lines = k - 1
  return k, 2 * n_lines, n_lines

def chern_c1sq(d, m):
  """
  c1^2 = d! (m-6)^2 / 4
  """
  if d < 1 or m < 0:
    raise InvalidArgumentError("chern_c1sq needs d >= 1 and m >= 0, got d={} m={}".format(d, m))
  numerator = math.factorial(d) * (m - 6) ** 2
  if numerator % 4:
    raise InvalidArgumentError("c1^2 is not integral for d={} m={}".format(d, m))
  return numerator // 4

def classify(c):
  """
  Positive c1^2 is read as general type; nothing is claimed otherwise
  """
  return Classification.GENERAL_TYPE if c.c1_squared > 0 else Classification.NOT_DETERMINED

def chern_data(k):
  d, m, _ = degeneration_params(k)
  data = ChernData(d, m, chern_c1sq(d, m))
  return dataclasses.replace(data, classification=classify(data))

def chern_table(k_from, k_to):
  """
  (k, k!, c1^2, classification) rows for every k in the closed range
  """
  if k_from > k_to:
    raise InvalidArgumentError("Empty range {}..{}".format(k_from, k_to))
  rows = []
  for k in range(k_from, k_to + 1):
    data = chern_data(k)
    rows.append((k, math.factorial(k), data.c1_squared, data.classification.value))
  return rows
