class TrislopeError(Exception):
  pass


class SurfaceMismatchError(TrislopeError, ValueError):
  pass


class InvalidChiQueryError(TrislopeError, ValueError):
  pass


class InadmissibleParametersError(TrislopeError, ValueError):
  pass


class ParityError(TrislopeError, ValueError):
  pass


class NonRationalResultError(TrislopeError, ArithmeticError):
  pass


class SweepIdentityError(TrislopeError, ArithmeticError):
  pass
