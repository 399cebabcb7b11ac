class AlgebraError(Exception): ...


class IndexOutOfRangeError(AlgebraError, IndexError): ...


class DimensionMismatchError(AlgebraError, ValueError): ...


class ExpressionParseError(AlgebraError, ValueError): ...


class SizeLimitError(AlgebraError, ValueError): ...
