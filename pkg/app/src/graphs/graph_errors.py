class GraphError(Exception): ...


class GraphValidationError(GraphError, ValueError): ...


class GraphFormatError(GraphError, ValueError): ...


class OracleLimitError(GraphError, ValueError): ...


class NotIndependentError(GraphError, ValueError): ...
