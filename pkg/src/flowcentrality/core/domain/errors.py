class FlowCentralityError(Exception):
    """Base class for every failure raised by the library."""


class GraphFormatError(FlowCentralityError, ValueError):
    def __init__(self, detail: str, line_number: int | None = None) -> None:
        self.line_number = line_number
        prefix = f"line {line_number}: " if line_number is not None else ""
        super().__init__(f"{prefix}{detail}")


class VertexIndexError(FlowCentralityError, IndexError): ...


class UnknownLabelError(FlowCentralityError, KeyError):
    def __init__(self, label: str) -> None:
        self.label = label
        super().__init__(f"Unknown vertex label: {label!r}")

    def __str__(self) -> str:
        return str(self.args[0])


class EmptySubsetError(FlowCentralityError, ValueError): ...


class SpectrumError(FlowCentralityError, ArithmeticError): ...


class CentralityRangeError(FlowCentralityError, ArithmeticError): ...


class BudgetExceededError(FlowCentralityError, RuntimeError):
    def __init__(self, what: str, estimate: int, budget: int) -> None:
        self.estimate = estimate
        self.budget = budget
        super().__init__(
            f"{what}: estimated {estimate} items exceeds the budget of {budget}"
        )


class TooManyPartsError(FlowCentralityError, ValueError): ...


class VerificationFailure(FlowCentralityError, AssertionError): ...


class UnsupportedGraphError(FlowCentralityError, ValueError):
    """The graph lacks a property the computation relies on."""
