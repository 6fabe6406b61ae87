class VedsError(Exception):
    """
    Base class for every error raised by the veds library.

    ``exit_code`` is the process exit status the command line reports.
    """

    exit_code = 1
    code = "error"


class InputError(VedsError):
    exit_code = 2
    code = "invalid-input"


class ContractError(VedsError):
    code = "contract-violated"


class DomainError(VedsError):
    code = "no-solution"


class CapacityError(VedsError):
    exit_code = 3
    code = "capacity-exceeded"


class GenerationError(VedsError):
    code = "generation-failed"
