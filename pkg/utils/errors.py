class HyperflowError(Exception):
    pass


class ConfigError(HyperflowError):
    pass


class InputError(HyperflowError):
    pass


class InvariantViolationError(HyperflowError):
    pass
