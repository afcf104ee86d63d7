from django.core.management.base import CommandError

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


def command_failure(code, message, data=None):
    """Build the CommandError a management command raises to exit with ``code``."""
    if data:
        if isinstance(data, dict):
            details = "; ".join(f"{key}: {_flatten(value)}" for key, value in data.items())
        else:
            details = _flatten(data)
        message = f"{message} ({details})"
    return CommandError(message, returncode=code)


def _flatten(value):
    if isinstance(value, (list, tuple)):
        return ", ".join(_flatten(item) for item in value)
    if isinstance(value, dict):
        return "; ".join(f"{key}: {_flatten(item)}" for key, item in value.items())
    return str(value)
