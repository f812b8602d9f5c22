from .exit_code import ExitCode
