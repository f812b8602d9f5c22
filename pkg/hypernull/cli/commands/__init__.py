from . import (
    convert_command,
    sample_command,
    test_command,
    profile_command,
    exact_command,
    synth_command,
)

COMMANDS = (
    convert_command,
    sample_command,
    test_command,
    profile_command,
    exact_command,
    synth_command,
)
