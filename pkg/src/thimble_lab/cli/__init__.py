# Import the desired classes
from .run_config import (
    RunConfig,
    RunConfigManager,
)
from .commands import (
    SCHEMA_VERSION,
    CommandResult,
    VerificationCheck,
    cmd_periods,
    cmd_monodromy,
    cmd_figure,
    cmd_verify,
)
from .main import main
