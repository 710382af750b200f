from ... import Conf, ConfField
from ...montecarlo import ScenarioKind
from ..types import OutputFormat


class ExperimentConf(Conf):
    """Protocol parameters and run options shared by the commands.

    Every key doubles as a command-line flag (``s-a`` is ``--s-a``). Numeric
    thresholds left unset fall back to the default parameter choice for the
    configured amplitude and length.
    """

    alpha = ConfField(env="QDSX_ALPHA", toml="alpha", default=0.2, type=float)
    length = ConfField(env="QDSX_LENGTH", toml="length", default=1_000_000, type=int)
    s_a = ConfField(env="QDSX_S_A", toml="s-a", type=float)
    s_v = ConfField(env="QDSX_S_V", toml="s-v", type=float)
    delta = ConfField(env="QDSX_DELTA", toml="delta", type=float)
    r = ConfField(env="QDSX_R", toml="r", type=float)
    epsilon = ConfField(env="QDSX_EPSILON", toml="epsilon", type=float)
    trials = ConfField(env="QDSX_TRIALS", toml="trials", default=10_000, type=int)
    seed = ConfField(env="QDSX_SEED", toml="seed", default=0, type=int)
    scenario = ConfField(
        choices=[kind.value for kind in ScenarioKind],
        env="QDSX_SCENARIO",
        toml="scenario",
        default=ScenarioKind.HONEST.value,
        type=str,
    )
    scale = ConfField(env="QDSX_SCALE", toml="scale", default=1.0, type=float)
    align_to_guess = ConfField(
        env="QDSX_ALIGN_TO_GUESS", toml="align-to-guess", default=False, type=bool
    )
    p_mismatch = ConfField(env="QDSX_P_MISMATCH", toml="p-mismatch", type=float)
    amp_bob = ConfField(env="QDSX_AMP_BOB", toml="amp-bob", type=float)
    amp_charlie = ConfField(env="QDSX_AMP_CHARLIE", toml="amp-charlie", type=float)
    format = ConfField(
        choices=[fmt.value for fmt in OutputFormat],
        env="QDSX_FORMAT",
        toml="format",
        default=OutputFormat.JSON.value,
        type=str,
    )


EXPERIMENT = ExperimentConf()


__all__ = ["ExperimentConf", "EXPERIMENT"]
